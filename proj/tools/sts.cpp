#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <regex>
#include <string>

#include "sts/census.hpp"
#include "sts/error.hpp"
#include "sts/formulas.hpp"
#include "sts/orbit.hpp"
#include "sts/report.hpp"
#include "sts/verify.hpp"
#include "sts/weierstrass.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kUsage = 1;
constexpr int kFailed = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open " + path);
  out << text;
}

int cmd_census(int n, const std::string& format, const std::string& out, int workers, bool primitive_only) {
  if (n < 3) throw UsageError("--n must be at least 3");
  if (!primitive_only) std::cerr << "census always restricts to primitive surfaces\n";
  std::cerr << "census n=" << n << '\n';
  const auto record = sts::classify_census(n, workers);
  write_output(out, format == "json" ? sts::census_json(record) : sts::census_csv(record));
  std::cerr << sts::checks_summary(record);
  return record.proved_checks_pass() ? kPass : kFailed;
}

int cmd_orbit(int n, const std::string& seed_text, const std::string& dot) {
  sts::CylinderCoords seed;
  try {
    seed = sts::parse_coords(seed_text);
  } catch (const sts::Error& e) {
    throw UsageError(e.what());
  }
  if (sts::area(seed) != n) {
    throw UsageError("seed has area " + std::to_string(sts::area(seed)) + ", expected " + std::to_string(n));
  }
  const auto keys = sts::orbit_bfs(sts::to_origami(seed));
  const auto cusps = sts::cusp_partition(keys);
  const auto elliptic = sts::elliptic_counts(keys);
  std::cout << "size " << keys.size() << '\n';
  std::cout << "invariant " << sts::invariant_from_coords(seed).count << '\n';
  std::cout << "cusps " << cusps.size() << '\n';
  for (const auto& c : cusps) std::cout << "  " << sts::to_string(c.representative) << " width " << c.width << '\n';
  std::cout << "e2 " << elliptic.e2 << "\ne3 " << elliptic.e3 << '\n';
  std::cout << "genus "
            << sts::genus_gauss_bonnet(static_cast<long long>(keys.size()), elliptic.e2, elliptic.e3,
                                       static_cast<long long>(cusps.size()))
            << '\n';
  if (!dot.empty()) write_output(dot, sts::orbit_dot(keys));
  return kPass;
}

std::pair<int, int> parse_range(const std::string& text) {
  static const std::regex pattern(R"((\d+)\.\.(\d+))");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw UsageError("--primes expects A..B, got '" + text + "'");
  const int lo = std::stoi(m[1]);
  const int hi = std::stoi(m[2]);
  if (lo < 3 || hi < lo) throw UsageError("--primes bounds must satisfy 3 <= A <= B");
  return {lo, hi};
}

int cmd_verify(const std::string& primes, int brute_max, int involution_max, int workers) {
  const auto [lo, hi] = parse_range(primes);
  bool ok = true;
  std::cout << "n orbits proved conjecture ratios\n";
  for (int n = lo; n <= hi; ++n) {
    if (!sts::is_prime(n)) continue;
    std::cerr << "verify n=" << n << '\n';
    const auto record = sts::classify_census(n, workers);
    int proved_fail = 0;
    int conj_fail = 0;
    for (const auto& c : record.checks) {
      if (!c.passed) ++(c.status == sts::CheckStatus::Proved ? proved_fail : conj_fail);
    }
    ok = ok && proved_fail == 0;
    std::cout << n << ' ' << record.orbits.size() << ' ' << (proved_fail ? "FAIL" : "pass") << ' '
              << (conj_fail ? "WARN" : "pass") << '\n';
    if (proved_fail || conj_fail) std::cerr << sts::checks_summary(record);
    const auto ratios = sts::asymptotic_ratios(record);
    if (!ratios.empty()) std::cerr << sts::format_ratios(ratios);
  }
  std::vector<sts::SuiteResult> suites;
  if (brute_max >= 3) suites.push_back(sts::brute_force_suite(brute_max));
  if (involution_max >= 3) suites.push_back(sts::involution_suite(involution_max, 0, 0, -1));
  for (const auto& s : suites) {
    ok = ok && s.passed;
    std::cout << (s.passed ? "pass " : "FAIL ") << s.name << ": " << s.detail << '\n';
  }
  return ok ? kPass : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Census of square-tiled surfaces in H(2)"};
  app.require_subcommand(1);

  int n = 0;
  std::string format = "json";
  std::string out;
  int workers = 0;
  bool primitive_only = true;
  auto* census = app.add_subcommand("census", "Split primitive surfaces into orbits");
  census->add_option("--n", n, "Number of squares")->required();
  census->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  census->add_option("--out", out, "Output file (default stdout)");
  census->add_option("--workers", workers, "Worker threads, 0 = all cores")->check(CLI::NonNegativeNumber);
  census->add_flag("--primitive-only,!--all-surfaces", primitive_only, "Restrict to primitive surfaces");

  std::string seed;
  std::string dot;
  auto* orbit = app.add_subcommand("orbit", "Explore the orbit of one surface");
  orbit->add_option("--n", n, "Number of squares")->required();
  orbit->add_option("--seed", seed, "onecyl:a,b,c:t or twocyl:h1,h2,w1,w2,t1,t2")->required();
  orbit->add_option("--dot", dot, "Write the orbit graph in DOT format");

  std::string primes;
  int brute_max = 0;
  int involution_max = 0;
  auto* verify = app.add_subcommand("verify", "Cross-check formulas against enumeration");
  verify->add_option("--primes", primes, "Prime range A..B")->required();
  verify->add_option("--brute-max", brute_max, "Brute-force oracle up to this n (<= 8)")->check(CLI::Range(0, 8));
  verify->add_option("--involution-max", involution_max, "Involution oracle up to this n");
  verify->add_option("--workers", workers, "Worker threads, 0 = all cores")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*census) return cmd_census(n, format, out, workers, primitive_only);
    if (*orbit) return cmd_orbit(n, seed, dot);
    if (*verify) return cmd_verify(primes, brute_max, involution_max, workers);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const sts::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == sts::ErrorKind::Parse || e.kind() == sts::ErrorKind::InvalidCoords ||
                   e.kind() == sts::ErrorKind::BadN || e.kind() == sts::ErrorKind::NotPrimitive
               ? kUsage
               : kFailed;
  }
  return kUsage;
}
