#include "sts/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "sts/error.hpp"
#include "sts/formulas.hpp"

namespace sts {

namespace {

using ojson = nlohmann::ordered_json;

constexpr std::string_view kCsvHeader =
    "n,orbit_label,size,invariant,num_cusps,cusp_widths,e2,e3,genus,has_one_cylinder";

ojson row_to_json(const CensusRow& row) {
  ojson j;
  j["n"] = row.n;
  j["orbit_label"] = row.orbit_label;
  j["size"] = row.size;
  j["invariant"] = row.invariant;
  j["num_cusps"] = row.num_cusps;
  j["cusp_widths"] = row.cusp_widths;
  j["e2"] = row.e2;
  j["e3"] = row.e3;
  j["genus"] = row.genus;
  j["has_one_cylinder"] = row.has_one_cylinder;
  return j;
}

CensusRow row_from(const ojson& j) {
  CensusRow row;
  row.n = j.at("n").get<int>();
  row.orbit_label = j.at("orbit_label").get<std::string>();
  row.size = j.at("size").get<std::int64_t>();
  row.invariant = j.at("invariant").get<int>();
  row.num_cusps = j.at("num_cusps").get<int>();
  row.cusp_widths = j.at("cusp_widths").get<std::vector<int>>();
  row.e2 = j.at("e2").get<int>();
  row.e3 = j.at("e3").get<int>();
  row.genus = j.at("genus").get<int>();
  row.has_one_cylinder = j.at("has_one_cylinder").get<bool>();
  return row;
}

std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
    } else if (ch == ',' && !quoted) {
      fields.emplace_back();
    } else {
      fields.back() += ch;
    }
  }
  if (quoted) throw Error(ErrorKind::Parse, "unterminated quote in CSV line");
  return fields;
}

template <class T>
T parse_number(const std::string& field) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(field, &used);
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "not an integer: '" + field + "'");
  }
  if (used != field.size()) throw Error(ErrorKind::Parse, "not an integer: '" + field + "'");
  return static_cast<T>(value);
}

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::vector<CensusRow> census_rows(const CensusRecord& r) {
  std::vector<CensusRow> rows;
  for (const auto& o : r.orbits) {
    rows.push_back({o.n, std::string(to_string(o.label)), o.size, o.invariant.count,
                    static_cast<int>(o.cusps.size()), o.cusp_widths(), o.e2, o.e3, o.genus, o.has_one_cylinder});
  }
  return rows;
}

std::string census_json(const CensusRecord& r) {
  ojson doc;
  doc["n"] = r.n;
  doc["orbits"] = ojson::array();
  for (const auto& row : census_rows(r)) doc["orbits"].push_back(row_to_json(row));
  doc["checks"] = ojson::array();
  for (const auto& c : r.checks) {
    ojson j;
    j["name"] = c.name;
    j["status"] = std::string(to_string(c.status));
    j["passed"] = c.passed;
    j["detail"] = c.detail;
    doc["checks"].push_back(j);
  }
  doc["proved_checks_pass"] = r.proved_checks_pass();
  return doc.dump(2) + "\n";
}

std::vector<CensusRow> rows_from_json(std::string_view document) {
  try {
    const auto doc = ojson::parse(document);
    std::vector<CensusRow> rows;
    for (const auto& j : doc.at("orbits")) rows.push_back(row_from(j));
    return rows;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

std::string census_csv(const CensusRecord& r) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (const auto& row : census_rows(r)) {
    os << row.n << ',' << row.orbit_label << ',' << row.size << ',' << row.invariant << ',' << row.num_cusps << ",\"";
    for (std::size_t i = 0; i < row.cusp_widths.size(); ++i) os << (i ? " " : "") << row.cusp_widths[i];
    os << "\"," << row.e2 << ',' << row.e3 << ',' << row.genus << ',' << (row.has_one_cylinder ? "true" : "false")
       << '\n';
  }
  return os.str();
}

std::vector<CensusRow> rows_from_csv(std::string_view document) {
  std::istringstream in{std::string(document)};
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw Error(ErrorKind::Parse, "missing CSV header");
  std::vector<CensusRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 10) throw Error(ErrorKind::Parse, "expected 10 CSV fields, got " + std::to_string(f.size()));
    CensusRow row;
    row.n = parse_number<int>(f[0]);
    row.orbit_label = f[1];
    row.size = parse_number<std::int64_t>(f[2]);
    row.invariant = parse_number<int>(f[3]);
    row.num_cusps = parse_number<int>(f[4]);
    std::istringstream widths(f[5]);
    for (std::string w; widths >> w;) row.cusp_widths.push_back(parse_number<int>(w));
    row.e2 = parse_number<int>(f[6]);
    row.e3 = parse_number<int>(f[7]);
    row.genus = parse_number<int>(f[8]);
    if (f[9] != "true" && f[9] != "false") throw Error(ErrorKind::Parse, "bad flag '" + f[9] + "'");
    row.has_one_cylinder = f[9] == "true";
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string checks_summary(const CensusRecord& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    const char* verdict = c.passed ? "ok" : (c.status == CheckStatus::Proved ? "FAIL" : "WARN");
    os << "n=" << r.n << ' ' << verdict << " [" << to_string(c.status) << "] " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  return os.str();
}

std::string orbit_dot(const std::vector<CanonicalKey>& orbit) {
  const OrbitGraph g = build_orbit_graph(orbit, 1);
  std::ostringstream os;
  os << "digraph orbit {\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    os << "  s" << i << " [label=\"" << escape_dot(to_string(decompose(from_key(g.keys[i])).coords)) << "\"];\n";
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    os << "  s" << i << " -> s" << g.u[i] << " [label=\"U\"];\n";
    os << "  s" << i << " -> s" << g.v[i] << " [label=\"V\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::vector<RatioRow> asymptotic_ratios(const CensusRecord& r) {
  std::vector<RatioRow> rows;
  if (!is_prime(r.n) || r.n < 5) return rows;
  const auto k = asymptotic_constants();
  const double n = r.n;
  for (const auto& o : r.orbits) {
    if (o.label != OrbitLabel::A && o.label != OrbitLabel::B) continue;
    const double cusp_c = (o.label == OrbitLabel::A ? k.cusp_coeff_a : k.cusp_coeff_b).value();
    rows.push_back({r.n, std::string(to_string(o.label)), o.genus / (k.genus_coeff.value() * n * n * n),
                    static_cast<double>(o.size) / (k.orbit_surface_coeff.value() * n * n * n),
                    static_cast<double>(o.cusps.size()) / (cusp_c * n * n)});
  }
  return rows;
}

std::string format_ratios(const std::vector<RatioRow>& rows) {
  std::ostringstream os;
  os << "n orbit genus/(c n^3) surfaces/(c n^3) cusps/(c n^2)\n";
  char buf[128];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof buf, "%d %s %.4f %.4f %.4f\n", row.n, row.orbit_label.c_str(), row.genus,
                  row.surfaces, row.cusps);
    os << buf;
  }
  return os.str();
}

}  // namespace sts
