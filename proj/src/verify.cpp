#include "sts/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_set>

#include "sts/orbit.hpp"
#include "sts/weierstrass.hpp"

namespace sts {

SuiteResult brute_force_suite(int max_n) {
  SuiteResult r{"brute force = enumeration", true, {}};
  std::ostringstream detail;
  for (int n = 3; n <= max_n; ++n) {
    auto brute = brute_force_enumerate(n);
    std::vector<CanonicalKey> listed;
    for (const auto& s : enumerate_keyed(n, false)) listed.push_back(s.key);
    std::sort(listed.begin(), listed.end());
    const bool same = brute == listed;
    r.passed = r.passed && same;
    detail << "n=" << n << ':' << brute.size() << (same ? "" : "!=" + std::to_string(listed.size())) << ' ';
  }
  r.detail = detail.str();
  return r;
}

namespace {

bool oracle_agrees(const Origami& o, const CylinderCoords& coords, std::string& why) {
  const auto inv = involution_oracle(o);
  const int expected = integer_weierstrass_count(coords);
  if (inv.fixed_vertex_count != expected || inv.total_fixed() != 6) {
    why = to_string(coords) + " oracle " + std::to_string(inv.fixed_vertex_count) + "/" +
          std::to_string(inv.total_fixed()) + " rules " + std::to_string(expected);
    return false;
  }
  return true;
}

}  // namespace

SuiteResult involution_suite(int exhaustive_max, int samples, int random_min, int random_max, std::uint32_t seed) {
  SuiteResult r{"involution oracle = parity rules", true, {}};
  std::string why;
  long checked = 0;
  for (int n = 3; n <= exhaustive_max && r.passed; ++n) {
    for (const auto& d : enumerate_surfaces(n, false)) {
      ++checked;
      if (!oracle_agrees(to_origami(d.coords), d.coords, why)) {
        r.passed = false;
        break;
      }
    }
  }
  if (r.passed && samples > 0 && random_min <= random_max) {
    std::mt19937 rng(seed);
    std::vector<std::vector<CylinderDecomposition>> pool(random_max + 1);
    std::uniform_int_distribution<int> pick_n(random_min, random_max);
    for (int s = 0; s < samples && r.passed; ++s) {
      const int n = pick_n(rng);
      if (pool[n].empty()) pool[n] = enumerate_surfaces(n, false);
      const auto& d = pool[n][std::uniform_int_distribution<std::size_t>(0, pool[n].size() - 1)(rng)];
      std::vector<int> relabel(n);
      std::iota(relabel.begin(), relabel.end(), 0);
      std::shuffle(relabel.begin(), relabel.end(), rng);
      ++checked;
      if (!oracle_agrees(to_origami(d.coords).relabeled(Permutation(relabel)), d.coords, why)) r.passed = false;
    }
  }
  r.detail = std::to_string(checked) + " surfaces" + (r.passed ? "" : ", first mismatch " + why);
  return r;
}

SuiteResult cusp_width_suite(int max_n) {
  SuiteResult r{"cusp width formula = U-cycle length", true, {}};
  long checked = 0;
  std::string why;
  for (int n = 3; n <= max_n && r.passed; ++n) {
    for (const auto& s : enumerate_keyed(n, true)) {
      if (s.decomposition.diagram != SeparatrixDiagram::TwoCylinder) continue;
      ++checked;
      Origami o = to_origami(s.decomposition.coords);
      int length = 0;
      do {
        o = act(o, Generator::U);
        ++length;
      } while (canonical_key(o) != s.key);
      if (length != cusp_width(s.decomposition.coords)) {
        r.passed = false;
        why = to_string(s.decomposition.coords) + " cycle " + std::to_string(length) + " formula " +
              std::to_string(cusp_width(s.decomposition.coords));
        break;
      }
    }
  }
  r.detail = std::to_string(checked) + " two-cylinder surfaces" + (r.passed ? "" : ", first mismatch " + why);
  return r;
}

}  // namespace sts
