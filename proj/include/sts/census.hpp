#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sts/orbit.hpp"
#include "sts/weierstrass.hpp"

namespace sts {

enum class OrbitLabel { A, B, Single, Other };
std::string_view to_string(OrbitLabel label);

struct OrbitRecord {
  int n = 0;
  std::int64_t size = 0;
  InvariantValue invariant;
  std::vector<Cusp> cusps;  // sorted by representative
  int e2 = 0;
  int e3 = 0;
  int genus = 0;
  bool has_one_cylinder = false;
  OrbitLabel label = OrbitLabel::Other;

  std::int64_t one_cyl_surfaces = 0;
  std::int64_t two_cyl_surfaces = 0;
  std::int64_t one_cyl_cusps = 0;
  std::int64_t two_cyl_cusps = 0;
  CanonicalKey min_key;

  /// Widths in ascending order.
  std::vector<int> cusp_widths() const;
};

enum class CheckStatus { Proved, Conjecture };
std::string_view to_string(CheckStatus status);

struct FormulaCheck {
  std::string name;
  CheckStatus status = CheckStatus::Proved;
  bool passed = false;
  std::string detail;
};

struct CensusTotals {
  std::int64_t surfaces = 0;
  std::int64_t one_cyl_surfaces = 0;
  std::int64_t two_cyl_surfaces = 0;
  std::int64_t cusps = 0;
  std::int64_t one_cyl_cusps = 0;
  std::int64_t two_cyl_cusps = 0;
  std::int64_t e2 = 0;
};

struct CensusRecord {
  int n = 0;
  std::vector<OrbitRecord> orbits;  // invariant ascending, then size descending, then least key
  CensusTotals totals;
  std::vector<FormulaCheck> checks;

  bool proved_checks_pass() const;
  bool conjecture_checks_pass() const;
  const OrbitRecord* find(OrbitLabel label) const;
};

/// Primitive surfaces of area n split into SL(2,Z)-orbits, with every
/// applicable closed-form cross-check attached. Throws Error{BadN} if n < 3.
CensusRecord classify_census(int n, int workers = 0);

}  // namespace sts
