#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sts/census.hpp"

namespace sts {

/// Export schema: one row per orbit, fields in this order.
struct CensusRow {
  int n = 0;
  std::string orbit_label;
  std::int64_t size = 0;
  int invariant = 0;
  int num_cusps = 0;
  std::vector<int> cusp_widths;  // ascending
  int e2 = 0;
  int e3 = 0;
  int genus = 0;
  bool has_one_cylinder = false;

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

std::vector<CensusRow> census_rows(const CensusRecord& r);

/// {"n", "orbits": [rows], "checks": [...], "proved_checks_pass"}.
std::string census_json(const CensusRecord& r);
/// Rows of a document produced by census_json. Throws Error{Parse}.
std::vector<CensusRow> rows_from_json(std::string_view document);

std::string census_csv(const CensusRecord& r);
/// Throws Error{Parse} on malformed input.
std::vector<CensusRow> rows_from_csv(std::string_view document);

/// One line per check: status, verdict, name and detail.
std::string checks_summary(const CensusRecord& r);

/// Digraph of an orbit: nodes are surfaces labeled by cylinder coordinates,
/// edges are the U and V actions. Throws Error{NotClosed}.
std::string orbit_dot(const std::vector<CanonicalKey>& orbit);

/// Observed values over the leading asymptotic term, for trend inspection.
struct RatioRow {
  int n = 0;
  std::string orbit_label;
  double genus = 0;     // genus / (c n^3)
  double surfaces = 0;  // size / (c n^3)
  double cusps = 0;     // cusps / (c n^2)
};

/// Orbits A and B of a prime census; empty for other n.
std::vector<RatioRow> asymptotic_ratios(const CensusRecord& r);
std::string format_ratios(const std::vector<RatioRow>& rows);

}  // namespace sts
