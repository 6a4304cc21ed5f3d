#pragma once

#include <cstdint>
#include <string>

namespace sts {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Set equality of brute_force_enumerate and enumerate_surfaces for
/// 3 <= n <= max_n (max_n <= 8).
SuiteResult brute_force_suite(int max_n);

/// Involution fixed vertices against the parity rules, and six fixed points
/// in total: every surface (primitive or not) with n <= exhaustive_max, then
/// `samples` randomly relabeled surfaces with random_min <= n <= random_max.
SuiteResult involution_suite(int exhaustive_max, int samples, int random_min, int random_max,
                             std::uint32_t seed = 20240531);

/// Cusp-width formula against the length of the U-cycle, for every
/// primitive two-cylinder surface with n <= max_n.
SuiteResult cusp_width_suite(int max_n);

}  // namespace sts
