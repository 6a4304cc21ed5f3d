#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>

namespace sts {

/// Overflow-checked arithmetic; every helper throws Error{Overflow}.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
/// Exact division; throws Error{Overflow} if `den` does not divide `num`.
std::int64_t exact_div(std::int64_t num, std::int64_t den);

/// n^2 * prod_{p | n} (1 - 1/p^2).
std::int64_t jordan_totient2(std::int64_t n);

/// Number of primitive n-square-tiled surfaces in H(2):
/// 3/8 (n - 2) n^2 prod_{p | n} (1 - 1/p^2).
std::int64_t ems_total(std::int64_t n);

struct OrbitTotals {
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend bool operator==(const OrbitTotals&, const OrbitTotals&) = default;
};

/// Conjectured orbit sizes for odd n >= 5:
///   A: 3/16 (n - 1) n^2 prod (1 - 1/p^2),  B: 3/16 (n - 3) n^2 prod (1 - 1/p^2).
/// Throws Error{BadN}.
OrbitTotals conjecture_orbit_totals(std::int64_t n);

enum class OrbitClass { A, B, All };
enum class CylinderClass { One, Two, All };

/// Cubic polynomials the conjectured totals reduce to at prime n, split by
/// orbit and cylinder count. Throws Error{BadN} unless n is an odd prime.
std::int64_t prime_table_polynomial(std::int64_t n, OrbitClass orbit, CylinderClass cylinders);

struct OneCylCounts {
  std::int64_t surfaces_a = 0, surfaces_b = 0, surfaces_all = 0;
  std::int64_t cusps_a = 0, cusps_b = 0, cusps_all = 0;
};

/// One-cylinder surface and cusp counts for prime n > 3. Throws Error{BadN}.
OneCylCounts one_cyl_counts(std::int64_t n);

struct TwoCylSums {
  std::int64_t s = 0;     // sum of k*l over a*k + b*l = n, k < l
  std::int64_t s_oh = 0;  // restricted to a, b odd and coprime
  std::int64_t s_ow = 0;  // restricted to k, l odd and a, b coprime
  std::int64_t s_eo = 0;  // s - s_oh - s_ow
  std::int64_t a2 = 0;    // s_oh + m / 2
  std::int64_t b2 = 0;    // s_ow + m / 2
};

/// Exact two-cylinder sums; a, b play the heights and k < l the widths.
/// m sums k*l over coprime a, b of different parity, excluding k, l both
/// odd; it is always even and
/// equals s_eo when n is prime, where gcd(a, b) = 1 automatically.
/// Throws Error{BadN} for even or too small n.
TwoCylSums two_cyl_exact_sums(std::int64_t n);

/// sum of gcd(a, k) * gcd(b, l) over a*k + b*l = n, k < l; bounds the number
/// of two-cylinder cusps. Throws Error{BadN} for n < 3.
std::int64_t two_cyl_cusp_bound(std::int64_t n);

/// floor((n + 1) / 4), conjectured number of elliptic points at prime n.
/// Throws Error{BadN} unless n is prime.
std::int64_t elliptic_conjecture(std::int64_t n);

/// Exact count table for prime n > 3. Entries that are only known
/// asymptotically are std::nullopt.
using CountKey = std::tuple<OrbitClass, CylinderClass, bool /*cusps*/>;
using CountTable = std::map<CountKey, std::optional<std::int64_t>>;
CountTable prime_count_table(std::int64_t n);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(std::int64_t num, std::int64_t den);

/// coeff * pi^pi_power, kept symbolic.
struct PiMultiple {
  Rational coeff;
  int pi_power = 0;

  double value() const;
};

/// Leading-order constants for prime n, per orbit (A and B coincide where
/// only one value is given). Reference values only.
struct AsymptoticConstants {
  Rational genus_coeff;              // genus ~ c n^3
  PiMultiple area_coeff;             // hyperbolic area ~ c n^3
  Rational cusp_coeff_a;             // cusps ~ c n^2
  Rational cusp_coeff_b;
  Rational orbit_surface_coeff;      // orbit size ~ c n^3
  Rational two_cyl_surface_coeff;    // two-cylinder surfaces ~ c n^3
  Rational two_cyl_split_a;
  Rational two_cyl_split_b;
  PiMultiple zeta2;                  // pi^2 / 6
  PiMultiple zeta4;                  // pi^4 / 90
  PiMultiple mean_order_deviation;   // 1 / zeta(4) = 90 / pi^4
};

AsymptoticConstants asymptotic_constants();

}  // namespace sts
