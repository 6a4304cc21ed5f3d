#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "sts/cylinder.hpp"
#include "sts/error.hpp"
#include "sts/formulas.hpp"

using namespace sts;

namespace {

// n^2 prod (1 - 1/p^2) by counting pairs (x, y) mod n with gcd(x, y, n) = 1.
std::int64_t jordan_by_counting(int n) {
  std::int64_t count = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) count += std::gcd(std::gcd(x, y), n) == 1 ? 1 : 0;
  }
  return count;
}

struct Sums {
  std::int64_t s = 0, oh = 0, ow = 0, bound = 0;
};

Sums sums_by_loops(int n) {
  Sums out;
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      for (int k = 1; a * k < n; ++k) {
        for (int l = k + 1; a * k + b * l <= n; ++l) {
          if (a * k + b * l != n) continue;
          out.s += k * l;
          out.bound += std::gcd(a, k) * std::gcd(b, l);
          if (std::gcd(a, b) != 1) continue;
          if (a % 2 == 1 && b % 2 == 1) out.oh += k * l;
          if (k % 2 == 1 && l % 2 == 1) out.ow += k * l;
        }
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("checked arithmetic") {
  const auto big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(checked_add(big, 1), Error);
  CHECK_THROWS_AS(checked_mul(big / 2, 3), Error);
  CHECK(checked_mul(-4, 5) == -20);
  CHECK(exact_div(12, 4) == 3);
  CHECK_THROWS_AS(exact_div(13, 4), Error);
}

TEST_CASE("Jordan totient against counting") {
  for (int n = 1; n <= 60; ++n) REQUIRE(jordan_totient2(n) == jordan_by_counting(n));
}

TEST_CASE("EMS totals") {
  CHECK(ems_total(3) == 3);
  CHECK(ems_total(4) == 9);
  CHECK(ems_total(5) == 27);
  CHECK(ems_total(6) == 36);
  CHECK(ems_total(8) == 108);
  CHECK(ems_total(10) == 216);
  CHECK(ems_total(31) == 10440);
  CHECK_THROWS_AS(ems_total(2), Error);
}

TEST_CASE("conjectured orbit totals") {
  CHECK(conjecture_orbit_totals(5) == OrbitTotals{18, 9});
  CHECK(conjecture_orbit_totals(7) == OrbitTotals{54, 36});
  for (int n = 5; n <= 99; n += 2) {
    const auto t = conjecture_orbit_totals(n);
    REQUIRE(t.a + t.b == ems_total(n));
  }
  CHECK_THROWS_AS(conjecture_orbit_totals(6), Error);
  CHECK_THROWS_AS(conjecture_orbit_totals(3), Error);
}

TEST_CASE("prime table polynomials") {
  for (int n = 5; n <= 101; n += 2) {
    if (!is_prime(n)) {
      CHECK_THROWS_AS(prime_table_polynomial(n, OrbitClass::A, CylinderClass::All), Error);
      continue;
    }
    const auto t = conjecture_orbit_totals(n);
    CHECK(prime_table_polynomial(n, OrbitClass::A, CylinderClass::All) == t.a);
    CHECK(prime_table_polynomial(n, OrbitClass::B, CylinderClass::All) == t.b);
    for (CylinderClass c : {CylinderClass::One, CylinderClass::Two, CylinderClass::All}) {
      REQUIRE(prime_table_polynomial(n, OrbitClass::All, c) ==
              prime_table_polynomial(n, OrbitClass::A, c) + prime_table_polynomial(n, OrbitClass::B, c));
    }
    for (OrbitClass o : {OrbitClass::A, OrbitClass::B, OrbitClass::All}) {
      REQUIRE(prime_table_polynomial(n, o, CylinderClass::All) ==
              prime_table_polynomial(n, o, CylinderClass::One) + prime_table_polynomial(n, o, CylinderClass::Two));
    }
  }
}

TEST_CASE("one-cylinder counts") {
  const auto five = one_cyl_counts(5);
  CHECK(five.surfaces_a == 5);
  CHECK(five.surfaces_b == 5);
  CHECK(five.surfaces_all == 10);
  CHECK(five.cusps_a == 1);
  CHECK(five.cusps_b == 1);
  CHECK(five.cusps_all == 2);
  const auto seven = one_cyl_counts(7);
  CHECK(seven.surfaces_a == 14);
  CHECK(seven.surfaces_b == 21);
  CHECK(seven.surfaces_all == 35);
  CHECK(seven.cusps_a == 2);
  CHECK(seven.cusps_b == 3);
  CHECK(seven.cusps_all == 5);
  for (int n = 5; n <= 101; ++n) {
    if (!is_prime(n)) continue;
    const auto c = one_cyl_counts(n);
    REQUIRE(c.surfaces_all == c.surfaces_a + c.surfaces_b);
    REQUIRE(c.cusps_all == c.cusps_a + c.cusps_b);
    REQUIRE(c.surfaces_all == n * c.cusps_all);
  }
  CHECK_THROWS_AS(one_cyl_counts(3), Error);
  CHECK_THROWS_AS(one_cyl_counts(9), Error);
}

TEST_CASE("two-cylinder sums against direct loops") {
  const auto five = two_cyl_exact_sums(5);
  CHECK(five.s == 17);
  CHECK(five.s_oh == 12);
  CHECK(five.s_ow == 3);
  CHECK(five.s_eo == 2);
  CHECK(five.a2 == 13);
  CHECK(five.b2 == 4);
  CHECK(two_cyl_exact_sums(3).s == 2);
  for (int n = 3; n <= 61; n += 2) {
    const auto loops = sums_by_loops(n);
    const auto got = two_cyl_exact_sums(n);
    REQUIRE(got.s == loops.s);
    REQUIRE(got.s_oh == loops.oh);
    REQUIRE(got.s_ow == loops.ow);
    REQUIRE(got.s_eo == got.s - got.s_oh - got.s_ow);
    if (is_prime(n)) REQUIRE(got.a2 + got.b2 == got.s);
    REQUIRE(two_cyl_cusp_bound(n) == loops.bound);
    if (is_prime(n) && n > 3) {
      REQUIRE(got.a2 == prime_table_polynomial(n, OrbitClass::A, CylinderClass::Two));
      REQUIRE(got.b2 == prime_table_polynomial(n, OrbitClass::B, CylinderClass::Two));
    }
  }
  CHECK(two_cyl_cusp_bound(5) >= 6);
  CHECK(two_cyl_cusp_bound(3) >= 1);
  CHECK_THROWS_AS(two_cyl_exact_sums(6), Error);
  CHECK_THROWS_AS(two_cyl_cusp_bound(2), Error);
}

TEST_CASE("elliptic conjecture values") {
  CHECK(elliptic_conjecture(3) == 1);
  CHECK(elliptic_conjecture(5) == 1);
  CHECK(elliptic_conjecture(13) == 3);
  CHECK_THROWS_AS(elliptic_conjecture(9), Error);
}

TEST_CASE("count table rows add up") {
  for (int n : {5, 7, 11, 13, 31}) {
    const auto t = prime_count_table(n);
    for (CylinderClass c : {CylinderClass::One, CylinderClass::Two, CylinderClass::All}) {
      for (bool cusps : {false, true}) {
        const auto a = t.at({OrbitClass::A, c, cusps});
        const auto b = t.at({OrbitClass::B, c, cusps});
        const auto all = t.at({OrbitClass::All, c, cusps});
        if (a && b && all) REQUIRE(*all == *a + *b);
      }
    }
    CHECK_FALSE(t.at({OrbitClass::A, CylinderClass::Two, true}).has_value());
    CHECK(*t.at({OrbitClass::All, CylinderClass::All, false}) == ems_total(n));
  }
}

TEST_CASE("asymptotic constants are exact") {
  const auto k = asymptotic_constants();
  CHECK(k.genus_coeff == make_rational(1, 64));
  CHECK(k.area_coeff.coeff == make_rational(1, 16));
  CHECK(k.area_coeff.pi_power == 1);
  CHECK(k.cusp_coeff_a == make_rational(1, 24));
  CHECK(k.cusp_coeff_b == make_rational(1, 8));
  CHECK(k.orbit_surface_coeff == make_rational(3, 16));
  CHECK(k.two_cyl_surface_coeff == make_rational(5, 24));
  CHECK(k.two_cyl_split_a == make_rational(7, 48));
  CHECK(k.two_cyl_split_b == make_rational(1, 16));
  CHECK(k.zeta2.value() == doctest::Approx(std::numbers::pi * std::numbers::pi / 6).epsilon(1e-12));
  CHECK(k.mean_order_deviation.pi_power == -4);
  CHECK(k.mean_order_deviation.value() * k.zeta4.value() == doctest::Approx(1.0).epsilon(1e-12));
}
