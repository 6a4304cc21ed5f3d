#include "sts/formulas.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "sts/cylinder.hpp"
#include "sts/error.hpp"

namespace sts {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "integer addition overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "integer multiplication overflow");
  return out;
}

std::int64_t exact_div(std::int64_t num, std::int64_t den) {
  if (den == 0 || num % den != 0) {
    throw Error(ErrorKind::Overflow,
                "non-integral quotient " + std::to_string(num) + "/" + std::to_string(den));
  }
  return num / den;
}

std::int64_t jordan_totient2(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::BadN, "n must be positive");
  std::int64_t result = checked_mul(n, n);
  std::int64_t m = n;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result = checked_mul(exact_div(result, p * p), p * p - 1);
  }
  if (m > 1) result = checked_mul(exact_div(result, checked_mul(m, m)), checked_mul(m, m) - 1);
  return result;
}

std::int64_t ems_total(std::int64_t n) {
  if (n < 3) throw Error(ErrorKind::BadN, "n must be at least 3");
  return exact_div(checked_mul(checked_mul(3, n - 2), jordan_totient2(n)), 8);
}

OrbitTotals conjecture_orbit_totals(std::int64_t n) {
  if (n < 5 || n % 2 == 0) throw Error(ErrorKind::BadN, "orbit totals are conjectured for odd n >= 5");
  const std::int64_t j = jordan_totient2(n);
  return {exact_div(checked_mul(checked_mul(3, n - 1), j), 16), exact_div(checked_mul(checked_mul(3, n - 3), j), 16)};
}

std::int64_t prime_table_polynomial(std::int64_t n, OrbitClass orbit, CylinderClass cylinders) {
  if (n < 3 || n % 2 == 0 || !is_prime(n)) throw Error(ErrorKind::BadN, "table polynomials hold for odd primes");
  const std::int64_t n2 = checked_mul(n, n);
  const std::int64_t n3 = checked_mul(n2, n);
  // {c3, c2, c1, c0, denominator}
  struct Poly {
    std::int64_t c3, c2, c1, c0, den;
  };
  Poly p{};
  switch (orbit) {
    case OrbitClass::A:
      p = cylinders == CylinderClass::One   ? Poly{1, 0, -1, 0, 24}
          : cylinders == CylinderClass::Two ? Poly{7, -9, -7, 9, 48}
                                            : Poly{3, -3, -3, 3, 16};
      break;
    case OrbitClass::B:
      p = cylinders == CylinderClass::One   ? Poly{1, -4, 3, 0, 8}
          : cylinders == CylinderClass::Two ? Poly{1, -1, -9, 9, 16}
                                            : Poly{3, -9, -3, 9, 16};
      break;
    case OrbitClass::All:
      // One-cylinder total is n(n-1)(n-2)/6, the sum of the A and B rows.
      p = cylinders == CylinderClass::One   ? Poly{1, -3, 2, 0, 6}
          : cylinders == CylinderClass::Two ? Poly{5, -6, -17, 18, 24}
                                            : Poly{3, -6, -3, 6, 8};
      break;
  }
  std::int64_t num = checked_mul(p.c3, n3);
  num = checked_add(num, checked_mul(p.c2, n2));
  num = checked_add(num, checked_mul(p.c1, n));
  num = checked_add(num, p.c0);
  return exact_div(num, p.den);
}

OneCylCounts one_cyl_counts(std::int64_t n) {
  if (n <= 3 || !is_prime(n)) throw Error(ErrorKind::BadN, "one-cylinder counts hold for prime n > 3");
  OneCylCounts c;
  c.cusps_a = exact_div(checked_mul(n - 1, n + 1), 24);
  c.cusps_b = exact_div(checked_mul(n - 1, n - 3), 8);
  c.cusps_all = exact_div(checked_mul(n - 1, n - 2), 6);
  c.surfaces_a = checked_mul(n, c.cusps_a);
  c.surfaces_b = checked_mul(n, c.cusps_b);
  c.surfaces_all = checked_mul(n, c.cusps_all);
  return c;
}

TwoCylSums two_cyl_exact_sums(std::int64_t n) {
  if (n < 3 || n % 2 == 0) throw Error(ErrorKind::BadN, "exact two-cylinder sums are split for odd n >= 3");
  TwoCylSums s;
  std::int64_t mixed = 0;
  for (std::int64_t a = 1; a < n; ++a) {
    for (std::int64_t k = 1; a * k < n; ++k) {
      const std::int64_t rest = n - a * k;
      for (std::int64_t l = k + 1; l <= rest; ++l) {
        if (rest % l != 0) continue;
        const std::int64_t b = rest / l;
        const std::int64_t term = checked_mul(k, l);
        s.s = checked_add(s.s, term);
        if (std::gcd(a, b) != 1) continue;
        if (a % 2 == 1 && b % 2 == 1) s.s_oh = checked_add(s.s_oh, term);
        if (k % 2 == 1 && l % 2 == 1) s.s_ow = checked_add(s.s_ow, term);
        if ((a + b) % 2 == 1 && (k % 2 == 0 || l % 2 == 0)) mixed = checked_add(mixed, term);
      }
    }
  }
  s.s_eo = s.s - s.s_oh - s.s_ow;
  s.a2 = checked_add(s.s_oh, exact_div(mixed, 2));
  s.b2 = checked_add(s.s_ow, exact_div(mixed, 2));
  return s;
}

std::int64_t two_cyl_cusp_bound(std::int64_t n) {
  if (n < 3) throw Error(ErrorKind::BadN, "n must be at least 3");
  std::int64_t total = 0;
  for (std::int64_t a = 1; a < n; ++a) {
    for (std::int64_t k = 1; a * k < n; ++k) {
      const std::int64_t rest = n - a * k;
      for (std::int64_t l = k + 1; l <= rest; ++l) {
        if (rest % l != 0) continue;
        const std::int64_t b = rest / l;
        total = checked_add(total, checked_mul(std::gcd(a, k), std::gcd(b, l)));
      }
    }
  }
  return total;
}

std::int64_t elliptic_conjecture(std::int64_t n) {
  if (!is_prime(n)) throw Error(ErrorKind::BadN, "the elliptic-point conjecture concerns prime n");
  return (n + 1) / 4;
}

CountTable prime_count_table(std::int64_t n) {
  const OneCylCounts one = one_cyl_counts(n);
  const TwoCylSums two = two_cyl_exact_sums(n);
  CountTable t;
  using O = OrbitClass;
  using C = CylinderClass;
  t[{O::A, C::One, false}] = one.surfaces_a;
  t[{O::B, C::One, false}] = one.surfaces_b;
  t[{O::All, C::One, false}] = one.surfaces_all;
  t[{O::A, C::Two, false}] = two.a2;
  t[{O::B, C::Two, false}] = two.b2;
  t[{O::All, C::Two, false}] = two.s;
  t[{O::A, C::All, false}] = one.surfaces_a + two.a2;
  t[{O::B, C::All, false}] = one.surfaces_b + two.b2;
  t[{O::All, C::All, false}] = one.surfaces_all + two.s;
  t[{O::A, C::One, true}] = one.cusps_a;
  t[{O::B, C::One, true}] = one.cusps_b;
  t[{O::All, C::One, true}] = one.cusps_all;
  for (O o : {O::A, O::B, O::All}) {
    t[{o, C::Two, true}] = std::nullopt;
    t[{o, C::All, true}] = std::nullopt;
  }
  return t;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::Overflow, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

double PiMultiple::value() const {
  return coeff.value() * std::pow(std::numbers::pi, pi_power);
}

AsymptoticConstants asymptotic_constants() {
  AsymptoticConstants c;
  c.genus_coeff = make_rational(3, 16 * 12);
  c.area_coeff = {make_rational(3, 16 * 3), 1};
  c.cusp_coeff_a = make_rational(1, 24);
  c.cusp_coeff_b = make_rational(1, 8);
  c.orbit_surface_coeff = make_rational(9, 8 * 6);
  c.two_cyl_surface_coeff = make_rational(5, 4 * 6);
  c.two_cyl_split_a = make_rational(7, 8 * 6);
  c.two_cyl_split_b = make_rational(3, 8 * 6);
  c.zeta2 = {make_rational(1, 6), 2};
  c.zeta4 = {make_rational(1, 90), 4};
  c.mean_order_deviation = {make_rational(90, 1), -4};
  return c;
}

}  // namespace sts
