#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sts/census.hpp"
#include "sts/error.hpp"
#include "sts/formulas.hpp"

using namespace sts;

namespace {

void require_checks_pass(const CensusRecord& r) {
  for (const auto& c : r.checks) {
    INFO("n=" << r.n << " " << c.name << ": " << c.detail);
    CHECK(c.passed);
  }
}

}  // namespace

TEST_CASE("n=3") {
  const auto r = classify_census(3, 1);
  REQUIRE(r.orbits.size() == 1);
  const auto& o = r.orbits.front();
  CHECK(o.size == 3);
  CHECK(o.label == OrbitLabel::A);
  CHECK(o.invariant.count == 1);
  CHECK(o.cusp_widths() == std::vector<int>{1, 2});
  CHECK(o.e2 == 1);
  CHECK(o.e3 == 0);
  CHECK(o.genus == 0);
  CHECK(o.has_one_cylinder);
  require_checks_pass(r);
}

TEST_CASE("n=5") {
  const auto r = classify_census(5, 2);
  REQUIRE(r.orbits.size() == 2);
  const auto* a = r.find(OrbitLabel::A);
  const auto* b = r.find(OrbitLabel::B);
  REQUIRE(a);
  REQUIRE(b);
  CHECK(a->size == 18);
  CHECK(a->cusps.size() == 5);
  CHECK(a->e2 == 0);
  CHECK(a->genus == 0);
  CHECK(b->size == 9);
  CHECK(b->cusps.size() == 3);
  CHECK(b->e2 == 1);
  CHECK(b->genus == 0);
  CHECK(r.totals.surfaces == 27);
  CHECK(r.totals.cusps == 8);
  CHECK(r.totals.two_cyl_cusps == 6);
  CHECK(a->two_cyl_surfaces == 13);
  CHECK(b->two_cyl_surfaces == 4);
  require_checks_pass(r);
}

TEST_CASE("n=7 orbit sizes") {
  const auto r = classify_census(7);
  CHECK(r.find(OrbitLabel::A)->size == 54);
  CHECK(r.find(OrbitLabel::B)->size == 36);
  CHECK(r.find(OrbitLabel::A)->one_cyl_surfaces == 14);
  CHECK(r.find(OrbitLabel::B)->one_cyl_surfaces == 21);
  CHECK(r.find(OrbitLabel::A)->one_cyl_cusps == 2);
  CHECK(r.find(OrbitLabel::B)->one_cyl_cusps == 3);
  require_checks_pass(r);
}

TEST_CASE("even n form one orbit of invariant 2") {
  for (int n : {4, 6, 8}) {
    const auto r = classify_census(n);
    REQUIRE(r.orbits.size() == 1);
    CHECK(r.orbits.front().label == OrbitLabel::Single);
    CHECK(r.orbits.front().invariant.count == 2);
    CHECK(r.totals.surfaces == ems_total(n));
    require_checks_pass(r);
  }
  CHECK(classify_census(4).orbits.front().size == 9);
}

TEST_CASE("census is deterministic across worker counts") {
  const auto one = classify_census(13, 1);
  for (int workers : {2, 3, 8}) {
    const auto many = classify_census(13, workers);
    REQUIRE(many.orbits.size() == one.orbits.size());
    for (std::size_t i = 0; i < one.orbits.size(); ++i) {
      CHECK(many.orbits[i].min_key == one.orbits[i].min_key);
      CHECK(many.orbits[i].cusp_widths() == one.orbits[i].cusp_widths());
      CHECK(many.orbits[i].e2 == one.orbits[i].e2);
    }
  }
}

TEST_CASE("check statuses") {
  const auto r = classify_census(11);
  bool has_conjecture = false;
  bool has_proved = false;
  for (const auto& c : r.checks) {
    has_conjecture = has_conjecture || c.status == CheckStatus::Conjecture;
    has_proved = has_proved || c.status == CheckStatus::Proved;
  }
  CHECK(has_conjecture);
  CHECK(has_proved);
  CHECK(r.proved_checks_pass());
  CHECK(r.conjecture_checks_pass());
}

TEST_CASE("nonprime bound is reported, not asserted") {
  const auto r = classify_census(25);
  CHECK(r.proved_checks_pass());
  bool bound_reported = false;
  for (const auto& c : r.checks) {
    if (c.name == "two-cylinder cusp bound") {
      bound_reported = true;
      CHECK(c.status == CheckStatus::Conjecture);
      CHECK_FALSE(c.passed);
    }
  }
  CHECK(bound_reported);
  CHECK(r.totals.two_cyl_cusps == 184);
}

TEST_CASE("census rejects small n") {
  CHECK_THROWS_AS(classify_census(2), Error);
}
