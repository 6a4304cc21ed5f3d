#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sts/error.hpp"
#include "sts/origami.hpp"
#include "support.hpp"

using namespace sts;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("validate_h2 error kinds") {
  const Origami torus(Permutation::from_cycles(3, {{0, 1, 2}}), Permutation::identity(3));
  CHECK(kind_of([&] { validate_h2(torus); }) == ErrorKind::WrongStratum);
  const Origami split(Permutation::from_cycles(3, {{0, 1}}), Permutation::identity(3));
  CHECK(kind_of([&] { validate_h2(split); }) == ErrorKind::NotConnected);
  CHECK(kind_of([] { Origami(Permutation::identity(2), Permutation::identity(3)); }) ==
        ErrorKind::InvalidPermutation);
}

TEST_CASE("one-cylinder (1,1,1) has a single cone point of angle 6 pi") {
  const auto o = to_origami(make_one_cyl(1, 1, 1, 0));
  const auto sig = validate_h2(o);
  CHECK(sig.cone_orders == std::vector<int>{2});
  CHECK(sig.genus == 2);
  CHECK(o.commutator().cycle_type() == std::vector<int>{3});
}

TEST_CASE("stratum signature of a higher genus origami") {
  const Origami o(Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}), Permutation::from_cycles(5, {{0, 2}, {1, 3}}));
  const auto sig = stratum_signature(o);
  int sum = 0;
  for (int k : sig.cone_orders) sum += k;
  CHECK(sum == 2 * sig.genus - 2);
}

TEST_CASE("keys are invariant under relabeling") {
  for (const auto& d : test::all_surfaces(3, 9)) {
    const auto o = to_origami(d.coords);
    const auto key = canonical_key(o);
    CHECK(from_key(key).n() == o.n());
    CHECK(canonical_key(from_key(key)) == key);
    for (int trial = 0; trial < 100; ++trial) REQUIRE(canonical_key(test::random_relabel(o)) == key);
  }
}

TEST_CASE("distinct surfaces have distinct keys") {
  std::set<CanonicalKey> keys;
  for (const auto& d : enumerate_surfaces(5, false)) keys.insert(test::key_of(d.coords));
  CHECK(keys.size() == 27);
}

TEST_CASE("n=3 has three surfaces") {
  std::set<CanonicalKey> keys;
  for (const auto& d : enumerate_surfaces(3, false)) keys.insert(test::key_of(d.coords));
  CHECK(keys.size() == 3);
}

TEST_CASE("generator relations on every surface up to n=10") {
  for (const auto& d : test::all_surfaces(3, 10)) {
    const auto o = to_origami(d.coords);
    const auto key = canonical_key(o);
    REQUIRE(canonical_key(act(act(o, Generator::U), Generator::UInv)) == key);
    REQUIRE(canonical_key(act(act(o, Generator::UInv), Generator::U)) == key);
    auto v4 = o;
    for (int i = 0; i < 4; ++i) v4 = act(v4, Generator::V);
    REQUIRE(canonical_key(v4) == key);
    REQUIRE(act(act(o, Generator::V), Generator::V) == act(o, Generator::MinusId));
    REQUIRE(canonical_key(act(o, Generator::MinusId)) == key);
    validate_h2(act(o, Generator::U));
    validate_h2(act(o, Generator::V));
  }
}

TEST_CASE("n=3 generator examples") {
  const auto s1 = to_origami(make_one_cyl(1, 1, 1, 0));
  CHECK(canonical_key(act(s1, Generator::U)) == canonical_key(s1));
  // The V-symmetric two-cylinder surface.
  int v_fixed = 0;
  for (const auto& d : enumerate_surfaces(3, false)) {
    const auto o = to_origami(d.coords);
    if (canonical_key(act(o, Generator::V)) == canonical_key(o)) {
      ++v_fixed;
      CHECK(d.diagram == SeparatrixDiagram::TwoCylinder);
    }
  }
  CHECK(v_fixed == 1);
}

TEST_CASE("hermite normal form") {
  const std::array<std::array<std::int64_t, 2>, 4> v{{{2, 0}, {2, 0}, {0, 1}, {0, 1}}};
  const auto b = hermite_normal_form(v);
  CHECK(b.m == std::array<std::int64_t, 4>{2, 0, 0, 1});
  CHECK(b.index == 2);
  CHECK_FALSE(b.is_primitive());

  const std::array<std::array<std::int64_t, 2>, 2> w{{{3, 1}, {1, 2}}};
  const auto c = hermite_normal_form(w);
  CHECK(c.index == 5);
  CHECK(c.m[2] == 0);
  CHECK(c.m[1] >= 0);
  CHECK(c.m[1] < c.m[0]);

  const std::array<std::array<std::int64_t, 2>, 2> flat{{{1, 0}, {3, 0}}};
  CHECK_THROWS_AS(hermite_normal_form(flat), Error);
}

TEST_CASE("period lattice examples") {
  const auto two = to_origami(make_two_cyl(1, 1, 2, 4, 0, 0));
  const auto b = period_lattice(two);
  CHECK(b.m == std::array<std::int64_t, 4>{2, 0, 0, 1});
  CHECK(b.index == 2);
  CHECK(period_lattice(to_origami(make_one_cyl(1, 1, 1, 0))).is_primitive());
}

TEST_CASE("period lattice routes agree and the index divides n") {
  for (const auto& d : test::all_surfaces(3, 16)) {
    const auto o = to_origami(d.coords);
    const auto geometric = period_lattice(o);
    REQUIRE(geometric == period_lattice(d.coords));
    REQUIRE(o.n() % geometric.index == 0);
    REQUIRE(period_lattice(test::random_relabel(o)) == geometric);
  }
}

TEST_CASE("every surface at prime n is primitive") {
  for (int n : {3, 5, 7, 11, 13}) {
    for (const auto& d : enumerate_surfaces(n, false)) REQUIRE(period_lattice(to_origami(d.coords)).is_primitive());
  }
}
