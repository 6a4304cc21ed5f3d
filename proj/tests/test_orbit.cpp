#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sts/error.hpp"
#include "sts/formulas.hpp"
#include "sts/orbit.hpp"
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

TEST_CASE("enumeration sizes") {
  CHECK(enumerate_surfaces(3, false).size() == 3);
  CHECK(enumerate_surfaces(5, false).size() == 27);
  CHECK(enumerate_surfaces(4, true).size() == 9);
  CHECK(kind_of([] { enumerate_surfaces(2, false); }) == ErrorKind::BadN);
  for (int n = 3; n <= 16; ++n) REQUIRE(static_cast<std::int64_t>(enumerate_surfaces(n, true).size()) == ems_total(n));
}

TEST_CASE("enumeration is independent of the worker count") {
  const auto serial = enumerate_keyed(12, false, 1);
  const auto parallel = enumerate_keyed(12, false, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) REQUIRE(serial[i].key == parallel[i].key);
}

TEST_CASE("brute force matches enumeration") {
  CHECK(brute_force_enumerate(3).size() == 3);
  CHECK(brute_force_enumerate(5).size() == 27);
  CHECK(brute_force_enumerate(1).empty());
  for (int n = 3; n <= 7; ++n) {
    std::vector<CanonicalKey> listed;
    for (const auto& s : enumerate_keyed(n, false)) listed.push_back(s.key);
    std::sort(listed.begin(), listed.end());
    REQUIRE(listed == brute_force_enumerate(n));
  }
  std::set<CanonicalKey> primitive;
  for (const auto& k : brute_force_enumerate(4)) {
    if (period_lattice(from_key(k)).is_primitive()) primitive.insert(k);
  }
  CHECK(primitive.size() == 9);
  CHECK(kind_of([] { brute_force_enumerate(9); }) == ErrorKind::BadN);
}

TEST_CASE("orbit examples") {
  for (const auto& d : enumerate_surfaces(3, false)) CHECK(orbit_bfs(to_origami(d.coords)).size() == 3);
  const auto a = orbit_bfs(to_origami(make_one_cyl(1, 1, 3, 0)));
  const auto b = orbit_bfs(to_origami(make_one_cyl(1, 2, 2, 0)));
  CHECK(a.size() == 18);
  CHECK(b.size() == 9);
  CHECK(std::is_sorted(a.begin(), a.end()));
  CHECK(kind_of([] { orbit_bfs(to_origami(make_two_cyl(1, 1, 2, 4, 0, 0))); }) == ErrorKind::NotPrimitive);
}

TEST_CASE("orbits do not depend on the seed") {
  const auto reference = orbit_bfs(to_origami(make_one_cyl(1, 1, 3, 0)));
  for (const auto& key : reference) {
    REQUIRE(orbit_bfs(test::random_relabel(from_key(key))) == reference);
  }
}

TEST_CASE("cusps and elliptic points at n=3 and n=5") {
  const auto three = orbit_bfs(to_origami(make_one_cyl(1, 1, 1, 0)));
  const auto cusps3 = cusp_partition(three);
  REQUIRE(cusps3.size() == 2);
  std::multiset<int> widths3;
  for (const auto& c : cusps3) widths3.insert(c.width);
  CHECK(widths3 == std::multiset<int>{1, 2});
  CHECK(elliptic_counts(three) == EllipticCounts{1, 0});

  const auto a = orbit_bfs(to_origami(make_one_cyl(1, 1, 3, 0)));
  const auto b = orbit_bfs(to_origami(make_one_cyl(1, 2, 2, 0)));
  CHECK(cusp_partition(a).size() == 5);
  CHECK(cusp_partition(b).size() == 3);
  CHECK(elliptic_counts(a) == EllipticCounts{0, 0});
  CHECK(elliptic_counts(b) == EllipticCounts{1, 0});
}

TEST_CASE("cusp representatives belong to their cusp") {
  for (int n : {5, 7, 9, 12, 15}) {
    std::set<CanonicalKey> done;
    for (const auto& s : enumerate_keyed(n, true)) {
      if (done.count(s.key)) continue;
      const auto orbit = orbit_bfs(to_origami(s.decomposition.coords));
      done.insert(orbit.begin(), orbit.end());
      std::int64_t total = 0;
      for (const auto& c : cusp_partition(orbit)) {
        total += c.width;
        REQUIRE(cusp_width(c.representative) == c.width);
        auto o = to_origami(c.representative);
        int length = 0;
        do {
          o = act(o, Generator::U);
          ++length;
        } while (canonical_key(o) != canonical_key(to_origami(c.representative)));
        REQUIRE(length == c.width);
      }
      REQUIRE(total == static_cast<std::int64_t>(orbit.size()));
    }
  }
}

TEST_CASE("cusp partition requires U-closure") {
  auto orbit = orbit_bfs(to_origami(make_one_cyl(1, 1, 3, 0)));
  orbit.pop_back();
  CHECK(kind_of([&] { cusp_partition(orbit); }) == ErrorKind::NotClosed);
  CHECK(kind_of([&] { build_orbit_graph(orbit); }) == ErrorKind::NotClosed);
}

TEST_CASE("Gauss-Bonnet") {
  CHECK(genus_gauss_bonnet(3, 1, 0, 2) == 0);
  CHECK(genus_gauss_bonnet(18, 0, 0, 5) == 0);
  CHECK(genus_gauss_bonnet(9, 1, 0, 3) == 0);
  CHECK(genus_gauss_bonnet(12, 0, 0, 0) == 2);
  CHECK(kind_of([] { genus_gauss_bonnet(12, 0, 0, 1); }) == ErrorKind::NonIntegralGenus);
  CHECK(kind_of([] { genus_gauss_bonnet(1, 0, 0, 4); }) == ErrorKind::NonIntegralGenus);
}

TEST_CASE("one-cylinder search") {
  const auto one = to_origami(make_one_cyl(1, 1, 3, 0));
  const auto trivial = find_one_cylinder_rep(one);
  CHECK(trivial.word.empty());
  CHECK(trivial.coords == make_one_cyl(1, 1, 3, 0));

  const auto seed = to_origami(make_two_cyl(1, 1, 1, 4, 0, 0));
  const auto found = find_one_cylinder_rep(seed);
  CHECK_FALSE(found.word.empty());
  const std::array<int, 3> triple{found.coords.a, found.coords.b, found.coords.c};
  CHECK((triple == std::array<int, 3>{1, 1, 3} || triple == std::array<int, 3>{1, 2, 2}));
  auto walked = seed;
  for (Generator g : found.word) walked = act(walked, g);
  CHECK(decompose(walked).coords == CylinderCoords{found.coords});

  CHECK(kind_of([&] { find_one_cylinder_rep(seed, 1); }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("every prime orbit reaches a one-cylinder surface") {
  for (int n : {5, 7, 11, 13}) {
    std::set<CanonicalKey> done;
    for (const auto& s : enumerate_keyed(n, true)) {
      if (done.count(s.key)) continue;
      const auto orbit = orbit_bfs(to_origami(s.decomposition.coords));
      done.insert(orbit.begin(), orbit.end());
      CHECK_NOTHROW(find_one_cylinder_rep(to_origami(s.decomposition.coords), orbit.size()));
    }
  }
}
