#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "sts/cylinder.hpp"
#include "sts/origami.hpp"

namespace sts {

struct KeyedSurface {
  CylinderDecomposition decomposition;
  CanonicalKey key;
};

/// Every H(2) surface tiled by n squares, one entry per canonical key, in
/// generation order: one-cylinder tuples by height, then two-cylinder tuples.
/// Throws Error{BadN} if n < 3.
std::vector<KeyedSurface> enumerate_keyed(int n, bool primitive_only, int workers = 1);
std::vector<CylinderDecomposition> enumerate_surfaces(int n, bool primitive_only, int workers = 1);

/// Independent oracle: scans all gluings with the right permutation fixed to
/// one representative per cycle type. Returns sorted keys.
/// Throws Error{BadN} unless 1 <= n <= 8.
std::vector<CanonicalKey> brute_force_enumerate(int n);

/// Action of U and V on a finite set of surfaces closed under both.
struct OrbitGraph {
  std::vector<CanonicalKey> keys;  // sorted
  std::vector<int> u;              // index of U * keys[i]
  std::vector<int> v;              // index of V * keys[i]

  std::size_t size() const { return keys.size(); }
  std::optional<int> find(const CanonicalKey& key) const;
};

/// Throws Error{NotClosed} if some image leaves the set.
OrbitGraph build_orbit_graph(std::vector<CanonicalKey> keys, int workers = 1);

/// Closure of the seed under U, U^-1 and V, sorted.
/// Throws Error{NotPrimitive} for non-primitive seeds.
std::vector<CanonicalKey> orbit_bfs(const Origami& seed);

struct Cusp {
  CylinderCoords representative;
  int width = 0;
};

/// U-orbits of a U-closed set of surfaces. The representative of a
/// two-cylinder cusp is the reduced-twist surface when it belongs to the
/// cusp, otherwise the least coordinates among members; one-cylinder cusps
/// use the least coordinates. Sorted by representative.
std::vector<Cusp> cusp_partition(const std::vector<CanonicalKey>& orbit);

struct EllipticCounts {
  int e2 = 0;
  int e3 = 0;
  friend bool operator==(const EllipticCounts&, const EllipticCounts&) = default;
};

/// e2 counts surfaces fixed by V; e3 counts surfaces fixed by V*U or U*V.
EllipticCounts elliptic_counts(const std::vector<CanonicalKey>& orbit);

/// g = 1 + d/12 - e2/4 - e3/3 - e_inf/2. Throws Error{NonIntegralGenus} if
/// the value is not a nonnegative integer.
int genus_gauss_bonnet(long long d, long long e2, long long e3, long long e_inf);

struct OneCylinderWitness {
  std::vector<Generator> word;  // applied left to right to the seed
  OneCylCoords coords;
};

/// Breadth-first search for a one-cylinder surface in the orbit of `seed`.
/// `budget` caps the number of visited surfaces; 0 means the whole orbit.
/// Throws Error{BudgetExceeded} when nothing is found within the budget.
OneCylinderWitness find_one_cylinder_rep(const Origami& seed, std::size_t budget = 0);

}  // namespace sts
