#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "sts/cylinder.hpp"
#include "sts/origami.hpp"
#include "sts/orbit.hpp"

namespace sts::test {

inline std::mt19937& rng() {
  static std::mt19937 engine(0x5eed1234u);
  return engine;
}

inline Permutation random_permutation(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng());
  return Permutation(images);
}

inline Origami random_relabel(const Origami& o) { return o.relabeled(random_permutation(o.n())); }

inline CanonicalKey key_of(const CylinderCoords& c) { return canonical_key(to_origami(c)); }

/// Every coordinate tuple enumerate_surfaces emits for n in [lo, hi].
inline std::vector<CylinderDecomposition> all_surfaces(int lo, int hi, bool primitive_only = false) {
  std::vector<CylinderDecomposition> out;
  for (int n = lo; n <= hi; ++n) {
    auto part = enumerate_surfaces(n, primitive_only);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace sts::test
