#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sts/permutation.hpp"

namespace sts {

/// A square-tiled surface: n unit squares glued by two permutations.
///
/// Labeling convention (frozen):
///   - squares are labeled 0..n-1;
///   - `right(i)` is the square glued to the right edge of square i;
///   - `up(i)` is the square glued to the top edge of square i;
///   - the bottom-left corners of i and of `commutator()(i)` are the same
///     point of the surface, reached by one full turn around that point.
class Origami {
 public:
  Origami() = default;
  /// Throws Error{InvalidPermutation} on size mismatch.
  Origami(Permutation right, Permutation up);

  int n() const noexcept { return right_.size(); }
  const Permutation& right() const noexcept { return right_; }
  const Permutation& up() const noexcept { return up_; }

  /// up * right * up^-1 * right^-1; its cycles are the vertices of the tiling.
  Permutation commutator() const;
  /// True when <right, up> acts transitively on the squares.
  bool is_connected() const;
  /// Simultaneous conjugation: square i becomes square relabel(i).
  Origami relabeled(const Permutation& relabel) const;

  friend bool operator==(const Origami&, const Origami&) = default;

 private:
  Permutation right_;
  Permutation up_;
};

struct StratumSignature {
  std::vector<int> cone_orders;  // sorted descending, only k_i >= 1
  int genus = 0;

  bool is_h2() const { return cone_orders.size() == 1 && cone_orders.front() == 2; }
  friend bool operator==(const StratumSignature&, const StratumSignature&) = default;
};

/// Signature of any connected origami. Throws Error{NotConnected}.
StratumSignature stratum_signature(const Origami& o);

/// Signature, requiring membership in H(2).
/// Throws Error{NotConnected} or Error{WrongStratum}.
StratumSignature validate_h2(const Origami& o);

/// Relabeling-invariant identity of a surface. The payload interleaves
/// (right, up) of the lexicographically least breadth-first relabeling.
struct CanonicalKey {
  std::vector<std::uint16_t> bytes;

  int n() const noexcept { return static_cast<int>(bytes.size() / 2); }
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& key) const noexcept;
};

CanonicalKey canonical_key(const Origami& o);
/// The origami encoded by a key (its canonical labeling).
Origami from_key(const CanonicalKey& key);

enum class Generator { U, UInv, V, MinusId };

std::string_view to_string(Generator g);

/// Action of the standard generators of SL(2,Z):
///   U       horizontal shear (x, y) -> (x + y, y): up' = up * right^-1
///   UInv    inverse shear:                       up' = up * right
///   V       rotation by +pi/2:   right' = up^-1, up' = right
///   MinusId rotation by pi:      right' = right^-1, up' = up^-1
Origami act(const Origami& o, Generator g);

/// 2x2 integer matrix stored row-major: {m00, m01, m10, m11}.
/// Columns are the basis vectors (m00, m10) and (m01, m11).
struct LatticeBasis {
  std::array<std::int64_t, 4> m{1, 0, 0, 1};
  std::int64_t index = 1;

  bool is_primitive() const { return m == std::array<std::int64_t, 4>{1, 0, 0, 1}; }
  friend bool operator==(const LatticeBasis&, const LatticeBasis&) = default;
};

/// Upper-triangular Hermite normal form of the lattice spanned by `vectors`.
/// Throws Error{NotPrimitive} if the vectors do not span a rank-2 lattice.
LatticeBasis hermite_normal_form(std::span<const std::array<std::int64_t, 2>> vectors);

/// Period lattice from the developing map of the tiling: squares are placed
/// along a spanning tree and every remaining gluing contributes its
/// holonomy defect. Only one cone point exists in H(2), so these absolute
/// periods generate the full lattice of relative periods.
LatticeBasis period_lattice(const Origami& o);

}  // namespace sts
