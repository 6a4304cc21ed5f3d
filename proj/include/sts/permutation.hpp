#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sts {

/// A permutation of {0, ..., n-1} in one-line notation.
///
/// Composition follows function notation: (p * q)(i) == p(q(i)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws Error{InvalidPermutation} if `images` is not a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Builds a permutation of size n from disjoint cycles.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  /// Parses the textual cycle encoding, e.g. "(0 1 2)(3 4)" or "()".
  static Permutation parse(int n, std::string_view text);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  std::span<const int> images() const noexcept { return images_; }

  Permutation inverse() const;
  Permutation operator*(const Permutation& rhs) const;

  bool is_identity() const;
  /// Cycles with each cycle starting at its least element, ordered by that
  /// element. Fixed points are included.
  std::vector<std::vector<int>> cycles() const;
  /// Sorted cycle lengths, descending.
  std::vector<int> cycle_type() const;
  /// Cycle encoding with fixed points omitted; identity is "()".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace sts
