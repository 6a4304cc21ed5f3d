#include "sts/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "sts/error.hpp"

namespace sts {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)]) {
      throw Error(ErrorKind::InvalidPermutation,
                  "images are not a bijection on [0, " + std::to_string(n) + ")");
    }
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(n), -1);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k];
      const int to = cycle[(k + 1) % cycle.size()];
      if (from < 0 || from >= n || images[static_cast<std::size_t>(from)] != -1) {
        throw Error(ErrorKind::InvalidPermutation, "cycles are not disjoint or out of range");
      }
      images[static_cast<std::size_t>(from)] = to;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (images[static_cast<std::size_t>(i)] == -1) images[static_cast<std::size_t>(i)] = i;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse(int n, std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (pos == text.size()) throw Error(ErrorKind::Parse, "empty permutation text");
  while (pos < text.size()) {
    if (text[pos] != '(') throw Error(ErrorKind::Parse, "expected '(' in \"" + std::string(text) + "\"");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      if (pos >= text.size()) throw Error(ErrorKind::Parse, "unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw Error(ErrorKind::Parse, "unexpected character in cycle");
      }
      int value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1'000'000) throw Error(ErrorKind::Parse, "index too large");
        ++pos;
      }
      cycle.push_back(value);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return from_cycles(n, cycles);
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.size() != size()) throw Error(ErrorKind::InvalidPermutation, "size mismatch in composition");
  std::vector<int> out(images_.size());
  for (int i = 0; i < size(); ++i) out[static_cast<std::size_t>(i)] = (*this)(rhs(i));
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  }
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (int start = 0; start < size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x)] = 1;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  for (const auto& c : cycles()) lengths.push_back(static_cast<int>(c.size()));
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  bool any = false;
  for (const auto& cycle : cycles()) {
    if (cycle.size() < 2) continue;
    any = true;
    out << '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) out << ' ';
      out << cycle[k];
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

}  // namespace sts
