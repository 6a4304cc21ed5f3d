#include "sts/origami.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "sts/error.hpp"

namespace sts {

Origami::Origami(Permutation right, Permutation up) : right_(std::move(right)), up_(std::move(up)) {
  if (right_.size() != up_.size()) {
    throw Error(ErrorKind::InvalidPermutation, "right and up act on different square counts");
  }
}

Permutation Origami::commutator() const {
  return up_ * right_ * up_.inverse() * right_.inverse();
}

bool Origami::is_connected() const {
  if (n() == 0) return false;
  std::vector<char> seen(static_cast<std::size_t>(n()), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : {right_(x), up_(x)}) {
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == n();
}

Origami Origami::relabeled(const Permutation& relabel) const {
  const Permutation inv = relabel.inverse();
  return Origami(relabel * right_ * inv, relabel * up_ * inv);
}

StratumSignature stratum_signature(const Origami& o) {
  if (!o.is_connected()) throw Error(ErrorKind::NotConnected, "square gluings are not transitive");
  StratumSignature sig;
  const auto type = o.commutator().cycle_type();
  for (int len : type) {
    if (len > 1) sig.cone_orders.push_back(len - 1);
  }
  // Euler characteristic: vertices - edges + faces = (#cycles) - 2n + n.
  const int chi = static_cast<int>(type.size()) - o.n();
  sig.genus = (2 - chi) / 2;
  return sig;
}

StratumSignature validate_h2(const Origami& o) {
  StratumSignature sig = stratum_signature(o);
  if (!sig.is_h2()) {
    throw Error(ErrorKind::WrongStratum, "commutator cycle type is not (3, 1, ..., 1)");
  }
  return sig;
}

std::size_t CanonicalKeyHash::operator()(const CanonicalKey& key) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::uint16_t b : key.bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

CanonicalKey canonical_key(const Origami& o) {
  const int n = o.n();
  const auto right = o.right().images();
  const auto up = o.up().images();
  std::vector<std::uint16_t> best;
  std::vector<std::uint16_t> cur(static_cast<std::size_t>(2 * n));
  std::vector<int> label(static_cast<std::size_t>(n));
  std::vector<int> order(static_cast<std::size_t>(n));

  for (int start = 0; start < n; ++start) {
    std::fill(label.begin(), label.end(), -1);
    label[static_cast<std::size_t>(start)] = 0;
    order[0] = start;
    int assigned = 1;
    // 0: undecided, -1: already smaller than best, +1: larger (abandon).
    int cmp = best.empty() ? -1 : 0;
    for (int k = 0; k < n && cmp <= 0; ++k) {
      if (k >= assigned) {
        // Disconnected input; canonical keys are only defined for surfaces.
        throw Error(ErrorKind::NotConnected, "cannot canonicalize a disconnected origami");
      }
      const int sq = order[static_cast<std::size_t>(k)];
      for (int side = 0; side < 2; ++side) {
        const int nb = side == 0 ? right[static_cast<std::size_t>(sq)] : up[static_cast<std::size_t>(sq)];
        int& l = label[static_cast<std::size_t>(nb)];
        if (l < 0) {
          l = assigned;
          order[static_cast<std::size_t>(assigned++)] = nb;
        }
        const std::size_t pos = static_cast<std::size_t>(2 * k + side);
        cur[pos] = static_cast<std::uint16_t>(l);
        if (cmp == 0) {
          if (cur[pos] < best[pos]) cmp = -1;
          else if (cur[pos] > best[pos]) cmp = 1;
        }
      }
    }
    if (cmp < 0) best = cur;
  }
  return CanonicalKey{std::move(best)};
}

Origami from_key(const CanonicalKey& key) {
  const int n = key.n();
  std::vector<int> right(static_cast<std::size_t>(n)), up(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    right[static_cast<std::size_t>(k)] = key.bytes[static_cast<std::size_t>(2 * k)];
    up[static_cast<std::size_t>(k)] = key.bytes[static_cast<std::size_t>(2 * k + 1)];
  }
  return Origami(Permutation(std::move(right)), Permutation(std::move(up)));
}

std::string_view to_string(Generator g) {
  switch (g) {
    case Generator::U: return "U";
    case Generator::UInv: return "U^-1";
    case Generator::V: return "V";
    case Generator::MinusId: return "-I";
  }
  return "?";
}

Origami act(const Origami& o, Generator g) {
  switch (g) {
    case Generator::U: return Origami(o.right(), o.up() * o.right().inverse());
    case Generator::UInv: return Origami(o.right(), o.up() * o.right());
    case Generator::V: return Origami(o.up().inverse(), o.right());
    case Generator::MinusId: return Origami(o.right().inverse(), o.up().inverse());
  }
  return o;
}

LatticeBasis hermite_normal_form(std::span<const std::array<std::int64_t, 2>> vectors) {
  std::vector<std::array<std::int64_t, 2>> vs(vectors.begin(), vectors.end());
  // Euclid on the second coordinate until a single vector carries it.
  for (;;) {
    std::size_t pivot = vs.size();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (vs[i][1] == 0) continue;
      if (pivot == vs.size() || std::llabs(vs[i][1]) < std::llabs(vs[pivot][1])) pivot = i;
    }
    if (pivot == vs.size()) break;
    bool reduced = false;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i == pivot || vs[i][1] == 0) continue;
      const std::int64_t q = vs[i][1] / vs[pivot][1];
      vs[i][0] -= q * vs[pivot][0];
      vs[i][1] -= q * vs[pivot][1];
      reduced = true;
    }
    if (!reduced) break;
  }
  std::array<std::int64_t, 2> lead{0, 0};
  std::int64_t a = 0;
  for (const auto& v : vs) {
    if (v[1] != 0) lead = v;
    else a = std::gcd(a, v[0]);
  }
  if (lead[1] < 0) lead = {-lead[0], -lead[1]};
  if (a == 0 || lead[1] == 0) throw Error(ErrorKind::NotPrimitive, "period vectors do not span a rank-2 lattice");
  std::int64_t b = lead[0] % a;
  if (b < 0) b += a;
  LatticeBasis basis;
  basis.m = {a, b, 0, lead[1]};
  basis.index = a * lead[1];
  return basis;
}

LatticeBasis period_lattice(const Origami& o) {
  const int n = o.n();
  std::vector<std::array<std::int64_t, 2>> pos(static_cast<std::size_t>(n));
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  std::queue<int> queue;
  queue.push(0);
  placed[0] = 1;
  std::vector<std::array<std::int64_t, 2>> defects;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop();
    const auto px = pos[static_cast<std::size_t>(x)];
    const std::array<std::pair<int, std::array<std::int64_t, 2>>, 2> steps{{
        {o.right()(x), {px[0] + 1, px[1]}},
        {o.up()(x), {px[0], px[1] + 1}},
    }};
    for (const auto& [y, expected] : steps) {
      auto& py = pos[static_cast<std::size_t>(y)];
      if (!placed[static_cast<std::size_t>(y)]) {
        placed[static_cast<std::size_t>(y)] = 1;
        py = expected;
        queue.push(y);
      } else {
        defects.push_back({expected[0] - py[0], expected[1] - py[1]});
      }
    }
  }
  if (std::find(placed.begin(), placed.end(), 0) != placed.end()) {
    throw Error(ErrorKind::NotConnected, "square gluings are not transitive");
  }
  return hermite_normal_form(defects);
}

}  // namespace sts
