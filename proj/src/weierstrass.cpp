#include "sts/weierstrass.hpp"

#include <optional>

#include "sts/error.hpp"

namespace sts {
namespace {

// Integer points among the two fixed points (X/2, (X + w)/2) of a cylinder
// core, where X is the offset of the involution x -> X - x on the cylinder.
int core_points(int height, int width, long long offset) {
  if (height % 2 != 0) return 0;
  if (width % 2 != 0) return 1;
  return offset % 2 == 0 ? 2 : 0;
}

std::optional<Permutation> propagate(const Origami& o, int image_of_zero) {
  const int n = o.n();
  const Permutation left = o.right().inverse();
  const Permutation down = o.up().inverse();
  std::vector<int> tau(static_cast<std::size_t>(n), -1);
  std::vector<int> stack{0};
  tau[0] = image_of_zero;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    const int tx = tau[static_cast<std::size_t>(x)];
    const std::array<std::pair<int, int>, 2> forced{{{o.right()(x), left(tx)}, {o.up()(x), down(tx)}}};
    for (const auto& [y, ty] : forced) {
      int& slot = tau[static_cast<std::size_t>(y)];
      if (slot < 0) {
        slot = ty;
        stack.push_back(y);
      } else if (slot != ty) {
        return std::nullopt;
      }
    }
  }
  for (int v : tau) {
    if (v < 0) return std::nullopt;
  }
  try {
    return Permutation(std::move(tau));
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

int integer_weierstrass_count(const CylinderCoords& c) {
  int count = 1;  // the cone point
  if (const auto* one = std::get_if<OneCylCoords>(&c)) {
    for (int len : {one->a, one->b, one->c}) count += len % 2 == 0 ? 1 : 0;
    // Bottom a on [0, a) lands on top a on [t, t + a): offset t + a.
    count += core_points(one->height, one->width(), static_cast<long long>(one->t) + one->a);
    return count;
  }
  const auto& two = std::get<TwoCylCoords>(c);
  count += two.l2() % 2 == 0 ? 1 : 0;  // g3 is the only self-glued connection
  count += core_points(two.h1, two.w1, two.t1);
  count += core_points(two.h2, two.w2, static_cast<long long>(two.t2) + two.l1());
  return count;
}

InvariantValue invariant_from_coords(const CylinderCoords& c) {
  if (!period_lattice(c).is_primitive()) {
    throw Error(ErrorKind::NotPrimitive, "the invariant is defined for primitive surfaces");
  }
  return InvariantValue{integer_weierstrass_count(c)};
}

InvolutionData involution_oracle(const Origami& o) {
  const int n = o.n();
  std::optional<Permutation> found;
  for (int j = 0; j < n; ++j) {
    auto tau = propagate(o, j);
    if (!tau) continue;
    if (found) throw Error(ErrorKind::NoInvolution, "rotation by pi is not unique (translation in affine group)");
    found = std::move(tau);
  }
  if (!found) throw Error(ErrorKind::NoInvolution, "no rotation by pi preserves the tiling");
  const Permutation& tau = *found;
  if (!(tau * tau).is_identity()) throw Error(ErrorKind::NoInvolution, "rotation by pi is not an involution");

  InvolutionData data{tau};
  for (int i = 0; i < n; ++i) {
    if (tau(i) == i) ++data.fixed_center_count;
    if (tau(i) == o.right()(i)) ++data.fixed_edge_midpoint_count;  // right edge of i
    if (tau(i) == o.up()(i)) ++data.fixed_edge_midpoint_count;     // top edge of i
  }
  // Vertices are commutator cycles, labeled by bottom-left corners. The
  // bottom-left corner of i goes to the top-right corner of tau(i), which is
  // the bottom-left corner of up(right(tau(i))).
  const auto cycles = o.commutator().cycles();
  std::vector<int> vertex_of(static_cast<std::size_t>(n));
  for (std::size_t v = 0; v < cycles.size(); ++v) {
    for (int sq : cycles[v]) vertex_of[static_cast<std::size_t>(sq)] = static_cast<int>(v);
  }
  for (const auto& cycle : cycles) {
    const int sq = cycle.front();
    const int image = o.up()(o.right()(tau(sq)));
    if (vertex_of[static_cast<std::size_t>(image)] == vertex_of[static_cast<std::size_t>(sq)]) {
      ++data.fixed_vertex_count;
    }
  }
  return data;
}

int one_cylinder_even_count(std::span<const int> lengths, int genus, HyperellipticStratum stratum) {
  if (genus < 2) throw Error(ErrorKind::BadPartition, "hyperelliptic components need genus >= 2");
  const std::size_t expected =
      static_cast<std::size_t>(stratum == HyperellipticStratum::SingleZero ? 2 * genus - 1 : 2 * genus);
  if (lengths.size() != expected) {
    throw Error(ErrorKind::BadPartition,
                "expected " + std::to_string(expected) + " saddle connection lengths, got " +
                    std::to_string(lengths.size()));
  }
  int even = 0;
  for (int len : lengths) {
    if (len < 1) throw Error(ErrorKind::BadPartition, "lengths must be positive");
    if (len % 2 == 0) ++even;
  }
  return even;
}

}  // namespace sts
