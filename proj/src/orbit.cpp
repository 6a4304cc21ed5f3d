#include "sts/orbit.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <tuple>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "sts/error.hpp"
#include "sts/formulas.hpp"
#include "sts/parallel.hpp"

namespace sts {

namespace {

bool is_least_rotation(int a, int b, int c) {
  const std::array<int, 3> t{a, b, c};
  return t <= std::array<int, 3>{b, c, a} && t <= std::array<int, 3>{c, a, b};
}

std::vector<CylinderCoords> coordinate_tuples(int n) {
  std::vector<CylinderCoords> out;
  for (int h = 1; h <= n; ++h) {
    if (n % h != 0) continue;
    const int w = n / h;
    for (int a = 1; a <= w - 2; ++a) {
      for (int b = 1; a + b <= w - 1; ++b) {
        const int c = w - a - b;
        if (!is_least_rotation(a, b, c)) continue;
        const int twists = (a == b && b == c) ? a : w;
        for (int t = 0; t < twists; ++t) out.emplace_back(make_one_cyl(a, b, c, t, h));
      }
    }
  }
  for (int h1 = 1; h1 <= n; ++h1) {
    for (int h2 = 1; h1 + h2 <= n; ++h2) {
      for (int w1 = 1; h1 * w1 + h2 * (w1 + 1) <= n; ++w1) {
        const int rest = n - h1 * w1;
        if (rest % h2 != 0) continue;
        const int w2 = rest / h2;
        if (w2 <= w1) continue;
        for (int t1 = 0; t1 < w1; ++t1) {
          for (int t2 = 0; t2 < w2; ++t2) out.emplace_back(make_two_cyl(h1, h2, w1, w2, t1, t2));
        }
      }
    }
  }
  return out;
}

int index_of(const std::vector<CanonicalKey>& sorted, const CanonicalKey& key) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), key);
  if (it == sorted.end() || *it != key) return -1;
  return static_cast<int>(it - sorted.begin());
}

void require_closed(int index, Generator g) {
  if (index < 0) {
    throw Error(ErrorKind::NotClosed, "image under " + std::string(to_string(g)) + " leaves the set");
  }
}

std::vector<CanonicalKey> sorted_unique(std::vector<CanonicalKey> keys) {
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

}  // namespace

std::vector<KeyedSurface> enumerate_keyed(int n, bool primitive_only, int workers) {
  if (n < 3) throw Error(ErrorKind::BadN, "enumeration needs n >= 3, got " + std::to_string(n));
  const auto tuples = coordinate_tuples(n);
  std::vector<std::optional<KeyedSurface>> slots(tuples.size());
  parallel_for(tuples.size(), workers, [&](std::size_t i) {
    if (primitive_only && !period_lattice(tuples[i]).is_primitive()) return;
    slots[i] = KeyedSurface{{diagram_of(tuples[i]), tuples[i]}, canonical_key(to_origami(tuples[i]))};
  });
  std::vector<KeyedSurface> out;
  std::unordered_set<CanonicalKey, CanonicalKeyHash> seen;
  for (auto& slot : slots) {
    if (slot && seen.insert(slot->key).second) out.push_back(std::move(*slot));
  }
  return out;
}

std::vector<CylinderDecomposition> enumerate_surfaces(int n, bool primitive_only, int workers) {
  std::vector<CylinderDecomposition> out;
  for (auto& s : enumerate_keyed(n, primitive_only, workers)) out.push_back(std::move(s.decomposition));
  return out;
}

std::vector<CanonicalKey> brute_force_enumerate(int n) {
  if (n < 1 || n > 8) throw Error(ErrorKind::BadN, "brute force is limited to 1 <= n <= 8");
  std::vector<CanonicalKey> keys;
  // Partitions of n, each realized by consecutive cycles.
  std::vector<std::vector<int>> partitions;
  std::vector<int> current;
  auto recurse = [&](auto&& self, int remaining, int largest) -> void {
    if (remaining == 0) {
      partitions.push_back(current);
      return;
    }
    for (int part = std::min(remaining, largest); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  recurse(recurse, n, n);

  for (const auto& partition : partitions) {
    std::vector<int> right_images(n);
    int start = 0;
    for (int len : partition) {
      for (int k = 0; k < len; ++k) right_images[start + k] = start + (k + 1) % len;
      start += len;
    }
    const Permutation right(right_images);
    std::vector<int> up_images(n);
    std::iota(up_images.begin(), up_images.end(), 0);
    do {
      const Origami o(right, Permutation(up_images));
      const auto type = o.commutator().cycle_type();
      if (type.empty() || type.front() != 3) continue;
      if (std::count(type.begin(), type.end(), 1) != static_cast<long>(type.size()) - 1) continue;
      if (!o.is_connected()) continue;
      keys.push_back(canonical_key(o));
    } while (std::next_permutation(up_images.begin(), up_images.end()));
  }
  return sorted_unique(std::move(keys));
}

std::optional<int> OrbitGraph::find(const CanonicalKey& key) const {
  const int i = index_of(keys, key);
  if (i < 0) return std::nullopt;
  return i;
}

OrbitGraph build_orbit_graph(std::vector<CanonicalKey> keys, int workers) {
  OrbitGraph g;
  g.keys = sorted_unique(std::move(keys));
  g.u.assign(g.size(), -1);
  g.v.assign(g.size(), -1);
  parallel_for(g.size(), workers, [&](std::size_t i) {
    const Origami o = from_key(g.keys[i]);
    g.u[i] = index_of(g.keys, canonical_key(act(o, Generator::U)));
    g.v[i] = index_of(g.keys, canonical_key(act(o, Generator::V)));
  });
  for (std::size_t i = 0; i < g.size(); ++i) {
    require_closed(g.u[i], Generator::U);
    require_closed(g.v[i], Generator::V);
  }
  return g;
}

std::vector<CanonicalKey> orbit_bfs(const Origami& seed) {
  validate_h2(seed);
  if (!period_lattice(seed).is_primitive()) throw Error(ErrorKind::NotPrimitive, "seed is not primitive");
  std::unordered_set<CanonicalKey, CanonicalKeyHash> seen;
  std::deque<Origami> queue;
  seen.insert(canonical_key(seed));
  queue.push_back(seed);
  while (!queue.empty()) {
    const Origami o = std::move(queue.front());
    queue.pop_front();
    for (Generator g : {Generator::U, Generator::UInv, Generator::V}) {
      Origami image = act(o, g);
      if (seen.insert(canonical_key(image)).second) queue.push_back(std::move(image));
    }
  }
  return sorted_unique({seen.begin(), seen.end()});
}

std::vector<Cusp> cusp_partition(const std::vector<CanonicalKey>& orbit) {
  const auto keys = sorted_unique(orbit);
  std::vector<int> u(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    u[i] = index_of(keys, canonical_key(act(from_key(keys[i]), Generator::U)));
    require_closed(u[i], Generator::U);
  }
  std::vector<Cusp> cusps;
  std::vector<bool> done(keys.size(), false);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (done[i]) continue;
    std::vector<int> members;
    for (int j = static_cast<int>(i); !done[j]; j = u[j]) {
      done[j] = true;
      members.push_back(j);
    }
    std::vector<CylinderCoords> coords;
    coords.reserve(members.size());
    for (int j : members) coords.push_back(decompose(from_key(keys[j])).coords);
    CylinderCoords rep = *std::min_element(coords.begin(), coords.end());
    if (const auto* two = std::get_if<TwoCylCoords>(&coords.front())) {
      const TwoCylCoords reduced = canonical_cusp_representative(*two);
      const int at = index_of(keys, canonical_key(to_origami(reduced)));
      if (std::find(members.begin(), members.end(), at) != members.end()) rep = reduced;
    }
    cusps.push_back({rep, static_cast<int>(members.size())});
  }
  std::sort(cusps.begin(), cusps.end(), [](const Cusp& x, const Cusp& y) {
    return std::tie(x.representative, x.width) < std::tie(y.representative, y.width);
  });
  return cusps;
}

EllipticCounts elliptic_counts(const std::vector<CanonicalKey>& orbit) {
  EllipticCounts out;
  for (const auto& key : sorted_unique(orbit)) {
    const Origami o = from_key(key);
    if (canonical_key(act(o, Generator::V)) == key) ++out.e2;
    const bool vu = canonical_key(act(act(o, Generator::U), Generator::V)) == key;
    const bool uv = canonical_key(act(act(o, Generator::V), Generator::U)) == key;
    if (vu || uv) ++out.e3;
  }
  return out;
}

int genus_gauss_bonnet(long long d, long long e2, long long e3, long long e_inf) {
  std::int64_t twelve_g = checked_add(12, d);
  twelve_g = checked_add(twelve_g, -checked_mul(3, e2));
  twelve_g = checked_add(twelve_g, -checked_mul(4, e3));
  twelve_g = checked_add(twelve_g, -checked_mul(6, e_inf));
  if (twelve_g < 0 || twelve_g % 12 != 0) {
    throw Error(ErrorKind::NonIntegralGenus, "12g = " + std::to_string(twelve_g) + " for d=" + std::to_string(d) +
                                                 " e2=" + std::to_string(e2) + " e3=" + std::to_string(e3) +
                                                 " cusps=" + std::to_string(e_inf));
  }
  return static_cast<int>(twelve_g / 12);
}

OneCylinderWitness find_one_cylinder_rep(const Origami& seed, std::size_t budget) {
  validate_h2(seed);
  struct Node {
    Origami surface;
    int parent;
    Generator via;
  };
  std::vector<Node> nodes{{seed, -1, Generator::U}};
  std::unordered_set<CanonicalKey, CanonicalKeyHash> seen{canonical_key(seed)};
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (budget != 0 && head >= budget) break;
    const auto decomposition = decompose(nodes[head].surface);
    if (decomposition.diagram == SeparatrixDiagram::OneCylinder) {
      OneCylinderWitness w{{}, std::get<OneCylCoords>(decomposition.coords)};
      for (int at = static_cast<int>(head); nodes[at].parent >= 0; at = nodes[at].parent) w.word.push_back(nodes[at].via);
      std::reverse(w.word.begin(), w.word.end());
      return w;
    }
    for (Generator g : {Generator::U, Generator::UInv, Generator::V}) {
      Origami image = act(nodes[head].surface, g);
      if (seen.insert(canonical_key(image)).second) nodes.push_back({std::move(image), static_cast<int>(head), g});
    }
  }
  throw Error(ErrorKind::BudgetExceeded, "no one-cylinder surface after visiting " + std::to_string(seen.size()) +
                                             " surfaces");
}

}  // namespace sts
