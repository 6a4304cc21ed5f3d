#include "sts/cylinder.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <tuple>

#include "sts/error.hpp"

namespace sts {
namespace {

int mod(long long x, int m) {
  long long r = x % m;
  if (r < 0) r += m;
  return static_cast<int>(r);
}

std::vector<int> parse_ints(std::string_view text, std::size_t count, std::string_view what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view field =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw Error(ErrorKind::Parse, "bad integer \"" + std::string(field) + "\" in " + std::string(what));
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (out.size() != count) {
    throw Error(ErrorKind::Parse, "expected " + std::to_string(count) + " integers in " + std::string(what));
  }
  return out;
}

// A horizontal cylinder located inside an origami: the squares of its bottom
// and top rows, indexed by the horizontal coordinate measured from `origin`.
struct CylinderRows {
  std::vector<int> bottom;
  std::vector<int> top;
  int height = 0;
};

CylinderRows trace_cylinder(const Origami& o, int origin, int height) {
  CylinderRows rows;
  rows.height = height;
  int x = origin;
  do {
    rows.bottom.push_back(x);
    x = o.right()(x);
  } while (x != origin);
  rows.top = rows.bottom;
  for (int j = 1; j < height; ++j) {
    for (int& sq : rows.top) sq = o.up()(sq);
  }
  return rows;
}

int position_of(const std::vector<int>& row, int square) {
  const auto it = std::find(row.begin(), row.end(), square);
  if (it == row.end()) throw Error(ErrorKind::WrongStratum, "inconsistent cylinder gluing");
  return static_cast<int>(it - row.begin());
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

OneCylCoords make_one_cyl(int a, int b, int c, int t, int height) {
  if (a < 1 || b < 1 || c < 1 || height < 1) {
    throw Error(ErrorKind::InvalidCoords, "saddle connection lengths and height must be positive");
  }
  const int w = a + b + c;
  if (t < 0 || t >= w) throw Error(ErrorKind::InvalidCoords, "twist must lie in [0, a+b+c)");
  // Rotating the bottom reference from a to b moves the top reference by c.
  std::array<OneCylCoords, 3> rotations{{
      {a, b, c, t, height},
      {b, c, a, mod(static_cast<long long>(t) + c, w), height},
      {c, a, b, mod(static_cast<long long>(t) + c + a, w), height},
  }};
  return *std::min_element(rotations.begin(), rotations.end());
}

TwoCylCoords make_two_cyl(int h1, int h2, int w1, int w2, int t1, int t2) {
  if (h1 < 1 || h2 < 1 || w1 < 1) throw Error(ErrorKind::InvalidCoords, "heights and widths must be positive");
  if (w1 >= w2) throw Error(ErrorKind::InvalidCoords, "cylinder widths must satisfy w1 < w2");
  if (t1 < 0 || t1 >= w1 || t2 < 0 || t2 >= w2) {
    throw Error(ErrorKind::InvalidCoords, "twists must satisfy 0 <= t_i < w_i");
  }
  return TwoCylCoords{h1, h2, w1, w2, t1, t2};
}

int area(const CylinderCoords& c) {
  return std::visit([](const auto& x) { return x.area(); }, c);
}

SeparatrixDiagram diagram_of(const CylinderCoords& c) {
  return std::holds_alternative<OneCylCoords>(c) ? SeparatrixDiagram::OneCylinder : SeparatrixDiagram::TwoCylinder;
}

Origami to_origami(const OneCylCoords& cin) {
  const OneCylCoords c = make_one_cyl(cin.a, cin.b, cin.c, cin.t, cin.height);
  const int w = c.width();
  const int n = c.area();
  std::vector<int> right(static_cast<std::size_t>(n)), up(static_cast<std::size_t>(n));
  for (int j = 0; j < c.height; ++j) {
    for (int x = 0; x < w; ++x) {
      const int id = j * w + x;
      right[static_cast<std::size_t>(id)] = j * w + (x + 1) % w;
      if (j + 1 < c.height) {
        up[static_cast<std::size_t>(id)] = id + w;
        continue;
      }
      const int y = mod(x - c.t, w);
      int bottom;
      if (y < c.a) bottom = y;                       // a
      else if (y < c.a + c.c) bottom = c.a + c.b + (y - c.a);  // c
      else bottom = c.a + (y - c.a - c.c);            // b
      up[static_cast<std::size_t>(id)] = bottom;
    }
  }
  return Origami(Permutation(std::move(right)), Permutation(std::move(up)));
}

Origami to_origami(const TwoCylCoords& cin) {
  const TwoCylCoords c = make_two_cyl(cin.h1, cin.h2, cin.w1, cin.w2, cin.t1, cin.t2);
  const int n = c.area();
  const int base1 = c.h2 * c.w2;
  auto id2 = [&](int j, int x) { return j * c.w2 + x; };
  auto id1 = [&](int j, int x) { return base1 + j * c.w1 + x; };
  std::vector<int> right(static_cast<std::size_t>(n)), up(static_cast<std::size_t>(n));

  for (int j = 0; j < c.h2; ++j) {
    for (int x = 0; x < c.w2; ++x) {
      right[static_cast<std::size_t>(id2(j, x))] = id2(j, (x + 1) % c.w2);
      int above;
      if (j + 1 < c.h2) {
        above = id2(j + 1, x);
      } else {
        const int y = mod(x - c.t2, c.w2);
        above = y < c.l1() ? id1(0, y) : id2(0, y);  // g1 onto cylinder 1, g3 onto itself
      }
      up[static_cast<std::size_t>(id2(j, x))] = above;
    }
  }
  for (int j = 0; j < c.h1; ++j) {
    for (int x = 0; x < c.w1; ++x) {
      right[static_cast<std::size_t>(id1(j, x))] = id1(j, (x + 1) % c.w1);
      up[static_cast<std::size_t>(id1(j, x))] =
          j + 1 < c.h1 ? id1(j + 1, x) : id2(0, mod(x - c.t1, c.w1));  // g5
    }
  }
  return Origami(Permutation(std::move(right)), Permutation(std::move(up)));
}

Origami to_origami(const CylinderCoords& c) {
  return std::visit([](const auto& x) { return to_origami(x); }, c);
}

CylinderDecomposition decompose(const Origami& o) {
  validate_h2(o);
  const int n = o.n();
  const Permutation comm = o.commutator();

  // Squares whose bottom-left corner is the cone point.
  std::vector<char> singular(static_cast<std::size_t>(n), 0);
  for (const auto& cycle : comm.cycles()) {
    if (cycle.size() == 3) {
      for (int sq : cycle) singular[static_cast<std::size_t>(sq)] = 1;
    }
  }

  std::vector<int> row_of(static_cast<std::size_t>(n));
  const auto rows = o.right().cycles();
  std::vector<int> singular_in_row(rows.size(), 0);
  std::vector<int> first_singular(rows.size(), -1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int sq : rows[r]) {
      row_of[static_cast<std::size_t>(sq)] = static_cast<int>(r);
      if (singular[static_cast<std::size_t>(sq)]) {
        ++singular_in_row[r];
        if (first_singular[r] < 0) first_singular[r] = sq;
      }
    }
  }

  struct Found {
    std::size_t bottom_row;
    int height;
  };
  std::vector<Found> cylinders;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (singular_in_row[r] == 0) continue;
    int height = 1;
    std::size_t cur = r;
    for (;;) {
      const std::size_t next = static_cast<std::size_t>(row_of[static_cast<std::size_t>(o.up()(rows[cur].front()))]);
      if (singular_in_row[next] > 0) break;
      cur = next;
      ++height;
    }
    cylinders.push_back({r, height});
  }

  if (cylinders.size() == 1) {
    const auto& cyl = cylinders.front();
    const CylinderRows rows1 = trace_cylinder(o, first_singular[cyl.bottom_row], cyl.height);
    const int w = static_cast<int>(rows1.bottom.size());
    std::vector<int> marks;
    for (int x = 0; x < w; ++x) {
      if (singular[static_cast<std::size_t>(rows1.bottom[static_cast<std::size_t>(x)])]) marks.push_back(x);
    }
    if (marks.size() != 3) throw Error(ErrorKind::WrongStratum, "one-cylinder surface without three saddle connections");
    // Bottom position of the square glued above each top position.
    std::vector<int> glued(static_cast<std::size_t>(w));
    for (int x = 0; x < w; ++x) {
      glued[static_cast<std::size_t>(x)] = position_of(rows1.bottom, o.up()(rows1.top[static_cast<std::size_t>(x)]));
    }
    OneCylCoords best{};
    bool have = false;
    for (int k = 0; k < 3; ++k) {
      const int start = marks[static_cast<std::size_t>(k)];
      auto len = [&](int i) {
        const int from = marks[static_cast<std::size_t>((k + i) % 3)];
        const int to = marks[static_cast<std::size_t>((k + i + 1) % 3)];
        return mod(to - from, w) == 0 ? w : mod(to - from, w);
      };
      const int top_x = position_of(glued, start);
      const OneCylCoords cand{len(0), len(1), len(2), mod(top_x - start, w), cyl.height};
      if (!have || cand < best) best = cand;
      have = true;
    }
    return {SeparatrixDiagram::OneCylinder, best};
  }

  if (cylinders.size() != 2) throw Error(ErrorKind::WrongStratum, "H(2) surfaces have one or two horizontal cylinders");
  auto narrow = cylinders[0];
  auto wide = cylinders[1];
  if (singular_in_row[narrow.bottom_row] != 1) std::swap(narrow, wide);
  if (singular_in_row[narrow.bottom_row] != 1 || singular_in_row[wide.bottom_row] != 2) {
    throw Error(ErrorKind::WrongStratum, "unexpected two-cylinder separatrix diagram");
  }
  const CylinderRows c1 = trace_cylinder(o, first_singular[narrow.bottom_row], narrow.height);
  // Left end of g5: walk left from where the top of cylinder 1 lands.
  int origin2 = o.up()(c1.top.front());
  const Permutation left = o.right().inverse();
  while (!singular[static_cast<std::size_t>(origin2)]) origin2 = left(origin2);
  const CylinderRows c2 = trace_cylinder(o, origin2, wide.height);

  const int w1 = static_cast<int>(c1.bottom.size());
  const int w2 = static_cast<int>(c2.bottom.size());
  int t1 = -1;
  for (int x = 0; x < w1 && t1 < 0; ++x) {
    if (o.up()(c1.top[static_cast<std::size_t>(x)]) == origin2) t1 = x;
  }
  int t2 = -1;
  for (int x = 0; x < w2 && t2 < 0; ++x) {
    if (o.up()(c2.top[static_cast<std::size_t>(x)]) == c1.bottom.front()) t2 = x;
  }
  if (t1 < 0 || t2 < 0) throw Error(ErrorKind::WrongStratum, "inconsistent two-cylinder gluing");
  return {SeparatrixDiagram::TwoCylinder, make_two_cyl(narrow.height, wide.height, w1, w2, t1, t2)};
}

LatticeBasis period_lattice(const CylinderCoords& c) {
  std::vector<std::array<std::int64_t, 2>> vs;
  if (const auto* one = std::get_if<OneCylCoords>(&c)) {
    vs = {{one->a, 0}, {one->b, 0}, {one->c, 0}, {one->t, one->height}};
  } else {
    const auto& two = std::get<TwoCylCoords>(c);
    vs = {{two.l1(), 0}, {two.l2(), 0}, {two.t1, two.h1}, {two.t2, two.h2}};
  }
  return hermite_normal_form(vs);
}

int cusp_width(const CylinderCoords& c) {
  if (!period_lattice(c).is_primitive()) throw Error(ErrorKind::NotPrimitive, "cusp width requires a primitive surface");
  if (const auto* one = std::get_if<OneCylCoords>(&c)) {
    // With a == b == c the twist only matters modulo a.
    const int period = (one->a == one->b && one->b == one->c) ? one->a : one->width();
    return period / std::gcd(period, one->height);
  }
  const auto& two = std::get<TwoCylCoords>(c);
  return std::lcm(two.w1 / std::gcd(two.w1, two.h1), two.w2 / std::gcd(two.w2, two.h2));
}

TwoCylCoords canonical_cusp_representative(const TwoCylCoords& c) {
  if (!period_lattice(CylinderCoords{c}).is_primitive()) {
    throw Error(ErrorKind::NotPrimitive, "cusp representative requires a primitive surface");
  }
  TwoCylCoords out = c;
  out.t1 = c.t1 % std::gcd(c.w1, c.h1);
  out.t2 = c.t2 % std::gcd(c.w2, c.h2);
  return out;
}

OneCylCoords apply_u(const OneCylCoords& c, long long k) {
  const int w = c.width();
  const int t = mod(static_cast<long long>(c.t) + mod(k, w) * static_cast<long long>(c.height), w);
  return make_one_cyl(c.a, c.b, c.c, t, c.height);
}

TwoCylCoords apply_u(const TwoCylCoords& c, long long k) {
  TwoCylCoords out = c;
  out.t1 = mod(static_cast<long long>(c.t1) + mod(k, c.w1) * static_cast<long long>(c.h1), c.w1);
  out.t2 = mod(static_cast<long long>(c.t2) + mod(k, c.w2) * static_cast<long long>(c.h2), c.w2);
  return out;
}

CylinderCoords apply_u(const CylinderCoords& c, long long k) {
  return std::visit([k](const auto& x) { return CylinderCoords{apply_u(x, k)}; }, c);
}

TwoCylCoords l_shaped(int n, LShape which) {
  if (n <= 3 || !is_prime(n)) throw Error(ErrorKind::BadN, "L-shaped representatives need a prime n > 3");
  return which == LShape::S1 ? make_two_cyl(1, 1, 1, n - 1, 0, 0) : make_two_cyl(2, 1, 1, n - 2, 0, 0);
}

std::string to_string(const CylinderCoords& c) {
  std::ostringstream out;
  if (const auto* one = std::get_if<OneCylCoords>(&c)) {
    out << "onecyl:" << one->a << ',' << one->b << ',' << one->c << ':' << one->t;
    if (one->height != 1) out << ':' << one->height;
  } else {
    const auto& two = std::get<TwoCylCoords>(c);
    out << "twocyl:" << two.h1 << ',' << two.h2 << ',' << two.w1 << ',' << two.w2 << ',' << two.t1 << ','
        << two.t2;
  }
  return out.str();
}

CylinderCoords parse_coords(std::string_view text) {
  constexpr std::string_view one_prefix = "onecyl:";
  constexpr std::string_view two_prefix = "twocyl:";
  if (text.substr(0, one_prefix.size()) == one_prefix) {
    std::string_view rest = text.substr(one_prefix.size());
    const std::size_t colon = rest.find(':');
    if (colon == std::string_view::npos) throw Error(ErrorKind::Parse, "expected onecyl:a,b,c:t");
    const auto abc = parse_ints(rest.substr(0, colon), 3, "onecyl lengths");
    rest = rest.substr(colon + 1);
    const std::size_t colon2 = rest.find(':');
    const int t = parse_ints(rest.substr(0, colon2), 1, "onecyl twist")[0];
    const int h = colon2 == std::string_view::npos ? 1 : parse_ints(rest.substr(colon2 + 1), 1, "onecyl height")[0];
    return make_one_cyl(abc[0], abc[1], abc[2], t, h);
  }
  if (text.substr(0, two_prefix.size()) == two_prefix) {
    const auto v = parse_ints(text.substr(two_prefix.size()), 6, "twocyl parameters");
    return make_two_cyl(v[0], v[1], v[2], v[3], v[4], v[5]);
  }
  throw Error(ErrorKind::Parse, "coordinates must start with onecyl: or twocyl:");
}

}  // namespace sts
