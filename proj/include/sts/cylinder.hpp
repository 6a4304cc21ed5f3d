#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <variant>

#include "sts/origami.hpp"

namespace sts {

/// Horizontal separatrix diagrams realizable in H(2), named by the return
/// angles of the three outgoing horizontal separatrices.
enum class SeparatrixDiagram {
  OneCylinder,  // (3pi, 3pi, 3pi)
  TwoCylinder,  // (pi, 3pi, 5pi)
};

/// One horizontal cylinder of width a + b + c and the given height.
///
/// The bottom boundary carries the saddle connections a, b, c from left to
/// right starting at x = 0; the top carries them in the reverse cyclic order
/// a, c, b, with the left end of `a` at x = t. The triple is stored as its
/// lexicographically least rotation; when a == b == c the twist is reduced
/// modulo a as well.
struct OneCylCoords {
  int a = 0;
  int b = 0;
  int c = 0;
  int t = 0;
  int height = 1;

  int width() const { return a + b + c; }
  int area() const { return width() * height; }
  friend bool operator==(const OneCylCoords&, const OneCylCoords&) = default;
  friend auto operator<=>(const OneCylCoords&, const OneCylCoords&) = default;
};

/// Two horizontal cylinders. Cylinder 1 (narrow, width w1 = l1) sits on top
/// of cylinder 2 (width w2 = l1 + l2) at its left.
///
///   bottom of cylinder 2: g5 on [0, l1), g3 on [l1, w2)
///   top of cylinder 2:    g1 on [t2, t2 + l1), g3 on [t2 + l1, t2 + w2)
///   bottom of cylinder 1: g1 on [0, l1)
///   top of cylinder 1:    g5 on [t1, t1 + l1)
///
/// g1, g3, g5 are the saddle connections returning with angle pi, 3pi, 5pi.
struct TwoCylCoords {
  int h1 = 0;
  int h2 = 0;
  int w1 = 0;
  int w2 = 0;
  int t1 = 0;
  int t2 = 0;

  int l1() const { return w1; }
  int l2() const { return w2 - w1; }
  int area() const { return h1 * w1 + h2 * w2; }
  friend bool operator==(const TwoCylCoords&, const TwoCylCoords&) = default;
  friend auto operator<=>(const TwoCylCoords&, const TwoCylCoords&) = default;
};

using CylinderCoords = std::variant<OneCylCoords, TwoCylCoords>;

struct CylinderDecomposition {
  SeparatrixDiagram diagram = SeparatrixDiagram::OneCylinder;
  CylinderCoords coords;

  friend bool operator==(const CylinderDecomposition&, const CylinderDecomposition&) = default;
};

/// Validated one-cylinder coordinates in canonical rotation.
/// Throws Error{InvalidCoords}.
OneCylCoords make_one_cyl(int a, int b, int c, int t, int height = 1);
/// Validated two-cylinder coordinates. Throws Error{InvalidCoords}.
TwoCylCoords make_two_cyl(int h1, int h2, int w1, int w2, int t1, int t2);

int area(const CylinderCoords& c);
SeparatrixDiagram diagram_of(const CylinderCoords& c);

Origami to_origami(const OneCylCoords& c);
Origami to_origami(const TwoCylCoords& c);
Origami to_origami(const CylinderCoords& c);

/// Horizontal cylinder decomposition in canonical coordinates.
/// Throws Error{WrongStratum} or Error{NotConnected} for non-H(2) input.
CylinderDecomposition decompose(const Origami& o);

/// Lattice spanned by the edge-pair holonomies of the octagon:
/// {(a,0), (b,0), (c,0), (t,h)} or {(l1,0), (l2,0), (t1,h1), (t2,h2)}.
LatticeBasis period_lattice(const CylinderCoords& c);

/// Size of the U-orbit. Throws Error{NotPrimitive}.
int cusp_width(const CylinderCoords& c);

/// Twists reduced to t_i mod gcd(w_i, h_i). Throws Error{NotPrimitive}.
TwoCylCoords canonical_cusp_representative(const TwoCylCoords& c);

/// k-fold application of U: t_i -> t_i + k * h_i (mod w_i). k may be negative.
OneCylCoords apply_u(const OneCylCoords& c, long long k);
TwoCylCoords apply_u(const TwoCylCoords& c, long long k);
CylinderCoords apply_u(const CylinderCoords& c, long long k);

enum class LShape { S1, S2 };

/// Zero-twist L-shaped surfaces: S1 has h = (1, 1), w = (1, n - 1);
/// S2 has h = (2, 1), w = (1, n - 2). Throws Error{BadN} unless n is a
/// prime > 3.
TwoCylCoords l_shaped(int n, LShape which);

/// "onecyl:a,b,c:t" (optionally ":h" for height > 1) or
/// "twocyl:h1,h2,w1,w2,t1,t2".
std::string to_string(const CylinderCoords& c);
/// Throws Error{Parse} on grammar errors and Error{InvalidCoords} on
/// invalid parameters.
CylinderCoords parse_coords(std::string_view text);

bool is_prime(long long n);

}  // namespace sts
