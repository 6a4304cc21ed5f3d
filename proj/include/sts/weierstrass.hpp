#pragma once

#include <span>

#include "sts/cylinder.hpp"
#include "sts/origami.hpp"

namespace sts {

/// Number of Weierstrass points lying on vertices of the square tiling,
/// the cone point included. Constant along SL(2,Z)-orbits.
struct InvariantValue {
  int count = 0;

  friend bool operator==(const InvariantValue&, const InvariantValue&) = default;
};

/// Parity rules on cylinder coordinates, valid for any height:
///   - a saddle connection bounding the same cylinder on top and bottom has
///     its midpoint fixed; it is integer iff its length is even;
///   - each cylinder core carries two antipodal fixed points, none integer
///     for odd height, one for even height and odd width, and for even
///     height and width both or none depending on the twist parity.
int integer_weierstrass_count(const CylinderCoords& c);

/// Same count, restricted to primitive surfaces. Throws Error{NotPrimitive}.
InvariantValue invariant_from_coords(const CylinderCoords& c);

struct InvolutionData {
  Permutation tau;  // square i is sent to square tau(i), rotated by pi
  int fixed_vertex_count = 0;
  int fixed_edge_midpoint_count = 0;
  int fixed_center_count = 0;

  int total_fixed() const { return fixed_vertex_count + fixed_edge_midpoint_count + fixed_center_count; }
};

/// Finds the hyperelliptic involution directly on the permutations by
/// propagating tau * right = right^-1 * tau and tau * up = up^-1 * tau from
/// every candidate image of square 0, then counts its fixed points.
/// Throws Error{NoInvolution} if no candidate (or more than one) works.
InvolutionData involution_oracle(const Origami& o);

enum class HyperellipticStratum {
  SingleZero,  // H(2g-2)^hyp: 2g-1 horizontal saddle connections
  TwoZeros,    // H(g-1,g-1)^hyp: 2g horizontal saddle connections
};

/// Number of even-length saddle connections on the boundary of a primitive
/// one-cylinder surface in a hyperelliptic component of genus g.
/// Throws Error{BadPartition} if the arity does not match the stratum.
int one_cylinder_even_count(std::span<const int> lengths, int genus, HyperellipticStratum stratum);

}  // namespace sts
