// Matroid polytopes, affine-span flags, recognition and normalized volume.
#pragma once

#include <vector>

#include "dctri/matroid.hpp"
#include "dctri/point_configuration.hpp"
#include "dctri/subdivision.hpp"

namespace dctri {

/// Indicator vectors of the bases, in basis order.
PointConfiguration base_polytope(const Matroid& m);

/// Indicator vectors of all independent sets (origin first).
PointConfiguration independence_polytope_points(const Matroid& m);

/// aff(P) = ∩ {x_{S_i} = b_i} for a strictly increasing chain ending at [n].
struct SpanFlag {
  std::vector<ElementSet> chain;
  std::vector<Integer> values;
};

/// Minimal flag of subset-sum equations cutting out aff(P). Throws when no
/// such flag exists (P is not a generalized permutahedron up to translation).
SpanFlag span_flag(const PointConfiguration& p);

/// True iff every point is 0/1 and every edge of the hull is parallel to
/// some e_i - e_j.
bool is_matroid_polytope(const std::vector<IntVector>& points);

/// Volume of conv(P) in units of unimodular simplices of aff(P) ∩ Z^n,
/// computed from a placing triangulation in input order. A single point has
/// volume 1.
Integer normalized_volume(const PointConfiguration& p);

/// Lattice volume of a simplex cell of P relative to aff(P) ∩ Z^n.
Integer simplex_volume(const PointConfiguration& p, const Cell& cell);

/// Maximal faces of T's cells lying in the face F, re-indexed to F's points.
/// Throws when they do not triangulate F.
Triangulation restrict_to_face(const Triangulation& t, const PointConfiguration& face);

}  // namespace dctri
