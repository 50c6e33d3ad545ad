// Regular subdivisions induced by (layered) rational heights.
#pragma once

#include <span>
#include <vector>

#include "dctri/subdivision.hpp"

namespace dctri {

/// Layered heights: the point i is lifted to sum_k eps^k levels[k][i] for an
/// infinitesimal eps > 0, i.e. heights are compared lexicographically by level.
struct HeightFunction {
  std::vector<std::vector<Rational>> levels;

  std::size_t num_levels() const { return levels.size(); }
  /// sum_k eps^k levels[k]
  std::vector<Rational> flatten(const Rational& eps) const;
};

/// One cell containing every point, certified by zero heights.
Subdivision trivial_subdivision(const PointConfiguration& p);

/// Projection of the lower facets of conv{(x, h(x))}. Cells keep every point
/// lying on their lower facet; each cell gets its affine witness.
Subdivision lower_hull_subdivision(const PointConfiguration& p, std::span<const Rational> heights);

/// Subdivides every cell of s by the heights restricted to it. The result's
/// certificate appends `heights` as a new level.
Subdivision refine(const Subdivision& s, std::span<const Rational> heights);

/// Lower hull of level 0 refined by each following level in turn.
Subdivision induced_subdivision(const PointConfiguration& p, const HeightFunction& h);

/// True iff every cell of `fine` lies inside some cell of `coarse`.
bool is_refinement(const Subdivision& fine, const Subdivision& coarse);

struct ConcreteHeights {
  Rational epsilon;              ///< 2^-exponent
  unsigned exponent = 0;
  std::vector<Rational> heights;  ///< h.flatten(epsilon)
};

/// Smallest exponent m = 1, 2, ... such that the single-level heights
/// h.flatten(2^-m) induce exactly `target`. Confirms the result with one full
/// lower-hull computation. Throws after `max_exponent` attempts.
ConcreteHeights concretize_epsilon(const Subdivision& target, const HeightFunction& h,
                                   unsigned max_exponent = 1024);

/// Checks the strict witness inequalities of every cell for single-level
/// heights: equality on the cell, strictly above off it.
bool cells_certified_by(const Subdivision& s, std::span<const Rational> heights);

}  // namespace dctri
