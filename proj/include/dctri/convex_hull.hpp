// Exact beneath-beyond convex hull for integer point sets, keeping every
// input point that lies on a facet (facets need not be simplices).
#pragma once

#include <boost/dynamic_bitset.hpp>
#include <span>
#include <vector>

#include "dctri/exact_linalg.hpp"

namespace dctri {

struct HullFacet {
  IntVector normal;  ///< outward, primitive
  Integer offset;    ///< normal . x <= offset on the hull, with equality on the facet
  boost::dynamic_bitset<> points;
};

/// Greedy affine-independence tracker over Q.
class AffineIndependenceTracker {
 public:
  explicit AffineIndependenceTracker(std::size_t dim) : dim_(dim) {}

  /// Adds p if it is affinely independent of the points kept so far.
  bool try_add(const IntVector& p);
  std::size_t size() const { return count_; }

 private:
  std::size_t dim_;
  std::size_t count_ = 0;
  IntVector base_;
  std::vector<RatVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Indices (in order) of a greedily chosen affinely independent subset.
std::vector<std::size_t> greedy_affine_basis(std::span<const IntVector> points);

/// Affine dimension of the points (-1 for an empty set).
int affine_dimension(std::span<const IntVector> points);

/// Facets of conv(points). The points must span Z^D affinely, D >= 1.
std::vector<HullFacet> convex_hull_facets(std::span<const IntVector> points);

}  // namespace dctri
