// Finite point configurations in Z^n together with their affine lattice.
#pragma once

#include <span>
#include <vector>

#include "dctri/exact_linalg.hpp"

namespace dctri {

class PointConfiguration {
 public:
  PointConfiguration() = default;
  /// Points must be distinct, nonempty, and of equal length.
  explicit PointConfiguration(std::vector<IntVector> points);

  std::size_t size() const { return points_.size(); }
  std::size_t ambient_dim() const { return points_.front().size(); }
  /// Dimension of the affine hull.
  std::size_t dim() const { return span_.rank(); }

  const std::vector<IntVector>& points() const { return points_; }
  const IntVector& operator[](std::size_t i) const { return points_[i]; }

  /// aff(P) ∩ Z^n, based at the first point.
  const AffineLattice& span() const { return span_; }

  /// Coordinates of every point in the lattice basis of span(); these make
  /// the configuration full-dimensional in Z^dim().
  const std::vector<IntVector>& projected() const { return projected_; }

  PointConfiguration subset(std::span<const std::size_t> indices) const;

  /// Index of the given point, or size() if absent.
  std::size_t find(const IntVector& p) const;

 private:
  std::vector<IntVector> points_;
  AffineLattice span_;
  std::vector<IntVector> projected_;
};

}  // namespace dctri
