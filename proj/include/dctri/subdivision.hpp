// Subdivisions and triangulations of point configurations.
#pragma once

#include <optional>
#include <vector>

#include "dctri/point_configuration.hpp"

namespace dctri {

/// Sorted indices into a PointConfiguration.
using Cell = std::vector<std::size_t>;

/// Heights that induce a subdivision, optionally layered.
///
/// `levels[k][i]` is the level-k height of point i; the induced subdivision
/// is the one induced by sum_k eps^k levels[k] for all small eps > 0.
/// `witnesses[c][k]` is the affine functional agreeing with level k on cell
/// c. When `epsilon` is set, `flat_heights` holds the single-level heights at
/// that value.
struct RegularityCertificate {
  std::vector<std::vector<Rational>> levels;
  std::vector<std::vector<AffineFunctional>> witnesses;
  std::optional<Rational> epsilon;
  std::vector<Rational> flat_heights;
};

struct Subdivision {
  PointConfiguration base;
  std::vector<Cell> cells;
  std::optional<RegularityCertificate> certificate;

  /// Every cell has dim + 1 points.
  bool is_triangulation() const;
};

/// A Subdivision whose cells are simplices.
using Triangulation = Subdivision;

/// Sorts each cell and the cell list. Witnesses, when present, follow their cells.
void canonicalize(Subdivision& s);

/// Cells written as sorted coordinate lists, for comparing subdivisions of
/// the same point set given in different orders.
std::vector<std::vector<IntVector>> cells_by_coordinates(const Subdivision& s);

}  // namespace dctri
