// Deletion-contraction triangulation of matroid base polytopes.
//
// The polytope is split by the first coordinate that is not constant on its
// vertices: the x = a side is the base polytope of a deletion, the x = a+1
// side that of a contraction. A lift that is zero on one side and a generic
// affine functional on the other subdivides the polytope into joins of faces
// F0, F1 of the two sides; joining the recursive triangulations of the two
// sides, restricted to F0 and F1, gives unimodular simplices whenever the
// affine lattices of F0 and F1 are complementary. That condition is checked
// for every cell, and a failure triggers a retry with the next moment-curve
// parameter.
//
// Unwinding the recursion gives explicit layered heights: level k assigns
// l_{x_1..x_k}(x_{k+1}, ..., x_n) to the vertex x.
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "dctri/matroid.hpp"
#include "dctri/regular_subdivision.hpp"

namespace dctri {

/// Affine functional on R^m.
struct GenericFunctional {
  Rational constant;
  RatVector coefficients;

  std::size_t dim() const { return coefficients.size(); }
  Rational operator()(std::span<const Integer> y) const;
};

/// (t, t^2, ..., t^m) with constant 0.
GenericFunctional make_generic_functional(std::size_t m, const Integer& t);

/// Checks non-constancy on every positive-dimensional flat of the
/// arrangement {x_S = 0 : S nonempty} by enumerating all flats. Throws when
/// the dimension exceeds `max_dim`.
bool is_generic_bruteforce(const GenericFunctional& l, std::size_t max_dim = 5);

/// The family l_s indexed by strings s of coordinate values, derived
/// deterministically from (seed, t).
///
/// For every prefix p, l_{p,i+1} - l_{p,i} = step(p), a signed point on the
/// moment curve with parameter t + (0..3); offset(p) = l_{p,0} is a small
/// seeded functional that does not affect the triangulation.
class FunctionalSchedule {
 public:
  FunctionalSchedule(std::uint64_t seed, Integer t);

  std::uint64_t seed() const { return seed_; }
  const Integer& t() const { return t_; }

  GenericFunctional step(std::span<const int> prefix, std::size_t dim) const;
  GenericFunctional offset(std::span<const int> prefix, std::size_t dim) const;
  /// l_s for a nonempty string s.
  GenericFunctional functional(std::span<const int> s, std::size_t dim) const;

 private:
  std::uint64_t key(std::span<const int> prefix) const;

  std::uint64_t seed_;
  Integer t_;
};

/// Raised when two faces met in a join cell are not complementary.
class GenericityFailure : public Error {
 public:
  using Error::Error;
};

/// Raised when every t in the retry budget failed.
class RetryCapExceeded : public Error {
 public:
  using Error::Error;
};

/// Independent affine spans whose lattices are complementary.
bool certify_join(const PointConfiguration& f0, const PointConfiguration& f1);

/// Levels 1..n-1 of the layered heights for points (in their own coordinates).
std::vector<std::vector<Rational>> schedule_levels(const PointConfiguration& p,
                                                   const FunctionalSchedule& schedule);

/// Level 0 identically zero, followed by schedule_levels on the base polytope.
HeightFunction build_height_function(const Matroid& m, const FunctionalSchedule& schedule);

/// Triangulates the cell of `p` with the given point indices. The cell must be
/// a translate of a matroid base polytope (all coordinates take at most two
/// consecutive values). Returns sorted cells of global indices. Coordinates
/// where the recursion split are added to `split_coords` (0-indexed).
std::vector<Cell> triangulate_unit_cell(const PointConfiguration& p, std::span<const std::size_t> indices,
                                        const FunctionalSchedule& schedule,
                                        std::set<std::size_t>* split_coords = nullptr);

/// One attempt with a fixed schedule; throws GenericityFailure.
Triangulation triangulate_base_polytope(const Matroid& m, const FunctionalSchedule& schedule);

struct TriangulatorOptions {
  std::uint64_t seed = 0;
  std::optional<Integer> t_start;  ///< defaults to n * |bases| + 2
  unsigned max_retries = 16;
  bool concretize = true;          ///< also compute a numeric epsilon certificate
};

struct TriangulationRun {
  Triangulation triangulation;
  std::uint64_t seed = 0;
  std::vector<Integer> t_sequence;  ///< every t tried; the last one succeeded
  std::vector<std::size_t> split_order;  ///< 1-indexed split coordinates

  std::size_t retries() const { return t_sequence.empty() ? 0 : t_sequence.size() - 1; }
};

Integer default_t(const Matroid& m);

/// Certificate-and-retry driver. The result carries the layered heights,
/// per-cell witnesses, and (optionally) a concretized epsilon.
TriangulationRun triangulate_base_polytope(const Matroid& m, const TriangulatorOptions& options);

/// Attaches layered heights, interpolated per-cell witnesses, and optionally
/// the concretized epsilon to a finished subdivision.
void attach_certificate(Subdivision& s, const HeightFunction& h, bool concretize);

}  // namespace dctri
