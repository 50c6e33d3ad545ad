// Integral generalized permutahedra, dicing into translated matroid
// polytopes, and independence polytopes through the lift
// v -> (r - sum(v), v).
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dctri/dc_triangulator.hpp"
#include "dctri/matroid.hpp"
#include "dctri/point_configuration.hpp"
#include "dctri/subdivision.hpp"

namespace dctri {

inline constexpr std::size_t kMaxSubmodularSize = 12;

/// A pair with f(S) + f(T) < f(S u T) + f(S n T).
struct SubmodularityWitness {
  ElementSet s = 0;
  ElementSet t = 0;
};

/// Integer set function on subsets of [n] with f(empty) = 0, stored as a
/// 2^n table indexed by ElementSet.
class SubmodularFunction {
 public:
  /// Validates f(empty) = 0 and submodularity; throws Error naming a
  /// violating pair otherwise.
  static SubmodularFunction from_table(std::size_t n, std::vector<Integer> table);
  static SubmodularFunction matroid_rank(const Matroid& m);

  std::size_t size() const { return n_; }
  const Integer& operator()(ElementSet s) const { return table_[s]; }
  const std::vector<Integer>& table() const { return table_; }
  bool is_monotone() const;

 private:
  SubmodularFunction(std::size_t n, std::vector<Integer> table) : n_(n), table_(std::move(table)) {}

  std::size_t n_ = 0;
  std::vector<Integer> table_;
};

/// nullopt when the table is submodular; otherwise a violating pair, found
/// through the local condition f(Si) + f(Sj) >= f(Sij) + f(S).
std::optional<SubmodularityWitness> find_submodularity_violation(std::size_t n,
                                                                 std::span<const Integer> table);

/// Greedy vertices over all orderings of [n], deduplicated and sorted.
PointConfiguration vertices_from_submodular(const SubmodularFunction& f);

/// All integer points of {x : x(S) <= f(S), x([n]) = f([n])}, sorted.
PointConfiguration lattice_points(const SubmodularFunction& f);

/// Unit dicing of a generalized permutahedron given by all its lattice
/// points, realized as the lower hull of x -> sum_k x_k^2. Every cell is
/// checked to be a translated matroid base polytope.
Subdivision dice(const PointConfiguration& p);

/// Shift subtracting the coordinate minimum wherever it is negative, so the
/// points land in a nonnegative box and 0/1 configurations are untouched.
IntVector nonnegative_shift(const PointConfiguration& p);

struct GenpermOptions {
  std::uint64_t seed = 0;
  std::optional<Integer> t_start;  ///< defaults to n * |lattice points| + 2
  unsigned max_retries = 16;
  bool concretize = true;
};

/// Dicing followed by the deletion-contraction triangulation of each cell,
/// all driven by one schedule. The certificate's level 0 is the dicing
/// height, followed by the schedule levels.
TriangulationRun triangulate_genperm(const SubmodularFunction& f, const GenpermOptions& options = {});

/// Same, for an explicit configuration of all lattice points of a
/// generalized permutahedron.
TriangulationRun triangulate_genperm(const PointConfiguration& p, const GenpermOptions& options = {});

/// psi(v) = (r - sum(v), v) for every point of the independence polytope.
struct IndependenceLift {
  PointConfiguration image;
  PointConfiguration preimage;
  Integer r;

  IntVector lift(const IntVector& v) const;
  IntVector drop(const IntVector& w) const;
  /// Linear part of psi as an (n+1) x n integer matrix.
  IntegerMatrix linear_part() const;
};

IndependenceLift lift_independence(const Matroid& m);

/// For a monotone submodular f, the lifted polytope of
/// {x >= 0 : x(S) <= f(S)}; point i of `image` maps to point i of `preimage`.
IndependenceLift lift_polymatroid(const SubmodularFunction& f);

/// Triangulates the lifted configuration and pulls the result back.
TriangulationRun triangulate_independence_polytope(const Matroid& m, const GenpermOptions& options = {});
TriangulationRun triangulate_independence_polytope(const SubmodularFunction& f,
                                                   const GenpermOptions& options = {});

}  // namespace dctri
