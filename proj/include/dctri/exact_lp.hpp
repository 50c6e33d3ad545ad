// Exact feasibility for small linear systems with inequalities.
#pragma once

#include <optional>
#include <span>

#include "dctri/exact_linalg.hpp"

namespace dctri {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct LinearConstraint {
  RatVector coefficients;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

/// A point satisfying every constraint, or nullopt when infeasible. All
/// variables are free. Phase-one simplex over Q with Bland's rule, so it
/// always terminates.
std::optional<RatVector> find_feasible_point(std::size_t num_vars,
                                             std::span<const LinearConstraint> constraints);

}  // namespace dctri
