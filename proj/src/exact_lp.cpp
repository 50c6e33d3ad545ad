#include "dctri/exact_lp.hpp"

namespace dctri {

std::optional<RatVector> find_feasible_point(std::size_t num_vars,
                                             std::span<const LinearConstraint> constraints) {
  const std::size_t m = constraints.size();
  if (m == 0) return RatVector(num_vars);

  std::size_t num_slack = 0;
  for (const auto& c : constraints) {
    if (c.coefficients.size() != num_vars) throw Error("find_feasible_point: bad constraint width");
    if (c.relation != Relation::Equal) ++num_slack;
  }
  // Columns: x+ (num_vars), x- (num_vars), slacks, artificials, rhs.
  const std::size_t art0 = 2 * num_vars + num_slack;
  const std::size_t ncols = art0 + m;
  RationalMatrix t(m + 1, ncols + 1);
  std::vector<std::size_t> basis(m);

  std::size_t slack = 2 * num_vars;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = constraints[i];
    for (std::size_t j = 0; j < num_vars; ++j) {
      t(i, j) = c.coefficients[j];
      t(i, num_vars + j) = -c.coefficients[j];
    }
    if (c.relation == Relation::LessEqual) t(i, slack++) = 1;
    if (c.relation == Relation::GreaterEqual) t(i, slack++) = -1;
    t(i, ncols) = c.rhs;
    if (sgn(t(i, ncols)) < 0)
      for (std::size_t j = 0; j <= ncols; ++j) t(i, j) = -t(i, j);
    t(i, art0 + i) = 1;
    basis[i] = art0 + i;
  }
  // Phase-one objective row: minimise the sum of artificials.
  for (std::size_t j = 0; j <= ncols; ++j) {
    if (j >= art0 && j < ncols) continue;
    Rational s = 0;
    for (std::size_t i = 0; i < m; ++i) s += t(i, j);
    t(m, j) = -s;
  }

  for (;;) {
    std::size_t enter = ncols;
    for (std::size_t j = 0; j < ncols; ++j)
      if (sgn(t(m, j)) < 0) {
        enter = j;
        break;
      }
    if (enter == ncols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t(i, enter)) <= 0) continue;
      Rational ratio = t(i, ncols) / t(i, enter);
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen in phase one
    const Rational piv = t(leave, enter);
    for (std::size_t j = 0; j <= ncols; ++j) t(leave, j) /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || sgn(t(i, enter)) == 0) continue;
      const Rational f = t(i, enter);
      for (std::size_t j = 0; j <= ncols; ++j) t(i, j) -= f * t(leave, j);
    }
    basis[leave] = enter;
  }
  if (sgn(t(m, ncols)) != 0) return std::nullopt;

  RatVector values(ncols);
  for (std::size_t i = 0; i < m; ++i) values[basis[i]] = t(i, ncols);
  RatVector x(num_vars);
  for (std::size_t j = 0; j < num_vars; ++j) x[j] = values[j] - values[num_vars + j];
  return x;
}

}  // namespace dctri
