#include "dctri/exact_linalg.hpp"

#include <algorithm>
#include <utility>

namespace dctri {

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw Error("multiply: dimension mismatch");
  IntegerMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

namespace {

// row_a <- x*row_a + y*row_b ; row_b <- p*row_a + q*row_b  (simultaneously)
void combine_rows(IntegerMatrix& m, std::size_t a, std::size_t b, const Integer& x,
                  const Integer& y, const Integer& p, const Integer& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer ra = x * m(a, j) + y * m(b, j);
    Integer rb = p * m(a, j) + q * m(b, j);
    m(a, j) = std::move(ra);
    m(b, j) = std::move(rb);
  }
}

void add_multiple(IntegerMatrix& m, std::size_t target, std::size_t source, const Integer& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) += f * m(source, j);
}

void negate_row(IntegerMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

bool is_diagonal(const IntegerMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && sgn(m(i, j)) != 0) return false;
  return true;
}

IntegerMatrix drop_zero_rows(const IntegerMatrix& m) {
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    if (std::any_of(r.begin(), r.end(), [](const Integer& v) { return sgn(v) != 0; }))
      rows.push_back(std::move(r));
  }
  return IntegerMatrix::from_rows(rows, m.cols());
}

}  // namespace

HermiteForm hermite_normal_form(const IntegerMatrix& m) {
  HermiteForm out{m, IntegerMatrix::identity(m.rows())};
  IntegerMatrix& h = out.h;
  IntegerMatrix& u = out.u;
  std::size_t r = 0;
  for (std::size_t col = 0; col < h.cols() && r < h.rows(); ++col) {
    for (std::size_t i = r + 1; i < h.rows(); ++i) {
      if (sgn(h(i, col)) == 0) continue;
      Integer g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), h(r, col).get_mpz_t(),
                 h(i, col).get_mpz_t());
      Integer p = -h(i, col) / g;
      Integer q = h(r, col) / g;
      combine_rows(h, r, i, x, y, p, q);
      combine_rows(u, r, i, x, y, p, q);
    }
    if (sgn(h(r, col)) == 0) continue;
    if (sgn(h(r, col)) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(r, col).get_mpz_t());
      if (sgn(q) == 0) continue;
      add_multiple(h, i, r, -q);
      add_multiple(u, i, r, -q);
    }
    ++r;
  }
  return out;
}

std::vector<Integer> smith_diagonal(const IntegerMatrix& m) {
  IntegerMatrix a = drop_zero_rows(m);
  // Alternate row and column Hermite reductions until diagonal.
  for (;;) {
    a = drop_zero_rows(hermite_normal_form(a).h);
    if (is_diagonal(a)) break;
    a = drop_zero_rows(hermite_normal_form(a.transpose()).h).transpose();
    if (is_diagonal(a)) break;
  }
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
    if (sgn(a(i, i)) != 0) d.push_back(abs(a(i, i)));
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      Integer g = gcd(d[i], d[j]);
      Integer l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  return d;
}

Integer determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j));
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntegerMatrix& m) {
  // Fraction-free elimination.
  IntegerMatrix a = m;
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, col)) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (sgn(a(i, col)) == 0) continue;
      Integer f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) = a(i, j) * a(r, col) - f * a(r, j);
      // keep entries small
      Integer g = 0;
      for (std::size_t j = col; j < a.cols(); ++j) g = gcd(g, a(i, j));
      if (g > 1)
        for (std::size_t j = col; j < a.cols(); ++j) mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), g.get_mpz_t());
    }
    ++r;
  }
  return r;
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix a = m;
  return reduce_to_rref(a).size();
}

std::size_t rank_of_vectors(std::span<const IntVector> vectors) {
  if (vectors.empty()) return 0;
  return rank(IntegerMatrix::from_rows(vectors, vectors.front().size()));
}

std::vector<IntVector> integer_kernel(const IntegerMatrix& m) {
  const HermiteForm hf = hermite_normal_form(m.transpose());
  std::vector<IntVector> kernel;
  for (std::size_t i = 0; i < hf.h.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < hf.h.cols() && zero; ++j) zero = sgn(hf.h(i, j)) == 0;
    if (zero) kernel.push_back(hf.u.row(i));
  }
  return kernel;
}

std::vector<IntVector> saturate(std::span<const IntVector> vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  const IntegerMatrix m = IntegerMatrix::from_rows(vectors, dim);
  if (rank(m) == 0) return {};
  const std::vector<IntVector> normals = integer_kernel(m);
  const std::vector<IntVector> sat = integer_kernel(IntegerMatrix::from_rows(normals, dim));
  return drop_zero_rows(hermite_normal_form(IntegerMatrix::from_rows(sat, dim)).h).row_list();
}

AffineLattice AffineLattice::affine_hull(std::span<const IntVector> points) {
  if (points.empty()) throw Error("affine_hull: no points");
  AffineLattice l;
  l.basepoint = points.front();
  std::vector<IntVector> diffs;
  diffs.reserve(points.size());
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(subtract(points[i], l.basepoint));
  l.basis = saturate(diffs, l.basepoint.size());
  return l;
}

IntVector AffineLattice::coordinates(const IntVector& p) const {
  const std::size_t n = ambient_dim();
  if (p.size() != n) throw Error("coordinates: dimension mismatch");
  IntVector x = subtract(p, basepoint);
  IntVector c(basis.size());
  // Fast path: basis in row echelon form.
  std::vector<std::size_t> pivots;
  bool echelon = true;
  for (const IntVector& b : basis) {
    std::size_t piv = 0;
    while (piv < n && sgn(b[piv]) == 0) ++piv;
    if (piv == n || (!pivots.empty() && piv <= pivots.back())) {
      echelon = false;
      break;
    }
    pivots.push_back(piv);
  }
  if (echelon) {
    IntVector rest = x;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const std::size_t piv = pivots[i];
      if (!mpz_divisible_p(rest[piv].get_mpz_t(), basis[i][piv].get_mpz_t()))
        throw Error("coordinates: point not in lattice");
      c[i] = rest[piv] / basis[i][piv];
      for (std::size_t j = 0; j < n; ++j) rest[j] -= c[i] * basis[i][j];
    }
    if (std::any_of(rest.begin(), rest.end(), [](const Integer& v) { return sgn(v) != 0; }))
      throw Error("coordinates: point not in lattice");
    return c;
  }
  RationalMatrix a(n, basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) a(j, i) = basis[i][j];
  RatVector rhs(x.begin(), x.end());
  auto sol = solve(a, rhs);
  if (!sol) throw Error("coordinates: point not in affine span");
  for (std::size_t i = 0; i < c.size(); ++i) {
    if ((*sol)[i].get_den() != 1) throw Error("coordinates: point not in lattice");
    c[i] = (*sol)[i].get_num();
  }
  return c;
}

bool independent_affine_spans(const AffineLattice& a, const AffineLattice& b) {
  std::vector<IntVector> stacked = a.basis;
  stacked.insert(stacked.end(), b.basis.begin(), b.basis.end());
  if (stacked.empty()) return true;
  return rank_of_vectors(stacked) == rank_of_vectors(a.basis) + rank_of_vectors(b.basis);
}

bool are_complementary(const AffineLattice& a, const AffineLattice& b) {
  if (!independent_affine_spans(a, b)) return false;
  std::vector<IntVector> stacked = a.basis;
  stacked.insert(stacked.end(), b.basis.begin(), b.basis.end());
  if (stacked.empty()) return true;
  if (rank_of_vectors(stacked) != stacked.size()) return false;
  const auto d = smith_diagonal(IntegerMatrix::from_rows(stacked, stacked.front().size()));
  return std::all_of(d.begin(), d.end(), [](const Integer& v) { return v == 1; });
}

std::vector<std::size_t> reduce_to_rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    const Rational inv = 1 / m(r, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, col)) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

std::optional<RatVector> solve(const RationalMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw Error("solve: dimension mismatch");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = reduce_to_rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  RatVector x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  return x;
}

std::vector<RatVector> rational_kernel(const RationalMatrix& m) {
  RationalMatrix a = m;
  const auto pivots = reduce_to_rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

Rational AffineFunctional::operator()(std::span<const Integer> x) const {
  Rational v = constant;
  for (std::size_t i = 0; i < coefficients.size(); ++i) v += coefficients[i] * x[i];
  return v;
}

Rational AffineFunctional::operator()(std::span<const Rational> x) const {
  Rational v = constant;
  for (std::size_t i = 0; i < coefficients.size(); ++i) v += coefficients[i] * x[i];
  return v;
}

std::optional<AffineFunctional> interpolate_affine(std::span<const IntVector> points,
                                                   std::span<const Rational> values) {
  if (points.size() != values.size()) throw Error("interpolate_affine: size mismatch");
  if (points.empty()) return AffineFunctional{};
  const std::size_t n = points.front().size();
  RationalMatrix a(points.size(), n + 1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    a(i, 0) = 1;
    for (std::size_t j = 0; j < n; ++j) a(i, j + 1) = points[i][j];
  }
  auto sol = solve(a, RatVector(values.begin(), values.end()));
  if (!sol) return std::nullopt;
  AffineFunctional f;
  f.constant = (*sol)[0];
  f.coefficients.assign(sol->begin() + 1, sol->end());
  return f;
}

IntVector primitive(IntVector v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

IntVector clear_denominators(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& q : v) l = lcm(l, q.get_den());
  IntVector out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(q.get_num() * (l / q.get_den()));
  return out;
}

IntVector subtract(const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw Error("invalid rational: '" + text + "'");
  if (q.get_den() == 0) throw Error("invalid rational: zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace dctri
