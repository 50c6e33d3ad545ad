// Exact integer and rational linear algebra over GMP.
//
// Everything in dctri is computed without floating point. Integer matrices
// carry lattice data (Hermite/Smith forms, saturation, complementarity);
// rational matrices are used for affine interpolation and rank tests.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dctri {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major matrix. Dimensions are fixed at construction.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Builds a matrix whose rows are `rows`; every row must have length `cols`.
  static Matrix from_rows(std::span<const std::vector<T>> rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error("matrix row has inconsistent length");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }

  std::vector<std::vector<T>> row_list() const {
    std::vector<std::vector<T>> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);

struct HermiteForm {
  IntegerMatrix h;  ///< row-style Hermite normal form
  IntegerMatrix u;  ///< unimodular transform with h = u * m
};

/// Row-style Hermite normal form: h is in row echelon form with positive
/// pivots and entries above each pivot reduced into [0, pivot). Zero rows
/// are kept at the bottom so that h has the same shape as m.
HermiteForm hermite_normal_form(const IntegerMatrix& m);

/// Nonzero elementary divisors d1 | d2 | ... of m (one per unit of rank).
std::vector<Integer> smith_diagonal(const IntegerMatrix& m);

Integer determinant(const IntegerMatrix& m);

std::size_t rank(const IntegerMatrix& m);
std::size_t rank(const RationalMatrix& m);
std::size_t rank_of_vectors(std::span<const IntVector> vectors);

/// Lattice basis (as rows) of {x in Z^n : m x = 0}.
std::vector<IntVector> integer_kernel(const IntegerMatrix& m);

/// Basis of span(vectors) ∩ Z^n, returned in Hermite normal form.
/// `dim` is the ambient dimension (needed when `vectors` is empty).
std::vector<IntVector> saturate(std::span<const IntVector> vectors, std::size_t dim);

/// An affine sublattice basepoint + Z-span(basis) of Z^n.
struct AffineLattice {
  IntVector basepoint;
  std::vector<IntVector> basis;

  std::size_t ambient_dim() const { return basepoint.size(); }
  std::size_t rank() const { return basis.size(); }

  /// aff(points) ∩ Z^n with the first point as basepoint. Requires at least
  /// one point.
  static AffineLattice affine_hull(std::span<const IntVector> points);

  /// Integer coordinates of `p` with respect to `basis`, relative to the
  /// basepoint. Throws if `p` is not in the lattice.
  IntVector coordinates(const IntVector& p) const;
};

/// True iff the direction lattices are independent and their concatenated
/// bases form a lattice basis of the saturation of the joint span.
bool are_complementary(const AffineLattice& a, const AffineLattice& b);

/// True iff the direction spaces of the two affine spans meet only in 0.
bool independent_affine_spans(const AffineLattice& a, const AffineLattice& b);

/// Reduced row echelon form over Q; returns the pivot columns.
std::vector<std::size_t> reduce_to_rref(RationalMatrix& m);

/// Some solution of a x = b, or nullopt when inconsistent. Free variables are 0.
std::optional<RatVector> solve(const RationalMatrix& a, const RatVector& b);

/// Basis of {x in Q^n : m x = 0}.
std::vector<RatVector> rational_kernel(const RationalMatrix& m);

/// Affine functional x -> constant + <coefficients, x>.
struct AffineFunctional {
  Rational constant;
  RatVector coefficients;

  Rational operator()(std::span<const Integer> x) const;
  Rational operator()(std::span<const Rational> x) const;
  friend bool operator==(const AffineFunctional&, const AffineFunctional&) = default;
};

/// An affine functional agreeing with `values` on `points`, or nullopt when
/// the values are not affine on the points.
std::optional<AffineFunctional> interpolate_affine(std::span<const IntVector> points,
                                                   std::span<const Rational> values);

/// Divides the vector by the gcd of its entries (zero vector unchanged).
IntVector primitive(IntVector v);

/// Clears denominators: the smallest positive integer multiple of v.
IntVector clear_denominators(std::span<const Rational> v);

IntVector subtract(const IntVector& a, const IntVector& b);
Integer dot(std::span<const Integer> a, std::span<const Integer> b);

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

}  // namespace dctri
