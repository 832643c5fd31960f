#pragma once

// Exact integer and rational matrix kernel. Nothing in here ever rounds.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "quatlat/errors.hpp"

namespace quatlat {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DomainError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DomainError("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<T> row_vector(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void append_row(std::span<const T> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw DomainError("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  const std::vector<T>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix product dimension mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

/// num/den in lowest terms.
inline Rational ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

RatMatrix to_rational(const IntMatrix& m);

/// Row vector times matrix.
RatVector mul_row(std::span<const Rational> v, const RatMatrix& m);
IntVector mul_row(std::span<const Integer> v, const IntMatrix& m);

/// Least common multiple of all denominators (1 for an empty matrix).
Integer common_denominator(const RatMatrix& m);

std::string to_string(const IntMatrix& m);
std::string to_string(const RatMatrix& m);

// ---------------------------------------------------------------------------
// Rational linear algebra (fraction-field Gaussian elimination).

Rational determinant(const RatMatrix& m);
Integer determinant(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);
/// Inverse of a square nonsingular matrix; DomainError when singular.
RatMatrix inverse(const RatMatrix& m);
/// Solves x·m = v for a square nonsingular m.
RatVector solve_row(const RatMatrix& m, std::span<const Rational> v);

// ---------------------------------------------------------------------------
// Normal forms.

struct HnfResult {
  IntMatrix h;  ///< row Hermite normal form, zero rows last
  IntMatrix u;  ///< unimodular, h = u·m
};

/// Row Hermite normal form: upper echelon, positive pivots, entries above each
/// pivot reduced into [0, pivot). Rank-deficient input is allowed.
HnfResult hnf(const IntMatrix& m);

/// The nonzero rows of the Hermite normal form of m (same h as hnf(m) without
/// the zero rows), computed by incremental insertion without tracking the
/// transform. This is the path used for lattice canonicalization.
IntMatrix hnf_rows(const IntMatrix& m);

struct SnfResult {
  IntMatrix s;  ///< diagonal, d_1 | d_2 | ..., nonnegative
  IntMatrix u;  ///< unimodular
  IntMatrix v;  ///< unimodular, s = u·m·v
};

SnfResult snf(const IntMatrix& m);

/// Basis (rows) of {v ∈ Q^r : v·m ∈ Z^c} for an r×c matrix of rank r.
/// The basis is returned in canonical (denominator, HNF) form.
RatMatrix integral_preimage(const RatMatrix& m);

/// Canonical basis of the Z-span of the rows of a rational matrix:
/// rows of (1/den)·H with H in HNF and gcd(den, H) = 1.
struct CanonicalBasis {
  Integer den;
  IntMatrix h;
};
CanonicalBasis canonical_row_basis(const RatMatrix& m);

// ---------------------------------------------------------------------------
// Quadratic forms.

/// Gram matrix G of q(x) = x·G·xᵀ.
class GramForm {
 public:
  explicit GramForm(RatMatrix gram);

  std::size_t dimension() const { return gram_.rows(); }
  const RatMatrix& gram() const { return gram_; }

  Rational evaluate(std::span<const Integer> x) const;
  /// All leading principal minors positive.
  bool is_positive_definite() const;

 private:
  RatMatrix gram_;
};

struct LllResult {
  GramForm gram;       ///< t·g·tᵀ
  IntMatrix transform; ///< unimodular t
};

/// LLL reduction of a positive definite Gram matrix with δ = 3/4, exact.
LllResult lll_reduce(const GramForm& g);

/// True if g satisfies size reduction and the Lovász condition for δ = 3/4.
bool is_lll_reduced(const GramForm& g);

/// All integer vectors x with q(x) = target, in lexicographic order.
std::vector<IntVector> enumerate_representations(const GramForm& g, const Rational& target);

/// All integer vectors x with q(x) <= bound, paired with q(x), in
/// lexicographic order of x.
struct ShortVector {
  IntVector x;
  Rational value;
};
std::vector<ShortVector> enumerate_short_vectors(const GramForm& g, const Rational& bound);

}  // namespace quatlat
