#pragma once

#include <memory>
#include <vector>

#include "quatlat/linalg.hpp"

namespace quatlat {

/// An element of an algebra: its coordinates in the algebra's basis.
using Element = RatVector;

enum class AlgebraKind { quaternion, matrix, generic };

class Algebra;
using AlgebraRef = std::shared_ptr<const Algebra>;

/// Finite-dimensional associative Q-algebra given by structure constants,
/// e_i·e_j = Σ_k c[i][j][k] e_k. Immutable once built.
class Algebra {
 public:
  /// (a, b / Q) with basis 1, i, j, k: i² = a, j² = b, ij = k = -ji.
  static AlgebraRef quaternion(const Rational& a, const Rational& b);
  /// M_r(Q) with basis E_uv in row-major order.
  static AlgebraRef matrix(std::size_t r);
  /// Arbitrary structure constants, c[i][j] the coordinates of e_i·e_j.
  static AlgebraRef generic(const std::vector<std::vector<Element>>& c, Element unit);

  std::size_t dim() const { return dim_; }
  AlgebraKind kind() const { return kind_; }
  /// Quaternion parameters (zero for other kinds).
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  /// Matrix size r for M_r (zero for other kinds).
  std::size_t matrix_size() const { return r_; }
  /// Quaternion kind with a < 0 and b < 0.
  bool is_definite() const;
  /// Product of the finite primes ramified in a quaternion algebra.
  Integer discriminant() const;

  const Element& unit() const { return unit_; }
  Element basis_element(std::size_t k) const;
  Element zero() const { return Element(dim_); }
  Element scalar(const Rational& q) const;

  Element mul(const Element& x, const Element& y) const;
  Element add(const Element& x, const Element& y) const;
  Element sub(const Element& x, const Element& y) const;
  Element scale(const Rational& q, const Element& x) const;
  /// Two-sided inverse; DomainError when x is a zero divisor.
  Element inverse(const Element& x) const;

  /// Standard involution; quaternion kind only.
  Element conjugate(const Element& x) const;
  /// Reduced trace for quaternion and matrix kinds, regular-representation
  /// trace for generic algebras.
  Rational reduced_trace(const Element& x) const;
  /// Reduced norm (determinant for matrices); UnsupportedError for generic.
  Rational reduced_norm(const Element& x) const;

  /// Gram matrix of (x, y) ↦ reduced_trace(x·y) on the basis.
  const RatMatrix& trace_gram() const { return trace_gram_; }

  /// Row k is the coordinate vector of e_k·g, so that (x·g) = x·right_matrix(g).
  RatMatrix right_matrix(const Element& g) const;
  /// Row k is the coordinate vector of g·e_k, so that (g·x) = x·left_matrix(g).
  RatMatrix left_matrix(const Element& g) const;

 private:
  struct Term {
    std::size_t k;
    Rational c;
  };

  Algebra() = default;
  void finish();
  void check_dim(const Element& x) const;

  AlgebraKind kind_ = AlgebraKind::generic;
  std::size_t dim_ = 0;
  Rational a_, b_;
  std::size_t r_ = 0;
  std::vector<std::vector<Term>> table_;  // index i·dim + j
  Element unit_;
  RatMatrix trace_gram_;
};

}  // namespace quatlat
