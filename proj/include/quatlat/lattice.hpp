#pragma once

#include <string>
#include <vector>

#include "quatlat/algebra.hpp"

namespace quatlat {

/// Full-rank Z-lattice in an algebra, kept in the canonical form (1/den)·H
/// with H in row Hermite normal form and gcd(den, entries of H) = 1. Two
/// lattices are equal exactly when their canonical forms agree.
class Lattice {
 public:
  /// Z-span of the rows of `generators`; DomainError unless it has full rank.
  Lattice(AlgebraRef algebra, const RatMatrix& generators);

  static Lattice from_generators(AlgebraRef algebra, const std::vector<Element>& gens);
  /// The order of integral coordinate vectors, Z^n.
  static Lattice standard(AlgebraRef algebra);

  const AlgebraRef& algebra() const { return algebra_; }
  std::size_t dim() const { return hnf_.rows(); }
  const Integer& den() const { return den_; }
  const IntMatrix& hnf() const { return hnf_; }
  /// Basis rows (1/den)·H.
  const RatMatrix& basis() const { return basis_; }
  Element basis_element(std::size_t k) const { return basis_.row_vector(k); }

  /// Coordinates c with x = c·basis(); integral iff x lies in the lattice.
  RatVector coordinates(const Element& x) const;
  bool contains(const Element& x) const;
  /// |det basis|.
  Rational covolume() const;

  /// Stable textual form "den|h00,h01,...", used as a sort and hash key.
  std::string key() const;

  bool operator==(const Lattice& o) const { return den_ == o.den_ && hnf_ == o.hnf_; }
  /// Deterministic total order on canonical forms.
  bool operator<(const Lattice& o) const;

 private:
  AlgebraRef algebra_;
  Integer den_;
  IntMatrix hnf_;
  RatMatrix basis_;
};

/// I ⊆ J.
bool is_sublattice(const Lattice& i, const Lattice& j);

Lattice sum(const Lattice& i, const Lattice& j);
Lattice intersect(const Lattice& i, const Lattice& j);
/// Z-span of all products x·y with x ∈ I, y ∈ J.
Lattice product(const Lattice& i, const Lattice& j);
Lattice scale(const Rational& q, const Lattice& i);
/// α·I
Lattice left_multiply(const Element& alpha, const Lattice& i);
/// I·α
Lattice right_multiply(const Lattice& i, const Element& alpha);

/// (I : J)_L = {x : xJ ⊆ I}.
Lattice colon_left(const Lattice& i, const Lattice& j);
/// (I : J)_R = {x : Jx ⊆ I}.
Lattice colon_right(const Lattice& i, const Lattice& j);

/// I^♯ = {x : trd(xI) ⊆ Z}, with the algebra's trace form.
Lattice trace_dual(const Lattice& i);

/// [I : J] = covol(J) / covol(I).
Rational generalized_index(const Lattice& i, const Lattice& j);

/// A lattice that contains 1 and is closed under multiplication.
class Order {
 public:
  /// DomainError naming the failing axiom when l is not an order.
  explicit Order(Lattice l);

  const Lattice& lattice() const { return lattice_; }
  operator const Lattice&() const { return lattice_; }
  const AlgebraRef& algebra() const { return lattice_.algebra(); }

  /// sqrt |det(trd(b_u b_v))|; quaternion kind only.
  Integer reduced_discriminant() const;
  /// Reduced discriminant equals the algebra discriminant; quaternion only.
  bool is_maximal() const;

  bool operator==(const Order& o) const { return lattice_ == o.lattice_; }
  bool operator==(const Lattice& o) const { return lattice_ == o; }

 private:
  Lattice lattice_;
};

/// O_L(I) = (I : I)_L.
Order left_order(const Lattice& i);
/// O_R(I) = (I : I)_R.
Order right_order(const Lattice& i);

/// I⁻¹ = {x : IxI ⊆ I}, computed as (O_R(I) : I)_L and checked against
/// (O_L(I) : I)_R.
Lattice quasi_inverse(const Lattice& i);

}  // namespace quatlat
