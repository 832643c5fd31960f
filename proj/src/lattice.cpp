#include "quatlat/lattice.hpp"

#include <sstream>

namespace quatlat {

namespace {

void same_algebra(const Lattice& i, const Lattice& j) {
  if (i.algebra() != j.algebra()) throw DomainError("lattices live in different algebras");
}

RatMatrix stack(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out = a;
  for (std::size_t r = 0; r < b.rows(); ++r) out.append_row(b.row(r));
  return out;
}

// Lattice dual to L under the standard coordinate pairing.
Lattice standard_dual(const Lattice& l) {
  return Lattice(l.algebra(), inverse(l.basis()).transpose());
}

// Columns g ↦ coordinates of x·g (or g·x) in the basis of `target`, for all
// basis elements g of `mult`, stacked side by side.
RatMatrix stacked_action(const Lattice& target, const Lattice& mult, bool right) {
  const Algebra& alg = *target.algebra();
  const std::size_t n = alg.dim();
  RatMatrix to_target = inverse(target.basis());
  RatMatrix m(n, n * n);
  for (std::size_t g = 0; g < n; ++g) {
    Element e = mult.basis_element(g);
    RatMatrix act = (right ? alg.right_matrix(e) : alg.left_matrix(e)) * to_target;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, g * n + c) = act(r, c);
  }
  return m;
}

}  // namespace

Lattice::Lattice(AlgebraRef algebra, const RatMatrix& generators) : algebra_(std::move(algebra)) {
  const std::size_t n = algebra_->dim();
  if (generators.cols() != n) throw DomainError("generator length does not match the algebra");
  CanonicalBasis c = canonical_row_basis(generators);
  if (c.h.rows() != n) throw DomainError("generators do not span a full-rank lattice");
  den_ = std::move(c.den);
  hnf_ = std::move(c.h);
  basis_ = RatMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis_(i, j) = ratio(hnf_(i, j), den_);
}

Lattice Lattice::from_generators(AlgebraRef algebra, const std::vector<Element>& gens) {
  RatMatrix m;
  for (const Element& g : gens) m.append_row(g);
  if (gens.empty()) m = RatMatrix(0, algebra->dim());
  return Lattice(std::move(algebra), m);
}

Lattice Lattice::standard(AlgebraRef algebra) {
  const std::size_t n = algebra->dim();
  return Lattice(std::move(algebra), RatMatrix::identity(n));
}

RatVector Lattice::coordinates(const Element& x) const {
  const std::size_t n = dim();
  if (x.size() != n) throw DomainError("element has the wrong dimension");
  // c·H = den·x with H upper triangular.
  RatVector c(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational r = den_ * x[j];
    for (std::size_t i = 0; i < j; ++i)
      if (c[i] != 0 && hnf_(i, j) != 0) r -= c[i] * hnf_(i, j);
    c[j] = r / hnf_(j, j);
  }
  return c;
}

bool Lattice::contains(const Element& x) const {
  for (const Rational& c : coordinates(x))
    if (c.get_den() != 1) return false;
  return true;
}

Rational Lattice::covolume() const {
  Rational d = 1;
  for (std::size_t i = 0; i < dim(); ++i) d *= basis_(i, i);
  return d;
}

std::string Lattice::key() const {
  std::ostringstream os;
  os << den_.get_str() << '|';
  bool first = true;
  for (const Integer& x : hnf_.data()) {
    os << (first ? "" : ",") << x.get_str();
    first = false;
  }
  return os.str();
}

bool Lattice::operator<(const Lattice& o) const {
  if (den_ != o.den_) return den_ < o.den_;
  return hnf_.data() < o.hnf_.data();
}

bool is_sublattice(const Lattice& i, const Lattice& j) {
  same_algebra(i, j);
  for (std::size_t k = 0; k < i.dim(); ++k)
    if (!j.contains(i.basis_element(k))) return false;
  return true;
}

Lattice sum(const Lattice& i, const Lattice& j) {
  same_algebra(i, j);
  return Lattice(i.algebra(), stack(i.basis(), j.basis()));
}

Lattice intersect(const Lattice& i, const Lattice& j) {
  same_algebra(i, j);
  return standard_dual(sum(standard_dual(i), standard_dual(j)));
}

Lattice product(const Lattice& i, const Lattice& j) {
  same_algebra(i, j);
  const Algebra& alg = *i.algebra();
  RatMatrix gens;
  // x·y for all basis pairs, via the right multiplication matrix of each y.
  for (std::size_t b = 0; b < j.dim(); ++b) {
    RatMatrix prod = i.basis() * alg.right_matrix(j.basis_element(b));
    for (std::size_t a = 0; a < prod.rows(); ++a) gens.append_row(prod.row(a));
  }
  return Lattice(i.algebra(), gens);
}

Lattice scale(const Rational& q, const Lattice& i) {
  if (q == 0) throw DomainError("scaling a lattice by zero");
  RatMatrix b = i.basis();
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (auto& x : b.row(r)) x *= q;
  return Lattice(i.algebra(), b);
}

Lattice left_multiply(const Element& alpha, const Lattice& i) {
  return Lattice(i.algebra(), i.basis() * i.algebra()->left_matrix(alpha));
}

Lattice right_multiply(const Lattice& i, const Element& alpha) {
  return Lattice(i.algebra(), i.basis() * i.algebra()->right_matrix(alpha));
}

Lattice colon_left(const Lattice& i, const Lattice& j) {
  same_algebra(i, j);
  return Lattice(i.algebra(), integral_preimage(stacked_action(i, j, true)));
}

Lattice colon_right(const Lattice& i, const Lattice& j) {
  same_algebra(i, j);
  return Lattice(i.algebra(), integral_preimage(stacked_action(i, j, false)));
}

Lattice trace_dual(const Lattice& i) {
  const RatMatrix& t = i.algebra()->trace_gram();
  return Lattice(i.algebra(), inverse(t * i.basis().transpose()));
}

Rational generalized_index(const Lattice& i, const Lattice& j) {
  same_algebra(i, j);
  return j.covolume() / i.covolume();
}

Order::Order(Lattice l) : lattice_(std::move(l)) {
  const Algebra& alg = *lattice_.algebra();
  if (!lattice_.contains(alg.unit())) throw DomainError("not an order: missing unit");
  for (std::size_t b = 0; b < lattice_.dim(); ++b) {
    RatMatrix prod = lattice_.basis() * alg.right_matrix(lattice_.basis_element(b));
    for (std::size_t a = 0; a < prod.rows(); ++a)
      if (!lattice_.contains(prod.row_vector(a)))
        throw DomainError("not an order: not closed under multiplication");
  }
}

Integer Order::reduced_discriminant() const {
  const Algebra& alg = *algebra();
  if (alg.kind() != AlgebraKind::quaternion)
    throw UnsupportedError("reduced discriminant is only available for quaternion orders");
  const RatMatrix& b = lattice_.basis();
  Rational det = abs(determinant(b * alg.trace_gram() * b.transpose()));
  if (det.get_den() != 1 || mpz_perfect_square_p(det.get_num_mpz_t()) == 0)
    throw InternalError("trace form determinant of an order is not a square integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), det.get_num_mpz_t());
  return r;
}

bool Order::is_maximal() const {
  return reduced_discriminant() == algebra()->discriminant();
}

namespace {

Order as_order(Lattice l) {
  try {
    return Order(std::move(l));
  } catch (const DomainError& e) {
    throw InternalError(std::string("multiplier ring is not an order: ") + e.what());
  }
}

}  // namespace

Order left_order(const Lattice& i) { return as_order(colon_left(i, i)); }

Order right_order(const Lattice& i) { return as_order(colon_right(i, i)); }

Lattice quasi_inverse(const Lattice& i) {
  Lattice a = colon_left(right_order(i), i);
  Lattice b = colon_right(left_order(i), i);
  if (!(a == b)) throw InternalError("quasi-inverse formulas disagree");
  return a;
}

}  // namespace quatlat
