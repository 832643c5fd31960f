#include "quatlat/algebra.hpp"

#include <set>

#include "quatlat/arith.hpp"

namespace quatlat {

namespace {

enum { ONE = 0, I = 1, J = 2, K = 3 };

}  // namespace

AlgebraRef Algebra::quaternion(const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) throw DomainError("quaternion parameters must be nonzero");
  std::shared_ptr<Algebra> alg(new Algebra);
  alg->kind_ = AlgebraKind::quaternion;
  alg->dim_ = 4;
  alg->a_ = a;
  alg->b_ = b;
  alg->table_.assign(16, {});
  auto set = [&](std::size_t x, std::size_t y, std::size_t k, const Rational& c) {
    alg->table_[x * 4 + y].push_back({k, c});
  };
  for (std::size_t x = 0; x < 4; ++x) {
    set(ONE, x, x, 1);
    if (x != ONE) set(x, ONE, x, 1);
  }
  set(I, I, ONE, a);
  set(J, J, ONE, b);
  set(K, K, ONE, -a * b);
  set(I, J, K, 1);
  set(J, I, K, -1);
  set(I, K, J, a);
  set(K, I, J, -a);
  set(J, K, I, -b);
  set(K, J, I, b);
  alg->unit_ = {1, 0, 0, 0};
  alg->finish();
  return alg;
}

AlgebraRef Algebra::matrix(std::size_t r) {
  if (r == 0) throw DomainError("matrix algebra size must be positive");
  std::shared_ptr<Algebra> alg(new Algebra);
  alg->kind_ = AlgebraKind::matrix;
  alg->r_ = r;
  const std::size_t n = r * r;
  alg->dim_ = n;
  alg->table_.assign(n * n, {});
  // E_uv · E_vt = E_ut
  for (std::size_t u = 0; u < r; ++u)
    for (std::size_t v = 0; v < r; ++v)
      for (std::size_t t = 0; t < r; ++t)
        alg->table_[(u * r + v) * n + (v * r + t)].push_back({u * r + t, 1});
  alg->unit_ = Element(n);
  for (std::size_t u = 0; u < r; ++u) alg->unit_[u * r + u] = 1;
  alg->finish();
  return alg;
}

AlgebraRef Algebra::generic(const std::vector<std::vector<Element>>& c, Element unit) {
  const std::size_t n = c.size();
  if (n == 0) throw DomainError("algebra must have positive dimension");
  std::shared_ptr<Algebra> alg(new Algebra);
  alg->dim_ = n;
  alg->table_.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i].size() != n) throw DomainError("structure constants have the wrong shape");
    for (std::size_t j = 0; j < n; ++j) {
      if (c[i][j].size() != n) throw DomainError("structure constants have the wrong shape");
      for (std::size_t k = 0; k < n; ++k)
        if (c[i][j][k] != 0) alg->table_[i * n + j].push_back({k, c[i][j][k]});
    }
  }
  alg->check_dim(unit);
  alg->unit_ = std::move(unit);
  alg->finish();
  return alg;
}

void Algebra::finish() {
  const std::size_t n = dim_;
  for (std::size_t i = 0; i < n; ++i) {
    Element e = basis_element(i);
    if (mul(unit_, e) != e || mul(e, unit_) != e)
      throw DomainError("unit is not a two-sided identity");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Element eij = mul(basis_element(i), basis_element(j));
      for (std::size_t k = 0; k < n; ++k) {
        Element ek = basis_element(k);
        if (mul(eij, ek) != mul(basis_element(i), mul(basis_element(j), ek)))
          throw DomainError("structure constants are not associative");
      }
    }
  trace_gram_ = RatMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      trace_gram_(i, j) = reduced_trace(mul(basis_element(i), basis_element(j)));
  if (determinant(trace_gram_) == 0) throw DomainError("algebra is not separable: trace form is degenerate");
}

void Algebra::check_dim(const Element& x) const {
  if (x.size() != dim_) throw DomainError("element has the wrong dimension");
}

bool Algebra::is_definite() const {
  return kind_ == AlgebraKind::quaternion && a_ < 0 && b_ < 0;
}

Integer Algebra::discriminant() const {
  if (kind_ != AlgebraKind::quaternion)
    throw UnsupportedError("discriminant is only available for quaternion algebras");
  std::set<Integer> candidates{2};
  for (const Rational* q : {&a_, &b_})
    for (const Integer* z : {&q->get_num(), &q->get_den()})
      if (abs(*z) > 1)
        for (auto& p : prime_divisors(*z)) candidates.insert(p);
  Integer d = 1;
  for (const Integer& p : candidates)
    if (hilbert_symbol(a_, b_, p) == -1) d *= p;
  return d;
}

Element Algebra::basis_element(std::size_t k) const {
  Element e(dim_);
  e.at(k) = 1;
  return e;
}

Element Algebra::scalar(const Rational& q) const { return scale(q, unit_); }

Element Algebra::mul(const Element& x, const Element& y) const {
  check_dim(x);
  check_dim(y);
  Element out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      Rational xy = x[i] * y[j];
      for (const Term& t : table_[i * dim_ + j]) out[t.k] += xy * t.c;
    }
  }
  return out;
}

Element Algebra::add(const Element& x, const Element& y) const {
  check_dim(x);
  check_dim(y);
  Element out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out[k] = x[k] + y[k];
  return out;
}

Element Algebra::sub(const Element& x, const Element& y) const {
  check_dim(x);
  check_dim(y);
  Element out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out[k] = x[k] - y[k];
  return out;
}

Element Algebra::scale(const Rational& q, const Element& x) const {
  check_dim(x);
  Element out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out[k] = q * x[k];
  return out;
}

Element Algebra::inverse(const Element& x) const {
  check_dim(x);
  if (kind_ == AlgebraKind::quaternion) {
    Rational n = reduced_norm(x);
    if (n == 0) throw DomainError("element is not invertible");
    return scale(1 / n, conjugate(x));
  }
  RatMatrix l = left_matrix(x);
  if (determinant(l) == 0) throw DomainError("element is not invertible");
  return solve_row(l, unit_);
}

Element Algebra::conjugate(const Element& x) const {
  if (kind_ != AlgebraKind::quaternion)
    throw UnsupportedError("standard involution is only available for quaternion algebras");
  check_dim(x);
  return {x[0], -x[1], -x[2], -x[3]};
}

Rational Algebra::reduced_trace(const Element& x) const {
  check_dim(x);
  switch (kind_) {
    case AlgebraKind::quaternion:
      return 2 * x[0];
    case AlgebraKind::matrix: {
      Rational t = 0;
      for (std::size_t u = 0; u < r_; ++u) t += x[u * r_ + u];
      return t;
    }
    case AlgebraKind::generic: {
      Rational t = 0;
      for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t k = 0; k < dim_; ++k)
          for (const Term& term : table_[i * dim_ + k])
            if (term.k == k) t += x[i] * term.c;
      }
      return t;
    }
  }
  throw InternalError("unknown algebra kind");
}

Rational Algebra::reduced_norm(const Element& x) const {
  check_dim(x);
  switch (kind_) {
    case AlgebraKind::quaternion:
      return x[0] * x[0] - a_ * x[1] * x[1] - b_ * x[2] * x[2] + a_ * b_ * x[3] * x[3];
    case AlgebraKind::matrix: {
      RatMatrix m(r_, r_);
      for (std::size_t u = 0; u < r_; ++u)
        for (std::size_t v = 0; v < r_; ++v) m(u, v) = x[u * r_ + v];
      return determinant(m);
    }
    case AlgebraKind::generic:
      break;
  }
  throw UnsupportedError("reduced norm is not available for generic algebras");
}

RatMatrix Algebra::right_matrix(const Element& g) const {
  check_dim(g);
  RatMatrix m(dim_, dim_);
  for (std::size_t k = 0; k < dim_; ++k)
    for (std::size_t j = 0; j < dim_; ++j) {
      if (g[j] == 0) continue;
      for (const Term& t : table_[k * dim_ + j]) m(k, t.k) += g[j] * t.c;
    }
  return m;
}

RatMatrix Algebra::left_matrix(const Element& g) const {
  check_dim(g);
  RatMatrix m(dim_, dim_);
  for (std::size_t k = 0; k < dim_; ++k)
    for (std::size_t i = 0; i < dim_; ++i) {
      if (g[i] == 0) continue;
      for (const Term& t : table_[i * dim_ + k]) m(k, t.k) += g[i] * t.c;
    }
  return m;
}

}  // namespace quatlat
