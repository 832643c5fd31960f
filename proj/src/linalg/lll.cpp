#include "quatlat/linalg.hpp"
#include "gram_schmidt.hpp"

namespace quatlat {

GramForm::GramForm(RatMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw DomainError("Gram matrix must be square");
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gram_(i, j) != gram_(j, i)) throw DomainError("Gram matrix must be symmetric");
}

Rational GramForm::evaluate(std::span<const Integer> x) const {
  if (x.size() != dimension()) throw DomainError("vector/form dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (x[j] != 0) row += gram_(i, j) * x[j];
    s += row * x[i];
  }
  return s;
}

bool GramForm::is_positive_definite() const {
  const std::size_t n = dimension();
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = gram_(i, j);
    if (determinant(minor) <= 0) return false;
  }
  return true;
}

using detail::GramSchmidt;
using detail::gram_schmidt;
using detail::nearest;

namespace {

// b_k -= q·b_j, applied to the Gram matrix and the transform.
void reduce_step(RatMatrix& g, IntMatrix& t, std::size_t k, std::size_t j, const Integer& q) {
  const std::size_t n = g.rows();
  const Rational rq(q);
  for (std::size_t c = 0; c < n; ++c) g(k, c) -= rq * g(j, c);
  for (std::size_t r = 0; r < n; ++r) g(r, k) -= rq * g(r, j);
  for (std::size_t c = 0; c < t.cols(); ++c) t(k, c) -= q * t(j, c);
}

void swap_basis(RatMatrix& g, IntMatrix& t, std::size_t a, std::size_t b) {
  g.swap_rows(a, b);
  for (std::size_t r = 0; r < g.rows(); ++r) std::swap(g(r, a), g(r, b));
  t.swap_rows(a, b);
}

const Rational kDelta(3, 4);

}  // namespace

LllResult lll_reduce(const GramForm& form) {
  const std::size_t n = form.dimension();
  RatMatrix g = form.gram();
  IntMatrix t = IntMatrix::identity(n);
  if (n == 0) return {GramForm(g), t};
  GramSchmidt gs = gram_schmidt(g);
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t jj = k; jj-- > 0;) {
      Integer q = nearest(gs.mu(k, jj));
      if (q == 0) continue;
      reduce_step(g, t, k, jj, q);
      gs = gram_schmidt(g);
    }
    const Rational& m = gs.mu(k, k - 1);
    if (gs.b[k] >= (kDelta - m * m) * gs.b[k - 1]) {
      ++k;
    } else {
      swap_basis(g, t, k, k - 1);
      gs = gram_schmidt(g);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return {GramForm(g), t};
}

bool is_lll_reduced(const GramForm& form) {
  const std::size_t n = form.dimension();
  GramSchmidt gs = gram_schmidt(form.gram());
  const Rational half(1, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (abs(gs.mu(i, j)) > half) return false;
  for (std::size_t k = 1; k < n; ++k) {
    const Rational& m = gs.mu(k, k - 1);
    if (gs.b[k] < (kDelta - m * m) * gs.b[k - 1]) return false;
  }
  return true;
}

}  // namespace quatlat
