#pragma once

#include "quatlat/linalg.hpp"

namespace quatlat::detail {

struct GramSchmidt {
  RatMatrix mu;   // mu(i, j) for j < i
  RatVector b;    // squared norms of the orthogonalized vectors
};

inline GramSchmidt gram_schmidt(const RatMatrix& g) {
  const std::size_t n = g.rows();
  GramSchmidt gs{RatMatrix(n, n), RatVector(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rational r = g(i, j);
      for (std::size_t l = 0; l < j; ++l) r -= gs.mu(j, l) * gs.mu(i, l) * gs.b[l];
      gs.mu(i, j) = r / gs.b[j];
    }
    Rational r = g(i, i);
    for (std::size_t l = 0; l < i; ++l) r -= gs.mu(i, l) * gs.mu(i, l) * gs.b[l];
    if (r <= 0) throw DomainError("form is not positive definite");
    gs.b[i] = r;
  }
  return gs;
}

inline Integer nearest(const Rational& q) {
  Rational h = q + Rational(1, 2);
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
  return f;
}

}  // namespace quatlat::detail
