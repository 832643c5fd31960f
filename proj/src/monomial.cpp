#include "quatlat/monomial.hpp"

namespace quatlat {

namespace {

Rational power(long p, int e) {
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? ratio(1, q) : Rational(q);
}

}  // namespace

Lattice monomial_lattice(const AlgebraRef& mr, const Exponents& e, long p) {
  const std::size_t r = mr->matrix_size();
  if (mr->kind() != AlgebraKind::matrix) throw DomainError("monomial lattices live in a matrix algebra");
  if (e.size() != r) throw DomainError("exponent matrix has the wrong size");
  RatMatrix b(r * r, r * r);
  for (std::size_t u = 0; u < r; ++u) {
    if (e[u].size() != r) throw DomainError("exponent matrix has the wrong size");
    for (std::size_t v = 0; v < r; ++v) b(u * r + v, u * r + v) = power(p, e[u][v]);
  }
  return Lattice(mr, b);
}

std::optional<Exponents> monomial_exponents(const Lattice& l, long p) {
  const std::size_t n = l.dim();
  const std::size_t r = l.algebra()->matrix_size();
  if (r == 0) return std::nullopt;
  Exponents e(r, std::vector<int>(r));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = l.basis()(i, j);
      if (i != j) {
        if (x != 0) return std::nullopt;
        continue;
      }
      // x = p^k exactly
      Integer num = x.get_num(), den = x.get_den();
      int k = 0;
      while (num % p == 0) {
        num /= p;
        ++k;
      }
      while (den % p == 0) {
        den /= p;
        --k;
      }
      if (num != 1 || den != 1) return std::nullopt;
      e[i / r][i % r] = k;
    }
  return e;
}

}  // namespace quatlat
