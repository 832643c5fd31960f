#include "quatlat/arith.hpp"

namespace quatlat {

std::vector<std::pair<Integer, unsigned>> factor(const Integer& n) {
  if (n == 0) throw DomainError("cannot factor zero");
  Integer m = abs(n);
  std::vector<std::pair<Integer, unsigned>> out;
  for (Integer p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> out;
  for (auto& [p, e] : factor(n)) out.push_back(p);
  return out;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0)
    return std::nullopt;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return ratio(n, d);
}

Integer floor_sqrt(const Rational& q) {
  if (q < 0) throw DomainError("square root of a negative number");
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Integer r;
  mpz_sqrt(r.get_mpz_t(), f.get_mpz_t());
  // floor(sqrt(q)) = floor(sqrt(floor(q)))
  return r;
}

namespace {

// n = p^v · u with p ∤ u
unsigned split_valuation(Integer& n, const Integer& p) {
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

int eps(const Integer& u) {  // (u - 1)/2 mod 2, u odd
  Integer r = ((u % 4) + 4) % 4;
  return r == 3 ? 1 : 0;
}

int omega(const Integer& u) {  // (u² - 1)/8 mod 2, u odd
  Integer r = ((u % 8) + 8) % 8;
  return (r == 3 || r == 5) ? 1 : 0;
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Integer& p) {
  if (a == 0 || b == 0) throw DomainError("Hilbert symbol of zero");
  // num·den has the same square class as num/den.
  Integer x = a.get_num() * a.get_den();
  Integer y = b.get_num() * b.get_den();
  unsigned alpha = split_valuation(x, p);
  unsigned beta = split_valuation(y, p);
  if (p == 2) {
    int e = eps(x) * eps(y) + static_cast<int>(alpha) * omega(y) + static_cast<int>(beta) * omega(x);
    return e % 2 ? -1 : 1;
  }
  int s = 1;
  if ((alpha * beta) % 2 == 1 && eps(p) == 1) s = -s;
  if (beta % 2 == 1) s *= mpz_legendre(x.get_mpz_t(), p.get_mpz_t());
  if (alpha % 2 == 1) s *= mpz_legendre(y.get_mpz_t(), p.get_mpz_t());
  return s;
}

}  // namespace quatlat
