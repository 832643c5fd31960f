#include <sstream>

#include "quatlat/linalg.hpp"

namespace quatlat {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

RatVector mul_row(std::span<const Rational> v, const RatMatrix& m) {
  if (v.size() != m.rows()) throw DomainError("vector/matrix dimension mismatch");
  RatVector out(m.cols());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[k] * m(k, j);
  }
  return out;
}

IntVector mul_row(std::span<const Integer> v, const IntMatrix& m) {
  if (v.size() != m.rows()) throw DomainError("vector/matrix dimension mismatch");
  IntVector out(m.cols());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[k] * m(k, j);
  }
  return out;
}

Integer common_denominator(const RatMatrix& m) {
  Integer d = 1;
  for (const auto& x : m.data()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
  return d;
}

namespace {

template <typename T>
std::string matrix_string(const Matrix<T>& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace

std::string to_string(const IntMatrix& m) { return matrix_string(m); }
std::string to_string(const RatMatrix& m) { return matrix_string(m); }

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      a.swap_rows(p, c);
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t c = 0; c + 1 < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      a.swap_rows(p, c);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        Integer t = a(c, c) * a(i, j) - a(i, c) * a(c, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
      a(i, c) = 0;
    }
    prev = a(c, c);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, r);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw DomainError("matrix is singular");
    a.swap_rows(p, c);
    inv.swap_rows(p, c);
    Rational piv = a(c, c);
    if (piv != 1) {
      for (std::size_t j = 0; j < n; ++j) {
        a(c, j) /= piv;
        inv(c, j) /= piv;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (a(c, j) != 0) a(i, j) -= f * a(c, j);
        if (inv(c, j) != 0) inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

RatVector solve_row(const RatMatrix& m, std::span<const Rational> v) {
  return mul_row(v, inverse(m));
}

CanonicalBasis canonical_row_basis(const RatMatrix& m) {
  CanonicalBasis out;
  out.den = common_denominator(m);
  IntMatrix scaled(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& x = m(i, j);
      if (x == 0) continue;
      Integer t = out.den / x.get_den();
      scaled(i, j) = t * x.get_num();
    }
  out.h = hnf_rows(scaled);
  Integer g = out.den;
  for (const auto& x : out.h.data()) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g != 1) {
    out.den /= g;
    IntMatrix reduced(out.h.rows(), out.h.cols());
    for (std::size_t i = 0; i < out.h.rows(); ++i)
      for (std::size_t j = 0; j < out.h.cols(); ++j) reduced(i, j) = out.h(i, j) / g;
    out.h = std::move(reduced);
  }
  return out;
}

RatMatrix integral_preimage(const RatMatrix& m) {
  // {v : v·m ∈ Z^c} is the dual, under the standard pairing, of the Z-span of
  // the columns of m inside Q^r.
  const std::size_t r = m.rows();
  CanonicalBasis cols = canonical_row_basis(m.transpose());
  if (cols.h.rows() != r) throw DomainError("integral_preimage: matrix has deficient row rank");
  RatMatrix c(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) c(i, j) = ratio(cols.h(i, j), cols.den);
  RatMatrix dual = inverse(c).transpose();
  CanonicalBasis canon = canonical_row_basis(dual);
  RatMatrix out(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) out(i, j) = ratio(canon.h(i, j), canon.den);
  return out;
}

}  // namespace quatlat
