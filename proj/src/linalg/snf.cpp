#include "quatlat/linalg.hpp"

namespace quatlat {

namespace {

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row a -= q·row b
void row_axpy(IntMatrix& m, std::size_t a, std::size_t b, const Integer& q) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(b, j) != 0) m(a, j) -= q * m(b, j);
}

// col a -= q·col b
void col_axpy(IntMatrix& m, std::size_t a, std::size_t b, const Integer& q) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, b) != 0) m(i, a) -= q * m(i, b);
}

Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SnfResult snf(const IntMatrix& m) {
  SnfResult out{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& s = out.s;
  const std::size_t rows = s.rows(), cols = s.cols();
  const std::size_t n = std::min(rows, cols);

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block goes to (t, t).
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (s(i, j) != 0 && (pi == rows || abs(s(i, j)) < abs(s(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) return out;
      s.swap_rows(t, pi);
      out.u.swap_rows(t, pi);
      swap_cols(s, t, pj);
      swap_cols(out.v, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        Integer q = trunc_div(s(i, t), s(t, t));
        row_axpy(s, i, t, q);
        row_axpy(out.u, i, t, q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        Integer q = trunc_div(s(t, j), s(t, t));
        col_axpy(s, j, t, q);
        col_axpy(out.v, j, t, q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold any offending row into row t and retry.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (s(i, j) % s(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      row_axpy(s, t, bad, -1);
      row_axpy(out.u, t, bad, -1);
    }
    if (s(t, t) < 0) {
      for (auto& x : s.row(t)) x = -x;
      for (auto& x : out.u.row(t)) x = -x;
    }
  }
  return out;
}

}  // namespace quatlat
