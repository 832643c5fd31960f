#include <optional>

#include "quatlat/linalg.hpp"

namespace quatlat {

namespace {

struct Xgcd {
  Integer g, s, t;  // g = s·a + t·b, g >= 0
};

Xgcd xgcd(const Integer& a, const Integer& b) {
  Xgcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// rows a, b of m replaced by (s·a + t·b, -(y/g)·a + (x/g)·b) where x = a[col],
// y = b[col]. The 2×2 transform has determinant one.
void gcd_combine(IntMatrix& m, std::size_t a, std::size_t b, std::size_t col, IntMatrix* u) {
  const Integer x = m(a, col);
  const Integer y = m(b, col);
  Xgcd e = xgcd(x, y);
  const Integer xg = x / e.g;
  const Integer yg = y / e.g;
  auto apply = [&](IntMatrix& mat) {
    for (std::size_t j = 0; j < mat.cols(); ++j) {
      Integer ra = mat(a, j), rb = mat(b, j);
      mat(a, j) = e.s * ra + e.t * rb;
      mat(b, j) = xg * rb - yg * ra;
    }
  };
  apply(m);
  if (u) apply(*u);
}

void sub_multiple(std::span<Integer> dst, std::span<const Integer> src, const Integer& q) {
  for (std::size_t j = 0; j < dst.size(); ++j)
    if (src[j] != 0) dst[j] -= q * src[j];
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
  HnfResult out{m, IntMatrix::identity(m.rows())};
  IntMatrix& h = out.h;
  std::size_t r = 0;
  for (std::size_t col = 0; col < h.cols() && r < h.rows(); ++col) {
    for (std::size_t i = r + 1; i < h.rows(); ++i)
      if (h(i, col) != 0) gcd_combine(h, r, i, col, &out.u);
    if (h(r, col) == 0) continue;
    if (h(r, col) < 0) {
      for (auto& x : h.row(r)) x = -x;
      for (auto& x : out.u.row(r)) x = -x;
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, col), h(r, col));
      if (q == 0) continue;
      sub_multiple(h.row(i), h.row(r), q);
      sub_multiple(out.u.row(i), out.u.row(r), q);
    }
    ++r;
  }
  return out;
}

IntMatrix hnf_rows(const IntMatrix& m) {
  const std::size_t c = m.cols();
  std::vector<std::optional<IntVector>> pivot(c);

  // Reduce the entries of row `v` above later pivots into [0, pivot).
  auto reduce_tail = [&](IntVector& v, std::size_t from) {
    for (std::size_t k = from; k < c; ++k) {
      if (!pivot[k] || v[k] == 0) continue;
      const IntVector& p = *pivot[k];
      Integer q = floor_div(v[k], p[k]);
      if (q != 0) sub_multiple(v, p, q);
    }
  };

  for (std::size_t i = 0; i < m.rows(); ++i) {
    IntVector v = m.row_vector(i);
    for (std::size_t col = 0; col < c; ++col) {
      if (v[col] == 0) continue;
      if (!pivot[col]) {
        if (v[col] < 0)
          for (auto& x : v) x = -x;
        reduce_tail(v, col + 1);
        pivot[col] = std::move(v);
        break;
      }
      IntVector& p = *pivot[col];
      Xgcd e = xgcd(p[col], v[col]);
      const Integer pg = p[col] / e.g;
      const Integer vg = v[col] / e.g;
      IntVector np(c), nv(c);
      for (std::size_t j = col; j < c; ++j) {
        np[j] = e.s * p[j] + e.t * v[j];
        nv[j] = pg * v[j] - vg * p[j];
      }
      reduce_tail(np, col + 1);
      p = std::move(np);
      v = std::move(nv);
      reduce_tail(v, col + 1);
    }
  }

  // Final back-reduction of entries above pivots.
  for (std::size_t col = 0; col < c; ++col) {
    if (!pivot[col]) continue;
    for (std::size_t above = 0; above < col; ++above) {
      if (!pivot[above]) continue;
      IntVector& r = *pivot[above];
      const IntVector& p = *pivot[col];
      Integer q = floor_div(r[col], p[col]);
      if (q != 0) sub_multiple(r, p, q);
    }
  }

  IntMatrix h;
  for (std::size_t col = 0; col < c; ++col)
    if (pivot[col]) h.append_row(*pivot[col]);
  if (h.rows() == 0) h = IntMatrix(0, c);
  return h;
}

}  // namespace quatlat
