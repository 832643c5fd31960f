#pragma once

// Seeded generators shared by the property tests.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "quatlat/linalg.hpp"

namespace quatlat::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, -bound, bound);
  return m;
}

/// Product of random elementary row operations, swaps and sign flips.
inline IntMatrix random_unimodular(Rng& rng, std::size_t n, int steps = 12) {
  IntMatrix u = IntMatrix::identity(n);
  if (n == 0) return u;
  for (int s = 0; s < steps; ++s) {
    std::size_t a = uniform(rng, 0, n - 1), b = uniform(rng, 0, n - 1);
    switch (uniform(rng, 0, 2)) {
      case 0:
        if (a != b) {
          Integer q = uniform(rng, -3, 3);
          for (std::size_t j = 0; j < n; ++j) u(a, j) += q * u(b, j);
        }
        break;
      case 1:
        u.swap_rows(a, b);
        break;
      default:
        for (auto& x : u.row(a)) x = -x;
    }
  }
  return u;
}

inline IntMatrix random_nonsingular(Rng& rng, std::size_t n, long bound) {
  for (;;) {
    IntMatrix m = random_int_matrix(rng, n, n, bound);
    if (determinant(m) != 0) return m;
  }
}

/// m·A ⊆ m (row lattice) for each action A.
inline bool stable(const IntMatrix& m, const std::vector<IntMatrix>& actions) {
  RatMatrix inv = inverse(to_rational(m));
  for (const IntMatrix& a : actions) {
    RatMatrix c = to_rational(m * a) * inv;
    for (const Rational& x : c.data())
      if (x.get_den() != 1) return false;
  }
  return true;
}

/// Row lattice of `small` inside row lattice of `big`.
inline bool contains_rows(const IntMatrix& big, const IntMatrix& small) {
  RatMatrix c = to_rational(small) * inverse(to_rational(big));
  for (const Rational& x : c.data())
    if (x.get_den() != 1) return false;
  return true;
}

/// Every upper triangular Hermite form whose k-th pivot is drawn from
/// next_pivots(previous pivots), with entries above each pivot reduced
/// modulo that pivot.
inline std::vector<IntMatrix> hermite_forms(std::size_t n,
                                            const std::function<IntVector(const IntVector&)>& next_pivots) {
  std::vector<IntMatrix> out;
  IntMatrix m(n, n);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) cells.push_back({i, j});
  std::function<void(std::size_t)> fill = [&](std::size_t c) {
    if (c == cells.size()) {
      out.push_back(m);
      return;
    }
    auto [i, j] = cells[c];
    for (Integer v = 0; v < m(j, j); ++v) {
      m(i, j) = v;
      fill(c + 1);
    }
    m(i, j) = 0;
  };
  IntVector d;
  std::function<void()> pivots = [&]() {
    if (d.size() == n) {
      for (std::size_t k = 0; k < n; ++k) m(k, k) = d[k];
      fill(0);
      return;
    }
    for (const Integer& h : next_pivots(d)) {
      d.push_back(h);
      pivots();
      d.pop_back();
    }
  };
  pivots();
  return out;
}

/// Hermite forms of every lattice between diag(d) and Z^n (plus some that
/// fail the containment and must be filtered by the caller).
inline std::vector<IntMatrix> hermite_forms_dividing(const IntVector& d) {
  return hermite_forms(d.size(), [&](const IntVector& partial) {
    IntVector out;
    const Integer& dk = d[partial.size()];
    for (Integer h = 1; h <= dk; ++h)
      if (dk % h == 0) out.push_back(h);
    return out;
  });
}

/// Hermite forms of every sublattice of Z^n with index at most max_index.
inline std::vector<IntMatrix> hermite_forms_up_to(std::size_t n, long max_index) {
  return hermite_forms(n, [=](const IntVector& partial) {
    Integer prod = 1;
    for (const Integer& x : partial) prod *= x;
    IntVector out;
    for (Integer h = 1; prod * h <= max_index; ++h) out.push_back(h);
    return out;
  });
}

}  // namespace quatlat::testing
