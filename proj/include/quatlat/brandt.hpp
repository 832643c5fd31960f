#pragma once

#include <optional>
#include <vector>

#include "quatlat/classes.hpp"

namespace quatlat {

struct ColonForm {
  Lattice colon;                  ///< (I_j : I_i)_L
  Rational index;                 ///< [I_j : I_i]
  std::optional<Rational> scale;  ///< s with s² = index, when index is a square
};

/// Representation counts of the colon lattices between all pairs of classes,
/// tabulated for n = 0..max_n.
struct BrandtSeries {
  ClassSet classes;
  std::vector<std::vector<ColonForm>> colon_forms;  ///< [i][j]
  std::vector<std::size_t> unit_sizes;              ///< #O_L(I_i)^×
  long max_n = 0;
  /// counts[i][j][n] = #{α ∈ (I_j:I_i)_L : nrd(α)·s_ij = n}, n ≤ max_n
  std::vector<std::vector<std::vector<Integer>>> counts;

  std::size_t size() const { return unit_sizes.size(); }
};

BrandtSeries brandt_series(const ClassSet& classes, long max_n);

/// T(n)_ij = counts[i][j][n] / #O_L(I_i)^× for 0 ≤ n ≤ max_n. T(0) counts
/// only α = 0, so every entry of row i is 1/#O_L(I_i)^×.
RatMatrix brandt_matrix(const BrandtSeries& bs, long n);

/// [c_0, ..., c_prec] with c_n = T(n)_ij, c_0 = 1/#O_L(I_i)^×.
std::vector<Rational> theta_series(const BrandtSeries& bs, std::size_t i, std::size_t j, long prec);

}  // namespace quatlat
