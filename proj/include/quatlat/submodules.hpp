#pragma once

#include <cstdint>
#include <vector>

#include "quatlat/linalg.hpp"

namespace quatlat {

/// Limits for the enumeration routines. Exceeding one raises ResourceError.
struct Budget {
  /// Lattices visited by a breadth-first submodule search.
  std::uint64_t max_nodes = 200000;
  /// Nonzero functionals examined per quotient P/(pP + floor), i.e. p^k - 1.
  std::uint64_t max_functionals = std::uint64_t{1} << 20;
};

/// All maximal sublattices M with p·P + floor ⊆ M ⊊ P that are stable under
/// v ↦ v·A for each action matrix A. P (rows, full rank in Z^n) and floor
/// (rows, possibly empty) must themselves be stable, with floor ⊆ P. Results
/// are HNF bases in lexicographic order.
std::vector<IntMatrix> maximal_stable_sublattices(const IntMatrix& p_basis, const IntMatrix& floor,
                                                  const std::vector<IntMatrix>& actions,
                                                  long p, const Budget& budget = {});

}  // namespace quatlat
