#pragma once

// Monomial lattices ⊕ p^{e_uv} Z E_uv in M_r(Q): the global stand-ins for
// lattices over a discrete valuation ring with uniformizer p.

#include <optional>
#include <vector>

#include "quatlat/lattice.hpp"

namespace quatlat {

using Exponents = std::vector<std::vector<int>>;

Lattice monomial_lattice(const AlgebraRef& mr, const Exponents& e, long p = 2);

/// Exponent matrix of a monomial lattice, or nullopt when the lattice is not
/// of that shape.
std::optional<Exponents> monomial_exponents(const Lattice& l, long p = 2);

}  // namespace quatlat
