#pragma once

#include <optional>

#include "quatlat/lattice.hpp"

namespace quatlat::detail {

// Smallest order containing l (which must contain 1), or nullopt once the
// iteration leaves `ceiling`.
std::optional<Lattice> ring_closure(Lattice l, const Lattice& ceiling);

// Orders obtained by adjoining to o one element x with p·x ∈ o and closing,
// restricted to those inside `ceiling`. Sorted, duplicates removed.
std::vector<Lattice> minimal_extensions(const Lattice& o, const Lattice& ceiling, long p,
                                        std::uint64_t max_candidates);

}  // namespace quatlat::detail
