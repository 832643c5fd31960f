#pragma once

#include <optional>
#include <vector>

#include "quatlat/lattice.hpp"
#include "quatlat/submodules.hpp"

namespace quatlat {

/// I⁻¹I = O_R(I).
bool is_left_projective(const Lattice& i);
/// II⁻¹ = O_L(I).
bool is_right_projective(const Lattice& i);
/// II⁻¹ = O_L(I), I⁻¹I = O_R(I), O_R(I) = O_L(I⁻¹) and O_R(I⁻¹) = O_L(I).
bool is_invertible(const Lattice& i);

/// I and J differ by left multiplication with an invertible lattice. With
/// C1 = (I:J)_L and C2 = (J:I)_L this holds exactly when C1C2 = O_L(C1),
/// C2C1 = O_R(C1), O_L(C1) = O_R(C2) and O_R(C1) = O_L(C2).
bool is_weakly_right_equivalent(const Lattice& i, const Lattice& j);

/// A maximal order containing O (quaternion algebras only). The result is
/// certified by its reduced discriminant matching the algebra discriminant.
Order maximal_order_above(const Order& o);

/// 𝔣 = (O : O')_R = {x : O'x ⊆ O} for O ⊆ O'.
Lattice conductor(const Order& o, const Order& oprime);

/// The finite right O-module G = O'/𝔣 in Smith coordinates: z = y·V where y
/// are O'-coordinates and U·F·V = diag(d) for the O'-coordinates F of 𝔣.
struct FiniteModule {
  Lattice order;     ///< O, acting on the right
  Lattice oprime;    ///< O'
  Lattice floor;     ///< 𝔣
  IntVector invariants;  ///< d_1 | d_2 | ... (unit factors included)
  IntMatrix to_oprime;   ///< V⁻¹: O'-coordinates of z are z·V⁻¹
  std::vector<IntMatrix> action;  ///< right action of each basis element of O on z

  /// |G| = ∏ d_k.
  Integer size() const;
  /// The lattice of algebra elements whose z-coordinates lie in the span of
  /// the rows of h (which must contain diag(d)).
  Lattice lift(const IntMatrix& h) const;
  /// A z-coordinate vector as an element of O'.
  Element element(std::span<const Integer> z) const;
};

FiniteModule quotient_module(const Order& o, const Order& oprime, const Lattice& floor);

/// A right sub-O-module H of G, as the preimage lattice in z-coordinates
/// together with generators reduced modulo the invariant factors.
struct Submodule {
  IntMatrix lattice;     ///< HNF rows, contains diag(d)
  IntMatrix generators;  ///< rows with entries in [0, d_k), nontrivial factors only
};

/// All sub-O-modules H of G with H·O' = G, found by descending through
/// maximal submodules and pruning unsaturated ones. Ordered by lattice key.
std::vector<Submodule> saturated_submodules(const FiniteModule& g, const Budget& budget = {});

struct WeakClassSet {
  Order order;
  Order oprime;
  Lattice conductor;
  std::vector<Lattice> representatives;
};

/// Representatives of the weak right equivalence classes of lattices with
/// right order O. O' defaults to a maximal order above O; a supplied O' must
/// contain O, and O^♯·O' must be weakly right equivalent to O'.
WeakClassSet weak_right_equivalence_classes(const Order& o,
                                            const std::optional<Order>& oprime = std::nullopt,
                                            const Budget& budget = {});

}  // namespace quatlat
