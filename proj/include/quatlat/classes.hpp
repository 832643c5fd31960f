#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "quatlat/ideals.hpp"

namespace quatlat {

/// Gram matrix of the reduced norm on the basis of l: nrd(c·B) = c·G·cᵀ.
/// Needs a definite quaternion algebra.
GramForm nrd_gram(const Lattice& l);

struct UnitGroup {
  Order order;
  std::vector<Element> elements;  ///< lexicographic in O-coordinates
  std::size_t size() const { return elements.size(); }
};

/// O^× = {x ∈ O : nrd(x) = 1}; closure under products and inverses is checked.
UnitGroup unit_group(const Order& o);

/// Some α with J = α·I, or nullopt. Requires a definite quaternion algebra.
std::optional<Element> right_equivalence_witness(const Lattice& i, const Lattice& j);
bool is_right_equivalent(const Lattice& i, const Lattice& j);

/// C = ⌊2·√det G_O⌋ (at least 1): every invertible right ideal class of O
/// has a representative I ⊆ O with [O:I] ≤ C.
Integer enumeration_bound(const Order& o);

/// All right O-ideals I ⊆ O with [O:I] ≤ max_index that are reached through
/// maximal steps at primes p ≤ max_prime, sorted by (index, lattice).
std::vector<Lattice> right_ideals_within(const Order& o, const Integer& max_index,
                                         const Integer& max_prime, const Budget& budget = {});

/// One representative per invertible right ideal class of O, each an ideal
/// I ⊆ O of minimal index in its class. `bound` defaults to enumeration_bound.
std::vector<Lattice> invertible_right_equivalence_classes(const Order& o,
                                                          const std::optional<Integer>& bound = std::nullopt,
                                                          const Budget& budget = {});

struct ClassEntry {
  Lattice lattice;
  bool invertible;
  std::size_t weak_index;        ///< position of J among the weak representatives
  std::size_t invertible_index;  ///< position of L among the classes of O_L(J)
};

struct ClassSet {
  Order order;
  std::vector<Lattice> weak_representatives;
  std::vector<ClassEntry> classes;  ///< sorted by (weak_index, lattice)
  std::size_t size() const { return classes.size(); }
};

/// Every lattice with right order O up to right equivalence, as the products
/// L·J of weak representatives J and invertible class representatives L of O_L(J).
ClassSet right_equivalence_classes(const Order& o, const std::optional<Order>& oprime = std::nullopt,
                                   const Budget& budget = {});

/// Every order between O and O^♯, sorted; always contains O.
std::vector<Order> overorders(const Order& o, const Budget& budget = {});

}  // namespace quatlat
