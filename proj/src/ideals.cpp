#include "quatlat/ideals.hpp"

#include <algorithm>

namespace quatlat {

bool is_left_projective(const Lattice& i) {
  return product(quasi_inverse(i), i) == right_order(i).lattice();
}

bool is_right_projective(const Lattice& i) {
  return product(i, quasi_inverse(i)) == left_order(i).lattice();
}

bool is_invertible(const Lattice& i) {
  Lattice inv = quasi_inverse(i);
  Order ol = left_order(i), orr = right_order(i);
  return product(i, inv) == ol.lattice() && product(inv, i) == orr.lattice() &&
         orr == left_order(inv) && right_order(inv) == ol;
}

bool is_weakly_right_equivalent(const Lattice& i, const Lattice& j) {
  Lattice c1 = colon_left(i, j), c2 = colon_left(j, i);
  Order l1 = left_order(c1), r1 = right_order(c1);
  return product(c1, c2) == l1.lattice() && product(c2, c1) == r1.lattice() &&
         l1 == right_order(c2) && r1 == left_order(c2);
}

Lattice conductor(const Order& o, const Order& oprime) {
  if (!is_sublattice(o, oprime)) throw DomainError("conductor needs O ⊆ O'");
  Lattice f = colon_right(o, oprime);
  if (!is_sublattice(f, o) || !is_sublattice(oprime, left_order(f)))
    throw InternalError("conductor fails its containment checks");
  return f;
}

WeakClassSet weak_right_equivalence_classes(const Order& o, const std::optional<Order>& oprime,
                                            const Budget& budget) {
  const Algebra& alg = *o.algebra();
  if (alg.kind() == AlgebraKind::generic)
    throw UnsupportedError("weak classes need an algebra with a standard involution");
  Order big = oprime ? *oprime : maximal_order_above(o);
  if (!is_sublattice(o, big)) throw DomainError("O' must contain O");
  if (oprime && !is_weakly_right_equivalent(product(trace_dual(o), big), big))
    throw DomainError("O^#·O' is not weakly right equivalent to O'");

  Lattice f = conductor(o, big);
  FiniteModule g = quotient_module(o, big, f);
  std::vector<Lattice> reps;
  for (const Submodule& h : saturated_submodules(g, budget)) {
    // I = (lifts)·O + 𝔣
    RatMatrix gens = f.basis();
    for (std::size_t r = 0; r < h.generators.rows(); ++r) {
      IntVector z(g.invariants.size());
      std::size_t off = z.size() - h.generators.cols();
      for (std::size_t c = 0; c < h.generators.cols(); ++c) z[off + c] = h.generators(r, c);
      gens.append_row(std::span<const Rational>(g.element(z)));
    }
    Lattice i = product(Lattice(o.algebra(), gens), o);
    if (!(i == g.lift(h.lattice))) throw InternalError("lifted ideal depends on the lift");
    if (!(right_order(i) == o)) continue;
    bool fresh = true;
    for (const Lattice& r : reps)
      if (is_weakly_right_equivalent(i, r)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(i);
  }
  std::sort(reps.begin(), reps.end());
  return WeakClassSet{o, big, f, std::move(reps)};
}

}  // namespace quatlat
