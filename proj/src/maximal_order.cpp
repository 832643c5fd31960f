#include <algorithm>
#include <cstdint>

#include "quatlat/arith.hpp"
#include "quatlat/ideals.hpp"
#include "ring_closure.hpp"

namespace quatlat {

namespace detail {

std::optional<Lattice> ring_closure(Lattice l, const Lattice& ceiling) {
  for (;;) {
    if (!is_sublattice(l, ceiling)) return std::nullopt;
    Lattice next = sum(l, product(l, l));
    if (next == l) return l;
    l = std::move(next);
  }
}

std::vector<Lattice> minimal_extensions(const Lattice& o, const Lattice& ceiling, long p,
                                        std::uint64_t max_candidates) {
  const std::size_t n = o.dim();
  Integer count;
  mpz_ui_pow_ui(count.get_mpz_t(), static_cast<unsigned long>(p), n);
  if (count - 1 > max_candidates)
    throw ResourceError("overorder search at p = " + std::to_string(p) + " exceeds the budget");

  std::vector<Lattice> out;
  std::vector<long> c(n);
  // Projective representatives: first nonzero coordinate equal to 1.
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::fill(c.begin(), c.end(), 0);
    c[lead] = 1;
    for (;;) {
      Element x = o.algebra()->zero();
      for (std::size_t k = 0; k < n; ++k)
        if (c[k] != 0) x = o.algebra()->add(x, o.algebra()->scale(ratio(c[k], p), o.basis_element(k)));
      if (o.algebra()->kind() != AlgebraKind::quaternion ||
          o.algebra()->reduced_trace(x).get_den() == 1) {
        RatMatrix gens = o.basis();
        gens.append_row(std::span<const Rational>(x));
        if (auto l = ring_closure(Lattice(o.algebra(), gens), ceiling)) out.push_back(*l);
      }
      std::size_t k = lead + 1;
      while (k < n && c[k] == p - 1) c[k++] = 0;
      if (k == n) break;
      ++c[k];
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

Order maximal_order_above(const Order& o) {
  const Algebra& alg = *o.algebra();
  if (alg.kind() != AlgebraKind::quaternion)
    throw UnsupportedError("maximal orders are computed for quaternion algebras only; supply O'");
  const Integer target = alg.discriminant();
  Order cur = o;
  for (;;) {
    Integer d = cur.reduced_discriminant();
    if (d == target) return cur;
    bool grown = false;
    for (const Integer& p : prime_divisors(d / target)) {
      Lattice ceiling = trace_dual(cur);
      auto ext = detail::minimal_extensions(cur, ceiling, p.get_si(), std::uint64_t{1} << 20);
      if (ext.empty()) continue;
      cur = Order(ext.front());
      grown = true;
      break;
    }
    if (!grown) throw InternalError("no larger order found although the discriminant is not minimal");
  }
}

}  // namespace quatlat
