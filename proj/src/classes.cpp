#include "quatlat/classes.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "quatlat/arith.hpp"
#include "ring_closure.hpp"

namespace quatlat {

namespace {

void require_definite(const Algebra& alg) {
  if (alg.kind() != AlgebraKind::quaternion || !alg.is_definite())
    throw UnsupportedError("class sets are implemented for definite quaternion algebras only");
}

Element combine(const Lattice& l, std::span<const Integer> c) {
  RatVector rc(c.begin(), c.end());
  return mul_row(rc, l.basis());
}

// Right multiplication by the basis of O in O-coordinates.
std::vector<IntMatrix> right_actions(const Order& o) {
  const RatMatrix& b = o.lattice().basis();
  RatMatrix binv = inverse(b);
  std::vector<IntMatrix> out;
  for (std::size_t k = 0; k < b.rows(); ++k) {
    RatMatrix a = b * o.algebra()->right_matrix(o.lattice().basis_element(k)) * binv;
    IntMatrix ai(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) ai(i, j) = a(i, j).get_num();
    out.push_back(std::move(ai));
  }
  return out;
}

bool by_index(const Lattice& x, const Lattice& y) {
  Rational cx = x.covolume(), cy = y.covolume();
  if (cx != cy) return cx < cy;
  return x < y;
}

}  // namespace

GramForm nrd_gram(const Lattice& l) {
  const Algebra& alg = *l.algebra();
  require_definite(alg);
  const std::size_t n = l.dim();
  RatMatrix g(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u; v < n; ++v) {
      Rational t = alg.reduced_trace(alg.mul(l.basis_element(u), alg.conjugate(l.basis_element(v)))) / 2;
      g(u, v) = t;
      g(v, u) = t;
    }
  return GramForm(g);
}

UnitGroup unit_group(const Order& o) {
  const Algebra& alg = *o.algebra();
  GramForm g = nrd_gram(o);
  UnitGroup out{o, {}};
  for (const IntVector& c : enumerate_representations(g, 1)) out.elements.push_back(combine(o, c));
  std::set<Element> members(out.elements.begin(), out.elements.end());
  if (!members.count(alg.unit()) || !members.count(alg.scale(-1, alg.unit())))
    throw InternalError("unit group misses ±1");
  for (const Element& x : out.elements) {
    if (!members.count(alg.inverse(x))) throw InternalError("unit group is not closed under inverses");
    for (const Element& y : out.elements)
      if (!members.count(alg.mul(x, y))) throw InternalError("unit group is not closed under products");
  }
  return out;
}

std::optional<Element> right_equivalence_witness(const Lattice& i, const Lattice& j) {
  const Algebra& alg = *i.algebra();
  require_definite(alg);
  if (!(right_order(i) == right_order(j))) return std::nullopt;
  std::optional<Rational> s = rational_sqrt(generalized_index(j, i));
  if (!s) return std::nullopt;
  // α ∈ (J:I)_L with αI = J forces nrd(α) = 1/s. Scalars first.
  if (std::optional<Rational> t = rational_sqrt(1 / *s)) {
    if (scale(*t, i) == j) return alg.scalar(*t);
  }
  Lattice c = colon_left(j, i);
  for (const IntVector& x : enumerate_representations(nrd_gram(c), 1 / *s)) {
    Element alpha = combine(c, x);
    if (left_multiply(alpha, i) == j) return alpha;
  }
  return std::nullopt;
}

bool is_right_equivalent(const Lattice& i, const Lattice& j) {
  return right_equivalence_witness(i, j).has_value();
}

Integer enumeration_bound(const Order& o) {
  Rational det = determinant(nrd_gram(o).gram());
  Integer c = floor_sqrt(4 * det);
  return c < 1 ? Integer(1) : c;
}

std::vector<Lattice> right_ideals_within(const Order& o, const Integer& max_index,
                                         const Integer& max_prime, const Budget& budget) {
  const std::size_t n = o.lattice().dim();
  std::vector<IntMatrix> actions = right_actions(o);
  std::vector<long> primes;
  for (long p = 2; p <= max_prime && p <= max_index; ++p)
    if (prime_divisors(p).size() == 1 && prime_divisors(p)[0] == p) primes.push_back(p);

  std::set<std::vector<Integer>> seen;
  std::deque<IntMatrix> queue{IntMatrix::identity(n)};
  seen.insert(queue.front().data());
  std::vector<Lattice> out;
  while (!queue.empty()) {
    IntMatrix m = std::move(queue.front());
    queue.pop_front();
    Integer index = abs(determinant(m));
    out.push_back(Lattice(o.algebra(), to_rational(m) * o.lattice().basis()));
    for (long p : primes) {
      if (index * p > max_index) break;
      for (IntMatrix& sub : maximal_stable_sublattices(m, {}, actions, p, budget)) {
        if (abs(determinant(sub)) > max_index || seen.count(sub.data())) continue;
        seen.insert(sub.data());
        if (seen.size() > budget.max_nodes) throw ResourceError("ideal search exceeds the node budget");
        queue.push_back(std::move(sub));
      }
    }
  }
  std::sort(out.begin(), out.end(), by_index);
  return out;
}

std::vector<Lattice> invertible_right_equivalence_classes(const Order& o, const std::optional<Integer>& bound,
                                                          const Budget& budget) {
  require_definite(*o.algebra());
  Integer c = bound ? *bound : enumeration_bound(o);
  if (c < 1) throw DomainError("enumeration bound must be positive");
  // [O:I] = nrd(I)² for invertible I, so only primes up to √C occur.
  std::vector<Lattice> reps;
  for (const Lattice& i : right_ideals_within(o, c, floor_sqrt(c), budget)) {
    if (!(right_order(i) == o) || !is_invertible(i)) continue;
    if (std::none_of(reps.begin(), reps.end(), [&](const Lattice& r) { return is_right_equivalent(r, i); }))
      reps.push_back(i);
  }
  return reps;
}

ClassSet right_equivalence_classes(const Order& o, const std::optional<Order>& oprime, const Budget& budget) {
  require_definite(*o.algebra());
  WeakClassSet weak = weak_right_equivalence_classes(o, oprime, budget);
  ClassSet out{o, weak.representatives, {}};
  for (std::size_t w = 0; w < weak.representatives.size(); ++w) {
    const Lattice& j = weak.representatives[w];
    std::vector<Lattice> inv = invertible_right_equivalence_classes(left_order(j), std::nullopt, budget);
    for (std::size_t l = 0; l < inv.size(); ++l) {
      Lattice lj = product(inv[l], j);
      if (!(right_order(lj) == o)) throw InternalError("L·J has the wrong right order");
      out.classes.push_back(ClassEntry{lj, is_invertible(lj), w, l});
    }
  }
  std::sort(out.classes.begin(), out.classes.end(), [](const ClassEntry& x, const ClassEntry& y) {
    if (x.weak_index != y.weak_index) return x.weak_index < y.weak_index;
    return x.lattice < y.lattice;
  });
  for (std::size_t x = 0; x < out.classes.size(); ++x)
    for (std::size_t y = x + 1; y < out.classes.size(); ++y)
      if (is_right_equivalent(out.classes[x].lattice, out.classes[y].lattice))
        throw InternalError("class representatives are not pairwise inequivalent");
  return out;
}

std::vector<Order> overorders(const Order& o, const Budget& budget) {
  if (o.algebra()->kind() != AlgebraKind::quaternion)
    throw UnsupportedError("overorders are computed for quaternion algebras only");
  Lattice ceiling = trace_dual(o);
  Rational idx = generalized_index(o, ceiling);
  std::vector<Integer> primes = prime_divisors(idx.get_den());

  std::set<Lattice> seen{o.lattice()};
  std::deque<Lattice> queue{o.lattice()};
  while (!queue.empty()) {
    Lattice cur = std::move(queue.front());
    queue.pop_front();
    for (const Integer& p : primes)
      for (Lattice& next : detail::minimal_extensions(cur, ceiling, p.get_si(), budget.max_functionals)) {
        if (seen.count(next)) continue;
        seen.insert(next);
        if (seen.size() > budget.max_nodes) throw ResourceError("overorder search exceeds the node budget");
        queue.push_back(std::move(next));
      }
  }
  std::vector<Order> out;
  for (const Lattice& l : seen) out.emplace_back(l);
  return out;
}

}  // namespace quatlat
