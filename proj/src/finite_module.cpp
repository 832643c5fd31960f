#include <algorithm>
#include <deque>
#include <set>

#include "quatlat/arith.hpp"
#include "quatlat/ideals.hpp"

namespace quatlat {

namespace {

IntMatrix integral(const RatMatrix& m, const char* what) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw InternalError(what);
      out(i, j) = m(i, j).get_num();
    }
  return out;
}

}  // namespace

Integer FiniteModule::size() const {
  Integer s = 1;
  for (const Integer& d : invariants) s *= d;
  return s;
}

Lattice FiniteModule::lift(const IntMatrix& h) const {
  return Lattice(oprime.algebra(), to_rational(h * to_oprime) * oprime.basis());
}

Element FiniteModule::element(std::span<const Integer> z) const {
  IntVector y = mul_row(z, to_oprime);
  RatVector ry(y.begin(), y.end());
  return mul_row(ry, oprime.basis());
}

FiniteModule quotient_module(const Order& o, const Order& oprime, const Lattice& floor) {
  const Algebra& alg = *o.algebra();
  const std::size_t n = alg.dim();
  if (!is_sublattice(o, oprime) || !is_sublattice(floor, oprime))
    throw DomainError("quotient module needs O and the floor inside O'");
  if (!is_sublattice(product(floor, o), floor)) throw DomainError("floor is not a right O-module");
  const RatMatrix& bp = oprime.lattice().basis();
  RatMatrix bp_inv = inverse(bp);
  IntMatrix f = integral(floor.basis() * bp_inv, "floor is not integral over O'");
  SnfResult s = snf(f);

  FiniteModule g{o, oprime, floor, IntVector(n), integral(inverse(to_rational(s.v)), "non-unimodular transform"), {}};
  for (std::size_t k = 0; k < n; ++k) g.invariants[k] = s.s(k, k);
  RatMatrix v = to_rational(s.v), vinv = to_rational(g.to_oprime);
  for (std::size_t k = 0; k < n; ++k) {
    RatMatrix ay = bp * alg.right_matrix(o.lattice().basis_element(k)) * bp_inv;
    g.action.push_back(integral(vinv * ay * v, "O' is not stable under right multiplication by O"));
  }
  return g;
}

std::vector<Submodule> saturated_submodules(const FiniteModule& g, const Budget& budget) {
  const std::size_t n = g.invariants.size();
  IntMatrix floor(n, n);
  for (std::size_t k = 0; k < n; ++k) floor(k, k) = g.invariants[k];
  std::size_t first = 0;
  while (first < n && g.invariants[first] == 1) ++first;

  std::vector<long> primes;
  for (const Integer& p : prime_divisors(g.size())) {
    if (!p.fits_slong_p()) throw ResourceError("quotient has a prime factor that is too large");
    primes.push_back(p.get_si());
  }

  auto saturated = [&](const IntMatrix& h) {
    return product(g.lift(h), g.oprime) == g.oprime;
  };

  std::set<std::vector<Integer>> seen;
  std::vector<IntMatrix> found;
  std::deque<IntMatrix> queue{IntMatrix::identity(n)};
  seen.insert(queue.front().data());
  while (!queue.empty()) {
    IntMatrix h = std::move(queue.front());
    queue.pop_front();
    found.push_back(h);
    for (long p : primes)
      for (IntMatrix& m : maximal_stable_sublattices(h, floor, g.action, p, budget)) {
        if (seen.count(m.data())) continue;
        seen.insert(m.data());
        if (seen.size() > budget.max_nodes)
          throw ResourceError("submodule search exceeds the node budget");
        if (saturated(m)) queue.push_back(std::move(m));
      }
  }

  std::sort(found.begin(), found.end(),
            [](const IntMatrix& a, const IntMatrix& b) { return a.data() < b.data(); });
  std::vector<Submodule> out;
  for (const IntMatrix& h : found) {
    Submodule sub{h, IntMatrix(0, n - first)};
    for (std::size_t r = 0; r < n; ++r) {
      IntVector row(n - first);
      bool zero = true;
      for (std::size_t c = first; c < n; ++c) {
        Integer x;
        mpz_fdiv_r(x.get_mpz_t(), h(r, c).get_mpz_t(), g.invariants[c].get_mpz_t());
        row[c - first] = x;
        zero = zero && x == 0;
      }
      if (!zero) sub.generators.append_row(std::span<const Integer>(row));
    }
    out.push_back(std::move(sub));
  }
  return out;
}

}  // namespace quatlat
