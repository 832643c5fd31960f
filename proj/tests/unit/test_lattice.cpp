#include <doctest.h>

#include "properties.hpp"
#include "quatlat/lattice.hpp"
#include "quatlat/monomial.hpp"

using namespace quatlat;
using namespace quatlat::testing;

namespace {

// Exponent calculus for monomial lattices ⊕ 2^e_uv Z E_uv, written out
// directly from matrix multiplication of elementary matrices.
Exponents mono_product(const Exponents& e, const Exponents& f) {
  const std::size_t r = e.size();
  Exponents out(r, std::vector<int>(r));
  for (std::size_t u = 0; u < r; ++u)
    for (std::size_t t = 0; t < r; ++t) {
      int best = e[u][0] + f[0][t];
      for (std::size_t v = 1; v < r; ++v) best = std::min(best, e[u][v] + f[v][t]);
      out[u][t] = best;
    }
  return out;
}

// {x : xJ ⊆ I}
Exponents mono_colon_left(const Exponents& e, const Exponents& f) {
  const std::size_t r = e.size();
  Exponents out(r, std::vector<int>(r));
  for (std::size_t u = 0; u < r; ++u)
    for (std::size_t v = 0; v < r; ++v) {
      int best = e[u][0] - f[v][0];
      for (std::size_t t = 1; t < r; ++t) best = std::max(best, e[u][t] - f[v][t]);
      out[u][v] = best;
    }
  return out;
}

// {x : Jx ⊆ I}
Exponents mono_colon_right(const Exponents& e, const Exponents& f) {
  const std::size_t r = e.size();
  Exponents out(r, std::vector<int>(r));
  for (std::size_t u = 0; u < r; ++u)
    for (std::size_t v = 0; v < r; ++v) {
      int best = e[0][v] - f[0][u];
      for (std::size_t t = 1; t < r; ++t) best = std::max(best, e[t][v] - f[t][u]);
      out[u][v] = best;
    }
  return out;
}

Exponents random_exponents(Rng& rng, std::size_t r) {
  Exponents e(r, std::vector<int>(r));
  for (auto& row : e)
    for (auto& x : row) x = static_cast<int>(uniform(rng, -2, 3));
  return e;
}

}  // namespace

TEST_CASE("canonical form and membership") {
  auto q = Algebra::quaternion(-1, -1);
  Lattice a(q, RatMatrix{{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {1, 1, 1, 1}});
  Lattice b(q, RatMatrix{{1, 1, 1, 1}, {1, -1, 1, 1}, {1, 1, -1, 1}, {1, 1, 1, -1}});
  CHECK(a == b);
  CHECK(a.key() == b.key());
  CHECK(a.contains(Element{1, 1, 1, 1}));
  CHECK_FALSE(a.contains(Element{1, 0, 0, 0}));
  CHECK(a.covolume() == 8);
  Lattice half(q, RatMatrix{{ratio(1, 2), 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(half.den() == 2);
  CHECK(half.hnf() == IntMatrix{{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}});
  CHECK_THROWS_AS(Lattice(q, RatMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}), DomainError);
}

TEST_CASE("standard lattice operations") {
  auto q = Algebra::quaternion(-1, -1);
  Lattice o = Lattice::standard(q);
  Lattice two = scale(2, o);
  CHECK(generalized_index(o, two) == 16);
  CHECK(generalized_index(two, o) == ratio(1, 16));
  CHECK(sum(o, two) == o);
  CHECK(intersect(o, two) == two);
  CHECK(product(o, o) == o);
  CHECK(colon_left(two, o) == two);
  CHECK(colon_right(o, two) == scale(ratio(1, 2), o));
  CHECK(left_order(two).lattice() == o);
  CHECK(Order(o).reduced_discriminant() == 4);
  CHECK_FALSE(Order(o).is_maximal());
  // trd(x·y) = 2·Σ ±x_k y_k on the Lipschitz basis
  CHECK(trace_dual(o) == scale(ratio(1, 2), o));
  Element alpha{1, 1, 0, 0};
  CHECK(generalized_index(o, left_multiply(alpha, o)) == 4);
}

TEST_CASE("order axioms") {
  auto q = Algebra::quaternion(-1, -1);
  CHECK_THROWS_WITH_AS(Order(scale(2, Lattice::standard(q))), "not an order: missing unit", DomainError);
  Lattice half_i(q, RatMatrix{{1, 0, 0, 0}, {0, ratio(1, 2), 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK_THROWS_WITH_AS(Order{half_i}, "not an order: not closed under multiplication", DomainError);
  auto m3 = Algebra::matrix(3);
  CHECK(Order(Lattice::standard(m3)).lattice() == Lattice::standard(m3));
}

TEST_CASE("monomial lattices follow the exponent calculus") {
  Rng rng(101);
  for (std::size_t r : {2u, 3u}) {
    auto m = Algebra::matrix(r);
    for (int c = 0; c < 60; ++c) {
      Exponents e = random_exponents(rng, r), f = random_exponents(rng, r);
      Lattice i = monomial_lattice(m, e), j = monomial_lattice(m, f);
      CHECK(monomial_exponents(i) == e);
      CHECK(product(i, j) == monomial_lattice(m, mono_product(e, f)));
      CHECK(colon_left(i, j) == monomial_lattice(m, mono_colon_left(e, f)));
      CHECK(colon_right(i, j) == monomial_lattice(m, mono_colon_right(e, f)));
      Exponents dual(r, std::vector<int>(r));
      for (std::size_t u = 0; u < r; ++u)
        for (std::size_t v = 0; v < r; ++v) dual[v][u] = -e[u][v];
      CHECK(trace_dual(i) == monomial_lattice(m, dual));
      int se = 0, sf = 0;
      for (std::size_t u = 0; u < r; ++u)
        for (std::size_t v = 0; v < r; ++v) se += e[u][v], sf += f[u][v];
      Rational idx = sf >= se ? Rational(Integer(1) << (sf - se)) : ratio(1, Integer(1) << (se - sf));
      CHECK(generalized_index(i, j) == idx);
    }
  }
}

TEST_CASE("invertible pair in M3") {
  auto m3 = Algebra::matrix(3);
  Lattice i = monomial_lattice(m3, {{1, 1, 0}, {1, 1, 0}, {0, 0, 0}});
  Lattice j = monomial_lattice(m3, {{0, 0, 0}, {0, 0, 0}, {0, 0, 1}});
  Lattice right_of_i = monomial_lattice(m3, {{0, 0, 0}, {0, 0, 0}, {1, 1, 0}});
  Lattice left_of_i = monomial_lattice(m3, {{0, 0, 1}, {0, 0, 1}, {0, 0, 0}});
  CHECK(right_order(i).lattice() == right_of_i);
  CHECK(left_order(j).lattice() == right_of_i);
  CHECK(left_order(i).lattice() == left_of_i);
  CHECK(right_order(j).lattice() == left_of_i);
  CHECK(product(i, j) == left_of_i);
  CHECK(product(j, i) == right_of_i);
  CHECK(quasi_inverse(i) == j);
}

TEST_CASE("left invertible lattice in M3") {
  auto m3 = Algebra::matrix(3);
  Lattice i = monomial_lattice(m3, {{1, 1, 0}, {0, 0, 4}, {0, 0, 2}});
  Lattice inv = quasi_inverse(i);
  CHECK(inv == monomial_lattice(m3, {{4, 0, 2}, {4, 0, 2}, {0, 1, 1}}));
  Lattice ol = monomial_lattice(m3, {{0, 1, 1}, {4, 0, 2}, {2, 0, 0}});
  Lattice orr = monomial_lattice(m3, {{0, 0, 4}, {0, 0, 4}, {1, 1, 0}});
  CHECK(left_order(i).lattice() == ol);
  CHECK(right_order(inv).lattice() == ol);
  CHECK(right_order(i).lattice() == orr);
  CHECK(left_order(inv).lattice() == orr);
  CHECK(product(inv, i) == orr);
  CHECK(product(i, inv) == monomial_lattice(m3, {{0, 1, 1}, {4, 0, 2}, {2, 0, 2}}));
}

TEST_CASE("left projective lattice in M4") {
  auto m4 = Algebra::matrix(4);
  Lattice i = monomial_lattice(m4, {{3, 4, 0, 2}, {8, 4, 5, -10}, {7, -10, 4, 5}, {5, 0, 2, -8}});
  Lattice inv = quasi_inverse(i);
  CHECK(inv == monomial_lattice(m4, {{-3, 9, 11, 7}, {14, 25, 10, 23}, {0, 12, 14, 10}, {15, 10, 24, 14}}));
  Lattice orr = monomial_lattice(m4, {{0, 1, -3, -1}, {17, 0, 14, 15}, {3, 4, 0, 2}, {18, 14, 15, 0}});
  Lattice ol = monomial_lattice(m4, {{0, 12, 14, 10}, {5, 0, 14, 4}, {4, 15, 0, 13}, {2, 2, 10, 0}});
  CHECK(product(inv, i) == orr);
  CHECK(right_order(i).lattice() == orr);
  CHECK(left_order(inv).lattice() == orr);
  CHECK(left_order(i).lattice() == ol);
  CHECK_FALSE(right_order(inv).lattice() == ol);
  CHECK(product(i, inv) == monomial_lattice(m4, {{0, 12, 14, 10}, {5, 0, 14, 4}, {4, 15, 0, 13}, {2, 2, 10, 6}}));
}

TEST_CASE("lattice laws on random samples") {
  std::vector<Law> laws = lattice_laws();
  std::vector<int> failures = run_laws(laws, 24, 7);
  for (std::size_t l = 0; l < laws.size(); ++l) {
    INFO(laws[l].name);
    CHECK(failures[l] == 0);
  }
}
