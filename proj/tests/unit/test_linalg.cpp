#include <doctest.h>

#include <algorithm>
#include <functional>

#include "quatlat/linalg.hpp"
#include "kernel_oracles.hpp"
#include "support.hpp"

using namespace quatlat;
using namespace quatlat::testing;

namespace {

// gcd of all k×k minors, by expanding every choice of rows and columns.
Integer determinantal_divisor(const IntMatrix& m, std::size_t k) {
  Integer g = 0;
  std::vector<std::size_t> rows(k), cols(k);
  std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&, std::size_t,
                     const std::function<void()>&)>
      choose = [&](std::size_t start, std::size_t depth, std::vector<std::size_t>& pick,
                   std::size_t limit, const std::function<void()>& done) {
        if (depth == pick.size()) return done();
        for (std::size_t x = start; x < limit; ++x) {
          pick[depth] = x;
          choose(x + 1, depth + 1, pick, limit, done);
        }
      };
  choose(0, 0, rows, m.rows(), [&] {
    choose(0, 0, cols, m.cols(), [&] {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
      Integer d = determinant(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    });
  });
  return g;
}

}  // namespace

TEST_CASE("hnf examples") {
  CHECK(hnf(IntMatrix::identity(3)).h == IntMatrix::identity(3));
  IntMatrix m{{2, 4}, {6, 8}};
  HnfResult r = hnf(m);
  CHECK(r.h == IntMatrix{{2, 0}, {0, 4}});
  CHECK(r.u * m == r.h);
  CHECK(abs(determinant(r.u)) == 1);
  CHECK(hnf(IntMatrix{{0, 0}, {0, 0}}).h == IntMatrix{{0, 0}, {0, 0}});
  CHECK(hnf_rows(IntMatrix{{0, 0}, {0, 0}}).rows() == 0);
}

TEST_CASE("hnf of rank-deficient and wide input") {
  IntMatrix m{{1, 2, 3}, {2, 4, 6}, {0, 0, 5}};
  HnfResult r = hnf(m);
  CHECK(is_hnf(r.h));
  CHECK(r.h == IntMatrix{{1, 2, 3}, {0, 0, 5}, {0, 0, 0}});
  CHECK(hnf_rows(m) == IntMatrix{{1, 2, 3}, {0, 0, 5}});
}

TEST_CASE("hnf canonical under unimodular premultiplication") {
  Rng rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = uniform(rng, 1, 6), cols = uniform(rng, 1, 5);
    IntMatrix m = random_int_matrix(rng, rows, cols, 9);
    HnfResult a = hnf(m);
    IntMatrix u = random_unimodular(rng, rows);
    HnfResult b = hnf(u * m);
    REQUIRE(is_hnf(a.h));
    CHECK(a.h == b.h);
    CHECK(a.u * m == a.h);
    CHECK(abs(determinant(a.u)) == 1);
    CHECK(hnf_rows(m) == nonzero_rows(a.h));
    CHECK(hnf(a.h).h == a.h);
    if (rows == cols) CHECK(abs(determinant(m)) == abs(determinant(a.h)));
  }
}

TEST_CASE("snf examples") {
  IntMatrix d{{2, 0}, {0, 4}};
  CHECK(snf(d).s == d);
  CHECK(snf(IntMatrix::identity(3)).s == IntMatrix::identity(3));
  IntMatrix m{{2, 0}, {0, 3}};
  SnfResult r = snf(m);
  CHECK(r.s == IntMatrix{{1, 0}, {0, 6}});
  CHECK(r.u * m * r.v == r.s);
}

TEST_CASE("snf matches determinantal divisors") {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t rows = uniform(rng, 1, 4), cols = uniform(rng, 1, 4);
    IntMatrix m = random_int_matrix(rng, rows, cols, 12);
    SnfResult r = snf(m);
    REQUIRE(r.u * m * r.v == r.s);
    CHECK(abs(determinant(r.u)) == 1);
    CHECK(abs(determinant(r.v)) == 1);
    const std::size_t n = std::min(rows, cols);
    Integer running = 1;
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < cols; ++j)
        if (j != k) CHECK(r.s(k, j) == 0);
      CHECK(r.s(k, k) >= 0);
      if (k > 0 && r.s(k - 1, k - 1) != 0) CHECK(r.s(k, k) % r.s(k - 1, k - 1) == 0);
      running *= r.s(k, k);
      Integer dk = determinantal_divisor(m, k + 1);
      CHECK(running == dk);
    }
    if (rows == cols) CHECK(running == abs(determinant(m)));
  }
}

TEST_CASE("integral preimage examples") {
  CHECK(integral_preimage(RatMatrix::identity(3)) == RatMatrix::identity(3));
  CHECK(integral_preimage(RatMatrix{{Rational(1, 2)}}) == RatMatrix{{Rational(2)}});
  RatMatrix m{{Rational(1, 3), 0}, {0, 1}};
  RatMatrix basis = integral_preimage(m);
  CHECK(basis == RatMatrix{{3, 0}, {0, 1}});

  // Brute force over numerators in (1/6)Z: membership must agree.
  RatMatrix inv = inverse(basis);
  for (long a = -12; a <= 12; ++a)
    for (long b = -12; b <= 12; ++b) {
      RatVector v{Rational(a, 6), Rational(b, 6)};
      RatVector image = mul_row(v, m);
      bool integral = std::all_of(image.begin(), image.end(),
                                  [](const Rational& q) { return q.get_den() == 1; });
      RatVector coords = mul_row(v, inv);
      bool member = std::all_of(coords.begin(), coords.end(),
                                [](const Rational& q) { return q.get_den() == 1; });
      CHECK(integral == member);
    }
  CHECK_THROWS_AS(integral_preimage(RatMatrix{{1, 2}, {2, 4}}), DomainError);
}

TEST_CASE("integral preimage round trip") {
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t r = uniform(rng, 1, 4), c = uniform(rng, r, 6);
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = ratio(uniform(rng, -6, 6), uniform(rng, 1, 5));
    if (rank(m) != r) continue;
    RatMatrix basis = integral_preimage(m);
    RatMatrix image = basis * m;
    for (const Rational& q : image.data()) CHECK(q.get_den() == 1);
    if (r == c) {
      // The preimage of Z^r under an invertible m is Z^r·m⁻¹.
      CHECK(abs(determinant(basis)) == abs(1 / determinant(m)));
    }
  }
}

TEST_CASE("lll examples") {
  LllResult id = lll_reduce(GramForm(RatMatrix::identity(3)));
  CHECK(id.gram.gram() == RatMatrix::identity(3));
  CHECK(id.transform == IntMatrix::identity(3));

  GramForm g(RatMatrix{{4, 2}, {2, 2}});
  // Brute-force minimum over |coords| <= 3.
  Rational best = -1;
  for (long x = -3; x <= 3; ++x)
    for (long y = -3; y <= 3; ++y) {
      if (x == 0 && y == 0) continue;
      Rational q = g.evaluate(IntVector{x, y});
      if (best < 0 || q < best) best = q;
    }
  CHECK(best == 2);
  LllResult r = lll_reduce(g);
  CHECK(r.gram.gram()(0, 0) == best);
  CHECK(is_lll_reduced(r.gram));
  RatMatrix t = to_rational(r.transform);
  CHECK(t * g.gram() * t.transpose() == r.gram.gram());

  GramForm already(RatMatrix{{1, 0}, {0, 5}});
  CHECK(lll_reduce(already).gram.gram() == already.gram());
  CHECK_THROWS_AS(lll_reduce(GramForm(RatMatrix{{1, 2}, {2, 1}})), DomainError);
  CHECK_THROWS_AS(GramForm(RatMatrix{{1, 2}, {0, 1}}), DomainError);
}

TEST_CASE("lll output is reduced and unimodular") {
  Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = uniform(rng, 1, 5);
    IntMatrix a = random_nonsingular(rng, n, 8);
    RatMatrix g = to_rational(a * a.transpose());
    LllResult r = lll_reduce(GramForm(g));
    CHECK(is_lll_reduced(r.gram));
    CHECK(abs(determinant(r.transform)) == 1);
    RatMatrix t = to_rational(r.transform);
    CHECK(t * g * t.transpose() == r.gram.gram());
  }
}

TEST_CASE("enumerate representations examples") {
  GramForm id(RatMatrix::identity(4));
  auto ones = enumerate_representations(id, 1);
  CHECK(ones.size() == 8);
  CHECK(ones == box_search(id, 1));
  auto fours = enumerate_representations(id, 4);
  CHECK(fours.size() == 24);
  std::size_t axis = std::count_if(fours.begin(), fours.end(), [](const IntVector& x) {
    return std::count(x.begin(), x.end(), Integer(0)) == 3;
  });
  CHECK(axis == 8);
  CHECK(fours == box_search(id, 4));
  auto zero = enumerate_representations(GramForm(RatMatrix{{2, 1}, {1, 3}}), 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == IntVector{0, 0});
  CHECK(enumerate_short_vectors(GramForm(RatMatrix::identity(2)), 0).size() == 1);
}

TEST_CASE("enumeration agrees with exhaustive box search") {
  Rng rng(1234);
  int forms = 0;
  while (forms < 50) {
    std::size_t n = uniform(rng, 1, 4);
    IntMatrix a = random_nonsingular(rng, n, 3);
    RatMatrix g = to_rational(a * a.transpose());
    if (uniform(rng, 0, 1)) {
      // rational forms too
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) /= 2;
    }
    GramForm reduced = lll_reduce(GramForm(g)).gram;
    ++forms;
    for (long target = 0; target <= 20; ++target) {
      Rational t(target);
      CHECK(enumerate_representations(reduced, t) == box_search(reduced, t));
    }
    Rational half(7, 2);
    CHECK(enumerate_representations(reduced, half) == box_search(reduced, half));
  }
}

TEST_CASE("short vectors are sorted and carry their values") {
  GramForm g(RatMatrix{{2, 1, 0}, {1, 2, 1}, {0, 1, 3}});
  auto sv = enumerate_short_vectors(g, 6);
  CHECK(std::is_sorted(sv.begin(), sv.end(),
                       [](const ShortVector& a, const ShortVector& b) { return a.x < b.x; }));
  std::size_t total = 0;
  for (long t = 0; t <= 6; ++t) total += box_search(g, t).size();
  CHECK(sv.size() == total);
  for (const auto& v : sv) CHECK(g.evaluate(v.x) == v.value);
}
