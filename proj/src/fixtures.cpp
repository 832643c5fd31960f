#include "quatlat/fixtures.hpp"

#include <chrono>
#include <functional>

#include "fixture_data.hpp"
#include "quatlat/brandt.hpp"
#include "quatlat/monomial.hpp"

namespace quatlat {

namespace {

class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok) failed_.push_back(what);
  }
  FixtureResult result(std::string name) const {
    FixtureResult r{std::move(name), failed_.empty(), {}, 0};
    if (failed_.empty()) {
      r.detail = std::to_string(total_) + " checks";
      return r;
    }
    for (const std::string& f : failed_) r.detail += (r.detail.empty() ? "" : "; ") + f;
    return r;
  }

 private:
  std::size_t total_ = 0;
  std::vector<std::string> failed_;
};

FixtureResult timed(const std::function<FixtureResult()>& f) {
  auto start = std::chrono::steady_clock::now();
  FixtureResult r;
  try {
    r = f();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

FixtureResult check_m3_invertible_pair() {
  return timed([] {
    auto m3 = Algebra::matrix(3);
    Lattice i = monomial_lattice(m3, {{1, 1, 0}, {1, 1, 0}, {0, 0, 0}});
    Lattice j = monomial_lattice(m3, {{0, 0, 0}, {0, 0, 0}, {0, 0, 1}});
    Lattice orr = monomial_lattice(m3, {{0, 0, 0}, {0, 0, 0}, {1, 1, 0}});
    Lattice ol = monomial_lattice(m3, {{0, 0, 1}, {0, 0, 1}, {0, 0, 0}});
    Checks c;
    c.expect(right_order(i) == orr, "O_R(I)");
    c.expect(left_order(i) == ol, "O_L(I)");
    c.expect(product(i, j) == ol, "I·J");
    c.expect(product(j, i) == orr, "J·I");
    c.expect(is_invertible(i), "I invertible");
    c.expect(is_left_projective(i), "I left projective");
    c.expect(is_right_projective(i), "I right projective");
    c.expect(is_weakly_right_equivalent(i, orr), "I weakly equivalent to O_R(I)");
    return c.result("m3_invertible_pair");
  });
}

FixtureResult check_m3_left_invertible() {
  return timed([] {
    auto m3 = Algebra::matrix(3);
    Lattice i = monomial_lattice(m3, {{1, 1, 0}, {0, 0, 4}, {0, 0, 2}});
    Lattice inv = quasi_inverse(i);
    Lattice ol = monomial_lattice(m3, {{0, 1, 1}, {4, 0, 2}, {2, 0, 0}});
    Lattice orr = monomial_lattice(m3, {{0, 0, 4}, {0, 0, 4}, {1, 1, 0}});
    Checks c;
    c.expect(inv == monomial_lattice(m3, {{4, 0, 2}, {4, 0, 2}, {0, 1, 1}}), "I⁻¹");
    c.expect(left_order(i) == ol, "O_L(I)");
    c.expect(right_order(inv) == ol, "O_R(I⁻¹)");
    c.expect(right_order(i) == orr, "O_R(I)");
    c.expect(left_order(inv) == orr, "O_L(I⁻¹)");
    c.expect(product(inv, i) == orr, "I⁻¹·I");
    c.expect(product(i, inv) == monomial_lattice(m3, {{0, 1, 1}, {4, 0, 2}, {2, 0, 2}}), "I·I⁻¹");
    c.expect(is_left_projective(i), "left projective");
    c.expect(!is_right_projective(i), "not right projective");
    return c.result("m3_left_invertible");
  });
}

FixtureResult check_m4_left_projective() {
  return timed([] {
    auto m4 = Algebra::matrix(4);
    Lattice i = monomial_lattice(m4, {{3, 4, 0, 2}, {8, 4, 5, -10}, {7, -10, 4, 5}, {5, 0, 2, -8}});
    Lattice inv = quasi_inverse(i);
    Lattice orr = monomial_lattice(m4, {{0, 1, -3, -1}, {17, 0, 14, 15}, {3, 4, 0, 2}, {18, 14, 15, 0}});
    Lattice ol = monomial_lattice(m4, {{0, 12, 14, 10}, {5, 0, 14, 4}, {4, 15, 0, 13}, {2, 2, 10, 0}});
    Lattice iinv = monomial_lattice(m4, {{0, 12, 14, 10}, {5, 0, 14, 4}, {4, 15, 0, 13}, {2, 2, 10, 6}});
    Checks c;
    c.expect(inv == monomial_lattice(m4, {{-3, 9, 11, 7}, {14, 25, 10, 23}, {0, 12, 14, 10}, {15, 10, 24, 14}}),
             "I⁻¹");
    c.expect(product(inv, i) == orr, "I⁻¹·I");
    c.expect(right_order(i) == orr, "O_R(I)");
    c.expect(left_order(inv) == orr, "O_L(I⁻¹)");
    c.expect(left_order(i) == ol, "O_L(I)");
    c.expect(product(i, inv) == iinv, "I·I⁻¹");
    c.expect(!(left_order(i) == right_order(inv)), "O_L(I) ≠ O_R(I⁻¹)");
    c.expect(!(product(i, inv) == ol), "I·I⁻¹ ≠ O_L(I)");
    c.expect(is_left_projective(i), "left projective");
    c.expect(!is_right_projective(i), "not right projective");
    c.expect(!is_invertible(i), "not invertible");
    return c.result("m4_left_projective");
  });
}

FixtureResult check_definite_order() {
  return timed([] {
    auto alg = Algebra::quaternion(-1, -3);
    Order o(Lattice(alg, RatMatrix{{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}));
    Checks c;
    ClassSet cs = right_equivalence_classes(o);
    c.expect(cs.weak_representatives.size() == 2, "weak class count 2");
    for (const Lattice& j : cs.weak_representatives)
      c.expect(invertible_right_equivalence_classes(left_order(j)).size() == 4,
               "4 invertible classes of a left order");
    c.expect(cs.size() == 8, "class count 8");
    if (cs.size() != 8) return c.result("definite_order_2i2j2k");

    BrandtSeries bs = brandt_series(cs, 15);
    const auto& pb = detail::kBrandtPermutation;
    for (long n = 1; n <= 14; ++n) {
      RatMatrix t = brandt_matrix(bs, n);
      bool same = true;
      for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
          same = same && t(pb[i], pb[j]) == detail::kReferenceBrandt[n - 1][i][j];
      c.expect(same, "T(" + std::to_string(n) + ")");
    }
    const auto& pt = detail::kThetaPermutation;
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) {
        std::vector<Rational> th = theta_series(bs, pt[i], pt[j], 15);
        bool same = true;
        for (std::size_t k = 0; k < 16; ++k) same = same && th[k] == Rational(detail::kReferenceTheta[i * 8 + j][k]);
        c.expect(same, "theta(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
    return c.result("definite_order_2i2j2k");
  });
}

std::vector<FixtureResult> run_fixtures() {
  return {check_m3_invertible_pair(), check_m3_left_invertible(), check_m4_left_projective(),
          check_definite_order()};
}

}  // namespace quatlat
