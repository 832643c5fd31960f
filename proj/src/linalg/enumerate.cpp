#include <algorithm>

#include "quatlat/linalg.hpp"
#include "gram_schmidt.hpp"

namespace quatlat {

using detail::GramSchmidt;
using detail::gram_schmidt;
using detail::nearest;

std::vector<ShortVector> enumerate_short_vectors(const GramForm& form, const Rational& bound) {
  const std::size_t n = form.dimension();
  std::vector<ShortVector> out;
  if (bound < 0) return out;
  if (n == 0) {
    out.push_back({{}, 0});
    return out;
  }
  LllResult red = lll_reduce(form);
  GramSchmidt gs = gram_schmidt(red.gram.gram());

  // q(y) = Σ_i b_i (y_i - c_i)², c_i = -Σ_{j>i} mu(j, i) y_j.
  IntVector y(n);
  RatVector center(n), rem(n + 1);
  rem[n] = bound;

  auto fits = [&](std::size_t i, const Integer& v) {
    Rational d = Rational(v) - center[i];
    return gs.b[i] * d * d <= rem[i + 1];
  };
  auto set_center = [&](std::size_t i) {
    Rational c = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (y[j] != 0) c -= gs.mu(j, i) * y[j];
    center[i] = c;
  };

  // Recursive descent; each level walks the exact integer interval of fits().
  auto descend = [&](auto&& self, std::size_t i) -> void {
    set_center(i);
    Integer start = nearest(center[i]);
    if (!fits(i, start)) return;
    Integer lo = start, hi = start;
    while (fits(i, lo - 1)) lo -= 1;
    while (fits(i, hi + 1)) hi += 1;
    for (Integer v = lo; v <= hi; ++v) {
      y[i] = v;
      Rational d = Rational(v) - center[i];
      rem[i] = rem[i + 1] - gs.b[i] * d * d;
      if (i == 0) {
        IntVector x = mul_row(std::span<const Integer>(y), red.transform);
        out.push_back({std::move(x), bound - rem[0]});
      } else {
        self(self, i - 1);
      }
    }
    y[i] = 0;
  };
  descend(descend, n - 1);

  std::sort(out.begin(), out.end(),
            [](const ShortVector& a, const ShortVector& b) { return a.x < b.x; });
  return out;
}

std::vector<IntVector> enumerate_representations(const GramForm& form, const Rational& target) {
  std::vector<IntVector> out;
  for (auto& sv : enumerate_short_vectors(form, target))
    if (sv.value == target) out.push_back(std::move(sv.x));
  return out;
}

}  // namespace quatlat
