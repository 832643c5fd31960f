#include "quatlat/brandt.hpp"

#include "quatlat/arith.hpp"

namespace quatlat {

BrandtSeries brandt_series(const ClassSet& classes, long max_n) {
  if (max_n < 0) throw DomainError("precision must be nonnegative");
  const std::size_t r = classes.size();
  BrandtSeries bs{classes, {}, {}, max_n, {}};
  for (const ClassEntry& c : classes.classes) bs.unit_sizes.push_back(unit_group(left_order(c.lattice)).size());
  bs.colon_forms.resize(r);
  bs.counts.assign(r, std::vector<std::vector<Integer>>(r, std::vector<Integer>(max_n + 1)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const Lattice& li = classes.classes[i].lattice;
      const Lattice& lj = classes.classes[j].lattice;
      Rational index = generalized_index(lj, li);
      ColonForm cf{colon_left(lj, li), index, rational_sqrt(index)};
      auto& cnt = bs.counts[i][j];
      cnt[0] = 1;
      if (cf.scale && max_n > 0) {
        // nrd(α)·s = n  ⟺  nrd(α) = n/s
        for (const ShortVector& v : enumerate_short_vectors(nrd_gram(cf.colon), max_n / *cf.scale)) {
          Rational n = v.value * *cf.scale;
          if (n == 0) continue;
          if (n.get_den() == 1) ++cnt[n.get_num().get_si()];
        }
      }
      bs.colon_forms[i].push_back(std::move(cf));
    }
  return bs;
}

RatMatrix brandt_matrix(const BrandtSeries& bs, long n) {
  if (n < 0 || n > bs.max_n)
    throw DomainError("n = " + std::to_string(n) + " is outside the tabulated range 0.." + std::to_string(bs.max_n));
  const std::size_t r = bs.size();
  RatMatrix t(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) t(i, j) = ratio(bs.counts[i][j][n], bs.unit_sizes[i]);
  return t;
}

std::vector<Rational> theta_series(const BrandtSeries& bs, std::size_t i, std::size_t j, long prec) {
  if (i >= bs.size() || j >= bs.size()) throw DomainError("class index out of range");
  if (prec < 0 || prec > bs.max_n) throw DomainError("precision is outside the tabulated range");
  std::vector<Rational> out;
  for (long n = 0; n <= prec; ++n) out.push_back(ratio(bs.counts[i][j][n], bs.unit_sizes[i]));
  return out;
}

}  // namespace quatlat
