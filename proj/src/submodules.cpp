#include "quatlat/submodules.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace quatlat {

namespace {

using Row = std::vector<std::int64_t>;

std::int64_t mod(const Integer& x, long p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_si();
}

std::int64_t inv_mod(std::int64_t a, long p) {
  // Fermat: a^(p-2)
  std::int64_t r = 1, b = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// Row-reduced echelon basis over F_p, built incrementally.
class Echelon {
 public:
  Echelon(std::size_t n, long p) : n_(n), p_(p) {}

  // Reduces v against the basis; returns true and stores v if independent.
  bool insert(Row v) {
    reduce(v);
    std::size_t piv = 0;
    while (piv < n_ && v[piv] == 0) ++piv;
    if (piv == n_) return false;
    std::int64_t s = inv_mod(v[piv], p_);
    for (auto& x : v) x = x * s % p_;
    for (auto& entry : rows_) {
      Row& r = entry.second;
      if (r[piv] == 0) continue;
      std::int64_t f = r[piv];
      for (std::size_t j = 0; j < n_; ++j) r[j] = ((r[j] - f * v[j]) % p_ + p_) % p_;
    }
    rows_.emplace(piv, std::move(v));
    return true;
  }

  void reduce(Row& v) const {
    for (const auto& [piv, r] : rows_) {
      if (v[piv] == 0) continue;
      std::int64_t f = v[piv];
      for (std::size_t j = 0; j < n_; ++j) v[j] = ((v[j] - f * r[j]) % p_ + p_) % p_;
    }
  }

  bool contains(Row v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
  }

  std::size_t rank() const { return rows_.size(); }
  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> out;
    for (const auto& [piv, r] : rows_) out.push_back(piv);
    return out;
  }
  std::vector<Row> rows() const {
    std::vector<Row> out;
    for (const auto& [piv, r] : rows_) out.push_back(r);
    return out;
  }

 private:
  std::size_t n_;
  long p_;
  std::map<std::size_t, Row> rows_;
};

// Column vector action f ↦ A·f for a k×k matrix A.
Row apply_column(const std::vector<Row>& a, const Row& f, long p) {
  Row out(f.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < f.size(); ++j) s = (s + a[i][j] * f[j]) % p;
    out[i] = s;
  }
  return out;
}

}  // namespace

std::vector<IntMatrix> maximal_stable_sublattices(const IntMatrix& p_basis, const IntMatrix& floor,
                                                  const std::vector<IntMatrix>& actions, long p,
                                                  const Budget& budget) {
  const std::size_t n = p_basis.rows();
  if (p_basis.cols() != n) throw DomainError("sublattice search needs a full-rank square basis");
  RatMatrix pinv = inverse(to_rational(p_basis));

  auto to_p_coords = [&](std::span<const Integer> v) {
    RatVector rv(v.begin(), v.end());
    RatVector c = mul_row(rv, pinv);
    Row out(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (c[j].get_den() != 1) throw DomainError("floor is not contained in the lattice");
      out[j] = mod(c[j].get_num(), p);
    }
    return out;
  };

  // Image of the floor in P/pP.
  Echelon w(n, p);
  for (std::size_t i = 0; i < floor.rows(); ++i) w.insert(to_p_coords(floor.row(i)));
  std::vector<std::size_t> pivots = w.pivots();
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!std::binary_search(pivots.begin(), pivots.end(), c)) free.push_back(c);
  const std::size_t k = free.size();
  if (k == 0) return {};

  // p^k - 1 nonzero functionals, enumerated projectively.
  {
    Integer count;
    mpz_ui_pow_ui(count.get_mpz_t(), static_cast<unsigned long>(p), k);
    if (count - 1 > budget.max_functionals)
      throw ResourceError("quotient of dimension " + std::to_string(k) + " over F_" +
                          std::to_string(p) + " exceeds the functional budget");
  }

  // Induced action on the quotient, row convention u ↦ u·Aq.
  std::vector<std::vector<Row>> quotient_actions;
  for (const IntMatrix& a : actions) {
    IntMatrix pa = p_basis * a;
    std::vector<Row> aq(k, Row(k));
    for (std::size_t r = 0; r < k; ++r) {
      Row img = to_p_coords(pa.row(free[r]));
      w.reduce(img);
      for (std::size_t c = 0; c < k; ++c) aq[r][c] = img[free[c]];
    }
    quotient_actions.push_back(std::move(aq));
  }

  // Maximal stable subspaces of the quotient are annihilators of minimal
  // stable subspaces of the dual, which are cyclic.
  std::map<std::vector<Row>, std::size_t> closures;  // echelon rows -> dimension
  Row f(k);
  std::function<void(std::size_t, bool)> each = [&](std::size_t pos, bool leading) {
    if (pos == k) {
      if (!leading) return;
      Echelon s(k, p);
      std::vector<Row> queue{f};
      s.insert(f);
      for (std::size_t q = 0; q < queue.size(); ++q)
        for (const auto& aq : quotient_actions) {
          Row img = apply_column(aq, queue[q], p);
          if (s.insert(img)) queue.push_back(img);
        }
      closures.emplace(s.rows(), s.rank());
      return;
    }
    if (!leading) {
      f[pos] = 0;
      each(pos + 1, false);
      f[pos] = 1;
      each(pos + 1, true);
      f[pos] = 0;
      return;
    }
    for (long v = 0; v < p; ++v) {
      f[pos] = v;
      each(pos + 1, true);
    }
    f[pos] = 0;
  };
  each(0, false);

  std::vector<IntMatrix> out;
  for (const auto& [rows, dim] : closures) {
    Echelon s(k, p);
    for (const Row& r : rows) s.insert(r);
    bool minimal = true;
    for (const auto& [other, odim] : closures) {
      if (odim >= dim) continue;
      if (std::all_of(other.begin(), other.end(), [&](const Row& r) { return s.contains(r); })) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;

    // Annihilator {u : u·s = 0 for s in S}: null space of the echelon rows.
    std::vector<std::size_t> spiv = s.pivots();
    std::vector<Row> srows = s.rows();
    IntMatrix gens = p_basis;
    for (std::size_t i = 0; i < n; ++i)
      for (auto& x : gens.row(i)) x *= p;
    for (std::size_t i = 0; i < floor.rows(); ++i) gens.append_row(floor.row(i));
    for (std::size_t c = 0; c < k; ++c) {
      if (std::binary_search(spiv.begin(), spiv.end(), c)) continue;
      Row u(k);
      u[c] = 1;
      for (std::size_t r = 0; r < srows.size(); ++r) u[spiv[r]] = (p - srows[r][c]) % p;
      IntVector lift(n);
      for (std::size_t j = 0; j < k; ++j) lift[free[j]] = u[j];
      gens.append_row(mul_row(std::span<const Integer>(lift), p_basis));
    }
    out.push_back(hnf_rows(gens));
  }
  std::sort(out.begin(), out.end(),
            [](const IntMatrix& a, const IntMatrix& b) { return a.data() < b.data(); });
  return out;
}

}  // namespace quatlat
