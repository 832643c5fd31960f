#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "quatlat/linalg.hpp"

namespace quatlat {

/// Prime factorization of |n| by trial division, as (prime, exponent) pairs in
/// increasing order. n must be nonzero.
std::vector<std::pair<Integer, unsigned>> factor(const Integer& n);

/// Distinct primes dividing |n|.
std::vector<Integer> prime_divisors(const Integer& n);

/// Exact square root of a nonnegative rational, if it is a rational square.
std::optional<Rational> rational_sqrt(const Rational& q);

/// floor(sqrt(q)) for q >= 0.
Integer floor_sqrt(const Rational& q);

/// Hilbert symbol (a, b)_p at a finite prime p, for nonzero rationals.
int hilbert_symbol(const Rational& a, const Rational& b, const Integer& p);

}  // namespace quatlat
