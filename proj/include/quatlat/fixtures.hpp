#pragma once

#include <string>
#include <vector>

namespace quatlat {

struct FixtureResult {
  std::string name;
  bool passed = false;
  std::string detail;  ///< failed checks, or a short summary on success
  double seconds = 0;
};

/// Monomial lattices in M3 with I·J and J·I both orders.
FixtureResult check_m3_invertible_pair();
/// A lattice in M3 that is left projective but not right projective.
FixtureResult check_m3_left_invertible();
/// A lattice in M4 that is left projective, not right projective, not invertible.
FixtureResult check_m4_left_projective();
/// Z + 2iZ + 2jZ + 2kZ in (-1,-3): class counts, Brandt matrices T(1..14)
/// and all theta series through q^15 against reference tables.
FixtureResult check_definite_order();

std::vector<FixtureResult> run_fixtures();

}  // namespace quatlat
