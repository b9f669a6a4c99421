#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pentagon/semigroup.hpp"
#include "pentagon/solution.hpp"

namespace pentagon::fixtures {

// Clifford fixtures
finite_semigroup trivial();
finite_semigroup z2();
finite_semigroup z3();
finite_semigroup z4();
/// The commutative Clifford monoid {1, a, b} with a^2 = a, b^2 = a,
/// ab = b. Elements: 0 = 1, 1 = a, 2 = b.
finite_semigroup s3();
/// Two-element chain semilattice, 0 on top.
finite_semigroup chain2();
/// Three-element chain semilattice, 0 on top.
finite_semigroup chain3();
/// Z4 over Z2 on a two-node chain, connected by reduction mod 2.
/// Elements 0..3 form Z4 (identity 0), 4..5 form Z2 (identity 4).
finite_semigroup z4_over_z2();

// non-Clifford fixtures
/// Five-element Brandt semigroup of the 2x2 matrix units with zero:
/// inverse but with non-central idempotents.
finite_semigroup brandt_b2();
/// Two-element left-zero semigroup; not inverse.
finite_semigroup left_zero2();

// named solutions on s3()
/// theta_x = gamma with gamma(1) = gamma(a) = a, gamma(b) = b;
/// E-invariant but not E-fixed.
solution s3_gamma_solution();
/// theta_1 constant a; theta_a = theta_b fixing 1 and sending a, b to a;
/// neither E-invariant nor E-fixed.
solution s3_outlier_solution();

/// The Clifford census set: name/semigroup pairs in a stable order.
std::vector<std::pair<std::string, finite_semigroup>> clifford_fixtures();

}  // namespace pentagon::fixtures
