#pragma once

#include <vector>

#include "pentagon/clifford.hpp"
#include "pentagon/congruence.hpp"
#include "pentagon/solution.hpp"

namespace pentagon {

/// Data for the congruence-based construction: a congruence rho with
/// group quotient and a map mu picking, for every element, the
/// representative of its class, subject to
///   mu(ab) = mu(a) mu(a)^-1 mu(ab)          (the representative law)
struct representative_map {
  congruence rho;
  std::vector<int> mu;
};

/// The E-invariant solution s(a,b) = (ab, mu(a)^-1 mu(ab)). Validates
/// every representative_map invariant first; throws "MuNotInClass",
/// "MuImageNotRepresentatives", "CondSoluViolated" or
/// "QuotientNotGroup".
solution invariant_from_mu(const clifford_structure& C,
                           const representative_map& m);

struct invariant_data {
  congruence_pair pair;    // (kernel of s, E(S) x E(S))
  congruence rho;          // the pair's congruence
  std::vector<int> mu;     // theta_e for the least idempotent e
  subset representatives;  // theta_e(S)
};

/// Inverts the construction on any E-invariant solution: recovers the
/// congruence pair, its congruence, and the representative system
/// theta_e(S), asserting the describing identities
///   theta_a(b) = theta_e(a)^-1 theta_e(ab),  (theta_e(a), a) in rho.
/// Throws "NotInvariant" when s is not E-invariant.
invariant_data extract_invariant_data(const solution& s);

/// Data for the per-group construction of E-fixed solutions: one
/// solution theta table (local indices) per group component, plus
/// connector maps eps_{e,f}: G_e -> G_f for every ordered idempotent
/// pair, with eps equal to the connecting homomorphism on comparable
/// pairs.
struct component_solution_family {
  clifford_structure structure;
  std::vector<std::vector<std::vector<int>>> group_thetas;  // per idempotent
  // connectors[i][j][x] = local index in G_j of eps(x) for x in G_i
  std::vector<std::vector<std::vector<int>>> connectors;
};

/// theta_a(b) = theta^{[f]}_{eps_{e,f}(a)}(b) for a in G_e, b in G_f.
/// Validates the two coherence conditions exhaustively; throws
/// "Condition1Violated", "Condition2Violated" or "ConnectorMismatch".
solution fixed_from_components(const component_solution_family& fam);

/// The epimorphism specialization: all connecting homs surjective and
/// the per-group solutions constant on cosets of N_e (the subgroup
/// generated by the kernels of the homs leaving G_e) and intertwined by
/// the homs. Connectors are derived from coset transversals and the
/// glued map is validated by the axiom scan directly: the derived
/// connectors satisfy the elementwise coherence conditions of
/// fixed_from_components only up to N-cosets of the row index, which the
/// coset-constancy hypothesis absorbs. The result is independent of the
/// transversal choice, asserted by building with least- and
/// greatest-index transversals and comparing.
struct epi_family_spec {
  clifford_structure structure;
  std::vector<std::vector<std::vector<int>>> group_thetas;
};

solution fixed_from_epi_family(const epi_family_spec& spec);

/// K = union of the per-group kernels K_e = {a in G_e :
/// theta^{[e]}_e(a) = e}, provided every upward connector maps identity
/// to identity (checked; "PreconditionFailed" otherwise). Returns
/// whether solution_kernel(s) equals the union.
bool kernel_union_check(const solution& s,
                        const component_solution_family& fam);

}  // namespace pentagon
