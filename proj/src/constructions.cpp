#include "pentagon/constructions.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace pentagon {

solution invariant_from_mu(const clifford_structure& C,
                           const representative_map& m) {
  const int n = C.order();
  const auto& rho = m.rho;
  if (!(rho.base() == C.base()))
    throw error("OutOfRangeEntry", "congruence is over a different semigroup");
  if (static_cast<int>(m.mu.size()) != n)
    throw error("OutOfRangeEntry", "mu must have n entries");
  for (int a = 0; a < n; ++a) {
    if (m.mu[a] < 0 || m.mu[a] >= n)
      throw error("OutOfRangeEntry", "mu value out of range", {a, m.mu[a]});
    if (!rho.related(a, m.mu[a]))
      throw error("MuNotInClass",
                  "mu(" + std::to_string(a) + ") = " + std::to_string(m.mu[a]) +
                      " is not in the class of " + std::to_string(a),
                  {a, m.mu[a]});
  }
  // image meets each class exactly once <=> mu is constant on classes
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (rho.related(a, b) && m.mu[a] != m.mu[b])
        throw error("MuImageNotRepresentatives",
                    "mu picks two representatives in one class", {a, b});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int mab = m.mu[C.product(a, b)];
      int ma = m.mu[a];
      if (mab != C.product(C.product(ma, C.inverse(ma)), mab))
        throw error("CondSoluViolated",
                    "mu(ab) != mu(a) mu(a)^-1 mu(ab) at (" +
                        std::to_string(a) + "," + std::to_string(b) + ")",
                    {a, b});
    }
  if (!quotient(rho).is_group)
    throw error("QuotientNotGroup", "S/rho is not a group");

  std::vector<int> theta(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      theta[a * n + b] =
          C.product(C.inverse(m.mu[a]), m.mu[C.product(a, b)]);
  solution s(C.base(), std::move(theta));
  if (!classify(s).is_e_invariant.value_or(false))
    throw error("InternalCheckFailed",
                "constructed solution is not E-invariant");
  return s;
}

invariant_data extract_invariant_data(const solution& s) {
  clifford_structure C(s.base());
  const int n = C.order();
  if (!classify(s).is_e_invariant.value_or(false))
    throw error("NotInvariant", "solution is not E-invariant");

  const auto& E = C.idempotent_list();
  const int e = E[0];  // least index; the choice is immaterial, checked below
  for (int f : E)
    for (int x = 0; x < n; ++x)
      if (s.theta(e, x) != s.theta(f, x))
        throw error("InternalCheckFailed",
                    "theta_e differs across idempotents on an E-invariant "
                    "solution",
                    {e, f, x});

  congruence_pair pair{solution_kernel(s), trace_congruence::universal(E)};
  invariant_data data{pair, rho_from_pair(C, pair), {}, subset(n)};

  auto q = quotient(data.rho);
  if (!q.is_group)
    throw error("InternalCheckFailed",
                "S/rho is not a group despite universal trace");

  data.mu.resize(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    data.mu[a] = s.theta(e, a);
    data.representatives.insert(s.theta(e, a));
  }

  // theta_a(b) = theta_e(a)^-1 theta_e(ab)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (s.theta(a, b) != C.product(C.inverse(s.theta(e, a)),
                                     s.theta(e, C.product(a, b))))
        throw error("InternalCheckFailed",
                    "describing identity fails on an E-invariant solution",
                    {a, b});
  // (theta_e(a), a) in rho, so theta_e(S) picks inside classes
  for (int a = 0; a < n; ++a)
    if (!data.rho.related(s.theta(e, a), a))
      throw error("InternalCheckFailed",
                  "theta_e(a) is not rho-related to a", {a});
  // exactly one representative per class
  std::vector<int> per_class(static_cast<size_t>(data.rho.class_count()), 0);
  for (int r : data.representatives.elements()) ++per_class[data.rho.class_of(r)];
  for (int c = 0; c < data.rho.class_count(); ++c)
    if (per_class[c] != 1)
      throw error("InternalCheckFailed",
                  "theta_e(S) is not a system of representatives", {c});
  return data;
}

namespace {

struct family_view {
  const component_solution_family* fam;
  const clifford_structure* C;
  int k;  // component count

  int eps(int i, int j, int a_global) const {
    const auto& map = fam->connectors[i][j];
    int local = C->local_index(a_global);
    return C->component(j)[map[local]];
  }
  int theta_local(int i, int a_global, int b_global) const {
    // both arguments in G_i
    return C->component(
        i)[fam->group_thetas[i][C->local_index(a_global)][C->local_index(b_global)]];
  }
};

void validate_family_shapes(const component_solution_family& fam) {
  const auto& C = fam.structure;
  const int k = C.idempotent_count();
  if (static_cast<int>(fam.group_thetas.size()) != k)
    throw error("OutOfRangeEntry", "need one theta table per component");
  if (static_cast<int>(fam.connectors.size()) != k)
    throw error("OutOfRangeEntry", "need a full connector matrix");
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(fam.connectors[i].size()) != k)
      throw error("OutOfRangeEntry", "need a full connector matrix");
    const int mi = static_cast<int>(C.component(i).size());
    for (int j = 0; j < k; ++j) {
      const auto& map = fam.connectors[i][j];
      if (static_cast<int>(map.size()) != mi)
        throw error("OutOfRangeEntry", "connector has wrong domain size",
                    {i, j});
      const int mj = static_cast<int>(C.component(j).size());
      for (int v : map)
        if (v < 0 || v >= mj)
          throw error("OutOfRangeEntry", "connector value out of range",
                      {i, j, v});
    }
  }
}

// per-group tables must be solutions on their groups
void validate_group_solutions(const component_solution_family& fam) {
  const auto& C = fam.structure;
  for (int i = 0; i < C.idempotent_count(); ++i)
    solution(C.component_group(i), fam.group_thetas[i]);
}

void validate_connectors_match_homs(const component_solution_family& fam) {
  const auto& C = fam.structure;
  const auto& E = C.idempotent_list();
  const int k = C.idempotent_count();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (!C.natural_leq(E[j], E[i])) continue;  // eps = phi only for f <= e
      connecting_hom phi = C.connecting(E[i], E[j]);
      for (size_t x = 0; x < phi.domain.size(); ++x) {
        int expected = phi.image[x];
        int got = C.component(j)[fam.connectors[i][j][x]];
        if (expected != got)
          throw error("ConnectorMismatch",
                      "eps differs from the connecting homomorphism",
                      {E[i], E[j], phi.domain[x], got, expected});
      }
    }
}

}  // namespace

solution fixed_from_components(const component_solution_family& fam) {
  const auto& C = fam.structure;
  const auto& E = C.idempotent_list();
  const int k = C.idempotent_count();
  validate_family_shapes(fam);
  validate_group_solutions(fam);
  validate_connectors_match_homs(fam);

  family_view v{&fam, &C, k};

  // condition (1): theta^{[h]}_{eps_{ef,h}(ab)} = theta^{[h]}_{eps_{e,h}(a) eps_{f,h}(b)}
  for (int e = 0; e < k; ++e)
    for (int f = 0; f < k; ++f)
      for (int h = 0; h < k; ++h) {
        int ef = C.component_index_of(C.product(E[e], E[f]));
        for (int a : C.component(e))
          for (int b : C.component(f)) {
            int lhs_row = v.eps(ef, h, C.product(a, b));
            int rhs_row = C.product(v.eps(e, h, a), v.eps(f, h, b));
            for (int x : C.component(h))
              if (v.theta_local(h, lhs_row, x) != v.theta_local(h, rhs_row, x))
                throw error("Condition1Violated",
                            "rows of theta^{[h]} differ",
                            {E[e], E[f], E[h], a, b});
          }
      }
  // condition (2): eps_{f,h} theta^{[f]}_{eps_{e,f}(a)} = theta^{[h]}_{eps_{e,h}(a)} eps_{f,h}
  for (int e = 0; e < k; ++e)
    for (int f = 0; f < k; ++f)
      for (int h = 0; h < k; ++h)
        for (int a : C.component(e))
          for (int b : C.component(f)) {
            int lhs = v.eps(f, h, v.theta_local(f, v.eps(e, f, a), b));
            int rhs = v.theta_local(h, v.eps(e, h, a), v.eps(f, h, b));
            if (lhs != rhs)
              throw error("Condition2Violated",
                          "intertwining law fails",
                          {E[e], E[f], E[h], a, b});
          }

  const int n = C.order();
  std::vector<int> theta(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    int e = C.component_index_of(a);
    for (int b = 0; b < n; ++b) {
      int f = C.component_index_of(b);
      theta[a * n + b] = v.theta_local(f, v.eps(e, f, a), b);
    }
  }
  solution s(C.base(), std::move(theta));
  if (!classify(s).is_e_fixed.value_or(false))
    throw error("InternalCheckFailed", "constructed solution is not E-fixed");
  return s;
}

namespace {

// subgroup of the local group generated by the given local elements
std::vector<int> generated_subgroup(const finite_semigroup& G,
                                    std::set<int> gens, int identity) {
  gens.insert(identity);
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<int> next = gens;
    for (int x : gens)
      for (int y : gens) next.insert(G.product(x, y));
    if (next.size() != gens.size()) {
      gens = std::move(next);
      grew = true;
    }
  }
  return {gens.begin(), gens.end()};
}

}  // namespace

solution fixed_from_epi_family(const epi_family_spec& spec) {
  const auto& C = spec.structure;
  const auto& E = C.idempotent_list();
  const int k = C.idempotent_count();
  if (static_cast<int>(spec.group_thetas.size()) != k)
    throw error("OutOfRangeEntry", "need one theta table per component");

  std::vector<finite_semigroup> groups;
  groups.reserve(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) groups.push_back(C.component_group(i));
  // shape and axiom validation of the per-group data up front
  for (int i = 0; i < k; ++i) solution(groups[i], spec.group_thetas[i]);

  // hom_local[e][f]: local map of phi_{E[e],E[f]} for f <= e
  std::vector<std::vector<std::vector<int>>> hom_local(
      static_cast<size_t>(k), std::vector<std::vector<int>>(static_cast<size_t>(k)));
  for (int e = 0; e < k; ++e)
    for (int f = 0; f < k; ++f) {
      if (!C.natural_leq(E[f], E[e])) continue;
      connecting_hom phi = C.connecting(E[e], E[f]);
      std::vector<int> local(phi.domain.size());
      for (size_t x = 0; x < phi.domain.size(); ++x)
        local[x] = C.local_index(phi.image[x]);
      // surjectivity
      std::set<int> image(local.begin(), local.end());
      if (static_cast<int>(image.size()) !=
          static_cast<int>(C.component(f).size()))
        throw error("NotEpimorphism",
                    "connecting homomorphism is not surjective",
                    {E[e], E[f]});
      hom_local[e][f] = std::move(local);
    }

  // N_e = subgroup generated by the kernels of all homs leaving G_e
  std::vector<std::vector<int>> big_kernel(static_cast<size_t>(k));
  for (int e = 0; e < k; ++e) {
    std::set<int> gens;
    int id_local = C.local_index(E[e]);
    for (int f = 0; f < k; ++f) {
      if (!C.natural_leq(E[f], E[e])) continue;
      int target_id = C.local_index(E[f]);
      for (int x = 0; x < static_cast<int>(hom_local[e][f].size()); ++x)
        if (hom_local[e][f][x] == target_id) gens.insert(x);
    }
    big_kernel[e] = generated_subgroup(groups[e], gens, id_local);
  }

  // hypothesis 1: theta rows constant on N_e-cosets
  for (int e = 0; e < k; ++e) {
    const auto& G = groups[e];
    const auto& th = spec.group_thetas[e];
    const int m = G.order();
    if (static_cast<int>(th.size()) != m)
      throw error("OutOfRangeEntry", "theta table has wrong size", {E[e]});
    auto inv = inverse_map(G);
    auto same_coset = [&](int a, int b) {
      int d = G.product(a, inv[b]);
      return std::find(big_kernel[e].begin(), big_kernel[e].end(), d) !=
             big_kernel[e].end();
    };
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        if (!same_coset(a, b)) continue;
        for (int x = 0; x < m; ++x)
          if (th[a][x] != th[b][x])
            throw error("Hypothesis1Violated",
                        "theta rows differ inside an N_e coset",
                        {E[e], a, b, x});
      }
  }
  // hypothesis 2: phi_{e,f} theta^{[e]}_a = theta^{[f]}_{phi(a)} phi_{e,f}
  for (int e = 0; e < k; ++e)
    for (int f = 0; f < k; ++f) {
      if (e == f || !C.natural_leq(E[f], E[e])) continue;
      const auto& phi = hom_local[e][f];
      const int m = groups[e].order();
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          if (phi[spec.group_thetas[e][a][b]] !=
              spec.group_thetas[f][phi[a]][phi[b]])
            throw error("Hypothesis2Violated",
                        "homs do not intertwine the group solutions",
                        {E[e], E[f], a, b});
    }

  // Connectors from a transversal of ker phi_{f, ef} in G_f:
  // eps_{e,f}(a) = the representative x with phi_{f,ef}(x) = phi_{e,ef}(a).
  // The global map is assembled directly; the derived eps may miss the
  // elementwise coherence conditions of the component construction (they
  // hold only up to N-cosets of the row index), so the axiom scan of the
  // solution constructor is the correctness check here.
  auto build = [&](bool greatest) {
    const int n = C.order();
    std::vector<int> theta(static_cast<size_t>(n) * n);
    std::vector<std::vector<std::vector<int>>> connectors(
        static_cast<size_t>(k),
        std::vector<std::vector<int>>(static_cast<size_t>(k)));
    for (int e = 0; e < k; ++e)
      for (int f = 0; f < k; ++f) {
        int ef = C.component_index_of(C.product(E[e], E[f]));
        const auto& to_meet_from_f = hom_local[f][ef];
        const auto& to_meet_from_e = hom_local[e][ef];
        const int mf = groups[f].order();
        // fiber representative per value of phi_{f,ef}
        std::vector<int> rep(static_cast<size_t>(groups[ef].order()), -1);
        for (int x = 0; x < mf; ++x) {
          int v = to_meet_from_f[x];
          if (rep[v] < 0 || (greatest && x > rep[v])) rep[v] = x;
        }
        std::vector<int> map(static_cast<size_t>(groups[e].order()));
        for (int a = 0; a < groups[e].order(); ++a)
          map[a] = rep[to_meet_from_e[a]];
        connectors[e][f] = std::move(map);
      }
    for (int a = 0; a < n; ++a) {
      int e = C.component_index_of(a);
      for (int b = 0; b < n; ++b) {
        int f = C.component_index_of(b);
        int row = connectors[e][f][C.local_index(a)];
        theta[a * n + b] =
            C.component(f)[spec.group_thetas[f][row][C.local_index(b)]];
      }
    }
    return solution(C.base(), std::move(theta));
  };

  solution s = build(false);
  if (!(s == build(true)))
    throw error("InternalCheckFailed",
                "construction depends on the transversal choice");
  if (!classify(s).is_e_fixed.value_or(false))
    throw error("InternalCheckFailed", "glued solution is not E-fixed");
  return s;
}

bool kernel_union_check(const solution& s,
                        const component_solution_family& fam) {
  const auto& C = fam.structure;
  const auto& E = C.idempotent_list();
  const int k = C.idempotent_count();
  // upward connectors must map identity to identity
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j || !C.natural_leq(E[i], E[j])) continue;
      int image = C.component(j)[fam.connectors[i][j][C.local_index(E[i])]];
      if (image != E[j])
        throw error("PreconditionFailed",
                    "eps_{e,f}(e) != f for e <= f", {E[i], E[j], image});
    }

  subset global = solution_kernel(s);
  subset union_of_local(C.order());
  for (int i = 0; i < k; ++i) {
    int id_local = C.local_index(E[i]);
    for (int a : C.component(i))
      if (fam.group_thetas[i][id_local][C.local_index(a)] == id_local)
        union_of_local.insert(a);
  }
  return global == union_of_local;
}

}  // namespace pentagon
