#include "pentagon/clifford.hpp"

#include <algorithm>
#include <string>

namespace pentagon {

bool natural_order(const finite_semigroup& S, int e, int f) {
  if (!S.is_idempotent(e))
    throw error("NotIdempotent", std::to_string(e) + " is not idempotent", {e});
  if (!S.is_idempotent(f))
    throw error("NotIdempotent", std::to_string(f) + " is not idempotent", {f});
  return S.product(e, f) == e && S.product(f, e) == e;
}

int connecting_hom::apply(int b) const {
  for (size_t i = 0; i < domain.size(); ++i)
    if (domain[i] == b) return image[i];
  throw error("OutOfRangeEntry",
              std::to_string(b) + " is not in the source component", {b});
}

clifford_structure::clifford_structure(finite_semigroup S)
    : base_(std::move(S)) {
  auto report = is_clifford(base_);
  if (!report)
    throw error("NotClifford", report.reason, report.witness);
  inverses_ = inverse_map(base_);
  idempotent_set_ = idempotents(base_);
  idempotent_list_ = idempotent_set_.elements();

  const int n = base_.order();
  component_of_.assign(static_cast<size_t>(n), -1);
  local_index_.assign(static_cast<size_t>(n), -1);
  components_.resize(idempotent_list_.size());
  for (int a = 0; a < n; ++a) {
    int e = base_.product(a, inverses_[a]);
    auto it = std::find(idempotent_list_.begin(), idempotent_list_.end(), e);
    int idx = static_cast<int>(it - idempotent_list_.begin());
    component_of_[a] = idx;
    local_index_[a] = static_cast<int>(components_[idx].size());
    components_[idx].push_back(a);  // ascending since a runs ascending
  }

  // Each component must be a group under the restricted table with the
  // component idempotent as identity.
  for (size_t i = 0; i < components_.size(); ++i) {
    int e = idempotent_list_[i];
    for (int a : components_[i]) {
      if (base_.product(e, a) != a || base_.product(a, e) != a)
        throw error("NotClifford",
                    "component identity " + std::to_string(e) +
                        " does not fix " + std::to_string(a),
                    {e, a});
      for (int b : components_[i]) {
        int ab = base_.product(a, b);
        if (component_of_[ab] != static_cast<int>(i))
          throw error("NotClifford",
                      "component of " + std::to_string(e) +
                          " is not closed under the product",
                      {a, b, ab});
      }
      int inv = inverses_[a];
      if (base_.product(a, inv) != e || base_.product(inv, a) != e)
        throw error("NotClifford",
                    std::to_string(a) + " has no inverse inside its component",
                    {a, inv});
    }
  }
}

finite_semigroup clifford_structure::component_group(int e_index) const {
  const auto& elems = components_[e_index];
  const int m = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(static_cast<size_t>(m),
                                      std::vector<int>(static_cast<size_t>(m)));
  std::vector<std::string> names(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    names[i] = base_.name_of(elems[i]);
    for (int j = 0; j < m; ++j)
      table[i][j] = local_index_[base_.product(elems[i], elems[j])];
  }
  return finite_semigroup(m, table, std::move(names));
}

connecting_hom clifford_structure::connecting(int f, int e) const {
  if (!is_idempotent(f))
    throw error("NotIdempotent", std::to_string(f) + " is not idempotent", {f});
  if (!is_idempotent(e))
    throw error("NotIdempotent", std::to_string(e) + " is not idempotent", {e});
  if (!natural_leq(e, f))
    throw error("NotComparable",
                std::to_string(e) + " is not below " + std::to_string(f) +
                    " in the natural order",
                {e, f});
  connecting_hom hom;
  hom.source = f;
  hom.target = e;
  hom.domain = components_[component_of_[f]];
  hom.image.reserve(hom.domain.size());
  int e_idx = component_of_[e];
  for (int b : hom.domain) {
    int eb = base_.product(e, b);
    if (component_of_[eb] != e_idx)
      throw error("NotClifford",
                  "multiplication by " + std::to_string(e) +
                      " leaves the target component",
                  {e, b, eb});
    hom.image.push_back(eb);
  }
  // phi(b b') = phi(b) phi(b') holds because e is central idempotent;
  // verified here so the returned value table is trustworthy.
  for (int b : hom.domain)
    for (int b2 : hom.domain)
      if (hom.apply(base_.product(b, b2)) !=
          base_.product(hom.apply(b), hom.apply(b2)))
        throw error("NotClifford", "connecting map is not a homomorphism",
                    {f, e, b, b2});
  return hom;
}

bool element_preorder(const clifford_structure& C, int a, int b) {
  return C.element_leq(a, b);
}

namespace {

// identity (local index) of a group table, or -1
int group_identity(const std::vector<std::vector<int>>& table) {
  const int m = static_cast<int>(table.size());
  for (int e = 0; e < m; ++e) {
    bool ok = true;
    for (int x = 0; x < m && ok; ++x)
      ok = table[e][x] == x && table[x][e] == x;
    if (ok) return e;
  }
  return -1;
}

}  // namespace

finite_semigroup build_from_semilattice(const semilattice_spec& spec) {
  const int k = static_cast<int>(spec.meets.size());
  if (k == 0) throw error("SpecInconsistent", "no semilattice nodes");
  if (static_cast<int>(spec.groups.size()) != k)
    throw error("SpecInconsistent", "need one group table per node");

  // The meet table must itself be a semilattice.
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(spec.meets[i].size()) != k)
      throw error("SpecInconsistent", "meet table is not square");
    for (int j = 0; j < k; ++j) {
      int m = spec.meets[i][j];
      if (m < 0 || m >= k)
        throw error("SpecInconsistent", "meet entry out of range", {i, j, m});
      if (m != spec.meets[j][i])
        throw error("SpecInconsistent", "meet table is not commutative",
                    {i, j});
    }
    if (spec.meets[i][i] != i)
      throw error("SpecInconsistent", "meet table is not idempotent", {i});
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l)
        if (spec.meets[spec.meets[i][j]][l] != spec.meets[i][spec.meets[j][l]])
          throw error("SpecInconsistent", "meet table is not associative",
                      {i, j, l});

  // Validate each node's group and find identities.
  std::vector<finite_semigroup> groups;
  std::vector<int> identity;
  std::vector<int> sizes;
  for (int i = 0; i < k; ++i) {
    finite_semigroup g(static_cast<int>(spec.groups[i].size()),
                       spec.groups[i]);
    int id = group_identity(spec.groups[i]);
    if (id < 0)
      throw error("SpecInconsistent",
                  "node " + std::to_string(i) + " has no identity", {i});
    int m = g.order();
    for (int x = 0; x < m; ++x) {
      bool has_inverse = false;
      for (int y = 0; y < m; ++y)
        if (g.product(x, y) == id && g.product(y, x) == id) has_inverse = true;
      if (!has_inverse)
        throw error("SpecInconsistent",
                    "node " + std::to_string(i) + " is not a group", {i, x});
    }
    sizes.push_back(m);
    identity.push_back(id);
    groups.push_back(std::move(g));
  }

  auto leq = [&](int lo, int hi) { return spec.meets[lo][hi] == lo; };

  // hom[from][to], identity pairs included.
  std::vector<std::vector<std::optional<std::vector<int>>>> hom(
      static_cast<size_t>(k),
      std::vector<std::optional<std::vector<int>>>(static_cast<size_t>(k)));
  for (int i = 0; i < k; ++i) {
    std::vector<int> id_map(static_cast<size_t>(sizes[i]));
    for (int x = 0; x < sizes[i]; ++x) id_map[x] = x;
    hom[i][i] = std::move(id_map);
  }
  auto check_hom = [&](int from, int to, const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != sizes[from])
      throw error("SpecInconsistent", "hom map has wrong domain size",
                  {from, to});
    for (int v : map)
      if (v < 0 || v >= sizes[to])
        throw error("SpecInconsistent", "hom map value out of range",
                    {from, to, v});
    if (map[identity[from]] != identity[to])
      throw error("SpecInconsistent",
                  "hom does not map identity to identity", {from, to});
    for (int x = 0; x < sizes[from]; ++x)
      for (int y = 0; y < sizes[from]; ++y)
        if (map[groups[from].product(x, y)] !=
            groups[to].product(map[x], map[y]))
          throw error("SpecInconsistent", "map is not a group homomorphism",
                      {from, to, x, y});
  };
  for (const auto& h : spec.homs) {
    if (h.from < 0 || h.from >= k || h.to < 0 || h.to >= k)
      throw error("SpecInconsistent", "hom node index out of range",
                  {h.from, h.to});
    if (!leq(h.to, h.from))
      throw error("SpecInconsistent",
                  "hom target is not below its source in the meet order",
                  {h.from, h.to});
    check_hom(h.from, h.to, h.map);
    if (hom[h.from][h.to] && *hom[h.from][h.to] != h.map)
      throw error("SpecInconsistent", "conflicting hom tables for a pair",
                  {h.from, h.to});
    hom[h.from][h.to] = h.map;
  }

  // Derive missing composites phi_{g,e} = phi_{f,e} . phi_{g,f} until
  // nothing changes, then insist every comparable pair is covered.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int g = 0; g < k; ++g)
      for (int e = 0; e < k; ++e) {
        if (g == e || !leq(e, g) || hom[g][e]) continue;
        for (int f = 0; f < k; ++f) {
          if (f == g || f == e || !leq(e, f) || !leq(f, g)) continue;
          if (!hom[g][f] || !hom[f][e]) continue;
          std::vector<int> comp(static_cast<size_t>(sizes[g]));
          for (int x = 0; x < sizes[g]; ++x)
            comp[x] = (*hom[f][e])[(*hom[g][f])[x]];
          hom[g][e] = std::move(comp);
          changed = true;
          break;
        }
      }
  }
  for (int g = 0; g < k; ++g)
    for (int e = 0; e < k; ++e)
      if (leq(e, g) && !hom[g][e])
        throw error("SpecInconsistent",
                    "no hom derivable for comparable pair", {g, e});
  // Composition law on all chains e <= f <= g.
  for (int g = 0; g < k; ++g)
    for (int f = 0; f < k; ++f)
      for (int e = 0; e < k; ++e) {
        if (!leq(e, f) || !leq(f, g)) continue;
        for (int x = 0; x < sizes[g]; ++x)
          if ((*hom[g][e])[x] != (*hom[f][e])[(*hom[g][f])[x]])
            throw error("SpecInconsistent",
                        "hom composition law fails on a chain", {g, f, e, x});
      }

  // Assemble the global table: for a in G_i, b in G_j the product lives
  // in the meet component, ab = phi_{i,m}(a) phi_{j,m}(b).
  std::vector<int> offset(static_cast<size_t>(k), 0);
  for (int i = 1; i < k; ++i) offset[i] = offset[i - 1] + sizes[i - 1];
  int n = offset[k - 1] + sizes[k - 1];
  std::vector<std::vector<int>> table(static_cast<size_t>(n),
                                      std::vector<int>(static_cast<size_t>(n)));
  for (int i = 0; i < k; ++i)
    for (int x = 0; x < sizes[i]; ++x)
      for (int j = 0; j < k; ++j)
        for (int y = 0; y < sizes[j]; ++y) {
          int m = spec.meets[i][j];
          int px = (*hom[i][m])[x];
          int py = (*hom[j][m])[y];
          table[offset[i] + x][offset[j] + y] =
              offset[m] + groups[m].product(px, py);
        }
  return finite_semigroup(n, table);
}

semilattice_spec extract_spec(const clifford_structure& C) {
  const auto& idem = C.idempotent_list();
  const int k = static_cast<int>(idem.size());
  semilattice_spec spec;
  spec.meets.assign(static_cast<size_t>(k),
                    std::vector<int>(static_cast<size_t>(k)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      spec.meets[i][j] = C.component_index_of(C.product(idem[i], idem[j]));
  for (int i = 0; i < k; ++i)
    spec.groups.push_back(C.component_group(i).table_rows());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j || !C.natural_leq(idem[j], idem[i])) continue;
      connecting_hom h = C.connecting(idem[i], idem[j]);
      semilattice_spec::hom out;
      out.from = i;
      out.to = j;
      out.map.reserve(h.image.size());
      for (int v : h.image) out.map.push_back(C.local_index(v));
      spec.homs.push_back(std::move(out));
    }
  return spec;
}

std::vector<int> canonical_numbering(const clifford_structure& C) {
  std::vector<int> perm(static_cast<size_t>(C.order()));
  int next = 0;
  for (const auto& comp : C.components())
    for (int a : comp) perm[a] = next++;
  return perm;
}

}  // namespace pentagon
