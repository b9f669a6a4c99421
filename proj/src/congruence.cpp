#include "pentagon/congruence.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace pentagon {

namespace {

// class ids renumbered by first occurrence
void canonicalize_ids(std::vector<int>& class_of) {
  std::vector<int> remap(class_of.size(), -1);
  int next = 0;
  for (int& c : class_of) {
    if (remap[c] < 0) remap[c] = next++;
    c = remap[c];
  }
}

}  // namespace

congruence::congruence(finite_semigroup base, std::vector<int> class_of)
    : base_(std::move(base)), class_of_(std::move(class_of)) {
  const int n = base_.order();
  if (static_cast<int>(class_of_.size()) != n)
    throw error("OutOfRangeEntry", "class array must have n entries");
  for (int c : class_of_)
    if (c < 0 || c >= n)
      throw error("OutOfRangeEntry", "class id out of range", {c});
  canonicalize_ids(class_of_);
  class_count_ = *std::max_element(class_of_.begin(), class_of_.end()) + 1;
  for (int a = 0; a < n; ++a)
    for (int a2 = 0; a2 < n; ++a2) {
      if (class_of_[a] != class_of_[a2]) continue;
      for (int b = 0; b < n; ++b)
        for (int b2 = 0; b2 < n; ++b2) {
          if (class_of_[b] != class_of_[b2]) continue;
          if (class_of_[base_.product(a, b)] !=
              class_of_[base_.product(a2, b2)])
            throw error("NotCompatible",
                        "a~a' and b~b' but ab !~ a'b' at (" +
                            std::to_string(a) + "," + std::to_string(a2) +
                            "," + std::to_string(b) + "," +
                            std::to_string(b2) + ")",
                        {a, a2, b, b2});
        }
    }
}

congruence congruence::identity(const finite_semigroup& S) {
  std::vector<int> ids(static_cast<size_t>(S.order()));
  for (int a = 0; a < S.order(); ++a) ids[a] = a;
  return congruence(S, std::move(ids));
}

congruence congruence::universal(const finite_semigroup& S) {
  return congruence(S, std::vector<int>(static_cast<size_t>(S.order()), 0));
}

trace_congruence trace_congruence::identity(
    const std::vector<int>& idempotent_list) {
  trace_congruence t;
  t.idempotent_list = idempotent_list;
  t.class_of.resize(idempotent_list.size());
  for (size_t i = 0; i < idempotent_list.size(); ++i)
    t.class_of[i] = static_cast<int>(i);
  return t;
}

trace_congruence trace_congruence::universal(
    const std::vector<int>& idempotent_list) {
  trace_congruence t;
  t.idempotent_list = idempotent_list;
  t.class_of.assign(idempotent_list.size(), 0);
  return t;
}

bool trace_congruence::related(int e, int f) const {
  auto find = [&](int x) {
    for (size_t i = 0; i < idempotent_list.size(); ++i)
      if (idempotent_list[i] == x) return static_cast<int>(i);
    throw error("NotIdempotent",
                std::to_string(x) + " is not in the idempotent list", {x});
  };
  return class_of[find(e)] == class_of[find(f)];
}

void trace_congruence::canonicalize() { canonicalize_ids(class_of); }

std::pair<trace_congruence, subset> trace_and_kernel(const congruence& rho) {
  const auto& S = rho.base();
  trace_congruence tau;
  tau.idempotent_list = idempotents(S).elements();
  for (int e : tau.idempotent_list) tau.class_of.push_back(rho.class_of(e));
  tau.canonicalize();

  subset kernel(S.order());
  for (int a = 0; a < S.order(); ++a)
    for (int e : tau.idempotent_list)
      if (rho.related(a, e)) kernel.insert(a);
  return {std::move(tau), std::move(kernel)};
}

normality_report is_normal_subsemigroup(const clifford_structure& C,
                                        const subset& K) {
  for (int e : C.idempotent_list())
    if (!K.contains(e))
      return {false, "idempotent " + std::to_string(e) + " missing", {e}};
  for (int k : K.elements())
    for (int h : K.elements())
      if (!K.contains(C.product(k, h)))
        return {false,
                "not closed under the product at (" + std::to_string(k) +
                    "," + std::to_string(h) + ")",
                {k, h}};
  for (int a = 0; a < C.order(); ++a)
    for (int k : K.elements()) {
      int conj = C.product(C.product(C.inverse(a), k), a);
      if (!K.contains(conj))
        return {false,
                "a^-1 k a escapes for a = " + std::to_string(a) +
                    ", k = " + std::to_string(k),
                {a, k, conj}};
    }
  return {true, "", {}};
}

namespace {

// tau must be an equivalence on E(S) compatible with the meet and
// closed under conjugation; throws otherwise.
void validate_trace(const clifford_structure& C, const trace_congruence& tau) {
  if (tau.idempotent_list != C.idempotent_list())
    throw error("NotACongruencePair",
                "trace is not indexed by the idempotents of S");
  const auto& E = tau.idempotent_list;
  const int k = static_cast<int>(E.size());
  if (static_cast<int>(tau.class_of.size()) != k)
    throw error("NotACongruencePair", "trace class array has wrong length");
  auto rel = [&](int i, int j) { return tau.class_of[i] == tau.class_of[j]; };
  auto index_of = [&](int e) {
    for (int i = 0; i < k; ++i)
      if (E[i] == e) return i;
    throw error("NotACongruencePair", "meet of idempotents escaped E(S)");
  };
  // congruence on the semilattice E(S)
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (!rel(i, j)) continue;
      for (int l = 0; l < k; ++l)
        if (!rel(index_of(C.product(E[i], E[l])),
                 index_of(C.product(E[j], E[l]))))
          throw error("NotACongruencePair",
                      "trace is not compatible with the meet",
                      {E[i], E[j], E[l]});
    }
  // normality: e tau f  =>  a^-1 e a tau a^-1 f a
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (!rel(i, j)) continue;
      for (int a = 0; a < C.order(); ++a) {
        int ea = C.product(C.product(C.inverse(a), E[i]), a);
        int fa = C.product(C.product(C.inverse(a), E[j]), a);
        if (!rel(index_of(ea), index_of(fa)))
          throw error("NotACongruencePair",
                      "trace is not a normal congruence", {E[i], E[j], a});
      }
    }
}

}  // namespace

congruence rho_from_pair(const clifford_structure& C,
                         const congruence_pair& pair) {
  const int n = C.order();
  if (pair.kernel.universe() != n)
    throw error("NotACongruencePair", "kernel mask has wrong universe");
  auto normal = is_normal_subsemigroup(C, pair.kernel);
  if (!normal)
    throw error("NotACongruencePair",
                "K is not a normal subsemigroup: " + normal.reason,
                normal.witness);
  validate_trace(C, pair.trace);
  // ae in K and (e, a^-1 a) in tau  =>  a in K
  for (int a = 0; a < n; ++a)
    for (int e : C.idempotent_list()) {
      if (!pair.kernel.contains(C.product(a, e))) continue;
      if (!pair.trace.related(e, C.product(C.inverse(a), a))) continue;
      if (!pair.kernel.contains(a))
        throw error("NotACongruencePair",
                    "ae in K and (e, a^-1 a) in tau but a not in K", {a, e});
    }

  // rho_{(K,tau)} = {(a,b) : (a^-1 a, b^-1 b) in tau, a b^-1 in K}
  auto related = [&](int a, int b) {
    return pair.trace.related(C.product(C.inverse(a), a),
                              C.product(C.inverse(b), b)) &&
           pair.kernel.contains(C.product(a, C.inverse(b)));
  };
  std::vector<int> class_of(static_cast<size_t>(n), -1);
  int next = 0;
  for (int a = 0; a < n; ++a) {
    if (class_of[a] >= 0) continue;
    class_of[a] = next;
    for (int b = a + 1; b < n; ++b)
      if (class_of[b] < 0 && related(a, b)) class_of[b] = next;
    ++next;
  }
  // The displayed relation must itself be the equivalence the classes
  // encode, else the pair was not a congruence pair after all.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (related(a, b) != (class_of[a] == class_of[b]))
        throw error("NotACongruencePair",
                    "the displayed relation is not an equivalence", {a, b});
  congruence rho(C.base(), std::move(class_of));  // compatibility verified here

  // theorem laws: the pair round-trips through its congruence
  auto [tau2, ker2] = trace_and_kernel(rho);
  trace_congruence tau = pair.trace;
  tau.canonicalize();
  if (!(tau2 == tau) || !(ker2 == pair.kernel))
    throw error("NotACongruencePair",
                "round-trip laws fail; the relation is not the pair's "
                "congruence");
  return rho;
}

quotient_result quotient(const congruence& rho) {
  const auto& S = rho.base();
  const int k = rho.class_count();
  std::vector<std::vector<int>> table(static_cast<size_t>(k),
                                      std::vector<int>(static_cast<size_t>(k)));
  std::vector<int> rep(static_cast<size_t>(k), -1);
  for (int a = 0; a < S.order(); ++a)
    if (rep[rho.class_of(a)] < 0) rep[rho.class_of(a)] = a;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      table[i][j] = rho.class_of(S.product(rep[i], rep[j]));
  finite_semigroup Q(k, table);

  int idem_count = 0, identity = -1;
  for (int e = 0; e < k; ++e)
    if (Q.is_idempotent(e)) {
      ++idem_count;
      identity = e;
    }
  bool is_group = idem_count == 1;
  if (is_group)
    for (int x = 0; x < k; ++x)
      if (Q.product(identity, x) != x || Q.product(x, identity) != x)
        is_group = false;
  return {std::move(Q), is_group, rho.classes()};
}

subset solution_kernel(const solution& s) {
  clifford_structure C(s.base());
  const int n = C.order();
  auto flags = classify(s);
  const bool invariant = flags.is_e_invariant.value_or(false);
  subset K(n);
  for (int a = 0; a < n; ++a) {
    bool in = true;
    for (int e : C.idempotent_list()) {
      if (!invariant && !C.element_leq(e, a)) continue;
      if (!C.is_idempotent(s.theta(e, a))) {
        in = false;
        break;
      }
    }
    if (in) K.insert(a);
  }
  return K;
}

namespace {

// all partitions of {0..n-1} in restricted-growth-string order
void partitions(int n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> rgs(static_cast<size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int max_used) {
    if (i == n) {
      f(rgs);
      return;
    }
    for (int c = 0; c <= max_used + 1 && c < n; ++c) {
      rgs[i] = c;
      rec(i + 1, std::max(max_used, c));
    }
  };
  rec(0, -1);
}

}  // namespace

std::vector<congruence> all_congruences(const finite_semigroup& S) {
  std::vector<congruence> out;
  partitions(S.order(), [&](const std::vector<int>& rgs) {
    try {
      out.emplace_back(S, rgs);
    } catch (const error&) {
      // incompatible partition
    }
  });
  return out;
}

std::vector<congruence_pair> all_congruence_pairs(
    const clifford_structure& C) {
  const int n = C.order();
  const auto& E = C.idempotent_list();
  const int k = static_cast<int>(E.size());
  std::vector<congruence_pair> out;

  std::vector<std::vector<int>> traces;
  partitions(k, [&](const std::vector<int>& rgs) { traces.push_back(rgs); });

  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    subset K(n);
    for (int a = 0; a < n; ++a)
      if (mask & (1u << a)) K.insert(a);
    if (!is_normal_subsemigroup(C, K)) continue;
    for (const auto& rgs : traces) {
      congruence_pair pair;
      pair.kernel = K;
      pair.trace.idempotent_list = E;
      pair.trace.class_of = rgs;
      try {
        rho_from_pair(C, pair);  // full validation
      } catch (const error&) {
        continue;
      }
      out.push_back(std::move(pair));
    }
  }
  return out;
}

}  // namespace pentagon
