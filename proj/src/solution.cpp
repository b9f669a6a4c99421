#include "pentagon/solution.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace pentagon {

namespace {

std::vector<int> flatten_checked(int n, const std::vector<std::vector<int>>& t,
                                 const char* what) {
  if (static_cast<int>(t.size()) != n)
    throw error("OutOfRangeEntry",
                std::string(what) + " must have " + std::to_string(n) + " rows");
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(t[a].size()) != n)
      throw error("OutOfRangeEntry", std::string(what) + " row " +
                                         std::to_string(a) + " has wrong length");
    for (int b = 0; b < n; ++b) flat.push_back(t[a][b]);
  }
  return flat;
}

void range_check(int n, const std::vector<int>& flat, const char* what) {
  if (static_cast<int>(flat.size()) != n * n)
    throw error("OutOfRangeEntry",
                std::string(what) + " must have n*n entries");
  for (int v : flat)
    if (v < 0 || v >= n)
      throw error("OutOfRangeEntry", std::string(what) + " entry " +
                                         std::to_string(v) + " out of range",
                  {v});
}

}  // namespace

raw_pair_map::raw_pair_map(int order, std::vector<int> mult_table,
                           std::vector<int> theta_table)
    : n(order), mult(std::move(mult_table)), theta(std::move(theta_table)) {
  range_check(n, mult, "mult");
  range_check(n, theta, "theta");
}

solution::solution(finite_semigroup base,
                   const std::vector<std::vector<int>>& theta)
    : solution(std::move(base),
               flatten_checked(static_cast<int>(theta.size()), theta,
                               "theta")) {}

solution::solution(finite_semigroup base, std::vector<int> theta_flat)
    : base_(std::move(base)), theta_(std::move(theta_flat)) {
  const int n = base_.order();
  range_check(n, theta_, "theta");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int ab = base_.product(a, b);
        if (base_.product(theta(a, b), theta(ab, c)) !=
            theta(a, base_.product(b, c)))
          throw error("P1Violated",
                      "theta_a(b) theta_ab(c) != theta_a(bc) at (" +
                          std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(c) + ")",
                      {a, b, c});
        if (theta(theta(a, b), theta(ab, c)) != theta(b, c))
          throw error("P2Violated",
                      "theta_{theta_a(b)}(theta_ab(c)) != theta_b(c) at (" +
                          std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(c) + ")",
                      {a, b, c});
      }
}

std::vector<std::vector<int>> solution::theta_rows() const {
  const int n = base_.order();
  std::vector<std::vector<int>> rows(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a)
    rows[a].assign(theta_.begin() + a * n, theta_.begin() + (a + 1) * n);
  return rows;
}

namespace {

struct triple {
  int x, y, z;
  bool operator==(const triple&) const = default;
};

}  // namespace

pentagon_check check_pentagon_raw(const raw_pair_map& m) {
  const int n = m.n;
  auto s12 = [&](triple t) { return triple{m.m(t.x, t.y), m.t(t.x, t.y), t.z}; };
  auto s23 = [&](triple t) { return triple{t.x, m.m(t.y, t.z), m.t(t.y, t.z)}; };
  auto flip23 = [](triple t) { return triple{t.x, t.z, t.y}; };
  auto s13 = [&](triple t) { return flip23(s12(flip23(t))); };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        triple t{a, b, c};
        if (s23(s13(s12(t))) != s12(s23(t))) return {false, {a, b, c}};
      }
  return {true, {}};
}

solution canonical_i(const finite_semigroup& S) {
  const int n = S.order();
  std::vector<int> theta(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) theta[a * n + b] = b;
  return solution(S, std::move(theta));
}

solution canonical_f(const finite_semigroup& S) {
  const int n = S.order();
  auto inv = inverse_map(S);
  std::vector<int> theta(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) theta[a * n + b] = S.product(b, inv[b]);
  return solution(S, std::move(theta));
}

solution canonical_e(const finite_semigroup& S, int e) {
  if (e < 0 || e >= S.order() || !S.is_idempotent(e))
    throw error("NotIdempotent", std::to_string(e) + " is not idempotent", {e});
  const int n = S.order();
  std::vector<int> theta(static_cast<size_t>(n) * n, e);
  return solution(S, std::move(theta));
}

solution from_idempotent_endomorphism(const finite_semigroup& S,
                                      const std::vector<int>& gamma) {
  const int n = S.order();
  if (static_cast<int>(gamma.size()) != n)
    throw error("OutOfRangeEntry", "gamma must have n entries");
  for (int v : gamma)
    if (v < 0 || v >= n)
      throw error("OutOfRangeEntry", "gamma value out of range", {v});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (gamma[S.product(a, b)] != S.product(gamma[a], gamma[b]))
        throw error("NotEndomorphism",
                    "gamma(ab) != gamma(a)gamma(b) at (" + std::to_string(a) +
                        "," + std::to_string(b) + ")",
                    {a, b});
  for (int a = 0; a < n; ++a)
    if (gamma[gamma[a]] != gamma[a])
      throw error("NotIdempotentMap",
                  "gamma^2 != gamma at " + std::to_string(a), {a});
  std::vector<int> theta(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) theta[a * n + b] = gamma[b];
  return solution(S, std::move(theta));
}

raw_pair_map from_commuting_idempotent_maps(int size, const std::vector<int>& f,
                                            const std::vector<int>& g) {
  if (static_cast<int>(f.size()) != size || static_cast<int>(g.size()) != size)
    throw error("OutOfRangeEntry", "maps must have `size` entries");
  for (int v : f)
    if (v < 0 || v >= size)
      throw error("OutOfRangeEntry", "f value out of range", {v});
  for (int v : g)
    if (v < 0 || v >= size)
      throw error("OutOfRangeEntry", "g value out of range", {v});
  for (int x = 0; x < size; ++x)
    if (f[f[x]] != f[x])
      throw error("PreconditionFailed", "f^2 = f fails at " + std::to_string(x),
                  {x});
  for (int x = 0; x < size; ++x)
    if (g[g[x]] != g[x])
      throw error("PreconditionFailed", "g^2 = g fails at " + std::to_string(x),
                  {x});
  for (int x = 0; x < size; ++x)
    if (f[g[x]] != g[f[x]])
      throw error("PreconditionFailed",
                  "fg = gf fails at " + std::to_string(x), {x});
  std::vector<int> mult(static_cast<size_t>(size) * size);
  std::vector<int> theta(static_cast<size_t>(size) * size);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      mult[a * size + b] = f[a];
      theta[a * size + b] = g[b];
    }
  raw_pair_map m(size, std::move(mult), std::move(theta));
  auto check = check_pentagon_raw(m);
  if (!check)
    throw error("PreconditionFailed", "raw pentagon relation fails",
                {check.witness[0], check.witness[1], check.witness[2]});
  return m;
}

classification_flags classify(const solution& s) {
  const auto& S = s.base();
  const int n = S.order();
  classification_flags flags;

  // commutative <=> C1: acb = abc  and  C2: theta_a = theta_{ab}
  bool c1 = true, c2 = true;
  for (int a = 0; a < n && c1; ++a)
    for (int b = 0; b < n && c1; ++b)
      for (int c = 0; c < n && c1; ++c)
        if (S.product(S.product(a, c), b) != S.product(S.product(a, b), c))
          c1 = false;
  for (int a = 0; a < n && c2; ++a)
    for (int b = 0; b < n && c2; ++b)
      for (int x = 0; x < n && c2; ++x)
        if (s.theta(a, x) != s.theta(S.product(a, b), x)) c2 = false;
  flags.is_commutative = c1 && c2;

  // cocommutative <=> CC1: a theta_b(c) = ac  and  CC2: theta maps commute
  bool cc1 = true, cc2 = true;
  for (int a = 0; a < n && cc1; ++a)
    for (int b = 0; b < n && cc1; ++b)
      for (int c = 0; c < n && cc1; ++c)
        if (S.product(a, s.theta(b, c)) != S.product(a, c)) cc1 = false;
  for (int a = 0; a < n && cc2; ++a)
    for (int b = 0; b < n && cc2; ++b)
      for (int x = 0; x < n && cc2; ++x)
        if (s.theta(a, s.theta(b, x)) != s.theta(b, s.theta(a, x)))
          cc2 = false;
  flags.is_cocommutative = cc1 && cc2;

  // s^2 = id and s^2 = s on the full pair map, mult and theta jointly.
  auto apply = [&](int a, int b) {
    return std::pair<int, int>{S.product(a, b), s.theta(a, b)};
  };
  bool invol = true, idem = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto [x, y] = apply(a, b);
      auto twice = apply(x, y);
      if (twice != std::pair<int, int>{a, b}) invol = false;
      if (twice != std::pair<int, int>{x, y}) idem = false;
    }
  flags.is_involutive = invol;
  flags.is_idempotent_map = idem;

  if (is_clifford(S)) {
    auto E = idempotents(S).elements();
    bool einv = true, efix = true;
    for (int a = 0; a < n; ++a) {
      for (int e : E) {
        if (s.theta(a, e) != e) efix = false;
        if (s.theta(a, e) != s.theta(a, E[0])) einv = false;
      }
    }
    flags.is_e_invariant = einv;
    flags.is_e_fixed = efix;
  }
  return flags;
}

bool identity_report::all_passed() const {
  for (const auto& c : checks)
    if (c.applicable && !c.passed) return false;
  return true;
}

const identity_check& identity_report::operator[](
    const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw error("OutOfRangeEntry", "no identity check named " + name);
}

identity_report verify_identity_suite(const solution& s) {
  clifford_structure C(s.base());
  const int n = C.order();
  const auto E = C.idempotent_list();
  auto th = [&](int a, int b) { return s.theta(a, b); };
  auto mul = [&](int a, int b) { return C.product(a, b); };
  auto inv = [&](int a) { return C.inverse(a); };

  identity_report report;
  auto quantified = [&](std::string name, bool applicable, auto&& body) {
    identity_check check;
    check.name = std::move(name);
    check.applicable = applicable;
    check.passed = true;
    if (applicable) body(check);
    report.checks.push_back(std::move(check));
  };
  auto fail = [](identity_check& c, std::initializer_list<int> w) {
    c.passed = false;
    if (c.witness.empty()) c.witness = w;
  };

  // Identities valid for every solution on a Clifford base.
  quantified("theta_a(a^-1) = theta_{aa^-1}(a)^-1", true, [&](identity_check& c) {
    for (int a = 0; a < n; ++a)
      if (th(a, inv(a)) != inv(th(mul(a, inv(a)), a))) fail(c, {a});
  });
  quantified("theta_a(a^-1 a) = theta_a(a^-1) theta_a(a^-1)^-1", true,
             [&](identity_check& c) {
               for (int a = 0; a < n; ++a) {
                 int lhs = th(a, mul(inv(a), a));
                 int v = th(a, inv(a));
                 if (lhs != mul(v, inv(v))) fail(c, {a});
               }
             });
  quantified("theta_a(a^-1 a) idempotent", true, [&](identity_check& c) {
    for (int a = 0; a < n; ++a)
      if (!C.is_idempotent(th(a, mul(inv(a), a)))) fail(c, {a});
  });
  quantified("theta_{aa^-1} = theta_{theta_{a^-1}(aa^-1)} theta_{a^-1}", true,
             [&](identity_check& c) {
               for (int a = 0; a < n; ++a) {
                 int e = mul(a, inv(a));
                 int d = th(inv(a), e);
                 for (int x = 0; x < n; ++x)
                   if (th(e, x) != th(d, th(inv(a), x))) fail(c, {a, x});
               }
             });
  quantified("theta_a(e) idempotent for a <= e", true, [&](identity_check& c) {
    for (int a = 0; a < n; ++a)
      for (int e : E)
        if (C.element_leq(a, e) && !C.is_idempotent(th(a, e))) fail(c, {a, e});
  });
  // Kernel elements stay idempotent-valued under theta_{ea}.
  {
    subset K(n);
    for (int a = 0; a < n; ++a) {
      bool in = true;
      for (int e : E)
        if (C.element_leq(e, a) && !C.is_idempotent(th(e, a))) in = false;
      if (in) K.insert(a);
    }
    quantified("theta_{ea}(k) idempotent for k in kernel, e <= a, e <= k", true,
               [&](identity_check& c) {
                 for (int a = 0; a < n; ++a)
                   for (int k = 0; k < n; ++k) {
                     if (!K.contains(k)) continue;
                     for (int e : E) {
                       if (!C.element_leq(e, a) || !C.element_leq(e, k))
                         continue;
                       if (!C.is_idempotent(th(mul(e, a), k))) fail(c, {e, a, k});
                     }
                   }
               });
  }
  quantified("theta_a(b) in G_{theta_a(bb^-1)} for a <= b", true,
             [&](identity_check& c) {
               for (int a = 0; a < n; ++a)
                 for (int b = 0; b < n; ++b) {
                   if (!C.element_leq(a, b)) continue;
                   int e = th(a, mul(b, inv(b)));
                   if (C.component_identity_of(th(a, b)) != e) fail(c, {a, b});
                 }
             });
  quantified("theta_a(bb^-1) = theta_a(b) theta_a(b)^-1 for a <= b", true,
             [&](identity_check& c) {
               for (int a = 0; a < n; ++a)
                 for (int b = 0; b < n; ++b) {
                   if (!C.element_leq(a, b)) continue;
                   int v = th(a, b);
                   if (th(a, mul(b, inv(b))) != mul(v, inv(v))) fail(c, {a, b});
                 }
             });
  quantified("theta_a(b)^-1 = theta_{ab}(b^-1) for a <= b", true,
             [&](identity_check& c) {
               for (int a = 0; a < n; ++a)
                 for (int b = 0; b < n; ++b) {
                   if (!C.element_leq(a, b)) continue;
                   if (inv(th(a, b)) != th(mul(a, b), inv(b))) fail(c, {a, b});
                 }
             });

  auto flags = classify(s);
  const bool einv = flags.is_e_invariant.value_or(false);
  const bool efix = flags.is_e_fixed.value_or(false);

  // E-invariant family.
  quantified("theta_e = theta_f on idempotents", einv, [&](identity_check& c) {
    for (int e : E)
      for (int f : E)
        for (int x = 0; x < n; ++x)
          if (th(e, x) != th(f, x)) fail(c, {e, f, x});
  });
  quantified("theta_{ae} = theta_a", einv, [&](identity_check& c) {
    for (int a = 0; a < n; ++a)
      for (int e : E)
        for (int x = 0; x < n; ++x)
          if (th(mul(a, e), x) != th(a, x)) fail(c, {a, e, x});
  });
  quantified("theta_a(e) in E(S)", einv, [&](identity_check& c) {
    for (int a = 0; a < n; ++a)
      for (int e : E)
        if (!C.is_idempotent(th(a, e))) fail(c, {a, e});
  });
  quantified("theta_e theta_a = theta_e", einv, [&](identity_check& c) {
    for (int a = 0; a < n; ++a)
      for (int e : E)
        for (int x = 0; x < n; ++x)
          if (th(e, th(a, x)) != th(e, x)) fail(c, {e, a, x});
  });
  quantified("theta_a(b) = theta_a(eb)", einv, [&](identity_check& c) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int e : E)
          if (th(a, b) != th(a, mul(e, b))) fail(c, {a, b, e});
  });
  quantified("theta_e(a)^-1 = theta_{ea}(a^-1)", einv, [&](identity_check& c) {
    for (int a = 0; a < n; ++a)
      for (int e : E)
        if (inv(th(e, a)) != th(mul(e, a), inv(a))) fail(c, {e, a});
  });

  // E-fixed family.
  quantified("theta_e = theta_e theta_{ae}", efix, [&](identity_check& c) {
    for (int a = 0; a < n; ++a)
      for (int e : E)
        for (int x = 0; x < n; ++x)
          if (th(e, x) != th(e, th(mul(a, e), x))) fail(c, {e, a, x});
  });
  quantified("theta_e idempotent map", efix, [&](identity_check& c) {
    for (int e : E)
      for (int x = 0; x < n; ++x)
        if (th(e, th(e, x)) != th(e, x)) fail(c, {e, x});
  });
  quantified("theta_a(b) = bb^-1 theta_a(b)", efix, [&](identity_check& c) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (th(a, b) != mul(mul(b, inv(b)), th(a, b))) fail(c, {a, b});
  });
  quantified("theta_a(b) theta_a(b)^-1 = bb^-1", efix, [&](identity_check& c) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int v = th(a, b);
        if (mul(v, inv(v)) != mul(b, inv(b))) fail(c, {a, b});
      }
  });
  quantified("theta_a(b) = theta_{a bb^-1}(b)", efix, [&](identity_check& c) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (th(a, b) != th(mul(a, mul(b, inv(b))), b)) fail(c, {a, b});
  });

  return report;
}

namespace {

// Backtracking over bijections psi with psi(ab) = psi(a)psi(b) checked
// on every already-assigned pair; theta equivariance checked when the
// needed images exist. Visits assignments in ascending image order so
// the first hit is deterministic.
class bijection_search {
 public:
  bijection_search(const finite_semigroup& S, const finite_semigroup& T,
                   const std::vector<int>* s_theta,
                   const std::vector<int>* t_theta)
      : S_(S), T_(T), s_theta_(s_theta), t_theta_(t_theta) {}

  // callback returns false to keep searching, true to stop
  template <typename Callback>
  bool run(Callback&& cb) {
    const int n = S_.order();
    if (T_.order() != n) return false;
    psi_.assign(static_cast<size_t>(n), -1);
    used_.assign(static_cast<size_t>(n), false);
    return extend(0, cb);
  }

 private:
  template <typename Callback>
  bool extend(int a, Callback& cb) {
    const int n = S_.order();
    if (a == n) return cb(psi_);
    for (int v = 0; v < n; ++v) {
      if (used_[v]) continue;
      if (S_.is_idempotent(a) != T_.is_idempotent(v)) continue;
      psi_[a] = v;
      used_[v] = true;
      if (consistent(a) && extend(a + 1, cb)) return true;
      psi_[a] = -1;
      used_[v] = false;
    }
    return false;
  }

  bool consistent(int a) const {
    const int n = S_.order();
    for (int x = 0; x <= a; ++x)
      for (int y = 0; y <= a; ++y) {
        int xy = S_.product(x, y);
        if (psi_[xy] >= 0 && T_.product(psi_[x], psi_[y]) != psi_[xy])
          return false;
        if (s_theta_) {
          int v = (*s_theta_)[x * n + y];
          if (psi_[v] >= 0 &&
              (*t_theta_)[psi_[x] * n + psi_[y]] != psi_[v])
            return false;
        }
      }
    return true;
  }

  const finite_semigroup& S_;
  const finite_semigroup& T_;
  const std::vector<int>* s_theta_;
  const std::vector<int>* t_theta_;
  std::vector<int> psi_;
  std::vector<bool> used_;
};

std::vector<int> sorted_component_sizes(const finite_semigroup& S) {
  std::vector<int> sizes;
  auto report = is_clifford(S);
  if (!report) return sizes;
  clifford_structure C(S);
  for (const auto& comp : C.components())
    sizes.push_back(static_cast<int>(comp.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

std::vector<std::vector<int>> automorphisms(const finite_semigroup& S) {
  std::vector<std::vector<int>> out;
  bijection_search search(S, S, nullptr, nullptr);
  search.run([&](const std::vector<int>& psi) {
    out.push_back(psi);
    return false;  // collect all
  });
  return out;
}

std::optional<std::vector<int>> find_isomorphism(const solution& s,
                                                 const solution& t) {
  const auto& S = s.base();
  const auto& T = t.base();
  if (S.order() != T.order()) return std::nullopt;
  if (idempotents(S).count() != idempotents(T).count()) return std::nullopt;
  if (sorted_component_sizes(S) != sorted_component_sizes(T))
    return std::nullopt;

  std::optional<std::vector<int>> result;
  bijection_search search(S, T, &s.theta_table(), &t.theta_table());
  search.run([&](const std::vector<int>& psi) {
    result = psi;
    return true;  // first hit
  });
  return result;
}

solution transport(const solution& s, const std::vector<int>& psi) {
  const int n = s.order();
  const auto& S = s.base();
  std::vector<std::vector<int>> table(static_cast<size_t>(n),
                                      std::vector<int>(static_cast<size_t>(n)));
  std::vector<int> theta(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      table[psi[a]][psi[b]] = psi[S.product(a, b)];
      theta[psi[a] * n + psi[b]] = psi[s.theta(a, b)];
    }
  return solution(finite_semigroup(n, table), std::move(theta));
}

}  // namespace pentagon
