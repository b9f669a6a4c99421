#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pentagon/clifford.hpp"
#include "pentagon/semigroup.hpp"

namespace pentagon {

/// A candidate pair map s(a,b) = (mult[a][b], theta[a][b]) with no
/// axioms assumed beyond entries being in range.
struct raw_pair_map {
  int n = 0;
  std::vector<int> mult;   // row-major n*n
  std::vector<int> theta;  // row-major n*n

  raw_pair_map() = default;
  raw_pair_map(int order, std::vector<int> mult_table,
               std::vector<int> theta_table);

  int m(int a, int b) const { return mult[a * n + b]; }
  int t(int a, int b) const { return theta[a * n + b]; }
};

/// A set-theoretical pentagon solution s(a,b) = (ab, theta_a(b)) on a
/// finite semigroup. Construction runs the axiom scan
///   P1: theta_a(b) theta_{ab}(c) = theta_a(bc)
///   P2: theta_{theta_a(b)}(theta_{ab}(c)) = theta_b(c)
/// and throws "P1Violated"/"P2Violated" with the lexicographically first
/// failing triple.
class solution {
 public:
  solution(finite_semigroup base, const std::vector<std::vector<int>>& theta);
  solution(finite_semigroup base, std::vector<int> theta_flat);

  const finite_semigroup& base() const { return base_; }
  int order() const { return base_.order(); }
  int theta(int a, int b) const { return theta_[a * base_.order() + b]; }
  const std::vector<int>& theta_table() const { return theta_; }
  std::vector<std::vector<int>> theta_rows() const;

  raw_pair_map raw() const { return {base_.order(), base_.table(), theta_}; }

  bool operator==(const solution& other) const {
    return base_ == other.base_ && theta_ == other.theta_;
  }

 private:
  finite_semigroup base_;
  std::vector<int> theta_;
};

struct pentagon_check {
  bool holds = false;
  std::array<int, 3> witness{};  // first triple where the sides differ
  explicit operator bool() const { return holds; }
};

/// Evaluates both sides of s23 s13 s12 = s12 s23 on every triple of S^3,
/// composing the literal maps s12 = s x id, s23 = id x s and
/// s13 = (id x tau) s12 (id x tau). Independent of the axiom scan; the
/// two must agree on every raw pair map.
pentagon_check check_pentagon_raw(const raw_pair_map& m);

/// The canonical solutions every Clifford semigroup carries:
///   I(a,b) = (ab, b),  F(a,b) = (ab, b b^-1),  E(a,b) = (ab, e).
solution canonical_i(const finite_semigroup& S);
solution canonical_f(const finite_semigroup& S);
solution canonical_e(const finite_semigroup& S, int e);

/// s(a,b) = (ab, gamma(b)) for an idempotent endomorphism gamma. Throws
/// "NotEndomorphism" / "NotIdempotentMap".
solution from_idempotent_endomorphism(const finite_semigroup& S,
                                      const std::vector<int>& gamma);

/// s(a,b) = (f(a), g(b)) for commuting idempotent maps on a bare set of
/// the given size; validated through the raw pentagon check. Throws
/// "PreconditionFailed" naming the equation (f^2 = f, g^2 = g, fg = gf)
/// that fails.
raw_pair_map from_commuting_idempotent_maps(int size,
                                            const std::vector<int>& f,
                                            const std::vector<int>& g);

/// E-invariance / E-fixedness follow the Clifford convention, so they
/// are "not applicable" (nullopt) on a non-Clifford base.
struct classification_flags {
  bool is_commutative = false;
  bool is_cocommutative = false;
  bool is_involutive = false;
  bool is_idempotent_map = false;
  std::optional<bool> is_e_invariant;
  std::optional<bool> is_e_fixed;

  bool operator==(const classification_flags&) const = default;
};

classification_flags classify(const solution& s);

struct identity_check {
  std::string name;
  bool applicable = false;
  bool passed = false;
  std::vector<int> witness;  // meaningful when applicable and not passed
};

struct identity_report {
  std::vector<identity_check> checks;
  bool all_passed() const;
  const identity_check& operator[](const std::string& name) const;
};

/// Runs the Clifford-specific theta identities against s: the general
/// ones hold for any solution on a Clifford base, the invariant/fixed
/// families only when the corresponding flag does (reported as not
/// applicable otherwise).
identity_report verify_identity_suite(const solution& s);

/// All bijections of S preserving the Cayley table.
std::vector<std::vector<int>> automorphisms(const finite_semigroup& S);

/// A semigroup isomorphism psi with psi(theta_a(b)) =
/// eta_{psi(a)}(psi(b)) for all a, b, or nullopt. Searched by pruned
/// backtracking over candidate bijections.
std::optional<std::vector<int>> find_isomorphism(const solution& s,
                                                 const solution& t);

/// The image of s under a relabeling of its base: theta'[psi(a)][psi(b)]
/// = psi(theta[a][b]) over the relabeled table.
solution transport(const solution& s, const std::vector<int>& psi);

}  // namespace pentagon
