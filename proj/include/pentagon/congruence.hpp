#pragma once

#include <utility>
#include <vector>

#include "pentagon/clifford.hpp"
#include "pentagon/semigroup.hpp"
#include "pentagon/solution.hpp"

namespace pentagon {

/// A congruence on a finite semigroup, stored as a class id per element.
/// Ids are canonicalized by first occurrence, so equal congruences have
/// equal arrays. Construction runs the compatibility scan and throws
/// "NotCompatible" with witness (a, a', b, b').
class congruence {
 public:
  congruence(finite_semigroup base, std::vector<int> class_of);

  static congruence identity(const finite_semigroup& S);
  static congruence universal(const finite_semigroup& S);

  const finite_semigroup& base() const { return base_; }
  int class_of(int a) const { return class_of_[a]; }
  int class_count() const { return class_count_; }
  bool related(int a, int b) const { return class_of_[a] == class_of_[b]; }
  const std::vector<int>& classes() const { return class_of_; }

  bool operator==(const congruence& other) const {
    return base_ == other.base_ && class_of_ == other.class_of_;
  }

 private:
  finite_semigroup base_;
  std::vector<int> class_of_;
  int class_count_ = 0;
};

/// A congruence on E(S), stored over the ambient element ids of the
/// idempotents. Canonicalized the same way.
struct trace_congruence {
  std::vector<int> idempotent_list;  // ascending element ids
  std::vector<int> class_of;         // parallel to idempotent_list

  static trace_congruence identity(const std::vector<int>& idempotent_list);
  static trace_congruence universal(const std::vector<int>& idempotent_list);

  bool related(int e, int f) const;
  void canonicalize();

  bool operator==(const trace_congruence&) const = default;
};

/// A pair (K, tau): K a normal subsemigroup, tau a normal congruence on
/// E(S) with the compatibility clause. Validated by rho_from_pair.
struct congruence_pair {
  subset kernel;
  trace_congruence trace;

  bool operator==(const congruence_pair&) const = default;
};

/// (trace, kernel) of rho: the restriction to E(S) and the union of the
/// classes that contain an idempotent.
std::pair<trace_congruence, subset> trace_and_kernel(const congruence& rho);

/// The congruence {(a,b) : (a^-1 a, b^-1 b) in tau, a b^-1 in K} of a
/// congruence pair. Validates the pair first and throws
/// "NotACongruencePair" naming the violated clause; asserts the
/// round-trip laws Ker rho = K and tr rho = tau on the result.
congruence rho_from_pair(const clifford_structure& C,
                         const congruence_pair& pair);

struct quotient_result {
  finite_semigroup semigroup;
  bool is_group = false;
  std::vector<int> class_of;  // element of the base -> quotient element
};

/// Cayley table on the classes; is_group is true iff the quotient has a
/// unique idempotent that acts as a two-sided identity.
quotient_result quotient(const congruence& rho);

/// The kernel of a solution on a Clifford base:
///   K = {a : theta_e(a) in E(S) for every idempotent e <= a}.
/// When s is E-invariant the e <= a guard drops (the two forms agree
/// there); the general form is used otherwise.
subset solution_kernel(const solution& s);

struct normality_report {
  bool value = false;
  std::string reason;
  std::vector<int> witness;
  explicit operator bool() const { return value; }
};

/// E(S) inside K, K closed under products, a^-1 K a inside K for all a.
normality_report is_normal_subsemigroup(const clifford_structure& C,
                                        const subset& K);

/// Every congruence on S (all compatible partitions), deterministic
/// order. Desk-scale only.
std::vector<congruence> all_congruences(const finite_semigroup& S);

/// Every valid congruence pair (K, tau) on a Clifford semigroup,
/// deterministic order. Desk-scale only.
std::vector<congruence_pair> all_congruence_pairs(const clifford_structure& C);

}  // namespace pentagon
