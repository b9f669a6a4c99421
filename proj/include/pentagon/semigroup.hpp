#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace pentagon {

/// Structured failure: `kind` is a stable machine-readable tag
/// ("NotAssociative", "P1Violated", ...) and `witness` holds the
/// element indices that exhibit the failure, when there are any.
class error : public std::runtime_error {
 public:
  error(std::string kind, const std::string& message,
        std::vector<int> witness = {})
      : std::runtime_error(kind + ": " + message),
        kind_(std::move(kind)),
        witness_(std::move(witness)) {}

  const std::string& kind() const { return kind_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::string kind_;
  std::vector<int> witness_;
};

/// Membership mask over the elements {0, ..., n-1} of an ambient
/// semigroup. Used for E(S), kernels and image sets.
class subset {
 public:
  subset() = default;
  explicit subset(int universe, bool value = false)
      : mask_(static_cast<size_t>(universe), value ? 1 : 0) {}

  static subset of(int universe, std::initializer_list<int> elements) {
    subset s(universe);
    for (int a : elements) s.insert(a);
    return s;
  }

  int universe() const { return static_cast<int>(mask_.size()); }
  bool contains(int a) const { return mask_[static_cast<size_t>(a)] != 0; }
  void insert(int a) { mask_[static_cast<size_t>(a)] = 1; }
  void erase(int a) { mask_[static_cast<size_t>(a)] = 0; }

  int count() const {
    int c = 0;
    for (char m : mask_) c += m;
    return c;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (int a = 0; a < universe(); ++a)
      if (mask_[static_cast<size_t>(a)]) out.push_back(a);
    return out;
  }

  bool is_subset_of(const subset& other) const {
    for (int a = 0; a < universe(); ++a)
      if (contains(a) && !other.contains(a)) return false;
    return true;
  }

  subset& operator|=(const subset& other) {
    for (int a = 0; a < universe(); ++a)
      if (other.contains(a)) insert(a);
    return *this;
  }

  bool operator==(const subset&) const = default;

 private:
  std::vector<char> mask_;
};

/// A finite semigroup given by its Cayley table. Elements are the dense
/// indices 0..n-1; `names` are display-only metadata. Construction
/// validates closure and associativity (exhaustive triple scan) and
/// throws `error` with kind "OutOfRangeEntry" or "NotAssociative"
/// (witness = the lexicographically first failing triple).
class finite_semigroup {
 public:
  finite_semigroup(int order, const std::vector<std::vector<int>>& table,
                   std::vector<std::string> names = {},
                   std::string display_name = "");

  int order() const { return n_; }
  int product(int a, int b) const { return table_[a * n_ + b]; }
  bool is_idempotent(int e) const { return product(e, e) == e; }

  const std::string& display_name() const { return display_name_; }
  const std::string& name_of(int a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }

  const std::vector<int>& table() const { return table_; }
  std::vector<std::vector<int>> table_rows() const;

  /// Equality of the algebraic content only; names are ignored.
  bool operator==(const finite_semigroup& other) const {
    return n_ == other.n_ && table_ == other.table_;
  }

 private:
  int n_;
  std::vector<int> table_;  // row-major, table_[a*n+b] = a*b
  std::vector<std::string> names_;
  std::string display_name_;
};

/// E(S) as a mask.
subset idempotents(const finite_semigroup& S);

/// For each a the unique x with axa = a and xax = x. Throws
/// "NotInverseSemigroup" (witness = the element with 0 or >= 2
/// candidates, followed by the candidates found).
std::vector<int> inverse_map(const finite_semigroup& S);

struct clifford_report {
  bool value = false;
  std::string reason;        // empty when value is true
  std::vector<int> witness;  // offending element(s), if any
  explicit operator bool() const { return value; }
};

/// True iff S is inverse and every idempotent is central. On failure the
/// report names the first witness found (non-unique inverse, or an
/// element/idempotent pair that fails centrality).
clifford_report is_clifford(const finite_semigroup& S);

}  // namespace pentagon
