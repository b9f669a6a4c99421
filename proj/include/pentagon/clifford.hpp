#pragma once

#include <optional>
#include <vector>

#include "pentagon/semigroup.hpp"

namespace pentagon {

/// Natural partial order on idempotents: e <= f iff e = ef = fe.
/// Throws "NotIdempotent" when either argument is not idempotent.
bool natural_order(const finite_semigroup& S, int e, int f);

/// The connecting homomorphism phi_{f,e}: G_f -> G_e, b |-> e*b, defined
/// when e <= f. Stored as the verified value table over G_f.
struct connecting_hom {
  int source = -1;  // idempotent f
  int target = -1;  // idempotent e with e <= f
  std::vector<int> domain;  // elements of G_f, ascending
  std::vector<int> image;   // image[i] = target * domain[i]

  int apply(int b) const;
};

/// Decomposition of a Clifford semigroup into its disjoint group
/// components G_e = {b : b b^-1 = e} with the connecting homomorphisms
/// between comparable components. Construction throws "NotClifford".
class clifford_structure {
 public:
  explicit clifford_structure(finite_semigroup S);

  const finite_semigroup& base() const { return base_; }
  int order() const { return base_.order(); }
  int product(int a, int b) const { return base_.product(a, b); }
  int inverse(int a) const { return inverses_[a]; }

  const std::vector<int>& idempotent_list() const { return idempotent_list_; }
  int idempotent_count() const {
    return static_cast<int>(idempotent_list_.size());
  }
  const subset& idempotent_set() const { return idempotent_set_; }
  bool is_idempotent(int a) const { return idempotent_set_.contains(a); }

  /// Index into idempotent_list of the component containing a.
  int component_index_of(int a) const { return component_of_[a]; }
  /// The identity a*a^-1 of the component containing a.
  int component_identity_of(int a) const {
    return idempotent_list_[component_of_[a]];
  }
  const std::vector<std::vector<int>>& components() const {
    return components_;
  }
  const std::vector<int>& component(int e_index) const {
    return components_[e_index];
  }
  /// Position of a within its component's element list.
  int local_index(int a) const { return local_index_[a]; }

  /// The group G_e as a standalone semigroup over local indices,
  /// preserving the component's element order.
  finite_semigroup component_group(int e_index) const;

  /// e <= f on idempotents.
  bool natural_leq(int e, int f) const {
    return product(e, f) == e && product(f, e) == e;
  }
  /// Preorder on all elements: a <= b iff a a^-1 <= b b^-1.
  bool element_leq(int a, int b) const {
    return natural_leq(component_identity_of(a), component_identity_of(b));
  }

  /// phi_{f,e} for e <= f. Throws "NotComparable" otherwise.
  connecting_hom connecting(int f, int e) const;

 private:
  finite_semigroup base_;
  std::vector<int> inverses_;
  subset idempotent_set_;
  std::vector<int> idempotent_list_;  // ascending element index
  std::vector<int> component_of_;    // element -> index into idempotent_list_
  std::vector<int> local_index_;     // element -> position inside component
  std::vector<std::vector<int>> components_;  // ascending element lists
};

/// Preorder on elements of a Clifford semigroup.
bool element_preorder(const clifford_structure& C, int a, int b);

/// Strong-semilattice-of-groups presentation: a meet table on the nodes,
/// a group table per node, and homomorphism tables for comparable node
/// pairs (from >= to). Homs for covering pairs suffice; composites are
/// derived and checked. Node i's identity becomes the i-th idempotent of
/// the built semigroup; elements are numbered by concatenating the
/// groups in node order.
struct semilattice_spec {
  struct hom {
    int from = -1;  // node index, higher in the order
    int to = -1;    // node index, lower
    std::vector<int> map;  // local index in group `from` -> local in `to`
  };

  std::vector<std::vector<int>> meets;
  std::vector<std::vector<std::vector<int>>> groups;
  std::vector<hom> homs;
};

/// Builds the Clifford semigroup a spec describes. Throws
/// "SpecInconsistent" when the meet table is not a semilattice, a hom is
/// not a group homomorphism, a comparable pair has no derivable hom, or
/// the composition law fails on some chain.
finite_semigroup build_from_semilattice(const semilattice_spec& spec);

/// The spec a decomposition induces (all comparable pairs listed). The
/// node order is the idempotent-list order, so rebuilding yields the
/// same Cayley table whenever the original numbering already lists each
/// component contiguously in idempotent order; `canonical_numbering`
/// gives the renumbering that makes this hold in general.
semilattice_spec extract_spec(const clifford_structure& C);

/// old element index -> canonical index (components concatenated in
/// idempotent-list order, ascending inside each component).
std::vector<int> canonical_numbering(const clifford_structure& C);

}  // namespace pentagon
