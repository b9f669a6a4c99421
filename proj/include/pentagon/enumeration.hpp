#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pentagon/semigroup.hpp"
#include "pentagon/solution.hpp"

namespace pentagon {

/// Flags a solution must carry to pass an enumeration filter. "neither"
/// selects solutions that are neither E-invariant nor E-fixed.
enum class solution_class {
  commutative,
  cocommutative,
  involutive,
  idempotent_map,
  e_invariant,
  e_fixed,
  neither,
};

std::optional<solution_class> solution_class_from_name(const std::string& s);
const char* to_string(solution_class c);
bool matches(const classification_flags& flags, solution_class c);

/// A conjunction of required classes; empty means no filtering.
using class_filter = std::vector<solution_class>;
bool matches_all(const classification_flags& flags, const class_filter& f);

/// All theta tables on S satisfying P1 and P2, each exactly once, in
/// lexicographic (row-major) theta order. Backtracking over cells with
/// idempotent rows branched first; P1 propagates forced entries, P2 is
/// checked and propagated incrementally. Workers own disjoint slices of
/// the first branch cell's values, so the output is identical for every
/// thread count.
std::vector<solution> enumerate_solutions(const finite_semigroup& S,
                                          const class_filter& filter = {},
                                          int threads = 1);
std::vector<solution> enumerate_solutions(const finite_semigroup& S,
                                          solution_class filter,
                                          int threads = 1);

/// One least-lexicographic representative per orbit of the automorphism
/// group of S acting on the full solution set.
std::vector<solution> enumerate_up_to_iso(const finite_semigroup& S,
                                          int threads = 1);

struct census_entry {
  std::string name;
  int order = 0;
  int n_idempotents = 0;
  std::vector<int> component_sizes;  // empty for a non-Clifford base
  long long total = 0;
  long long n_iso_classes = 0;
  long long n_commutative = 0;
  long long n_cocommutative = 0;
  long long n_involutive = 0;
  long long n_idempotent_map = 0;
  // -1 when not applicable (non-Clifford base)
  long long n_e_invariant = 0;
  long long n_e_fixed = 0;
  long long n_neither = 0;
  std::vector<solution> representatives;  // iso-class representatives
};

census_entry census_one(const finite_semigroup& S, const std::string& name,
                        int threads = 1);

}  // namespace pentagon
