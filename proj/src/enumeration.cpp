#include "pentagon/enumeration.hpp"

#include <algorithm>
#include <thread>

#include "pentagon/clifford.hpp"

namespace pentagon {

std::optional<solution_class> solution_class_from_name(const std::string& s) {
  if (s == "commutative") return solution_class::commutative;
  if (s == "cocommutative") return solution_class::cocommutative;
  if (s == "involutive") return solution_class::involutive;
  if (s == "idempotent-map") return solution_class::idempotent_map;
  if (s == "e-invariant") return solution_class::e_invariant;
  if (s == "e-fixed") return solution_class::e_fixed;
  if (s == "neither") return solution_class::neither;
  return std::nullopt;
}

const char* to_string(solution_class c) {
  switch (c) {
    case solution_class::commutative: return "commutative";
    case solution_class::cocommutative: return "cocommutative";
    case solution_class::involutive: return "involutive";
    case solution_class::idempotent_map: return "idempotent-map";
    case solution_class::e_invariant: return "e-invariant";
    case solution_class::e_fixed: return "e-fixed";
    case solution_class::neither: return "neither";
  }
  return "?";
}

bool matches(const classification_flags& flags, solution_class c) {
  switch (c) {
    case solution_class::commutative: return flags.is_commutative;
    case solution_class::cocommutative: return flags.is_cocommutative;
    case solution_class::involutive: return flags.is_involutive;
    case solution_class::idempotent_map: return flags.is_idempotent_map;
    case solution_class::e_invariant:
      return flags.is_e_invariant.value_or(false);
    case solution_class::e_fixed: return flags.is_e_fixed.value_or(false);
    case solution_class::neither:
      return flags.is_e_invariant.has_value() &&
             !flags.is_e_invariant.value() && !flags.is_e_fixed.value();
  }
  return false;
}

namespace {

// Depth-first assignment of theta cells in a fixed order (idempotent
// rows first), with a fixpoint propagation pass after every branch:
//   P1  theta_a(bc) = theta_a(b) theta_{ab}(c)   forces the bc cell,
//   P2  theta_{theta_a(b)}(theta_{ab}(c)) = theta_b(c)
// forces either side once the other is known. All effects are recorded
// on a trail and undone on backtrack.
class theta_search {
 public:
  theta_search(const finite_semigroup& S, std::vector<int>* out_sink)
      : S_(S), n_(S.order()), theta_(static_cast<size_t>(n_) * n_, -1),
        sink_(out_sink) {
    subset E = idempotents(S_);
    for (int e : E.elements())
      for (int c = 0; c < n_; ++c) cells_.push_back(e * n_ + c);
    for (int a = 0; a < n_; ++a) {
      if (E.contains(a)) continue;
      for (int c = 0; c < n_; ++c) cells_.push_back(a * n_ + c);
    }
  }

  int first_cell() const { return cells_[0]; }

  // Enumerates completions with cells_[0] pinned to each value in
  // `first_values`, ascending.
  void run(const std::vector<int>& first_values) {
    for (int v : first_values) {
      std::vector<int> trail;
      if (assign(cells_[0], v, trail)) search(1);
      for (int cell : trail) theta_[cell] = -1;
    }
  }

 private:
  bool assign(int cell, int value, std::vector<int>& trail) {
    theta_[cell] = value;
    trail.push_back(cell);
    return propagate(trail);
  }

  bool propagate(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
          const int tab = theta_[a * n_ + b];
          if (tab < 0) continue;
          const int ab = S_.product(a, b);
          for (int c = 0; c < n_; ++c) {
            const int tabc = theta_[ab * n_ + c];
            if (tabc < 0) continue;
            // P1 forces theta_a(bc)
            const int forced = S_.product(tab, tabc);
            const int bc_cell = a * n_ + S_.product(b, c);
            if (theta_[bc_cell] < 0) {
              theta_[bc_cell] = forced;
              trail.push_back(bc_cell);
              changed = true;
            } else if (theta_[bc_cell] != forced) {
              return false;
            }
            // P2 links theta_{tab}(tabc) and theta_b(c)
            const int left_cell = tab * n_ + tabc;
            const int right_cell = b * n_ + c;
            const int left = theta_[left_cell];
            const int right = theta_[right_cell];
            if (left >= 0 && right >= 0) {
              if (left != right) return false;
            } else if (left >= 0) {
              theta_[right_cell] = left;
              trail.push_back(right_cell);
              changed = true;
            } else if (right >= 0) {
              theta_[left_cell] = right;
              trail.push_back(left_cell);
              changed = true;
            }
          }
        }
    }
    return true;
  }

  void search(size_t k) {
    while (k < cells_.size() && theta_[cells_[k]] >= 0) ++k;
    if (k == cells_.size()) {
      if (full_check()) {
        sink_->insert(sink_->end(), theta_.begin(), theta_.end());
      }
      return;
    }
    const int cell = cells_[k];
    for (int v = 0; v < n_; ++v) {
      std::vector<int> trail;
      if (assign(cell, v, trail)) search(k + 1);
      for (int c : trail) theta_[c] = -1;
    }
  }

  // final safety net over the completed table
  bool full_check() const {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        const int ab = S_.product(a, b);
        for (int c = 0; c < n_; ++c) {
          if (S_.product(theta_[a * n_ + b], theta_[ab * n_ + c]) !=
              theta_[a * n_ + S_.product(b, c)])
            return false;
          if (theta_[theta_[a * n_ + b] * n_ + theta_[ab * n_ + c]] !=
              theta_[b * n_ + c])
            return false;
        }
      }
    return true;
  }

  const finite_semigroup& S_;
  const int n_;
  std::vector<int> theta_;
  std::vector<int> cells_;
  std::vector<int>* sink_;
};

}  // namespace

bool matches_all(const classification_flags& flags, const class_filter& f) {
  for (solution_class c : f)
    if (!matches(flags, c)) return false;
  return true;
}

std::vector<solution> enumerate_solutions(const finite_semigroup& S,
                                          solution_class filter, int threads) {
  return enumerate_solutions(S, class_filter{filter}, threads);
}

std::vector<solution> enumerate_solutions(const finite_semigroup& S,
                                          const class_filter& filter,
                                          int threads) {
  const int n = S.order();
  if (threads < 1) threads = 1;

  // Static partition of the first branch cell's values; worker w owns
  // the values congruent to w, so the union is exact and disjoint.
  std::vector<std::vector<int>> owned(static_cast<size_t>(threads));
  for (int v = 0; v < n; ++v) owned[v % threads].push_back(v);

  std::vector<std::vector<int>> flat_results(static_cast<size_t>(threads));
  auto work = [&](int w) {
    theta_search search(S, &flat_results[w]);
    search.run(owned[w]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  std::vector<std::vector<int>> tables;
  for (const auto& flat : flat_results)
    for (size_t i = 0; i < flat.size(); i += static_cast<size_t>(n) * n)
      tables.emplace_back(flat.begin() + i, flat.begin() + i + n * n);
  std::sort(tables.begin(), tables.end());

  std::vector<solution> out;
  out.reserve(tables.size());
  for (auto& t : tables) {
    solution s(S, std::move(t));
    if (filter.empty() || matches_all(classify(s), filter))
      out.push_back(std::move(s));
  }
  return out;
}

std::vector<solution> enumerate_up_to_iso(const finite_semigroup& S,
                                          int threads) {
  std::vector<solution> all = enumerate_solutions(S, class_filter{}, threads);
  auto auts = automorphisms(S);
  std::vector<solution> reps;
  std::vector<bool> seen(all.size(), false);
  auto index_of = [&](const std::vector<int>& theta) {
    for (size_t i = 0; i < all.size(); ++i)
      if (all[i].theta_table() == theta) return i;
    throw error("InternalCheckFailed",
                "automorphism transport left the solution set");
  };
  for (size_t i = 0; i < all.size(); ++i) {
    if (seen[i]) continue;
    reps.push_back(all[i]);  // lexicographically least: `all` is sorted
    for (const auto& psi : auts) {
      solution moved = transport(all[i], psi);
      seen[index_of(moved.theta_table())] = true;
    }
  }
  return reps;
}

census_entry census_one(const finite_semigroup& S, const std::string& name,
                        int threads) {
  census_entry entry;
  entry.name = name;
  entry.order = S.order();
  entry.n_idempotents = idempotents(S).count();

  auto all = enumerate_solutions(S, class_filter{}, threads);
  entry.total = static_cast<long long>(all.size());
  const bool clifford = static_cast<bool>(is_clifford(S));
  if (clifford) {
    clifford_structure C(S);
    for (const auto& comp : C.components())
      entry.component_sizes.push_back(static_cast<int>(comp.size()));
  }
  if (!clifford) {
    entry.n_e_invariant = entry.n_e_fixed = entry.n_neither = -1;
  }
  for (const auto& s : all) {
    auto flags = classify(s);
    entry.n_commutative += flags.is_commutative;
    entry.n_cocommutative += flags.is_cocommutative;
    entry.n_involutive += flags.is_involutive;
    entry.n_idempotent_map += flags.is_idempotent_map;
    if (clifford) {
      entry.n_e_invariant += flags.is_e_invariant.value();
      entry.n_e_fixed += flags.is_e_fixed.value();
      entry.n_neither +=
          !flags.is_e_invariant.value() && !flags.is_e_fixed.value();
    }
  }
  entry.representatives = enumerate_up_to_iso(S, threads);
  entry.n_iso_classes = static_cast<long long>(entry.representatives.size());
  return entry;
}

}  // namespace pentagon
