#include "pentagon/semigroup.hpp"

#include <string>

namespace pentagon {

finite_semigroup::finite_semigroup(int order,
                                   const std::vector<std::vector<int>>& table,
                                   std::vector<std::string> names,
                                   std::string display_name)
    : n_(order), names_(std::move(names)), display_name_(std::move(display_name)) {
  if (order <= 0) throw error("OutOfRangeEntry", "order must be positive");
  if (static_cast<int>(table.size()) != n_)
    throw error("OutOfRangeEntry", "table must have exactly " +
                                       std::to_string(n_) + " rows");
  table_.reserve(static_cast<size_t>(n_) * n_);
  for (int a = 0; a < n_; ++a) {
    if (static_cast<int>(table[a].size()) != n_)
      throw error("OutOfRangeEntry",
                  "row " + std::to_string(a) + " must have " +
                      std::to_string(n_) + " entries");
    for (int b = 0; b < n_; ++b) {
      int v = table[a][b];
      if (v < 0 || v >= n_)
        throw error("OutOfRangeEntry",
                    "table[" + std::to_string(a) + "][" + std::to_string(b) +
                        "] = " + std::to_string(v) + " is outside [0, " +
                        std::to_string(n_) + ")",
                    {a, b, v});
      table_.push_back(v);
    }
  }
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (product(product(a, b), c) != product(a, product(b, c)))
          throw error("NotAssociative",
                      "(" + std::to_string(a) + "*" + std::to_string(b) +
                          ")*" + std::to_string(c) + " != " +
                          std::to_string(a) + "*(" + std::to_string(b) + "*" +
                          std::to_string(c) + ")",
                      {a, b, c});
  if (names_.empty()) {
    names_.reserve(static_cast<size_t>(n_));
    for (int a = 0; a < n_; ++a) names_.push_back(std::to_string(a));
  } else if (static_cast<int>(names_.size()) != n_) {
    throw error("OutOfRangeEntry", "names must have exactly " +
                                       std::to_string(n_) + " entries");
  }
}

std::vector<std::vector<int>> finite_semigroup::table_rows() const {
  std::vector<std::vector<int>> rows(static_cast<size_t>(n_));
  for (int a = 0; a < n_; ++a)
    rows[a].assign(table_.begin() + a * n_, table_.begin() + (a + 1) * n_);
  return rows;
}

subset idempotents(const finite_semigroup& S) {
  subset E(S.order());
  for (int e = 0; e < S.order(); ++e)
    if (S.is_idempotent(e)) E.insert(e);
  return E;
}

std::vector<int> inverse_map(const finite_semigroup& S) {
  const int n = S.order();
  std::vector<int> inv(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    std::vector<int> candidates;
    for (int x = 0; x < n; ++x)
      if (S.product(S.product(a, x), a) == a &&
          S.product(S.product(x, a), x) == x)
        candidates.push_back(x);
    if (candidates.size() != 1) {
      std::vector<int> witness = {a};
      witness.insert(witness.end(), candidates.begin(), candidates.end());
      throw error("NotInverseSemigroup",
                  "element " + std::to_string(a) + " has " +
                      std::to_string(candidates.size()) +
                      " inverse candidates",
                  witness);
    }
    inv[a] = candidates[0];
  }
  return inv;
}

clifford_report is_clifford(const finite_semigroup& S) {
  std::vector<int> inv;
  try {
    inv = inverse_map(S);
  } catch (const error& e) {
    return {false, e.what(), e.witness()};
  }
  // For an inverse semigroup, centrality of the idempotents is
  // equivalent to a*a^-1 = a^-1*a for all a, and gives the sharper
  // witness: the non-central idempotent itself.
  const int n = S.order();
  for (int e = 0; e < n; ++e) {
    if (!S.is_idempotent(e)) continue;
    for (int a = 0; a < n; ++a)
      if (S.product(e, a) != S.product(a, e))
        return {false,
                "idempotent " + std::to_string(e) +
                    " does not commute with " + std::to_string(a),
                {e, a}};
  }
  return {true, "", {}};
}

}  // namespace pentagon
