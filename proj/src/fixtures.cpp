#include "pentagon/fixtures.hpp"

#include "pentagon/clifford.hpp"

namespace pentagon::fixtures {

namespace {

finite_semigroup cyclic(int n, std::string name) {
  std::vector<std::vector<int>> table(static_cast<size_t>(n),
                                      std::vector<int>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return finite_semigroup(n, table, {}, std::move(name));
}

}  // namespace

finite_semigroup trivial() {
  return finite_semigroup(1, {{0}}, {"1"}, "trivial");
}

finite_semigroup z2() { return cyclic(2, "z2"); }
finite_semigroup z3() { return cyclic(3, "z3"); }
finite_semigroup z4() { return cyclic(4, "z4"); }

finite_semigroup s3() {
  return finite_semigroup(3, {{0, 1, 2}, {1, 1, 2}, {2, 2, 1}},
                          {"1", "a", "b"}, "s3");
}

finite_semigroup chain2() {
  return finite_semigroup(2, {{0, 1}, {1, 1}}, {"e", "f"}, "chain2");
}

finite_semigroup chain3() {
  return finite_semigroup(3, {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}},
                          {"e", "f", "g"}, "chain3");
}

finite_semigroup z4_over_z2() {
  semilattice_spec spec;
  spec.meets = {{0, 1}, {1, 1}};
  spec.groups = {{{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}},
                 {{0, 1}, {1, 0}}};
  spec.homs = {{0, 1, {0, 1, 0, 1}}};  // reduction mod 2
  finite_semigroup built = build_from_semilattice(spec);
  return finite_semigroup(built.order(), built.table_rows(),
                          {"0", "1", "2", "3", "f0", "f1"}, "z4_over_z2");
}

finite_semigroup brandt_b2() {
  // elements: e11, e12, e21, e22, zero
  return finite_semigroup(5,
                          {{0, 1, 4, 4, 4},
                           {4, 4, 0, 1, 4},
                           {2, 3, 4, 4, 4},
                           {4, 4, 2, 3, 4},
                           {4, 4, 4, 4, 4}},
                          {"e11", "e12", "e21", "e22", "0"}, "brandt_b2");
}

finite_semigroup left_zero2() {
  return finite_semigroup(2, {{0, 0}, {1, 1}}, {"x", "y"}, "left_zero2");
}

solution s3_gamma_solution() {
  return solution(s3(), {{1, 1, 2}, {1, 1, 2}, {1, 1, 2}});
}

solution s3_outlier_solution() {
  return solution(s3(), {{1, 1, 1}, {0, 1, 1}, {0, 1, 1}});
}

std::vector<std::pair<std::string, finite_semigroup>> clifford_fixtures() {
  return {{"trivial", trivial()},       {"z2", z2()},
          {"z3", z3()},                 {"z4", z4()},
          {"s3", s3()},                 {"chain2", chain2()},
          {"chain3", chain3()},         {"z4_over_z2", z4_over_z2()}};
}

}  // namespace pentagon::fixtures
