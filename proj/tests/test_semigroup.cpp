#include <doctest.h>

#include <functional>

#include "pentagon/fixtures.hpp"
#include "pentagon/semigroup.hpp"

using namespace pentagon;

namespace {

error thrown(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e;
  }
  FAIL("expected a pentagon::error");
  return error("none", "none");
}

}  // namespace

TEST_CASE("validate_table accepts the named fixtures") {
  CHECK(fixtures::s3().order() == 3);
  CHECK(fixtures::trivial().order() == 1);
  CHECK(fixtures::s3().product(2, 2) == 1);  // b*b = a
  CHECK(fixtures::s3().product(1, 2) == 2);  // a*b = b
}

TEST_CASE("validate_table rejects a non-associative table with a witness") {
  auto e = thrown([] { finite_semigroup(2, {{0, 1}, {0, 0}}); });
  CHECK(e.kind() == "NotAssociative");
  // lexicographically first failing triple
  CHECK(e.witness() == std::vector<int>{1, 0, 1});
}

TEST_CASE("validate_table rejects out-of-range entries") {
  auto e = thrown([] { finite_semigroup(2, {{0, 2}, {1, 0}}); });
  CHECK(e.kind() == "OutOfRangeEntry");
  CHECK(e.witness() == std::vector<int>{0, 1, 2});
  CHECK(thrown([] { finite_semigroup(2, {{0, 1}}); }).kind() ==
        "OutOfRangeEntry");
}

TEST_CASE("idempotents") {
  CHECK(idempotents(fixtures::s3()).elements() == std::vector<int>{0, 1});
  CHECK(idempotents(fixtures::trivial()).elements() == std::vector<int>{0});
  CHECK(idempotents(fixtures::z2()).elements() == std::vector<int>{0});
  CHECK(idempotents(fixtures::chain3()).count() == 3);
}

TEST_CASE("inverse_map on inverse semigroups") {
  CHECK(inverse_map(fixtures::s3()) == std::vector<int>{0, 1, 2});
  CHECK(inverse_map(fixtures::z4()) == std::vector<int>{0, 3, 2, 1});
  CHECK(inverse_map(fixtures::brandt_b2()) ==
        std::vector<int>{0, 2, 1, 3, 4});
}

TEST_CASE("inverse_map rejects the left-zero semigroup") {
  auto e = thrown([] { inverse_map(fixtures::left_zero2()); });
  CHECK(e.kind() == "NotInverseSemigroup");
  // both elements invert the witness element
  CHECK(e.witness().size() == 3);
}

TEST_CASE("is_clifford") {
  CHECK(is_clifford(fixtures::s3()));
  CHECK(is_clifford(fixtures::z3()));
  CHECK(is_clifford(fixtures::z4_over_z2()));
  CHECK_FALSE(is_clifford(fixtures::left_zero2()));

  auto report = is_clifford(fixtures::brandt_b2());
  CHECK_FALSE(report);
  // witness pair: a non-central idempotent and the element it misses
  REQUIRE(report.witness.size() == 2);
  int e = report.witness[0], a = report.witness[1];
  const auto B = fixtures::brandt_b2();
  CHECK(B.is_idempotent(e));
  CHECK(B.product(e, a) != B.product(a, e));
}

TEST_CASE("inverse laws hold on every Clifford fixture") {
  for (const auto& [name, S] : fixtures::clifford_fixtures()) {
    CAPTURE(name);
    auto inv = inverse_map(S);
    auto E = idempotents(S);
    for (int a = 0; a < S.order(); ++a) {
      CHECK(inv[inv[a]] == a);
      int e = S.product(a, inv[a]);
      CHECK(E.contains(e));
      CHECK(inv[e] == e);
      for (int b = 0; b < S.order(); ++b)
        CHECK(inv[S.product(a, b)] == S.product(inv[b], inv[a]));
    }
    // E(S) is a semilattice: closed under the product
    for (int e : E.elements())
      for (int f : E.elements()) CHECK(E.contains(S.product(e, f)));
  }
}

TEST_CASE("associativity holds on every fixture (quantified)") {
  auto check = [](const finite_semigroup& S) {
    for (int a = 0; a < S.order(); ++a)
      for (int b = 0; b < S.order(); ++b)
        for (int c = 0; c < S.order(); ++c)
          CHECK(S.product(S.product(a, b), c) ==
                S.product(a, S.product(b, c)));
  };
  for (const auto& [name, S] : fixtures::clifford_fixtures()) check(S);
  check(fixtures::brandt_b2());
  check(fixtures::left_zero2());
}

TEST_CASE("subset basics") {
  subset s = subset::of(4, {1, 3});
  CHECK(s.count() == 2);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(0));
  CHECK(s.elements() == std::vector<int>{1, 3});
  subset t(4);
  t.insert(0);
  t |= s;
  CHECK(t.elements() == std::vector<int>{0, 1, 3});
  CHECK(s.is_subset_of(t));
  CHECK_FALSE(t.is_subset_of(s));
}
