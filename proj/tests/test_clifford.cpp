#include <doctest.h>

#include <functional>

#include "pentagon/clifford.hpp"
#include "pentagon/fixtures.hpp"

using namespace pentagon;

namespace {

std::string thrown_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.kind();
  }
  return "";
}

// relabel a Cayley table by a bijection
finite_semigroup relabel(const finite_semigroup& S,
                         const std::vector<int>& psi) {
  const int n = S.order();
  std::vector<std::vector<int>> t(static_cast<size_t>(n),
                                  std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[psi[a]][psi[b]] = psi[S.product(a, b)];
  return finite_semigroup(n, t);
}

}  // namespace

TEST_CASE("natural_order on s3") {
  auto S = fixtures::s3();
  CHECK(natural_order(S, 1, 0));        // a <= 1
  CHECK(natural_order(S, 1, 1));        // reflexive
  CHECK_FALSE(natural_order(S, 0, 1));  // 1 <= a fails
  CHECK(thrown_kind([&] { natural_order(S, 2, 0); }) == "NotIdempotent");
}

TEST_CASE("element preorder on s3 and the factorization characterization") {
  clifford_structure C(fixtures::s3());
  CHECK(element_preorder(C, 2, 0));        // b <= 1 since bb^-1 = a <= 1
  CHECK(element_preorder(C, 1, 1));        // reflexive
  CHECK_FALSE(element_preorder(C, 0, 2));  // 1 <= b fails

  // a <= b  <=>  exists u with a = ub or a = bu, on every Clifford fixture
  for (const auto& [name, S] : fixtures::clifford_fixtures()) {
    CAPTURE(name);
    clifford_structure D(S);
    for (int a = 0; a < S.order(); ++a)
      for (int b = 0; b < S.order(); ++b) {
        bool factorizes = false;
        for (int u = 0; u < S.order(); ++u)
          if (S.product(u, b) == a || S.product(b, u) == a) factorizes = true;
        CHECK(element_preorder(D, a, b) == factorizes);
      }
  }
}

TEST_CASE("decompose s3 into its group components") {
  clifford_structure C(fixtures::s3());
  CHECK(C.idempotent_list() == std::vector<int>{0, 1});
  CHECK(C.component(0) == std::vector<int>{0});
  CHECK(C.component(1) == std::vector<int>{1, 2});
  CHECK(C.component_identity_of(2) == 1);  // bb^-1 = a
  // G_a is Z2 with identity a
  CHECK(C.component_group(1).table_rows() ==
        std::vector<std::vector<int>>{{0, 1}, {1, 0}});
}

TEST_CASE("decompose of a group and of a semilattice") {
  clifford_structure Z(fixtures::z4());
  CHECK(Z.idempotent_count() == 1);
  CHECK(Z.component(0).size() == 4);

  clifford_structure L(fixtures::chain2());
  CHECK(L.idempotent_count() == 2);
  CHECK(L.component(0) == std::vector<int>{0});
  CHECK(L.component(1) == std::vector<int>{1});
}

TEST_CASE("decompose rejects non-Clifford input") {
  CHECK(thrown_kind([] { clifford_structure C(fixtures::brandt_b2()); }) ==
        "NotClifford");
}

TEST_CASE("connecting homs") {
  clifford_structure C(fixtures::s3());
  auto phi = C.connecting(0, 1);  // G_1 -> G_a
  CHECK(phi.domain == std::vector<int>{0});
  CHECK(phi.image == std::vector<int>{1});  // 1 |-> a

  auto id = C.connecting(1, 1);  // phi_{e,e} is the identity on G_e
  CHECK(id.domain == id.image);

  CHECK(thrown_kind([&] { C.connecting(1, 0); }) == "NotComparable");
}

TEST_CASE("connecting homs compose along chains") {
  clifford_structure C(fixtures::chain3());
  auto top_mid = C.connecting(0, 1);
  auto mid_bot = C.connecting(1, 2);
  auto top_bot = C.connecting(0, 2);
  for (size_t i = 0; i < top_mid.domain.size(); ++i)
    CHECK(top_bot.image[i] == mid_bot.apply(top_mid.image[i]));
}

TEST_CASE("build_from_semilattice reconstructs the s3 fixture exactly") {
  semilattice_spec spec;
  spec.meets = {{0, 1}, {1, 1}};
  spec.groups = {{{0}}, {{0, 1}, {1, 0}}};
  spec.homs = {{0, 1, {0}}};
  finite_semigroup built = build_from_semilattice(spec);
  CHECK(built.table_rows() == fixtures::s3().table_rows());
}

TEST_CASE("build_from_semilattice on a single node returns the group") {
  semilattice_spec spec;
  spec.meets = {{0}};
  spec.groups = {fixtures::z4().table_rows()};
  CHECK(build_from_semilattice(spec) == fixtures::z4());
}

TEST_CASE("build_from_semilattice makes the Z4-over-Z2 chain") {
  semilattice_spec spec;
  spec.meets = {{0, 1}, {1, 1}};
  spec.groups = {fixtures::z4().table_rows(), fixtures::z2().table_rows()};
  spec.homs = {{0, 1, {0, 1, 0, 1}}};
  finite_semigroup built = build_from_semilattice(spec);
  CHECK(built.order() == 6);
  CHECK(is_clifford(built));
  CHECK(built == fixtures::z4_over_z2());
}

TEST_CASE("build_from_semilattice derives composite homs on a 3-chain") {
  auto z2t = fixtures::z2().table_rows();
  semilattice_spec spec;
  spec.meets = {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
  spec.groups = {z2t, z2t, z2t};
  // covering pairs only; the 0 -> 2 composite must be derived
  spec.homs = {{0, 1, {0, 1}}, {1, 2, {0, 1}}};
  finite_semigroup built = build_from_semilattice(spec);
  CHECK(built.order() == 6);
  clifford_structure C(built);
  auto top_bot = C.connecting(C.idempotent_list()[0], C.idempotent_list()[2]);
  CHECK(top_bot.image == C.component(2));  // identity hom composed twice
}

TEST_CASE("build_from_semilattice rejects inconsistent data") {
  auto z2t = fixtures::z2().table_rows();

  // map that is not a homomorphism (sends identity to the involution)
  semilattice_spec bad_hom;
  bad_hom.meets = {{0, 1}, {1, 1}};
  bad_hom.groups = {z2t, z2t};
  bad_hom.homs = {{0, 1, {1, 0}}};
  CHECK(thrown_kind([&] { build_from_semilattice(bad_hom); }) ==
        "SpecInconsistent");

  // composition law violated on a 3-chain
  semilattice_spec bad_comp;
  bad_comp.meets = {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
  bad_comp.groups = {z2t, z2t, z2t};
  bad_comp.homs = {{0, 1, {0, 1}}, {1, 2, {0, 1}}, {0, 2, {0, 0}}};
  CHECK(thrown_kind([&] { build_from_semilattice(bad_comp); }) ==
        "SpecInconsistent");

  // missing hom for a comparable pair with no derivation path
  semilattice_spec missing;
  missing.meets = {{0, 1}, {1, 1}};
  missing.groups = {z2t, z2t};
  CHECK(thrown_kind([&] { build_from_semilattice(missing); }) ==
        "SpecInconsistent");

  // meet table that is not a semilattice
  semilattice_spec bad_meet;
  bad_meet.meets = {{0, 0}, {1, 1}};
  bad_meet.groups = {z2t, z2t};
  CHECK(thrown_kind([&] { build_from_semilattice(bad_meet); }) ==
        "SpecInconsistent");
}

TEST_CASE("decompose and rebuild round-trips every Clifford fixture") {
  for (const auto& [name, S] : fixtures::clifford_fixtures()) {
    CAPTURE(name);
    clifford_structure C(S);
    // fixtures are numbered canonically, so the rebuild is the identity
    std::vector<int> canon = canonical_numbering(C);
    for (int a = 0; a < S.order(); ++a) CHECK(canon[a] == a);
    finite_semigroup rebuilt = build_from_semilattice(extract_spec(C));
    CHECK(rebuilt == S);
  }
}

TEST_CASE("round trip of a scrambled table lands on the canonical numbering") {
  // interleave the components of the Z4-over-Z2 chain
  std::vector<int> psi = {0, 4, 1, 5, 2, 3};
  finite_semigroup scrambled = relabel(fixtures::z4_over_z2(), psi);
  clifford_structure C(scrambled);
  std::vector<int> canon = canonical_numbering(C);
  finite_semigroup rebuilt = build_from_semilattice(extract_spec(C));
  CHECK(rebuilt == relabel(scrambled, canon));
}

TEST_CASE("products land in the meet component") {
  for (const auto& [name, S] : fixtures::clifford_fixtures()) {
    CAPTURE(name);
    clifford_structure C(S);
    for (int a = 0; a < S.order(); ++a)
      for (int b = 0; b < S.order(); ++b) {
        int ea = C.component_identity_of(a);
        int eb = C.component_identity_of(b);
        CHECK(C.component_identity_of(S.product(a, b)) ==
              S.product(ea, eb));
      }
  }
}

TEST_CASE("a <= e with e idempotent forces ae = ea = a") {
  for (const auto& [name, S] : fixtures::clifford_fixtures()) {
    CAPTURE(name);
    clifford_structure C(S);
    for (int a = 0; a < S.order(); ++a)
      for (int e : C.idempotent_list()) {
        if (!C.element_leq(a, e)) continue;
        CHECK(S.product(a, e) == a);
        CHECK(S.product(e, a) == a);
      }
  }
}
