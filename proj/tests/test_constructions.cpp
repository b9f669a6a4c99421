#include <doctest.h>

#include <functional>

#include "pentagon/constructions.hpp"
#include "pentagon/enumeration.hpp"
#include "pentagon/fixtures.hpp"

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

// the family of Ex-4.6 shape on s3: per-group idempotent endomorphisms
// gamma (local tables), upward connectors constant at the target identity
component_solution_family s3_gamma_family(const std::vector<int>& gamma_on_ga) {
  clifford_structure C(fixtures::s3());
  component_solution_family fam{C, {}, {}};
  fam.group_thetas = {
      {{0}},
      {{gamma_on_ga[0], gamma_on_ga[1]}, {gamma_on_ga[0], gamma_on_ga[1]}}};
  // connectors: [0][0] id, [0][1] = phi, [1][0] constant, [1][1] id
  fam.connectors = {{{0}, {0}}, {{0, 0}, {0, 1}}};
  return fam;
}

}  // namespace

TEST_CASE("invariant_from_mu reproduces the gamma solution on s3") {
  clifford_structure C(fixtures::s3());
  representative_map m{congruence(fixtures::s3(), {0, 0, 1}), {1, 1, 2}};
  solution s = invariant_from_mu(C, m);
  CHECK(s == fixtures::s3_gamma_solution());
  CHECK(classify(s).is_e_invariant == std::optional<bool>(true));
}

TEST_CASE("invariant_from_mu with the universal congruence gives E(e)") {
  for (const auto& [name, S] : fixtures::clifford_fixtures()) {
    CAPTURE(name);
    clifford_structure C(S);
    for (int e : C.idempotent_list()) {
      representative_map m{congruence::universal(S),
                           std::vector<int>(static_cast<size_t>(S.order()), e)};
      CHECK(invariant_from_mu(C, m) == canonical_e(S, e));
    }
  }
}

TEST_CASE("invariant_from_mu covers the group case") {
  // Z4 with the mod-2 congruence and representatives {0, 1}
  clifford_structure C(fixtures::z4());
  representative_map m{congruence(fixtures::z4(), {0, 1, 0, 1}), {0, 1, 0, 1}};
  solution s = invariant_from_mu(C, m);
  CHECK(s.theta_rows() ==
        std::vector<std::vector<int>>{
            {0, 1, 0, 1}, {0, 3, 0, 3}, {0, 1, 0, 1}, {0, 3, 0, 3}});
}

TEST_CASE("invariant_from_mu rejects bad data") {
  clifford_structure C(fixtures::s3());
  auto S = fixtures::s3();

  CHECK(thrown([&] {
          representative_map m{congruence(S, {0, 0, 1}), {2, 2, 2}};
          invariant_from_mu(C, m);
        }).kind() == "MuNotInClass");

  CHECK(thrown([&] {
          representative_map m{congruence(S, {0, 0, 1}), {0, 1, 2}};
          invariant_from_mu(C, m);
        }).kind() == "MuImageNotRepresentatives");

  CHECK(thrown([&] {
          representative_map m{congruence(S, {0, 0, 1}), {0, 0, 2}};
          invariant_from_mu(C, m);
        }).kind() == "CondSoluViolated");

  CHECK(thrown([&] {
          clifford_structure L(fixtures::chain2());
          representative_map m{congruence::identity(fixtures::chain2()),
                               {0, 1}};
          invariant_from_mu(L, m);
        }).kind() == "QuotientNotGroup");
}

TEST_CASE("extract_invariant_data on the gamma solution") {
  invariant_data data = extract_invariant_data(fixtures::s3_gamma_solution());
  CHECK(data.pair.kernel == subset::of(3, {0, 1}));
  CHECK(data.pair.trace == trace_congruence::universal({0, 1}));
  CHECK(data.rho.classes() == std::vector<int>{0, 0, 1});
  CHECK(data.representatives == subset::of(3, {1, 2}));  // theta_e(S) = {a, b}
  CHECK(data.mu == std::vector<int>{1, 1, 2});
  CHECK(quotient(data.rho).semigroup == fixtures::z2());
}

TEST_CASE("extract_invariant_data on canonical E and the trivial group") {
  invariant_data e_data = extract_invariant_data(canonical_e(fixtures::s3(), 1));
  CHECK(e_data.pair.kernel == subset::of(3, {0, 1, 2}));
  CHECK(e_data.representatives == subset::of(3, {1}));

  invariant_data t_data =
      extract_invariant_data(canonical_i(fixtures::trivial()));
  CHECK(t_data.pair.kernel == subset::of(1, {0}));
  CHECK(t_data.representatives == subset::of(1, {0}));
}

TEST_CASE("extract_invariant_data rejects non-invariant solutions") {
  CHECK(thrown([] {
          extract_invariant_data(canonical_i(fixtures::s3()));
        }).kind() == "NotInvariant");
  CHECK(thrown([] {
          extract_invariant_data(fixtures::s3_outlier_solution());
        }).kind() == "NotInvariant");
}

TEST_CASE("description theorem: every E-invariant solution round-trips") {
  for (const auto& [name, S] : fixtures::clifford_fixtures()) {
    CAPTURE(name);
    clifford_structure C(S);
    for (const auto& s :
         enumerate_solutions(S, solution_class::e_invariant)) {
      invariant_data data = extract_invariant_data(s);
      solution rebuilt = invariant_from_mu(C, {data.rho, data.mu});
      CHECK(rebuilt == s);
    }
  }
}

TEST_CASE("isomorphism criterion for E-invariant solutions") {
  // two E-invariant solutions are isomorphic iff some automorphism
  // intertwines their theta_e maps
  for (const auto& [name, S] : fixtures::clifford_fixtures()) {
    if (S.order() > 4) continue;
    CAPTURE(name);
    auto auts = automorphisms(S);
    auto invariant = enumerate_solutions(S, solution_class::e_invariant);
    int e = idempotents(S).elements()[0];
    for (const auto& s : invariant)
      for (const auto& t : invariant) {
        bool intertwined = false;
        for (const auto& psi : auts) {
          bool ok = true;
          for (int x = 0; x < S.order() && ok; ++x)
            if (psi[s.theta(e, x)] != t.theta(e, psi[x])) ok = false;
          if (ok) intertwined = true;
        }
        CHECK(find_isomorphism(s, t).has_value() == intertwined);
      }
  }
}

TEST_CASE("fixed_from_components: identity gammas give I, trivial gammas give F") {
  solution i = fixed_from_components(s3_gamma_family({0, 1}));
  CHECK(i == canonical_i(fixtures::s3()));
  solution f = fixed_from_components(s3_gamma_family({0, 0}));
  CHECK(f == canonical_f(fixtures::s3()));
  CHECK(classify(f).is_e_fixed == std::optional<bool>(true));
}

TEST_CASE("fixed_from_components validates connectors against the homs") {
  auto fam = s3_gamma_family({0, 1});
  fam.connectors[0][1] = {1};  // phi_{1,a} must send 1 to a, not to b
  CHECK(thrown([&] { fixed_from_components(fam); }).kind() ==
        "ConnectorMismatch");
}

TEST_CASE("fixed_from_components rejects misaligned upward connectors") {
  // eps_{f,f'} that is not multiplicative across the glued products:
  // swapping the fibers breaks the row-selection coherence
  clifford_structure C(fixtures::z4_over_z2());
  component_solution_family fam{
      C,
      {{{0, 1, 0, 1}, {0, 3, 0, 3}, {0, 1, 0, 1}, {0, 3, 0, 3}},
       canonical_i(fixtures::z2()).theta_rows()},
      {{{0, 1, 2, 3}, {0, 1, 0, 1}}, {{1, 0}, {0, 1}}}};
  CHECK(thrown([&] { fixed_from_components(fam); }).kind() ==
        "Condition1Violated");
}

TEST_CASE("fixed_from_components rejects incompatible per-group data") {
  // identity gamma on top, trivial gamma on bottom: the intertwining
  // condition with the mod-2 hom fails
  clifford_structure C(fixtures::z4_over_z2());
  component_solution_family fam{C, {}, {}};
  fam.group_thetas = {canonical_i(fixtures::z4()).theta_rows(),
                      canonical_f(fixtures::z2()).theta_rows()};
  fam.connectors.assign(2, std::vector<std::vector<int>>(2));
  fam.connectors[0][0] = {0, 1, 2, 3};
  fam.connectors[0][1] = {0, 1, 0, 1};  // phi
  fam.connectors[1][0] = {0, 0};        // constant at the top identity
  fam.connectors[1][1] = {0, 1};
  auto e = thrown([&] { fixed_from_components(fam); });
  CHECK((e.kind() == "Condition1Violated" || e.kind() == "Condition2Violated"));
}

TEST_CASE("fixed_from_epi_family on the Z4-over-Z2 chain") {
  clifford_structure C(fixtures::z4_over_z2());

  SUBCASE("identity solutions glue to I") {
    epi_family_spec spec{C,
                         {canonical_i(fixtures::z4()).theta_rows(),
                          canonical_i(fixtures::z2()).theta_rows()}};
    CHECK(fixed_from_epi_family(spec) == canonical_i(C.base()));
  }

  SUBCASE("the mod-2 alternating solution glues with I on the bottom") {
    epi_family_spec spec{
        C,
        {{{0, 1, 0, 1}, {0, 3, 0, 3}, {0, 1, 0, 1}, {0, 3, 0, 3}},
         canonical_i(fixtures::z2()).theta_rows()}};
    solution s = fixed_from_epi_family(spec);
    CHECK(classify(s).is_e_fixed == std::optional<bool>(true));
    CHECK(s.theta_rows() ==
          std::vector<std::vector<int>>{
              {0, 1, 0, 1, 4, 5}, {0, 3, 0, 3, 4, 5}, {0, 1, 0, 1, 4, 5},
              {0, 3, 0, 3, 4, 5}, {0, 1, 0, 1, 4, 5}, {0, 3, 0, 3, 4, 5}});

    // The transversal-derived connectors miss the elementwise coherence
    // condition of the component construction: it only holds up to
    // N-cosets of the row index, which the coset-constancy of the rows
    // absorbs. The glued map above is nonetheless a valid solution.
    component_solution_family derived{C, spec.group_thetas, {}};
    derived.connectors = {{{0, 1, 2, 3}, {0, 1, 0, 1}}, {{0, 1}, {0, 1}}};
    CHECK_THROWS_WITH_AS(fixed_from_components(derived),
                         doctest::Contains("Condition2Violated"), error);

    // kernel union still holds for the glued solution and derived family
    CHECK(kernel_union_check(s, derived));
    CHECK(solution_kernel(s) == subset::of(6, {0, 2, 4}));
  }
}

TEST_CASE("fixed_from_epi_family on degenerate shapes") {
  // all groups trivial: the unique gluing is I
  clifford_structure L(fixtures::chain3());
  epi_family_spec lattice_spec{L, {{{0}}, {{0}}, {{0}}}};
  CHECK(fixed_from_epi_family(lattice_spec) == canonical_i(fixtures::chain3()));

  // a single group: the given solution comes back unchanged
  clifford_structure G(fixtures::z4());
  solution alt(fixtures::z4(),
               {{0, 1, 0, 1}, {0, 3, 0, 3}, {0, 1, 0, 1}, {0, 3, 0, 3}});
  epi_family_spec group_spec{G, {alt.theta_rows()}};
  CHECK(fixed_from_epi_family(group_spec) == alt);
}

TEST_CASE("fixed_from_epi_family rejects bad specs") {
  // non-surjective hom: Z4 -> Z4 by doubling
  semilattice_spec sl;
  sl.meets = {{0, 1}, {1, 1}};
  sl.groups = {fixtures::z4().table_rows(), fixtures::z4().table_rows()};
  sl.homs = {{0, 1, {0, 2, 0, 2}}};
  clifford_structure C(build_from_semilattice(sl));
  epi_family_spec spec{C,
                       {canonical_i(fixtures::z4()).theta_rows(),
                        canonical_i(fixtures::z4()).theta_rows()}};
  CHECK(thrown([&] { fixed_from_epi_family(spec); }).kind() ==
        "NotEpimorphism");

  // rows must be constant on N_e cosets: Z4 over the trivial group
  semilattice_spec collapse;
  collapse.meets = {{0, 1}, {1, 1}};
  collapse.groups = {fixtures::z4().table_rows(), {{0}}};
  collapse.homs = {{0, 1, {0, 0, 0, 0}}};
  clifford_structure D(build_from_semilattice(collapse));
  epi_family_spec h1{D,
                     {{{0, 1, 0, 1}, {0, 3, 0, 3}, {0, 1, 0, 1}, {0, 3, 0, 3}},
                      {{0}}}};
  CHECK(thrown([&] { fixed_from_epi_family(h1); }).kind() ==
        "Hypothesis1Violated");

  // intertwining failure: F on top, I on the bottom
  clifford_structure Z(fixtures::z4_over_z2());
  epi_family_spec h2{Z,
                     {canonical_f(fixtures::z4()).theta_rows(),
                      canonical_i(fixtures::z2()).theta_rows()}};
  CHECK(thrown([&] { fixed_from_epi_family(h2); }).kind() ==
        "Hypothesis2Violated");
}

TEST_CASE("kernel_union_check") {
  SUBCASE("componentwise I on s3: both sides give E(S)") {
    auto fam = s3_gamma_family({0, 1});
    solution s = fixed_from_components(fam);
    CHECK(kernel_union_check(s, fam));
    CHECK(solution_kernel(s) == subset::of(3, {0, 1}));
  }

  SUBCASE("componentwise constants on s3: both sides give S") {
    auto fam = s3_gamma_family({0, 0});
    solution s = fixed_from_components(fam);
    CHECK(kernel_union_check(s, fam));
    CHECK(solution_kernel(s) == subset::of(3, {0, 1, 2}));
  }

  SUBCASE("single group reduces to the group kernel") {
    clifford_structure G(fixtures::z4());
    component_solution_family fam{
        G,
        {{{0, 1, 0, 1}, {0, 3, 0, 3}, {0, 1, 0, 1}, {0, 3, 0, 3}}},
        {{{0, 1, 2, 3}}}};
    solution s = fixed_from_components(fam);
    CHECK(kernel_union_check(s, fam));
    CHECK(solution_kernel(s) == subset::of(4, {0, 2}));
  }

  SUBCASE("upward connectors must send identity to identity") {
    clifford_structure C(fixtures::z4_over_z2());
    component_solution_family fam{C, {}, {}};
    fam.group_thetas = {canonical_i(fixtures::z4()).theta_rows(),
                        canonical_i(fixtures::z2()).theta_rows()};
    fam.connectors.assign(2, std::vector<std::vector<int>>(2));
    fam.connectors[0][0] = {0, 1, 2, 3};
    fam.connectors[0][1] = {0, 1, 0, 1};
    fam.connectors[1][0] = {0, 1};  // valid family data
    fam.connectors[1][1] = {0, 1};
    solution s = fixed_from_components(fam);
    auto tweaked = fam;
    tweaked.connectors[1][0] = {1, 0};  // f0 no longer maps to 0
    CHECK(thrown([&] { kernel_union_check(s, tweaked); }).kind() ==
          "PreconditionFailed");
  }
}

TEST_CASE("every constructed fixed solution satisfies the fixed identities") {
  auto fams = {s3_gamma_family({0, 1}), s3_gamma_family({0, 0})};
  for (const auto& fam : fams) {
    solution s = fixed_from_components(fam);
    auto report = verify_identity_suite(s);
    CHECK(report.all_passed());
    CHECK(report["theta_a(b) = bb^-1 theta_a(b)"].applicable);
    // theta_a fixes every idempotent
    for (int a = 0; a < s.order(); ++a)
      for (int e : idempotents(s.base()).elements())
        CHECK(s.theta(a, e) == e);
  }
}
