#include <catch2/catch_amalgamated.hpp>

#include "finalg/catalog.hpp"
#include "finalg/graded.hpp"
#include "finalg/lie_io.hpp"
#include "oracles.hpp"

using namespace finalg;

namespace {

LieRing heisenberg11() {
  LieRing L = make_lie_ring(make_field(11, 1), 3, "heisenberg");
  add_bracket_term(L, 0, 1, 2, 1);
  return L;
}

LieRing metabelian5() {
  LieRing L = make_lie_ring(make_field(11, 1), 5, "metabelian witness");
  add_bracket_term(L, 1, 3, 0, 1);
  add_bracket_term(L, 0, 1, 2, 1);
  add_bracket_term(L, 0, 3, 4, 1);
  return L;
}

LieRing affine11() {
  LieRing L = make_lie_ring(make_field(11, 1), 2, "affine line");
  add_bracket_term(L, 1, 0, 1, 1);
  return L;
}

Mat diag(const std::vector<int>& d) {
  Mat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i)
    m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

Mat rows_mat(const std::vector<std::vector<int>>& rows) {
  Mat m(static_cast<int>(rows.size()),
        static_cast<int>(rows.empty() ? 0 : rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i) m.set_row(static_cast<int>(i), rows[i]);
  return m;
}

const nlohmann::json* find_observed(const CheckSet& cs, const std::string& name) {
  for (const auto& c : cs.checks)
    if (c.name == name) return &c.observed;
  return nullptr;
}

// The flagship Frobenius action: the metabelian ring graded by a kernel
// generator of (Z/5)^2 : C2 acting through inversion.
FrobeniusLieAction metabelian_action() {
  FiniteGroup whole = construct_group("semidirect(elem(5,2),cyclic(2),inversion)");
  std::vector<int> kernel, comp{0, 1};
  for (int f = 0; f < 25; ++f) kernel.push_back(f * 2);
  Mat P = rows_mat({{10, 0, 0, 0, 0},
                    {0, 0, 0, 1, 0},
                    {0, 0, 0, 0, 10},
                    {0, 1, 0, 0, 0},
                    {0, 0, 10, 0, 0}});
  std::vector<std::pair<int, Mat>> gens{
      {10, diag({1, 3, 3, 4, 4})}, {2, Mat::identity(5)}, {1, P}};
  return make_frobenius_lie_action(metabelian5(), 5, whole, kernel, comp, gens,
                                   10, 1);
}

}  // namespace

TEST_CASE("eigenspace gradings split along eigenvalues") {
  LieRing L = metabelian5();
  Grading g = eigenspace_grading(L, diag({1, 3, 3, 4, 4}), 5);
  CHECK(g.omega == 3);
  std::vector<int> dims;
  for (const Mat& m : g.components) dims.push_back(m.rows);
  CHECK(dims == std::vector<int>{1, 2, 0, 0, 2});
  CHECK(graded_component(g, -1) == g.components[4]);
  CHECK(graded_component(g, 7) == g.components[2]);

  // Grading property: [L_i, L_j] <= L_{i+j mod p}.
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      Mat br = span_bracket(L, g.components[i], g.components[j]);
      CAPTURE(i, j);
      CHECK(subspace_leq(L.field, br, g.components[(i + j) % 5]));
    }
}

TEST_CASE("eigenspace gradings reject bad inputs") {
  LieRing L = heisenberg11();
  // Not an automorphism.
  CHECK_THROWS_AS(eigenspace_grading(L, diag({2, 1, 1}), 5), lie_error);
  // Automorphism of the wrong order: diag(3,9,5) has order 5, not 2.
  CHECK_THROWS_AS(eigenspace_grading(L, diag({3, 9, 5}), 2), order_mismatch);
  // Grading order must be prime.
  CHECK_THROWS_AS(eigenspace_grading(L, Mat::identity(3), 4), invalid_spec);
}

TEST_CASE("criterion report on a graded nilpotent ring") {
  LieRing L = metabelian5();
  Grading g = eigenspace_grading(L, diag({1, 3, 3, 4, 4}), 5);
  CheckSet r = criterion_report(g);
  REQUIRE(r.checks.size() == 3);
  CHECK(r.all_pass());

  const auto* one = find_observed(r, "condition one is decided by the bracket chain");
  REQUIRE(one);
  CHECK((*one)["holds"] == true);
  CHECK((*one)["u"] == 2);

  const auto* two = find_observed(r, "condition two is decided by the residue chains");
  REQUIRE(two);
  CHECK((*two)["holds"] == true);
  CHECK((*two)["v"] == 2);
  CHECK((*two)["derived_meet_zero_dim"] == 1);

  const auto* agree = find_observed(r, "criterion agrees with the nilpotency class");
  REQUIRE(agree);
  CHECK((*agree)["class"] == 3);
  CHECK((*agree)["criterion_holds"] == true);
}

TEST_CASE("criterion report with the identity grading") {
  LieRing L = heisenberg11();
  Grading g = eigenspace_grading(L, Mat::identity(3), 5);
  CheckSet r = criterion_report(g);
  CHECK(r.all_pass());
  const auto* one = find_observed(r, "condition one is decided by the bracket chain");
  CHECK((*one)["u"] == 2);
  const auto* two = find_observed(r, "condition two is decided by the residue chains");
  CHECK((*two)["v"] == 1);
}

TEST_CASE("criterion detects non-nilpotent rings through condition one") {
  LieRing L = affine11();
  Grading g = eigenspace_grading(L, diag({1, 3}), 5);
  CheckSet r = criterion_report(g);
  const auto* one = find_observed(r, "condition one is decided by the bracket chain");
  REQUIRE(one);
  CHECK((*one)["holds"] == false);
  CHECK((*one)["stable_dim"] == 1);
  const auto* agree = find_observed(r, "criterion agrees with the nilpotency class");
  REQUIRE(agree);
  CHECK((*agree)["class"].is_null());
  CHECK((*agree)["criterion_holds"] == false);
  // criterion false and class infinite: verdict still a pass.
  CHECK(r.all_pass());
}

TEST_CASE("criterion never misclassifies against the brute-force oracle") {
  struct Probe {
    LieRing ring;
    Mat phi;
  };
  std::vector<Probe> probes;
  probes.push_back({metabelian5(), diag({1, 3, 3, 4, 4})});
  probes.push_back({heisenberg11(), diag({3, 9, 5})});
  probes.push_back({heisenberg11(), Mat::identity(3)});
  probes.push_back({affine11(), diag({1, 3})});
  probes.push_back(
      {make_lie_ring(make_field(11, 1), 2, "abelian pair"), diag({3, 9})});
  for (const Probe& pr : probes) {
    Grading g = eigenspace_grading(pr.ring, pr.phi, 5);
    CheckSet r = criterion_report(g);
    const auto* one = find_observed(r, "condition one is decided by the bracket chain");
    const auto* two = find_observed(r, "condition two is decided by the residue chains");
    REQUIRE(one);
    REQUIRE(two);
    bool decided = two->contains("holds");
    std::optional<int> cls = oracle::lie_class(pr.ring);
    CAPTURE(pr.ring.name);
    if (decided) {
      bool criterion = (*one)["holds"] == true && (*two)["holds"] == true;
      CHECK(criterion == cls.has_value());
    } else {
      // Undecided is only legal when condition one already failed.
      CHECK((*one)["holds"] == false);
    }
  }
}

TEST_CASE("frobenius lie action construction and rotation") {
  FrobeniusLieAction fa = metabelian_action();
  CHECK(fa.qH == 2);
  CHECK(fa.r == 4);
  CHECK(fa.grading.omega == 3);
  CHECK(fa.grading.components[0].rows == 1);
  CHECK(fa.kernel_elems.size() == 25);
  CHECK(fa.complement_elems == std::vector<int>{0, 1});
  // rep is a homomorphism: spot-check h z h = z^4 on matrices.
  const CoefficientField& F = fa.grading.ring.field;
  Mat hzh = mat_mul(F, fa.rep[1], mat_mul(F, fa.rep[10], fa.rep[1]));
  CHECK(hzh == mat_pow(F, fa.rep[10], 4));
}

TEST_CASE("frobenius lie action rejects mismatched data") {
  FiniteGroup whole = construct_group("semidirect(elem(5,2),cyclic(2),inversion)");
  std::vector<int> kernel, comp{0, 1};
  for (int f = 0; f < 25; ++f) kernel.push_back(f * 2);
  LieRing L = metabelian5();

  // z must generate an order-p subgroup inside the kernel: element 1 is the
  // complement generator.
  std::vector<std::pair<int, Mat>> gens{
      {10, diag({1, 3, 3, 4, 4})}, {2, Mat::identity(5)},
      {1, rows_mat({{10, 0, 0, 0, 0},
                    {0, 0, 0, 1, 0},
                    {0, 0, 0, 0, 10},
                    {0, 1, 0, 0, 0},
                    {0, 0, 10, 0, 0}})}};
  CHECK_THROWS_AS(
      make_frobenius_lie_action(L, 5, whole, kernel, comp, gens, 1, 1),
      invalid_spec);

  // Every matrix must be a Lie ring automorphism, checked before any group
  // reasoning: a swap of e0 and e2 is an involution but kills the brackets.
  FiniteGroup c2 = construct_group("cyclic(2)");
  Mat X = rows_mat({{0, 0, 1, 0, 0},
                    {0, 1, 0, 0, 0},
                    {1, 0, 0, 0, 0},
                    {0, 0, 0, 1, 0},
                    {0, 0, 0, 0, 1}});
  std::vector<Mat> rep2{Mat::identity(5), X};
  CHECK_THROWS_AS(
      make_frobenius_lie_action(L, 5, c2, {0, 1}, {0}, rep2, 1, 0),
      lie_error);
}

TEST_CASE("orbit-sum spans live in the complement fixed space") {
  FrobeniusLieAction fa = metabelian_action();
  Mat T1 = fixed_point_span_T(fa, 1);
  CHECK(T1.rows == 2);
  const CoefficientField& F = fa.grading.ring.field;
  // Each row is h-fixed.
  for (int r = 0; r < T1.rows; ++r)
    CHECK(mat_vec(F, fa.rep[fa.h_gen], T1.row(r)) == T1.row(r));
  CHECK_THROWS_AS(fixed_point_span_T(fa, 0), zero_residue);
  CHECK_THROWS_AS(fixed_point_span_T(fa, 5), zero_residue);
}

TEST_CASE("zero-component decomposition on the metabelian example") {
  FrobeniusLieAction fa = metabelian_action();
  CheckSet d = verify_L0_decomposition(fa);
  CHECK(d.all_pass());
  const auto* obs = find_observed(
      d, "zero component equals kernel-fixed plus conjugate-complement-fixed");
  REQUIRE(obs);
  CHECK((*obs)["dim_L0"] == 1);
  CHECK((*obs)["dim_CF"] == 1);
  CHECK((*obs)["dim_sum"] == 1);
  CHECK((*obs)["summand_dims"] == nlohmann::json::array({0}));
}

TEST_CASE("kernel centralizer analysis on the metabelian example") {
  FrobeniusLieAction fa = metabelian_action();
  CheckSet v = verify_CF_vanishing(fa, 3);
  CHECK(v.all_pass());
  const auto* cover = find_observed(v, "kernel centralizers cover the ring");
  REQUIRE(cover);
  CHECK((*cover)["covered_dim"] == 5);
  const auto* van =
      find_observed(v, "d-fold bracket with the kernel-fixed space vanishes");
  REQUIRE(van);
  CHECK((*van)["dim_CF"] == 1);
  CHECK((*van)["residual_dim"] == 0);

  // With d = 1 the class hypothesis fails (the identity matrix fixes the
  // whole class-3 ring) and the conclusions are skipped.
  CheckSet tight = verify_CF_vanishing(fa, 1);
  CHECK(tight.hypothesis_failed());
  bool skipped = false;
  for (const auto& c : tight.checks)
    if (c.name == "kernel centralizers cover the ring")
      skipped = c.status == Status::skip;
  CHECK(skipped);
}

TEST_CASE("metabelian residue coverage on the metabelian example") {
  FrobeniusLieAction fa = metabelian_action();
  CheckSet m = metabelian_residue_coverage(fa);
  CHECK(m.all_pass());
  const auto* obs =
      find_observed(m, "components recover from complement-orbit spans");
  REQUIRE(obs);
  CHECK((*obs)["complement_fixed_class"] == 1);
  CHECK((*obs)["v_bound"] == 1);
  CHECK((*obs)["derived_meet_kernel_fixed_dim"] == 1);
}

TEST_CASE("vandermonde recovery") {
  CoefficientField F = make_field(11, 1);
  const int w = root_of_unity(F, 5);
  REQUIRE(w == 3);

  SECTION("two residues") {
    // y_i in the omega^{t_i} eigenspace of alpha.
    Mat alpha = diag({3, 9});
    VandermondeCertificate cert =
        vandermonde_recover(F, w, {1, 2}, {{5, 0}, {0, 7}}, alpha);
    CHECK(cert.verified);
    CHECK(det(F, cert.vandermonde) == 6);
    CHECK(cert.sums[0] == std::vector<int>{5, 7});
    CHECK(cert.sums[1] == std::vector<int>{4, 8});
  }
  SECTION("three residues") {
    Mat alpha = diag({1, 3, 9});
    VandermondeCertificate cert = vandermonde_recover(
        F, w, {0, 1, 2}, {{2, 0, 0}, {0, 5, 0}, {0, 0, 7}}, alpha);
    CHECK(cert.verified);
    CHECK(det(F, cert.vandermonde) == 8);
  }
  SECTION("one residue") {
    Mat alpha = diag({3});
    VandermondeCertificate cert = vandermonde_recover(F, w, {1}, {{9}}, alpha);
    CHECK(cert.verified);
    CHECK(det(F, cert.vandermonde) == 1);
  }
  SECTION("colliding residues mod the root order") {
    Mat alpha = diag({3, 9});
    CHECK_THROWS_AS(vandermonde_recover(F, w, {1, 6}, {{5, 0}, {0, 7}}, alpha),
                    singular_system);
  }
  SECTION("mismatched samples fail verification") {
    Mat alpha = diag({3, 9});
    // y_1 is not in the omega^2 eigenspace: alpha scales it by omega.
    VandermondeCertificate cert =
        vandermonde_recover(F, w, {1, 2}, {{5, 0}, {6, 0}}, alpha);
    CHECK_FALSE(cert.verified);
  }
}

TEST_CASE("frobenius generation check on the rank-two example") {
  FiniteGroup whole = construct_group("semidirect(cyclic(3),cyclic(2),inversion)");
  FiniteGroup target = construct_group("elem(7,2)");
  ActionSetup s = action_from_generator_images(
      whole, target,
      {{2, matrix_perm(target, 7, {{0, 6}, {1, 6}})},
       {1, matrix_perm(target, 7, {{0, 1}, {1, 0}})}});
  FrobeniusStructure fs =
      check_frobenius(s.actor, subgroup_generated(s.actor, {2}),
                      subgroup_generated(s.actor, {1}));
  CheckSet g = frobenius_generation_check(s, fs);
  CHECK(g.all_pass());
  const auto* obs =
      find_observed(g, "kernel translates of complement fixed points generate");
  REQUIRE(obs);
  CHECK((*obs)["base_order"] == 7);
  CHECK((*obs)["translate_count"] == 3);
  CHECK((*obs)["generated_order"] == 49);
  CHECK((*obs)["spanning_det"] == 4);
}

TEST_CASE("generation check fails when the kernel has fixed points") {
  // Swap the roles: the complement inverts, the kernel is trivial on target.
  FiniteGroup whole = construct_group("semidirect(cyclic(3),cyclic(2),inversion)");
  FiniteGroup target = construct_group("cyclic(5)");
  std::vector<int> id{0, 1, 2, 3, 4};
  ActionSetup s = action_from_generator_images(
      whole, target, {{2, id}, {1, {0, 4, 3, 2, 1}}});
  FrobeniusStructure fs =
      check_frobenius(s.actor, subgroup_generated(s.actor, {2}),
                      subgroup_generated(s.actor, {1}));
  CheckSet g = frobenius_generation_check(s, fs);
  CHECK(g.hypothesis_failed());
}
