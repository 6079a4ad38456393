#include <catch2/catch_amalgamated.hpp>

#include "finalg/catalog.hpp"
#include "finalg/lie.hpp"
#include "finalg/lie_io.hpp"
#include "oracles.hpp"

using namespace finalg;

namespace {

LieRing heisenberg(long long q) {
  LieRing L = make_lie_ring(make_field(q, 1), 3, "heisenberg");
  add_bracket_term(L, 0, 1, 2, 1);
  return L;
}

// Five-dimensional metabelian ring: [e1,e3]=e0, [e0,e1]=e2, [e0,e3]=e4.
LieRing metabelian5() {
  LieRing L = make_lie_ring(make_field(11, 1), 5, "metabelian witness");
  add_bracket_term(L, 1, 3, 0, 1);
  add_bracket_term(L, 0, 1, 2, 1);
  add_bracket_term(L, 0, 3, 4, 1);
  return L;
}

LieRing affine_line(long long q) {
  LieRing L = make_lie_ring(make_field(q, 1), 2, "affine line");
  add_bracket_term(L, 1, 0, 1, 1);
  return L;
}

}  // namespace

TEST_CASE("lie ring validation") {
  CHECK_NOTHROW(validate_lie_ring(heisenberg(5)));
  CHECK_NOTHROW(validate_lie_ring(metabelian5()));
  CHECK_NOTHROW(validate_lie_ring(affine_line(7)));

  SECTION("antisymmetry violations") {
    LieRing L = make_lie_ring(make_field(5, 1), 2);
    L.sc(0, 0, 1) = 1;
    CHECK_THROWS_AS(validate_lie_ring(L), antisymmetry_fail);
    LieRing M = make_lie_ring(make_field(5, 1), 2);
    M.sc(0, 1, 0) = 1;  // counterpart not set
    CHECK_THROWS_AS(validate_lie_ring(M), antisymmetry_fail);
  }
  SECTION("jacobi violation") {
    LieRing L = make_lie_ring(make_field(5, 1), 3);
    add_bracket_term(L, 0, 1, 2, 1);
    add_bracket_term(L, 0, 2, 0, 1);
    CHECK_THROWS_AS(validate_lie_ring(L), jacobi_fail);
  }
}

TEST_CASE("bracket_vec is bilinear and antisymmetric") {
  LieRing L = metabelian5();
  const CoefficientField& F = L.field;
  std::vector<std::vector<int>> sample{
      {1, 2, 3, 4, 5}, {10, 0, 7, 1, 0}, {0, 1, 0, 1, 0}, {6, 6, 6, 6, 6}};
  for (const auto& x : sample)
    for (const auto& y : sample) {
      auto xy = bracket_vec(L, x, y);
      auto yx = bracket_vec(L, y, x);
      for (int k = 0; k < L.dim; ++k) CHECK(xy[k] == F.neg(yx[k]));
      // [x+y, z] = [x,z] + [y,z] with z the first sample vector.
      std::vector<int> xpy(L.dim);
      for (int k = 0; k < L.dim; ++k) xpy[k] = F.add(x[k], y[k]);
      auto lhs = bracket_vec(L, xpy, sample[0]);
      auto xz = bracket_vec(L, x, sample[0]);
      auto yz = bracket_vec(L, y, sample[0]);
      for (int k = 0; k < L.dim; ++k) CHECK(lhs[k] == F.add(xz[k], yz[k]));
    }
}

TEST_CASE("lie series and class") {
  CHECK(lie_class(heisenberg(5)) == 2);
  CHECK(lie_class(metabelian5()) == 3);
  CHECK_FALSE(lie_class(affine_line(7)).has_value());
  CHECK(lie_class(make_lie_ring(make_field(5, 1), 4)) == 1);
  CHECK(lie_class(make_lie_ring(make_field(5, 1), 0)) == 0);

  CHECK(lie_derived_length(heisenberg(5)) == 2);
  CHECK(lie_derived_length(metabelian5()) == 2);
  CHECK(lie_derived_length(make_lie_ring(make_field(5, 1), 2)) == 1);
  // The affine line is solvable but not nilpotent.
  CHECK(lie_derived_length(affine_line(7)) == 2);

  CHECK(is_lie_abelian(make_lie_ring(make_field(5, 1), 3)));
  CHECK_FALSE(is_lie_abelian(heisenberg(5)));

  auto series = lie_lower_central_series(metabelian5());
  REQUIRE(series.size() == 4);
  CHECK(series[0].rows == 5);
  CHECK(series[1].rows == 3);
  CHECK(series[2].rows == 2);
  CHECK(series[3].rows == 0);
}

TEST_CASE("lie class agrees with the structure-constant oracle") {
  LieRing rings[] = {heisenberg(5), heisenberg(11), metabelian5(),
                     affine_line(7), make_lie_ring(make_field(3, 1), 4)};
  for (const LieRing& L : rings) {
    CAPTURE(L.name, L.dim);
    CHECK(lie_class(L) == oracle::lie_class(L));
  }
}

TEST_CASE("restricted class of a subspace") {
  LieRing L = metabelian5();
  CHECK(lie_restricted_class(L, full_space(L)) == 3);
  CHECK(lie_restricted_class(L, Mat(0, 5)) == 0);

  // The span of e1, e2, e4 is an abelian subalgebra.
  Mat U(3, 5);
  U.at(0, 1) = 1; U.at(1, 2) = 1; U.at(2, 4) = 1;
  CHECK(lie_restricted_class(L, U) == 1);

  LieRing A = affine_line(7);
  CHECK_FALSE(lie_restricted_class(A, full_space(A)).has_value());
  Mat ideal(1, 2);
  ideal.at(0, 1) = 1;
  CHECK(lie_restricted_class(A, ideal) == 1);
}

TEST_CASE("lie automorphisms and fixed spaces") {
  LieRing L = heisenberg(5);
  Mat phi(3, 3);
  phi.at(0, 0) = 4; phi.at(1, 1) = 4; phi.at(2, 2) = 1;
  CHECK(is_lie_automorphism(L, phi));
  Mat bad(3, 3);
  bad.at(0, 0) = 2; bad.at(1, 1) = 1; bad.at(2, 2) = 1;
  CHECK_FALSE(is_lie_automorphism(L, bad));
  CHECK_FALSE(is_lie_automorphism(L, Mat(3, 3)));

  Mat fixed = fixed_space(L.field, 3, {phi});
  REQUIRE(fixed.rows == 1);
  CHECK(fixed.at(0, 2) == 1);
  CHECK(fixed_space(L.field, 3, {Mat::identity(3)}).rows == 3);
}

TEST_CASE("associated lie ring of extraspecial(5)") {
  AssociatedLieRing A = associated_lie_ring(construct_group("extraspecial(5)"));
  REQUIRE(A.ring.dim == 3);
  CHECK(A.q == 5);
  CHECK(A.group_class == 2);
  CHECK(A.weight_offset == std::vector<int>{0, 2});
  CHECK(A.ring.weight == std::vector<int>{1, 1, 2});
  // [e0, e1] = 4 e2 and [e1, e0] = e2, everything else zero.
  CHECK(A.ring.sc(0, 1, 2) == 4);
  CHECK(A.ring.sc(1, 0, 2) == 1);
  int nonzero = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (A.ring.sc(i, j, k)) ++nonzero;
  CHECK(nonzero == 2);
  CHECK(lie_class(A.ring) == 2);
  CHECK_NOTHROW(validate_lie_ring(A.ring));
}

TEST_CASE("associated lie ring matches the group class") {
  for (const char* spec :
       {"cyclic(7)", "elem(3,2)", "dihedral(4)", "dihedral(8)", "quaternion(8)",
        "extraspecial(3)", "extraspecial(5)", "product(dihedral(4),cyclic(2))",
        "semidirect(cyclic(9),cyclic(3),scalar(4))"}) {
    FiniteGroup G = construct_group(spec);
    CAPTURE(spec);
    AssociatedLieRing A = associated_lie_ring(G);
    CHECK(lie_class(A.ring) == A.group_class);
    CHECK(lie_class(A.ring) == nilpotency_class(G));
    CHECK(lie_class(A.ring) == oracle::lie_class(A.ring));
    CHECK_NOTHROW(validate_lie_ring(A.ring));
  }
}

TEST_CASE("associated lie ring layer dimensions for dihedral(8)") {
  AssociatedLieRing A = associated_lie_ring(construct_group("dihedral(8)"));
  REQUIRE(A.ring.dim == 4);
  CHECK(A.weight_offset == std::vector<int>{0, 2, 3});
  CHECK(A.ring.weight == std::vector<int>{1, 1, 2, 3});
  CHECK(lie_class(A.ring) == 3);
}

TEST_CASE("associated lie ring rejects non-nilpotent groups") {
  CHECK_THROWS_AS(associated_lie_ring(construct_group("dihedral(3)")),
                  not_nilpotent);
  CHECK_THROWS_AS(associated_lie_ring(oracle::alternating5()), not_nilpotent);
}

TEST_CASE("associated lie ring rejects layers of mixed exponent") {
  // gamma_1/gamma_2 of cyclic(8) is C8 itself, not elementary abelian.
  try {
    associated_lie_ring(construct_group("cyclic(8)"));
    FAIL("cyclic(8) was accepted");
  } catch (const mixed_exponent_layer& e) {
    CHECK(e.layer == 1);
  }
}

TEST_CASE("induced lie automorphisms") {
  FiniteGroup H5 = construct_group("extraspecial(5)");
  AssociatedLieRing A = associated_lie_ring(H5);
  std::vector<int> perm = matrix_perm(H5, 5, {{2, 0, 0}, {0, 2, 0}, {0, 0, 4}});
  make_automorphism(H5, perm);
  Mat M = induced_lie_automorphism(A, perm);
  Mat expect(3, 3);
  expect.at(0, 0) = 2; expect.at(1, 1) = 2; expect.at(2, 2) = 4;
  CHECK(M == expect);
  CHECK(is_lie_automorphism(A.ring, M));

  // The identity induces the identity.
  std::vector<int> id(H5.n);
  for (int i = 0; i < H5.n; ++i) id[i] = i;
  CHECK(induced_lie_automorphism(A, id) == Mat::identity(3));
}

TEST_CASE("scalar extension keeps prime-subfield constants") {
  LieRing L = heisenberg(5);
  ExtendedScalars ext = extend_scalars(L, 3);
  CHECK(ext.ring.field.q == 5);
  CHECK(ext.ring.field.d == 2);
  CHECK(ext.ring.field.size == 25);
  CHECK(ext.ring.name == "heisenberg (extended)");
  CHECK(ext.ring.field.order(ext.omega) == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        CHECK(ext.ring.sc(i, j, k) == L.sc(i, j, k));
  CHECK_NOTHROW(validate_lie_ring(ext.ring));

  // p already present in GF(5): no extension needed.
  ExtendedScalars same = extend_scalars(L, 2);
  CHECK(same.ring.field.d == 1);
  CHECK(same.omega == 4);

  CHECK_THROWS_AS(extend_scalars(ext.ring, 3), invalid_spec);
  CHECK_THROWS_AS(extend_scalars(L, 5), invalid_spec);
  CHECK_THROWS_AS(extend_scalars(L, 6), invalid_spec);
}

TEST_CASE("lie ring text round-trips") {
  AssociatedLieRing A = associated_lie_ring(construct_group("extraspecial(5)"));
  std::string text = write_lie_ring(A.ring);
  CHECK(text == "5 1 3\n0 1\n0 1 2 4\n1 0 2 1\n");
  LieRing back = read_lie_ring(text);
  CHECK(back.dim == 3);
  CHECK(back.field.q == 5);
  CHECK(write_lie_ring(back) == text);

  // Extension fields carry the modulus line.
  LieRing E = make_lie_ring(make_field(2, 4), 2, "pair");
  add_bracket_term(E, 0, 1, 1, 7);
  std::string etext = write_lie_ring(E);
  CHECK(etext == "2 4 2\n1 1 0 0 1\n0 1 1 7\n1 0 1 7\n");
  CHECK(write_lie_ring(read_lie_ring(etext)) == etext);
}

TEST_CASE("lie ring reader rejects malformed input") {
  CHECK_THROWS_AS(read_lie_ring(std::string("")), format_error);
  CHECK_THROWS_AS(read_lie_ring(std::string("5 1\n")), format_error);
  // Non-canonical modulus.
  CHECK_THROWS_AS(read_lie_ring(std::string("5 1 2\n1 1\n")), format_error);
  // Truncated tuple.
  CHECK_THROWS_AS(read_lie_ring(std::string("5 1 2\n0 1\n0 1 1\n")), format_error);
  // Index out of range.
  CHECK_THROWS_AS(read_lie_ring(std::string("5 1 2\n0 1\n0 1 2 1\n")), format_error);
  // Value out of range.
  CHECK_THROWS_AS(read_lie_ring(std::string("5 1 2\n0 1\n0 1 1 9\n")), format_error);
  // Out of order.
  CHECK_THROWS_AS(read_lie_ring(
      std::string("5 1 3\n0 1\n1 0 2 1\n0 1 2 4\n")), format_error);
  // Violates antisymmetry after parsing.
  CHECK_THROWS_AS(read_lie_ring(std::string("5 1 2\n0 1\n0 1 1 1\n")),
                  antisymmetry_fail);
}
