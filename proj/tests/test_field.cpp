#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "finalg/field.hpp"
#include "finalg/linalg.hpp"

using namespace finalg;

TEST_CASE("prime fields do arithmetic mod q") {
  CoefficientField F = make_field(5, 1);
  CHECK(F.size == 5);
  CHECK(F.modulus == std::vector<int>{0, 1});
  CHECK(F.add(3, 4) == 2);
  CHECK(F.sub(1, 3) == 3);
  CHECK(F.mul(3, 4) == 2);
  CHECK(F.inv(2) == 3);
  CHECK(F.neg(2) == 3);
  CHECK(F.pow(2, 4) == 1);
  CHECK(F.pow(2, -1) == 3);
  CHECK(F.order(2) == 4);
  CHECK(F.order(4) == 2);
  CHECK_THROWS_AS(F.inv(0), field_error);
  CHECK_THROWS_AS(F.order(0), field_error);
}

TEST_CASE("make_field rejects bad parameters") {
  CHECK_THROWS_AS(make_field(4, 1), field_error);
  CHECK_THROWS_AS(make_field(6, 2), field_error);
  CHECK_THROWS_AS(make_field(2, 0), field_error);
  CHECK_THROWS_AS(make_field(2, 21), field_error);
}

TEST_CASE("GF(16) uses the canonical modulus and generator") {
  CoefficientField F = make_field(2, 4);
  CHECK(F.size == 16);
  // x^4 + x + 1, ascending coefficients.
  CHECK(F.modulus == std::vector<int>{1, 1, 0, 0, 1});
  CHECK(F.generator == 2);
  CHECK(F.order(2) == 15);
  // x^4 = x + 1 under the modulus: index 2 is x, index 3 is x+1.
  CHECK(F.pow(2, 4) == 3);
  CHECK(F.coeffs(8) == std::vector<int>{0, 0, 0, 1});
  CHECK(F.coeffs(11) == std::vector<int>{1, 1, 0, 1});
}

TEST_CASE("field axioms hold exhaustively on GF(8)") {
  CoefficientField F = make_field(2, 3);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      CHECK(F.add(a, b) == F.add(b, a));
      CHECK(F.mul(a, b) == F.mul(b, a));
      for (int c = 0; c < 8; ++c) {
        REQUIRE(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
        REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      }
    }
  for (int a = 1; a < 8; ++a) {
    CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK(F.pow(a, 7) == 1);
  }
}

TEST_CASE("prime subfield indices are stable under extension") {
  CoefficientField F25 = make_field(5, 2);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      CHECK(F25.add(a, b) == (a + b) % 5);
      CHECK(F25.mul(a, b) == (a * b) % 5);
    }
}

TEST_CASE("roots of unity") {
  CoefficientField F11 = make_field(11, 1);
  CHECK(root_of_unity(F11, 5) == 3);
  CHECK(root_of_unity(F11, 2) == 10);
  CHECK(root_of_unity(F11, 1) == 1);

  CoefficientField F16 = make_field(2, 4);
  int w = root_of_unity(F16, 5);
  CHECK(w == 8);
  CHECK(F16.order(w) == 5);
  // Powers are distinct and sum to zero.
  std::set<int> powers;
  int sum = 0;
  for (int i = 0; i < 5; ++i) {
    int wi = F16.pow(w, i);
    powers.insert(wi);
    sum = F16.add(sum, wi);
  }
  CHECK(powers.size() == 5);
  CHECK(sum == 0);

  CHECK_THROWS_AS(root_of_unity(make_field(5, 1), 3), no_root_of_unity);
  CHECK_THROWS_AS(root_of_unity(F11, 7), no_root_of_unity);
}

TEST_CASE("polynomial irreducibility") {
  CHECK(detail::poly_irreducible({1, 1, 1}, 2));
  CHECK_FALSE(detail::poly_irreducible({1, 0, 1}, 2));
  CHECK(detail::poly_irreducible({1, 0, 1}, 3));
  CHECK(detail::poly_irreducible({1, 1, 0, 0, 1}, 2));
  CHECK(detail::poly_irreducible({1, 1, 1, 1, 1}, 2));
  CHECK(detail::poly_irreducible({0, 1}, 2));
}

TEST_CASE("matrix arithmetic over GF(7)") {
  CoefficientField F = make_field(7, 1);
  Mat A(2, 2);
  A.at(0, 0) = 1; A.at(0, 1) = 2;
  A.at(1, 0) = 3; A.at(1, 1) = 4;
  Mat B = mat_mul(F, A, A);
  CHECK(B.at(0, 0) == 0);
  CHECK(B.at(0, 1) == 3);
  CHECK(B.at(1, 0) == 1);
  CHECK(B.at(1, 1) == 1);
  CHECK(mat_pow(F, A, 0) == Mat::identity(2));
  CHECK(mat_pow(F, A, 2) == B);
  CHECK(det(F, A) == 5);
  auto Ainv = inverse(F, A);
  REQUIRE(Ainv.has_value());
  CHECK(mat_mul(F, A, *Ainv) == Mat::identity(2));
  CHECK(mat_vec(F, A, {1, 1}) == std::vector<int>{3, 0});

  Mat S(2, 2);
  S.at(0, 0) = 1; S.at(0, 1) = 2;
  S.at(1, 0) = 2; S.at(1, 1) = 4;
  CHECK(det(F, S) == 0);
  CHECK_FALSE(inverse(F, S).has_value());
  CHECK(rank(F, S) == 1);
}

TEST_CASE("rref, kernel, and subspace operations") {
  CoefficientField F = make_field(5, 1);
  Mat M(3, 3);
  int vals[3][3] = {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) M.at(i, j) = vals[i][j];
  CHECK(rank(F, M) == 3);
  CHECK(rref(F, M) == Mat::identity(3));

  Mat one(1, 3);
  one.at(0, 0) = 1; one.at(0, 1) = 2; one.at(0, 2) = 3;
  Mat ker = kernel(F, one);
  CHECK(ker.rows == 2);
  for (int r = 0; r < ker.rows; ++r) {
    int dot = 0;
    for (int j = 0; j < 3; ++j) dot = F.add(dot, F.mul(one.at(0, j), ker.at(r, j)));
    CHECK(dot == 0);
  }

  // dim(U + W) + dim(U meet W) = dim U + dim W.
  Mat U(1, 3), W(2, 3);
  U.at(0, 0) = 1;
  W.at(0, 0) = 1; W.at(1, 1) = 1;
  Mat sum = subspace_sum(F, U, W);
  Mat meet = subspace_intersect(F, U, W);
  CHECK(sum.rows == 2);
  CHECK(meet.rows == 1);
  CHECK(subspace_leq(F, U, W));
  CHECK_FALSE(subspace_leq(F, W, U));
  CHECK(subspace_contains(F, W, {3, 4, 0}));
  CHECK_FALSE(subspace_contains(F, W, {0, 0, 1}));
}
