#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "anosov/ratmat.hpp"
#include "oracles.hpp"

using namespace anosov;

namespace {

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do out.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

TEST_CASE("char_poly of small matrices") {
  CHECK(char_poly(RatMatrix{{2, 1}, {1, 1}}) == RatPoly{1, -3, 1});
  CHECK(char_poly(RatMatrix::identity(3)) == RatPoly{-1, 3, -3, 1});
  IntPoly phi5{1, 1, 1, 1, 1};
  CHECK(char_poly(RatMatrix::companion(phi5)) == phi5.to_rat());
}

TEST_CASE("char_poly agrees with Faddeev-LeVerrier on random matrices") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int t = 0; t < 8; ++t) {
      RatMatrix m = oracle::random_int_matrix(rng, n, -4, 4);
      m(0, n - 1) = Rational(1, 3);
      CHECK(char_poly(m) == oracle::faddeev_leverrier(m));
    }
}

TEST_CASE("det, inverse and kernel") {
  CHECK(det(RatMatrix{{0, -1}, {1, -1}}) == 1);
  CHECK(inverse(RatMatrix::identity(4)) == RatMatrix::identity(4));
  RatMatrix k = kernel_basis(RatMatrix{{1, 1}, {1, 1}});
  REQUIRE(k.cols() == 1);
  CHECK(k(0, 0) == -k(1, 0));
  CHECK(k(0, 0) != 0);
  CHECK(kernel_basis(RatMatrix::identity(3)).cols() == 0);
  CHECK_THROWS_AS(inverse(RatMatrix{{1, 2}, {2, 4}}), InvalidInput);
  CHECK_THROWS_AS(det(RatMatrix(2, 3)), InvalidInput);
  CHECK_THROWS_AS(RatMatrix::identity(2) * RatMatrix(3, 3), InvalidInput);
}

TEST_CASE("det matches cofactor expansion; inverse is two-sided") {
  std::mt19937_64 rng(5);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int t = 0; t < 10; ++t) {
      RatMatrix m = oracle::random_int_matrix(rng, n, -3, 3);
      if (n > 1) m(1, 0) = Rational(-2, 7);
      Rational d = det(m);
      CHECK(d == oracle::laplace_det(m));
      if (d != 0) {
        RatMatrix inv = inverse(m);
        CHECK((m * inv).is_identity());
        CHECK((inv * m).is_identity());
      }
      RatMatrix ker = kernel_basis(m);
      CHECK(ker.cols() == n - rank(m));
      if (ker.cols() > 0) CHECK((m * ker).is_zero());
    }
}

TEST_CASE("det equals (-1)^n times the constant term of char_poly") {
  std::mt19937_64 rng(17);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int t = 0; t < 6; ++t) {
      RatMatrix m = oracle::random_int_matrix(rng, n, -5, 5);
      Rational c0 = char_poly(m).coeff(0);
      CHECK(det(m) == (n % 2 == 0 ? c0 : Rational(-c0)));
    }
}

TEST_CASE("char_poly is a similarity invariant") {
  std::mt19937_64 rng(23);
  for (std::size_t n = 2; n <= 5; ++n)
    for (int t = 0; t < 6; ++t) {
      RatMatrix b = oracle::random_int_matrix(rng, n, -3, 3);
      RatMatrix a = oracle::random_int_matrix(rng, n, -2, 2);
      if (det(a) == 0) a = a + RatMatrix::identity(n) * RatMatrix::identity(n) + Rational(7) * RatMatrix::identity(n);
      if (det(a) == 0) continue;
      CHECK(char_poly(a * b * inverse(a)) == char_poly(b));
    }
}

TEST_CASE("min_poly divides char_poly and annihilates") {
  RatMatrix m = block_diag({RatMatrix{{2, 1}, {1, 1}}, RatMatrix{{2, 1}, {1, 1}}});
  CHECK(min_poly(m) == RatPoly{1, -3, 1});
  CHECK(poly_eval(min_poly(m), m).is_zero());
  CHECK(min_poly(RatMatrix::identity(3)) == RatPoly{-1, 1});
}

TEST_CASE("perm_matrix follows the row convention") {
  CHECK(perm_matrix(Permutation::identity(3)) == RatMatrix::identity(3));
  CHECK(perm_matrix(Permutation::from_one_based({2, 1})) == RatMatrix{{0, 1}, {1, 0}});
  Permutation cyc = Permutation::from_one_based({2, 3, 1});
  RatMatrix k = perm_matrix(cyc);
  CHECK(k(0, 1) == 1);
  CHECK(k(1, 2) == 1);
  CHECK(k(2, 0) == 1);
  CHECK_THROWS_AS(Permutation({0, 0}), InvalidInput);
}

TEST_CASE("K_pi calculus, exhaustive for n <= 5") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto perms = all_permutations(n);
    for (const auto& p1 : perms) {
      RatMatrix k1 = perm_matrix(p1);
      CHECK(k1.transpose() == perm_matrix(p1.inverse()));
      if (n <= 4)
        for (const auto& p2 : perms) CHECK(k1 * perm_matrix(p2) == perm_matrix(p2 * p1));
    }
  }
}

TEST_CASE("K_pi product identity for sampled permutations of size 6") {
  auto perms = all_permutations(6);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
  for (int t = 0; t < 300; ++t) {
    const auto& p1 = perms[pick(rng)];
    const auto& p2 = perms[pick(rng)];
    CHECK(perm_matrix(p1) * perm_matrix(p2) == perm_matrix(p2 * p1));
    CHECK(perm_matrix(p1).transpose() == perm_matrix(p1.inverse()));
  }
}

TEST_CASE("kronecker with identity blocks") {
  RatMatrix swap{{0, 1}, {1, 0}};
  CHECK(kronecker(swap, 1) == swap);
  RatMatrix big = kronecker(swap, 2);
  RatMatrix expected{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
  CHECK(big == expected);
  CHECK(kronecker(swap, 3) == kron(swap, RatMatrix::identity(3)));
  CHECK_THROWS_AS(kronecker(swap, 0), InvalidInput);
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : all_permutations(n))
      for (std::size_t k = 1; k <= 3; ++k)
        CHECK(inverse(kronecker(perm_matrix(p), k)) == kronecker(perm_matrix(p.inverse()), k));
}

TEST_CASE("solve_in_span and rref") {
  RatMatrix a{{1, 0}, {0, 1}, {1, 1}};
  RatMatrix b = RatMatrix::column_vector({Rational(2), Rational(3), Rational(5)});
  RatMatrix x = solve_in_span(a, b);
  CHECK(x == RatMatrix::column_vector({Rational(2), Rational(3)}));
  CHECK_THROWS(solve_in_span(a, RatMatrix::column_vector({Rational(1), Rational(0), Rational(0)})));
  std::vector<std::size_t> piv;
  rref(RatMatrix{{0, 2, 4}, {0, 1, 2}}, &piv);
  CHECK(piv == std::vector<std::size_t>{1});
}

TEST_CASE("power handles negative exponents") {
  RatMatrix m{{2, 1}, {1, 1}};
  CHECK(power(m, 3) == m * m * m);
  CHECK((power(m, -2) * power(m, 2)).is_identity());
  CHECK(power(m, 0).is_identity());
}
