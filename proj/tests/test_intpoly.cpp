#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "anosov/factor.hpp"
#include "anosov/poly.hpp"
#include "oracles.hpp"

using namespace anosov;

namespace {

IntPoly reconstruct(const std::vector<Factor>& fs) {
  IntPoly p{1};
  for (const auto& f : fs)
    for (unsigned i = 0; i < f.multiplicity; ++i) p = p * f.poly;
  return p;
}

IntPoly random_poly(std::mt19937_64& rng, int degree, long lo, long hi, bool monic) {
  std::uniform_int_distribution<long> d(lo, hi);
  std::vector<Integer> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = d(rng);
  if (monic) c.back() = 1;
  while (c.back() == 0) c.back() = d(rng);
  return IntPoly(std::move(c));
}

// Irreducibility oracle for degree <= 3: no rational roots.
bool irreducible_low_degree(const IntPoly& f) { return oracle::rational_roots(f).empty(); }

}  // namespace

TEST_CASE("factor_over_Q small examples") {
  auto fs = factor_over_Q(IntPoly{-1, 0, 0, 0, 1});
  REQUIRE(fs.size() == 3);
  CHECK(fs[0].poly == IntPoly{-1, 1});
  CHECK(fs[1].poly == IntPoly{1, 1});
  CHECK(fs[2].poly == IntPoly{1, 0, 1});
  for (const auto& f : fs) CHECK(f.multiplicity == 1);

  auto golden = factor_over_Q(IntPoly{-1, -1, 1});
  REQUIRE(golden.size() == 1);
  CHECK(golden[0].poly == IntPoly{-1, -1, 1});

  IntPoly sq = IntPoly{1, 0, 1} * IntPoly{1, 0, 1};
  auto s = factor_over_Q(sq);
  REQUIRE(s.size() == 1);
  CHECK(s[0].poly == IntPoly{1, 0, 1});
  CHECK(s[0].multiplicity == 2);

  CHECK_THROWS_AS(factor_over_Q(IntPoly{}), InvalidInput);
}

TEST_CASE("factor_over_Q handles Swinnerton-Dyer style inputs") {
  // X^4 - 10X^2 + 1 is irreducible but splits modulo every prime.
  CHECK(is_irreducible(IntPoly{1, 0, -10, 0, 1}));
  IntPoly f = IntPoly{1, 0, -10, 0, 1} * IntPoly{-2, 0, 1} * IntPoly{3, 0, 0, 1};
  auto fs = factor_over_Q(f);
  CHECK(fs.size() == 3);
  CHECK(reconstruct(fs) == f);
}

TEST_CASE("factor_over_Q reconstructs random products") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 40; ++t) {
    IntPoly a = random_poly(rng, 1 + t % 4, -6, 6, false);
    IntPoly b = random_poly(rng, 1 + (t / 4) % 3, -6, 6, t % 2 == 0);
    IntPoly c = random_poly(rng, 2, -3, 3, true);
    IntPoly f = a * b * b * c;
    auto fs = factor_over_Q(f);
    IntPoly r = reconstruct(fs);
    CHECK(r.primitive_part() == f.primitive_part());
    for (const auto& x : fs) {
      CHECK(x.poly.content() == 1);
      CHECK(x.poly.leading() > 0);
      if (x.poly.degree() >= 2 && x.poly.degree() <= 3) CHECK(irreducible_low_degree(x.poly));
    }
  }
}

TEST_CASE("factor_over_Q on cyclotomic products") {
  for (unsigned long d = 1; d <= 30; ++d) {
    IntPoly xd = IntPoly::monomial(1, d) - IntPoly{1};
    auto fs = factor_over_Q(xd);
    std::size_t divisors = 0;
    for (unsigned long e = 1; e <= d; ++e)
      if (d % e == 0) ++divisors;
    CHECK(fs.size() == divisors);
    CHECK(reconstruct(fs) == xd);
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == IntPoly{-1, 1});
  CHECK(cyclotomic(4) == IntPoly{1, 0, 1});
  IntPoly x5m1 = IntPoly::monomial(1, 5) - IntPoly{1};
  CHECK(cyclotomic(5) == exact_quotient(x5m1, IntPoly{-1, 1}));
  CHECK(cyclotomic(5) == IntPoly{1, 1, 1, 1, 1});
  IntPoly x4m1 = IntPoly::monomial(1, 4) - IntPoly{1};
  CHECK(cyclotomic(4) == exact_quotient(x4m1, cyclotomic(1) * cyclotomic(2)));
  for (unsigned long d = 1; d <= 30; ++d) {
    IntPoly phi = cyclotomic(d);
    CHECK(phi.degree() == static_cast<long>(euler_phi(d)));
    CHECK(phi.is_monic());
    CHECK(divides(phi, IntPoly::monomial(1, d) - IntPoly{1}));
  }
  CHECK_THROWS_AS(cyclotomic(0), InvalidInput);
}

TEST_CASE("resultant with the Sylvester f-rows-first convention") {
  CHECK(resultant(IntPoly{-2, 1}, IntPoly{-3, 1}) == -1);
  IntPoly f{-1, -1, 1};
  CHECK(resultant(f, f) == 0);
  CHECK(resultant(IntPoly{1, 0, 1}, IntPoly{-2, 0, 1}) == 9);
  CHECK_THROWS_AS(resultant(IntPoly{}, f), InvalidInput);
}

TEST_CASE("resultant matches the product formula over numeric roots") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    IntPoly f = random_poly(rng, 1 + t % 3, -4, 4, false);
    IntPoly g = random_poly(rng, 1 + (t / 3) % 3, -4, 4, false);
    auto roots = oracle::dk_roots(f);
    oracle::cld prod = std::pow(static_cast<long double>(f.leading().get_d()), static_cast<int>(g.degree()));
    for (auto r : roots) {
      oracle::cld v = 0;
      for (long i = g.degree(); i >= 0; --i) v = v * r + static_cast<long double>(g.coeff(static_cast<std::size_t>(i)).get_d());
      prod *= v;
    }
    Integer res = resultant(f, g);
    CHECK(std::abs(prod.real() - static_cast<long double>(res.get_d())) <= 1e-6L * std::max(1.0L, std::abs(prod)));
  }
}

TEST_CASE("reversal") {
  CHECK(reversal(IntPoly{1, -3, 1}) == IntPoly{1, -3, 1});
  CHECK(reversal(IntPoly{-1, -1, 1}) == IntPoly{1, -1, -1});
  CHECK(reversal(IntPoly{-1, -1, 0, 1}) == IntPoly{1, 0, -1, -1});
  CHECK_THROWS_AS(reversal(IntPoly{0, 1}), InvalidInput);
}

TEST_CASE("gcd and squarefree part") {
  IntPoly a = IntPoly{-1, 1} * IntPoly{1, 0, 1};
  IntPoly b = IntPoly{1, 0, 1} * IntPoly{2, 1};
  CHECK(gcd(a, b) == IntPoly{1, 0, 1});
  IntPoly f = IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{3, 0, 1};
  CHECK(squarefree_part(f) == IntPoly{-1, 1} * IntPoly{3, 0, 1});
  CHECK(gcd(IntPoly{2, 4}, IntPoly{3, 6}) == IntPoly{1, 2});
}

TEST_CASE("eig_product_poly examples") {
  IntPoly f{-1, -1, 1};
  IntPoly h = eig_product_poly(f, 2);
  CHECK(h.is_monic());
  CHECK(divides(IntPoly{1, 1}, h));
  CHECK(divides(IntPoly{1, -3, 1}, h));
  for (unsigned k = 1; k <= 4; ++k) CHECK(squarefree_part(eig_product_poly(IntPoly{-1, 1}, k)) == IntPoly{-1, 1});
  IntPoly i2 = eig_product_poly(IntPoly{1, 0, 1}, 2);
  CHECK(squarefree_part(i2) == IntPoly{-1, 0, 1});
  CHECK_THROWS_AS(eig_product_poly(IntPoly{1, 2}, 2), InvalidInput);
  CHECK_THROWS_AS(eig_product_poly(f, 0), InvalidInput);
}

TEST_CASE("eig_product_poly root set matches brute-force products") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  while (checked < 50) {
    int degree = 1 + static_cast<int>(rng() % 3);
    unsigned k = 1 + static_cast<unsigned>(rng() % 3);
    IntPoly f = random_poly(rng, degree, -3, 3, true);
    if (f.coeff(0) == 0 || squarefree_part(f).degree() != f.degree()) continue;
    ++checked;
    auto base = oracle::dk_roots(f);
    auto products = oracle::kfold_products(base, k);
    IntPoly h = eig_product_poly(f, k);
    CHECK(h.degree() == static_cast<long>(std::pow(degree, k)));
    auto hsf = squarefree_part(h);
    auto hroots = oracle::dk_roots(hsf);
    for (auto z : hroots) CHECK(oracle::contains_close(products, z, 1e-8L));
    for (auto z : products) CHECK(oracle::contains_close(hroots, z, 1e-8L));
  }
}

TEST_CASE("interpolation is exact") {
  std::vector<Rational> xs{0, 1, 2, 3}, ys;
  RatPoly p{5, -1, 0, 2};
  for (const auto& x : xs) ys.push_back(p.eval(x));
  CHECK(interpolate(xs, ys) == p);
}
