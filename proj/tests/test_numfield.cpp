#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "anosov/factor.hpp"
#include "anosov/numfield.hpp"
#include "oracles.hpp"

using namespace anosov;
using cld = std::complex<long double>;

namespace {

// Smallest unit (x + y sqrt d)/2 > 1 of the maximal order, by brute force over y.
std::pair<Rational, Rational> brute_fundamental_unit(long d) {
  for (long y = 1; y < 2000000; ++y) {
    for (long sign : {-4L, 4L}) {
      long x2 = d * y * y + sign;
      if (x2 <= 0) continue;
      long x = std::lround(std::sqrt(static_cast<long double>(x2)));
      while (x * x > x2) --x;
      while ((x + 1) * (x + 1) <= x2) ++x;
      if (x * x != x2) continue;
      if (d % 4 != 1 && (x % 2 != 0 || y % 2 != 0)) continue;
      if ((x - y) % 2 != 0) continue;
      return {Rational(x) / 2, Rational(y) / 2};
    }
  }
  return {};
}

std::vector<cld> numeric_conjugates(const NumberField& k, const FieldElem& a) {
  std::vector<cld> roots = oracle::dk_roots(k.min_poly());
  std::vector<cld> out;
  for (auto r : roots) {
    cld v = 0, p = 1;
    for (const auto& q : a) {
      v += static_cast<long double>(q.get_d()) * p;
      p *= r;
    }
    out.push_back(v);
  }
  return out;
}

bool oracle_c_hyperbolic(const std::vector<cld>& eig, unsigned c) {
  for (unsigned k = 1; k <= c; ++k)
    for (auto z : oracle::kfold_products(eig, k))
      if (std::fabs(std::abs(z) - 1.0L) < 1e-9L) return false;
  return true;
}

}  // namespace

TEST_CASE("field construction and signature") {
  auto q2 = NumberField::make(IntPoly{-2, 0, 1});
  CHECK(q2.s() == 2);
  CHECK(q2.t() == 0);
  auto c5 = NumberField::make(cyclotomic(5));
  CHECK(c5.s() == 0);
  CHECK(c5.t() == 2);
  auto pl = NumberField::make(IntPoly{-1, -1, 0, 1});
  CHECK(pl.s() == 1);
  CHECK(pl.t() == 1);
  CHECK(std::fabs(pl.embeddings()[0].re.convert_to<double>() - 1.324717957244746) < 1e-14);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> dist(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Integer> co(5);
    for (int i = 0; i < 4; ++i) co[i] = dist(rng);
    co[4] = 1;
    IntPoly f(co);
    if (!is_irreducible(f)) continue;
    auto k = NumberField::make(f);
    std::size_t real = 0;
    for (auto r : oracle::dk_roots(f))
      if (std::fabs(r.imag()) < 1e-12L) ++real;
    CHECK(k.s() == real);
    CHECK(k.s() + 2 * k.t() == k.degree());
    // Complex embeddings come in adjacent conjugate pairs.
    for (std::size_t j = 0; j < k.t(); ++j) {
      const auto& a = k.embeddings()[k.s() + 2 * j];
      const auto& b = k.embeddings()[k.s() + 2 * j + 1];
      CHECK(a.im > 0);
      CHECK(boost::multiprecision::abs(a.re - b.re) < Real(1e-30));
      CHECK(boost::multiprecision::abs(a.im + b.im) < Real(1e-30));
    }
  }

  CHECK_THROWS_AS(NumberField::make(IntPoly{-1, 0, 1}), InvalidInput);
  CHECK_THROWS_AS(NumberField::make(IntPoly{-2, 0, 2}), InvalidInput);
}

TEST_CASE("element arithmetic") {
  auto k = NumberField::make(IntPoly{-1, -1, 0, 1});
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> dist(-5, 5);
  for (int trial = 0; trial < 25; ++trial) {
    FieldElem a{Rational(dist(rng)), Rational(dist(rng)) / 3, Rational(dist(rng))};
    if (k.is_zero(a)) continue;
    CHECK(k.mul(a, k.inv(a)) == k.one());
    FieldElem b{Rational(dist(rng)), Rational(dist(rng)), Rational(dist(rng)) / 2};
    CHECK(k.mult_matrix(k.mul(a, b)) == k.mult_matrix(a) * k.mult_matrix(b));
    // The minimal polynomial vanishes at every numeric conjugate.
    IntPoly mp = k.element_min_poly(a);
    for (auto z : numeric_conjugates(k, a)) {
      cld v = 0, p = 1;
      for (const auto& co : mp.coeffs()) {
        v += static_cast<long double>(co.get_d()) * p;
        p *= z;
      }
      CHECK(std::abs(v) < 1e-6L * (1 + std::abs(p)));
    }
  }
  CHECK(k.pow(k.theta(), 3) == k.add(k.theta(), k.one()));
  CHECK(k.pow(k.theta(), -1) == k.inv(k.theta()));
  CHECK(k.norm(k.theta()) == 1);
}

TEST_CASE("log embedding") {
  auto q2 = quadratic_field(2);
  auto one = make_unit(q2, q2.one());
  for (const auto& x : one.log_vector) CHECK(x == 0);
  auto u = make_unit(q2, FieldElem{1, 1});
  REQUIRE(u.log_vector.size() == 2);
  CHECK(std::fabs(u.log_vector[0].convert_to<double>() - std::log(1 + std::sqrt(2.0))) < 1e-14);
  CHECK(std::fabs(u.log_vector[1].convert_to<double>() - std::log(std::sqrt(2.0) - 1)) < 1e-14);
  CHECK(boost::multiprecision::abs(weighted_log_sum(q2, u.log_vector)) < pow2_neg(64));

  auto pl = NumberField::make(IntPoly{-1, -1, 0, 1});
  auto th = make_unit(pl, pl.theta());
  REQUIRE(th.log_vector.size() == 2);
  CHECK(std::fabs(th.log_vector[0].convert_to<double>() - std::log(1.324717957244746)) < 1e-13);
  CHECK(std::fabs(th.log_vector[1].convert_to<double>() - std::log(0.868836961832709)) < 1e-12);
  CHECK(boost::multiprecision::abs(weighted_log_sum(pl, th.log_vector)) < pow2_neg(64));

  CHECK_THROWS_AS(pl.log_vector(pl.zero()), InvalidInput);
  CHECK_THROWS_AS(make_unit(q2, FieldElem{2, 0}), InvalidInput);
}

TEST_CASE("real quadratic fundamental units") {
  auto u2 = fundamental_unit_real_quadratic(2);
  CHECK(u2.coords == FieldElem{1, 1});
  auto u5 = fundamental_unit_real_quadratic(5);
  CHECK(u5.coords == FieldElem{Rational(1, 2), Rational(1, 2)});
  auto u3 = fundamental_unit_real_quadratic(3);
  CHECK(u3.coords == FieldElem{2, 1});

  for (long d : {6L, 7L, 10L, 11L, 13L, 14L, 15L, 17L, 19L, 21L, 22L, 23L, 29L, 31L, 37L, 41L, 43L, 46L, 53L, 61L}) {
    CAPTURE(d);
    auto u = fundamental_unit_real_quadratic(static_cast<unsigned long>(d));
    auto expect = brute_fundamental_unit(d);
    CHECK(u.coords[0] == expect.first);
    CHECK(u.coords[1] == expect.second);
  }
  CHECK_THROWS_AS(fundamental_unit_real_quadratic(12), InvalidInput);
  CHECK_THROWS_AS(fundamental_unit_real_quadratic(1), InvalidInput);
}

TEST_CASE("cyclotomic units") {
  auto g5 = cyclotomic_unit_generators(5);
  REQUIRE(g5.size() == 1);
  CHECK(g5[0].coords == FieldElem{1, 1, 0, 0});
  auto k5 = cyclotomic_field(5);
  std::vector<long double> mods;
  for (auto z : numeric_conjugates(k5, g5[0].coords)) mods.push_back(std::abs(z));
  std::sort(mods.begin(), mods.end());
  CHECK(std::fabs(mods[0] - 0.6180339887498949L) < 1e-12L);
  CHECK(std::fabs(mods[1] - 0.6180339887498949L) < 1e-12L);
  CHECK(std::fabs(mods[2] - 1.6180339887498949L) < 1e-12L);
  CHECK(std::fabs(mods[3] - 1.6180339887498949L) < 1e-12L);

  auto g8 = cyclotomic_unit_generators(8);
  REQUIRE(g8.size() == 1);
  CHECK(g8[0].coords == FieldElem{1, 1, 1, 0});
  cld norm = 1;
  for (int a : {1, 3, 5, 7}) {
    cld w = std::polar(1.0L, 2 * 3.14159265358979323846L * a / 8);
    norm *= 1.0L + w + w * w;
  }
  CHECK(std::fabs(std::abs(norm) - 1) < 1e-15L);

  for (unsigned long d : {7UL, 9UL, 12UL, 15UL, 16UL, 20UL}) {
    CAPTURE(d);
    auto gens = cyclotomic_unit_generators(d);
    auto k = cyclotomic_field(d);
    for (const auto& u : gens) {
      CHECK(k.is_unit(u.coords));
      CHECK(boost::multiprecision::abs(weighted_log_sum(k, u.log_vector)) < pow2_neg(64));
    }
  }
  CHECK_THROWS_AS(cyclotomic_unit_generators(4), InvalidInput);
  CHECK_THROWS_AS(cyclotomic_unit_generators(6), InvalidInput);
}

TEST_CASE("hyperbolicity bounds") {
  CHECK(max_hyperbolicity_bound(quadratic_field(2)) == 1);
  CHECK(max_hyperbolicity_bound(cyclotomic_field(5)) == 1);
  CHECK(max_hyperbolicity_bound(NumberField::make(IntPoly{-1, -1, 0, 1})) == 2);
  CHECK(max_hyperbolicity_bound(cyclotomic_field(16)) == 3);
}

TEST_CASE("c-hyperbolic unit search") {
  auto q2 = quadratic_field(2);
  auto gens = default_unit_generators(q2);
  auto r = search_c_hyperbolic_unit(q2, gens, 1, 6);
  REQUIRE(r.unit);
  CHECK(r.unit->coords == FieldElem{1, 1});
  CHECK(r.report.verdict);
  CHECK_FALSE(search_c_hyperbolic_unit(q2, gens, 2, 12).unit);

  auto k5 = cyclotomic_field(5);
  auto g5 = default_unit_generators(k5);
  auto r5 = search_c_hyperbolic_unit(k5, g5, 1, 6);
  REQUIRE(r5.unit);
  CHECK(r5.unit->coords == FieldElem{1, 1, 0, 0});
  CHECK_FALSE(search_c_hyperbolic_unit(k5, g5, 2, 8).unit);

  auto gi = cyclotomic_field(4);
  CHECK_FALSE(search_c_hyperbolic_unit(gi, default_unit_generators(gi), 1, 12).unit);

  // Totally imaginary fields have no (n/2)-hyperbolic units.
  for (unsigned long d : {8UL, 12UL}) {
    auto k = cyclotomic_field(d);
    CHECK_FALSE(search_c_hyperbolic_unit(k, default_unit_generators(k), 2, 5).unit);
  }

  // Up to the bound, every hit is confirmed by an independent eigenvalue check.
  for (const auto& f : {IntPoly{-1, -1, 0, 1}, IntPoly{1, -3, 0, 1}, IntPoly{-1, 0, -1, 0, 1}, cyclotomic(7),
                        cyclotomic(16)}) {
    auto k = NumberField::make(f);
    auto gens_k = default_unit_generators(k);
    for (unsigned c = 1; c <= max_hyperbolicity_bound(k); ++c) {
      CAPTURE(c);
      auto hit = search_c_hyperbolic_unit(k, gens_k, c, 4);
      if (!hit.unit) continue;
      CHECK(k.is_unit(hit.unit->coords));
      CHECK(hit.min_poly.is_monic());
      CHECK(abs(hit.min_poly.coeff(0)) == 1);
      CHECK(oracle_c_hyperbolic(numeric_conjugates(k, hit.unit->coords), c));
    }
  }
}

TEST_CASE("c-hyperbolic polynomials by height") {
  CHECK(find_hyperbolic_polynomial(2, 1) == IntPoly{1, -3, 1});
  CHECK(find_hyperbolic_polynomial(3, 2) == IntPoly{-1, -1, 0, 1});
  IntPoly f4 = find_hyperbolic_polynomial(4, 3);
  CHECK(f4.coeff(0) == 1);
  CHECK(is_irreducible(f4));
  CHECK(oracle_c_hyperbolic(oracle::dk_roots(f4), 3));
}

TEST_CASE("abelian extensions") {
  CHECK(real_cyclic_field(1) == IntPoly{1, 1});
  CHECK(real_cyclic_field(2) == IntPoly{-1, 1, 1});
  CHECK(real_cyclic_field(3) == IntPoly{-1, -2, 1, 1});
  for (unsigned m = 2; m <= 5; ++m) {
    IntPoly f = real_cyclic_field(m);
    CHECK(f.degree() == m);
    CHECK(real_root_count(f) == m);
    auto k = NumberField::make(f);
    RatMatrix th = k.mult_matrix(k.theta());
    CHECK(poly_eval(f.to_rat(), th).is_zero());
  }
  // A cyclic cubic has square discriminant.
  IntPoly c3 = real_cyclic_field(3);
  Integer disc = -resultant(c3, c3.derivative());
  CHECK(disc > 0);
  CHECK(mpz_perfect_square_p(disc.get_mpz_t()));
  IntPoly e = cyclotomic_compositum(4, 2);
  CHECK(e.degree() == 4);
  CHECK(is_irreducible(e));
  CHECK(real_root_count(e) == 0);
  IntPoly e3 = cyclotomic_compositum(5, 3);
  CHECK(e3.degree() == 12);
  CHECK(is_irreducible(e3));
}
