#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "anosov/corpus.hpp"
#include "anosov/witness.hpp"
#include "oracles.hpp"

using namespace anosov;
using cld = std::complex<long double>;

namespace {

// Independent re-check of a witness: commutation with every element image,
// integral char poly with unit constant term, and c-hyperbolicity from
// Durand-Kerner roots.
bool oracle_witness(const RationalRep& rep, const RatMatrix& w, unsigned c) {
  for (const auto& g : rep.images())
    if (mat_mul(g, w) != mat_mul(w, g)) return false;
  RatPoly cp = oracle::faddeev_leverrier(w);
  for (const auto& q : cp.coeffs())
    if (q.get_den() != 1) return false;
  if (abs(cp.coeff(0)) != 1) return false;
  auto roots = oracle::dk_roots(cp.to_int());
  for (unsigned k = 1; k <= c; ++k)
    for (auto z : oracle::kfold_products(roots, k))
      if (std::fabs(std::abs(z) - 1.0L) < 1e-9L) return false;
  return true;
}

ComponentProfile single_class(const RationalRep& rep) {
  auto classes = decompose(rep, 1);
  REQUIRE(classes.size() == 1);
  return classes.front();
}

}  // namespace

TEST_CASE("block companion layout") {
  RatMatrix m{{0, -1}, {1, -1}};
  CHECK(block_companion({RatMatrix::identity(2)}, m) == -RatMatrix::identity(2));
  RatMatrix i1 = RatMatrix::identity(1);
  RatMatrix swap = block_companion({-i1, RatMatrix(1, 1)}, i1);
  CHECK(swap == RatMatrix{{0, 1}, {1, 0}});
  RatMatrix i2 = RatMatrix::identity(2);
  RatMatrix big = block_companion({-i2, RatMatrix(2, 2)}, i2);
  CHECK(big == RatMatrix{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  CHECK_THROWS_AS(block_companion({RatMatrix{{1, 1}, {0, 1}}}, RatMatrix{{1, 0}, {0, 2}}), InvalidInput);
  CHECK_THROWS_AS(block_companion({}, m), InvalidInput);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    RatMatrix mm = oracle::random_int_matrix(rng, 3, -3, 3);
    std::size_t blocks = 1 + static_cast<std::size_t>(trial % 3);
    std::vector<RatMatrix> coeffs;
    std::uniform_int_distribution<long> dist(-2, 2);
    for (std::size_t j = 0; j < blocks; ++j) {
      RatPoly p{dist(rng), dist(rng), dist(rng)};
      coeffs.push_back(poly_eval(p, mm));
    }
    RatMatrix bc = block_companion(coeffs, mm);
    RatMatrix lifted = kron(RatMatrix::identity(blocks), mm);
    CHECK(mat_mul(bc, lifted) == mat_mul(lifted, bc));
  }
}

TEST_CASE("block companion characteristic polynomial is the norm") {
  // Q(sqrt 2) acting on Q^2 through J = [[0, 2], [1, 0]].
  RatMatrix j{{0, 2}, {1, 0}};
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> dist(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    // f_0 = X^2 + (a1 + b1 sqrt2) X + (a0 + b0 sqrt2).
    long a0 = dist(rng), b0 = dist(rng), a1 = dist(rng), b1 = dist(rng);
    RatMatrix c0 = Rational(a0) * RatMatrix::identity(2) + Rational(b0) * j;
    RatMatrix c1 = Rational(a1) * RatMatrix::identity(2) + Rational(b1) * j;
    RatPoly cp = char_poly(block_companion({c0, c1}, j));
    // Oracle: multiply the two conjugate quadratics numerically.
    long double r2 = std::sqrt(2.0L);
    std::vector<long double> prod(5, 0);
    std::vector<long double> f{a0 + b0 * r2, a1 + b1 * r2, 1}, g{a0 - b0 * r2, a1 - b1 * r2, 1};
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) prod[x + y] += f[x] * g[y];
    for (int i = 0; i <= 4; ++i) CHECK(std::fabs(cp.coeff(i).get_d() - static_cast<double>(prod[i])) < 1e-9);
  }
}

TEST_CASE("verify witness") {
  auto g = corpus::d3_group();
  auto rho = corpus::d3_rho3(g);
  auto three = rho.multiple(3);
  RatMatrix w = kronecker(RatMatrix::companion(IntPoly{-1, -1, 0, 1}), 2);
  auto cert = verify_witness(three, w, 2);
  CHECK(cert.commutes);
  CHECK(cert.integer_like);
  CHECK(cert.hyperbolicity.verdict);
  CHECK(cert.valid());
  CHECK(cert.commutes_per_generator == std::vector<bool>{true, true});

  auto id = verify_witness(three, RatMatrix::identity(6), 1);
  CHECK(id.commutes);
  CHECK(id.integer_like);
  CHECK_FALSE(id.hyperbolicity.verdict);
  CHECK_FALSE(id.valid());

  auto bad = verify_witness(rho, RatMatrix{{0, 1}, {1, 0}}, 1);
  CHECK_FALSE(bad.commutes);
  CHECK_FALSE(bad.commutes_per_generator[0]);
  CHECK_THROWS_AS(verify_witness(rho, RatMatrix::identity(3), 1), InvalidInput);
}

TEST_CASE("field through commutant") {
  auto c5 = corpus::cyclic_companion(5);
  auto r = field_through_commutant(c5, 1, 1);
  REQUIRE(r.certificate);
  RatMatrix a = RatMatrix::companion(cyclotomic(5));
  CHECK(r.certificate->witness == RatMatrix::identity(4) + a);
  CHECK(det(r.certificate->witness) == cyclotomic(5).eval(Integer(-1)));
  CHECK(r.certificate->construction_path == ConstructionPath::FieldThroughCommutant);
  CHECK(oracle_witness(c5, r.certificate->witness, 1));

  auto c4 = corpus::cyclic_companion(4);
  auto r4 = field_through_commutant(c4, 1, 1);
  CHECK_FALSE(r4.certificate);
  CHECK_FALSE(r4.failure.empty());

  for (std::size_t dim : {2u, 3u, 4u}) {
    auto triv = corpus::trivial(dim);
    for (unsigned c = 1; c < dim; ++c) {
      CAPTURE(dim);
      CAPTURE(c);
      auto rt = field_through_commutant(triv, c, 5);
      REQUIRE(rt.certificate);
      CHECK(oracle_witness(triv, rt.certificate->witness, c));
    }
  }
}

TEST_CASE("tensor shortcut") {
  auto g = corpus::d3_group();
  auto rho = corpus::d3_rho3(g);
  auto cls3 = single_class(rho.multiple(3));
  CHECK(cls3.multiplicity == 3);
  auto r = tensor_shortcut(cls3, 2);
  REQUIRE(r.certificate);
  CHECK(r.certificate->witness == kronecker(RatMatrix::companion(IntPoly{-1, -1, 0, 1}), 2));
  CHECK(oracle_witness(cls3.sub_rep.multiple(3), r.certificate->witness, 2));

  auto cls2 = single_class(rho.multiple(2));
  auto r2 = tensor_shortcut(cls2, 1);
  REQUIRE(r2.certificate);
  CHECK(r2.certificate->witness == kronecker(RatMatrix::companion(IntPoly{1, -3, 1}), 2));
  auto refused = tensor_shortcut(cls2, 2);
  CHECK_FALSE(refused.certificate);
  CHECK(refused.failure.find("refused") != std::string::npos);

  auto c5 = single_class(corpus::cyclic_companion(5).multiple(2));
  CHECK_FALSE(tensor_shortcut(c5, 1).certificate);
}

TEST_CASE("block companion witness") {
  auto g = corpus::d3_group();
  auto cls = single_class(corpus::d3_rho3(g).multiple(2));
  auto r = block_companion_witness(cls, 1);
  REQUIRE(r.certificate);
  CHECK(r.certificate->construction_path == ConstructionPath::BlockCompanion);
  CHECK(oracle_witness(cls.sub_rep.multiple(2), r.certificate->witness, 1));

  // Centre field Q(zeta_3), two copies.
  auto c3 = single_class(corpus::cyclic_companion(3).multiple(2));
  CHECK(c3.n_field == 2);
  auto r3 = block_companion_witness(c3, 1);
  REQUIRE(r3.certificate);
  CHECK(oracle_witness(c3.sub_rep.multiple(2), r3.certificate->witness, 1));
}

TEST_CASE("lattice search") {
  auto triv = corpus::trivial(2);
  auto r = lattice_search(triv, 1, 3, 0);
  REQUIRE(r.certificate);
  const RatMatrix& w = r.certificate->witness;
  CHECK(oracle_witness(triv, w, 1));
  // Exhaustive oracle: no hyperbolic unimodular 2x2 matrix has smaller height than the hit.
  Rational height = 0;
  for (const auto& q : w.data()) height = std::max(height, Rational(abs(q)));
  CHECK(height == 1);

  CHECK_FALSE(lattice_search(corpus::klein(), 1, 4, 0).certificate);
  CHECK_FALSE(lattice_search(triv, 1, 0, 0).certificate);

  // NO instances from the corpus: nothing up to height 3.
  auto g = corpus::d3_group();
  CHECK(lattice_census(corpus::d3_rho3(g), 1, 3).hits == 0);
  CHECK(lattice_census(corpus::d3_rho3(g).multiple(2), 2, 3).hits == 0);
  CHECK(lattice_census(corpus::klein(), 1, 3).hits == 0);
  CHECK(lattice_census(corpus::cyclic_companion(4), 1, 3).hits == 0);
  CHECK(lattice_census(corpus::trivial(2), 2, 3).hits == 0);
  auto census = lattice_census(triv, 1, 1);
  CHECK(census.candidates == 80);
  CHECK(census.hits > 0);
}

TEST_CASE("Vandermonde matrices and Galois permutations") {
  auto q2 = quadratic_field(2);
  auto vd = vandermonde_P(q2, 1);
  double r2 = std::sqrt(2.0);
  CHECK(std::fabs(vd.q(0, 1).re.convert_to<double>() - r2) < 1e-15);
  CHECK(std::fabs(vd.q(1, 1).re.convert_to<double>() + r2) < 1e-15);
  CHECK(std::fabs(vd.p(0, 0).re.convert_to<double>() - 0.5) < 1e-15);
  CHECK(std::fabs(vd.p(1, 0).re.convert_to<double>() - 0.5 / r2) < 1e-15);
  REQUIRE(vd.actions.size() == 2);
  CHECK(vd.actions[1].perm == Permutation::from_one_based({2, 1}));

  auto rat = NumberField::make(IntPoly{0, 1});
  auto vq = vandermonde_P(rat, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(vq.p(i, j).re == (i == j ? 1 : 0));

  auto k5 = cyclotomic_field(5);
  auto v5 = vandermonde_P(k5, 2);
  CHECK(v5.q.n == 8);
  CHECK(v5.actions.size() == 4);
  ComplexMatrix prod = v5.p * v5.q;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      CHECK(boost::multiprecision::abs(prod(i, j).re - (i == j ? 1 : 0)) < Real(1e-30));

  CHECK(vandermonde_P(NumberField::make(IntPoly{-1, -1, 0, 1}), 1).actions.size() == 1);
  CHECK(vandermonde_P(cyclotomic_field(7), 1).actions.size() == 6);
  CHECK(vandermonde_P(NumberField::make(real_cyclic_field(3)), 1).actions.size() == 3);
  CHECK(vandermonde_P(NumberField::make(IntPoly{-2, 0, 0, 1}), 1).actions.size() == 1);
}

TEST_CASE("rationalized conjugate block diagonals") {
  auto q2 = quadratic_field(2);
  auto vd = vandermonde_P(q2, 1);
  FieldMatrix mu{{FieldElem{1, 1}}};
  CHECK(rationalize_conjugate_blockdiag(q2, vd, mu) == RatMatrix{{1, 2}, {1, 1}});

  auto rat = NumberField::make(IntPoly{0, 1});
  FieldMatrix c0{{FieldElem{Rational(1, 2)}, FieldElem{3}}, {FieldElem{-1}, FieldElem{7}}};
  CHECK(rationalize_conjugate_blockdiag(rat, vandermonde_P(rat, 2), c0) ==
        RatMatrix{{Rational(1, 2), 3}, {-1, 7}});

  auto k5 = cyclotomic_field(5);
  FieldMatrix one_plus{{FieldElem{1, 1, 0, 0}}};
  RatMatrix r5 = rationalize_conjugate_blockdiag(k5, vandermonde_P(k5, 1), one_plus);
  RatMatrix expect = RatMatrix::identity(4) + RatMatrix::companion(cyclotomic(5));
  CHECK(char_poly(r5) == char_poly(expect));

  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> dist(-3, 3);
  for (const auto& f : {IntPoly{-5, 0, 1}, cyclotomic(5), IntPoly{-1, -1, 0, 1}}) {
    auto k = NumberField::make(f);
    std::size_t n = k.degree();
    for (std::size_t size : {1u, 2u}) {
      FieldMatrix m(size, std::vector<FieldElem>(size, FieldElem(n)));
      for (auto& row : m)
        for (auto& e : row)
          for (auto& q : e) q = Rational(dist(rng)) / 2;
      auto v = vandermonde_P(k, size);
      RatMatrix lifted = kron(k.mult_matrix(k.theta()), RatMatrix::identity(size));
      RatMatrix r = rationalize_conjugate_blockdiag(k, v, m, {lifted});
      CHECK(r == restriction_of_scalars(k, m));
      // Independent characteristic polynomial of the restriction of scalars.
      CHECK(oracle::faddeev_leverrier(r).primitive_integer_part() == norm_char_poly(k, m));
    }
  }
}
