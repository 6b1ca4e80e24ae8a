#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <random>

#include "anosov/corpus.hpp"
#include "anosov/freenilp.hpp"
#include "oracles.hpp"

using namespace anosov;
using cld = std::complex<long double>;

namespace {

// Lyndon words counted by brute force: strictly smaller than every proper rotation.
std::size_t brute_lyndon_count(unsigned r, unsigned len) {
  std::size_t total = 1;
  for (unsigned i = 0; i < len; ++i) total *= r;
  std::size_t count = 0;
  std::vector<unsigned> w(len);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t x = code;
    for (unsigned i = 0; i < len; ++i) {
      w[len - 1 - i] = static_cast<unsigned>(x % r);
      x /= r;
    }
    bool lyndon = true;
    for (unsigned s = 1; s < len && lyndon; ++s) {
      std::vector<unsigned> rot(w.begin() + s, w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + s);
      if (!(w < rot)) lyndon = false;
    }
    if (lyndon) ++count;
  }
  return count;
}

// Dimension of the degree-len part of the free Lie algebra: rank of all left-normed
// brackets [x_a1, [x_a2, ... x_alen]] expanded in the free associative algebra.
std::size_t bracket_span_rank(unsigned r, unsigned len) {
  using P = std::map<std::vector<unsigned>, long>;
  std::function<P(const std::vector<unsigned>&, std::size_t)> bracket = [&](const std::vector<unsigned>& a,
                                                                          std::size_t from) -> P {
    if (from + 1 == a.size()) return P{{{a[from]}, 1}};
    P inner = bracket(a, from + 1);
    P out;
    for (const auto& [w, q] : inner) {
      std::vector<unsigned> left{a[from]};
      left.insert(left.end(), w.begin(), w.end());
      out[left] += q;
      std::vector<unsigned> right = w;
      right.push_back(a[from]);
      out[right] -= q;
    }
    return out;
  };
  std::map<std::vector<unsigned>, std::size_t> column;
  std::vector<P> rows;
  std::size_t total = 1;
  for (unsigned i = 0; i < len; ++i) total *= r;
  std::vector<unsigned> a(len);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t x = code;
    for (unsigned i = 0; i < len; ++i) {
      a[i] = static_cast<unsigned>(x % r);
      x /= r;
    }
    P p = bracket(a, 0);
    for (const auto& [w, q] : p)
      if (q != 0 && !column.count(w)) column.emplace(w, column.size());
    rows.push_back(p);
  }
  RatMatrix m(rows.size(), std::max<std::size_t>(column.size(), 1));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [w, q] : rows[i])
      if (q != 0) m(i, column[w]) = q;
  return rank(m);
}

RatMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  while (true) {
    RatMatrix m = oracle::random_int_matrix(rng, n, -3, 3);
    if (det(m) != 0) return m;
  }
}

}  // namespace

TEST_CASE("Hall basis dimensions") {
  CHECK(HallBasis::make(2, 2).dimensions() == std::vector<std::size_t>{2, 1});
  CHECK(HallBasis::make(3, 3).dimensions() == std::vector<std::size_t>{3, 3, 8});
  auto b4 = HallBasis::make(4, 2);
  CHECK(b4.dimension(2) == 6);
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < 6; ++k) labels.push_back(b4.label(2, k));
  CHECK(labels == std::vector<std::string>{"[x1,x2]", "[x1,x3]", "[x1,x4]", "[x2,x3]", "[x2,x4]", "[x3,x4]"});
  CHECK(b4.degree2_index(1, 3) == 1);
  CHECK(b4.degree2_index(2, 4) == 4);
  CHECK(HallBasis::make(2, 3).label(3, 0) == "[x1,[x1,x2]]");
  CHECK(b4.degree(1).size() == 4);

  for (unsigned r = 1; r <= 4; ++r)
    for (unsigned c = 1; c <= 4; ++c) {
      auto b = HallBasis::make(r, c);
      for (unsigned i = 1; i <= c; ++i) {
        CAPTURE(r);
        CAPTURE(i);
        CHECK(Integer(static_cast<unsigned long>(b.dimension(i))) == witt_number(r, i));
        CHECK(b.dimension(i) == brute_lyndon_count(r, i));
      }
    }
  for (unsigned r = 2; r <= 3; ++r)
    for (unsigned i = 1; i <= 4; ++i) CHECK(bracket_span_rank(r, i) == brute_lyndon_count(r, i));

  CHECK_THROWS_AS(HallBasis::make(0, 2), InvalidInput);
  CHECK_THROWS_AS(HallBasis::make(2, 0), InvalidInput);
  CHECK_THROWS_AS(HallBasis::make(10, 6), InvalidInput);
}

TEST_CASE("graded action basics") {
  auto b = HallBasis::make(3, 3);
  for (std::size_t i = 1; i <= 3; ++i) CHECK(graded_action(RatMatrix::identity(3), b, i).is_identity());
  auto b2 = HallBasis::make(2, 2);
  std::mt19937_64 rng(21);
  for (int t = 0; t < 10; ++t) {
    RatMatrix m = random_invertible(rng, 2);
    CHECK(graded_action(m, b2, 2) == RatMatrix{{det(m)}});
  }
  CHECK_THROWS_AS(graded_action(RatMatrix{{1, 2}, {2, 4}}, b2, 2), InvalidInput);
  CHECK_THROWS_AS(graded_action(RatMatrix::identity(3), b2, 2), InvalidInput);
  CHECK_THROWS_AS(graded_action(RatMatrix::identity(2), b2, 3), InvalidInput);
}

TEST_CASE("graded action is functorial") {
  std::mt19937_64 rng(4);
  for (unsigned r = 2; r <= 3; ++r) {
    auto b = HallBasis::make(r, 4);
    for (int t = 0; t < 6; ++t) {
      RatMatrix m1 = random_invertible(rng, r), m2 = random_invertible(rng, r);
      for (std::size_t i = 1; i <= (r == 3 ? 3u : 4u); ++i)
        CHECK(graded_action(m1 * m2, b, i) == graded_action(m1, b, i) * graded_action(m2, b, i));
    }
  }
}

TEST_CASE("graded eigenvalues are products of eigenvalues") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 20; ++t) {
    std::size_t r = 2 + static_cast<std::size_t>(t % 2);
    RatMatrix m = random_invertible(rng, r);
    auto b = HallBasis::make(static_cast<unsigned>(r), 3);
    auto base = oracle::dk_roots(squarefree_part(char_poly(m).primitive_integer_part()));
    for (unsigned i = 1; i <= 3; ++i) {
      if (b.dimension(i) == 0) continue;
      auto products = oracle::kfold_products(base, i);
      IntPoly cp = char_poly(graded_action(m, b, i)).primitive_integer_part();
      for (auto z : oracle::dk_roots(squarefree_part(cp))) {
        CAPTURE(t);
        CAPTURE(i);
        CHECK(oracle::contains_close(products, z, 1e-10L * (1 + std::abs(z))));
      }
    }
  }
}

TEST_CASE("degree-two action reproduces A and B") {
  auto b = HallBasis::make(4, 2);
  RatMatrix ma = block_diag({corpus::rho3_a(), corpus::rho3_a()});
  RatMatrix mb = block_diag({corpus::rho3_b(), corpus::rho3_b()});
  // Generator images as columns: a(x1) = x2, a(x2) = -x1 - x2, b(x1) = -x2, b(x2) = -x1.
  CHECK(ma.column(0) == RatMatrix::column_vector({0, 1, 0, 0}));
  CHECK(ma.column(1) == RatMatrix::column_vector({-1, -1, 0, 0}));
  CHECK(mb.column(0) == RatMatrix::column_vector({0, -1, 0, 0}));
  std::vector<std::size_t> sub{b.degree2_index(1, 3), b.degree2_index(1, 4), b.degree2_index(2, 3),
                               b.degree2_index(2, 4)};
  RatMatrix a_full = graded_action(ma, b, 2);
  RatMatrix b_full = graded_action(mb, b, 2);
  CHECK(restrict_to_sub_basis(a_full, sub) == corpus::d3_A());
  CHECK(restrict_to_sub_basis(b_full, sub) == corpus::d3_B());
  // a(y14) = -y23 - y24.
  CHECK(a_full(b.degree2_index(2, 3), b.degree2_index(1, 4)) == -1);
  CHECK(a_full(b.degree2_index(2, 4), b.degree2_index(1, 4)) == -1);
  CHECK_THROWS_AS(restrict_to_sub_basis(a_full, {0, 1}), InvalidInput);
}

TEST_CASE("hyperbolicity of the full graded action") {
  auto cat = full_action_hyperbolic(RatMatrix{{2, 1}, {1, 1}}, 2);
  CHECK_FALSE(cat.hyperbolic);
  REQUIRE(cat.degrees.size() == 2);
  CHECK(cat.degrees[0].status != CircleStatus::Found);
  CHECK(cat.degrees[1].status == CircleStatus::Found);
  CHECK(cat.degrees[1].char_poly == IntPoly{-1, 1});

  auto plastic = full_action_hyperbolic(RatMatrix::companion(IntPoly{-1, -1, 0, 1}), 2);
  CHECK(plastic.hyperbolic);
  for (const auto& d : plastic.degrees) CHECK(d.contained_in_products);

  auto id = full_action_hyperbolic(RatMatrix::identity(2), 1);
  CHECK_FALSE(id.hyperbolic);
  CHECK(id.degrees[0].status == CircleStatus::Found);

  std::mt19937_64 rng(12);
  for (int t = 0; t < 10; ++t) {
    RatMatrix m = random_invertible(rng, 3);
    for (const auto& d : full_action_hyperbolic(m, 3).degrees) CHECK(d.contained_in_products);
  }
}
