#pragma once

// Free nilpotent Lie algebras: Hall (Lyndon) basis, Witt dimensions and graded actions.

#include <cstdint>
#include <map>
#include <vector>

#include "anosov/hyper.hpp"
#include "anosov/ratmat.hpp"

namespace anosov {

/// (1/i) sum_{d | i} mu(d) r^(i/d).
Integer witt_number(unsigned r, unsigned i);

struct HallElement {
  /// Lyndon word over the generator indices 0..r-1.
  std::vector<std::uint8_t> word;
  /// Standard factorization [left, right] as (degree, index) pairs; generators have none.
  std::size_t left_degree = 0, left_index = 0;
  std::size_t right_degree = 0, right_index = 0;
};

/// Lyndon words ordered by length, then lexicographically; degree 2 is
/// y_{i,j} = [x_i, x_j] for i < j in lexicographic order.
class HallBasis {
public:
  /// Throws InvalidInput for r or c = 0, r > 255, or a total dimension above 10^5.
  static HallBasis make(unsigned r, unsigned c);

  unsigned r() const { return r_; }
  unsigned c() const { return c_; }
  /// Elements of degree i (1-based).
  const std::vector<HallElement>& degree(std::size_t i) const { return elements_.at(i - 1); }
  std::size_t dimension(std::size_t i) const { return degree(i).size(); }
  std::vector<std::size_t> dimensions() const;
  std::size_t total_dimension() const;
  /// Index of y_{i,j} (1-based generators, i < j) inside degree 2.
  std::size_t degree2_index(unsigned i, unsigned j) const;
  /// Bracket expression such as [x1,[x1,x2]] (1-based generators).
  std::string label(std::size_t degree, std::size_t index) const;

private:
  unsigned r_ = 0;
  unsigned c_ = 0;
  std::vector<std::vector<HallElement>> elements_;
};

/// Matrix on the degree-i part induced by x_j -> sum_k M_kj x_k; column j holds
/// the image of basis element j. Throws InvalidInput for singular or mis-sized M.
RatMatrix graded_action(const RatMatrix& m, const HallBasis& basis, std::size_t degree);

/// Restriction of an action to the span of the given basis indices. Throws
/// InvalidInput when the span is not invariant.
RatMatrix restrict_to_sub_basis(const RatMatrix& action, const std::vector<std::size_t>& indices);

struct DegreeReport {
  std::size_t degree = 0;
  std::size_t dimension = 0;
  IntPoly char_poly;
  CircleStatus status = CircleStatus::NoneCertified;
  /// Roots of char_poly are among the degree-fold eigenvalue products of M.
  bool contained_in_products = false;
};

struct FullActionReport {
  bool hyperbolic = false;
  std::vector<DegreeReport> degrees;
};

/// Unit-circle tests on every graded action of degree 1..c, with the
/// eigenvalue-product containment cross-check.
FullActionReport full_action_hyperbolic(const RatMatrix& m, unsigned c,
                                        unsigned precision_bits = kDefaultPrecisionBits);

}  // namespace anosov
