#pragma once

// Integer-like and c-hyperbolic predicates for rational matrices and polynomials.

#include <optional>
#include <vector>

#include "anosov/numeric.hpp"
#include "anosov/ratmat.hpp"

namespace anosov {

constexpr unsigned kDefaultPrecisionBits = 128;
/// Roots farther than 2^-40 from the unit circle count as off the circle.
constexpr unsigned kCircleToleranceBits = 40;

bool is_integer_like(const RatMatrix& m);

enum class CircleStatus { NoneCertified, NoneNumeric, Found };

struct CircleTest {
  CircleStatus status = CircleStatus::NoneCertified;
  /// A root on the unit circle (status Found).
  std::optional<std::pair<double, double>> root;
  /// Smallest ||z| - 1| among the numerically examined roots (absent when certified).
  std::optional<double> min_distance;
};

/// Decides whether f has a root of absolute value 1. Exact when
/// gcd(f_sf, reversal(f_sf)) is constant; otherwise the roots of that gcd are
/// isolated at precision_bits: within 2^-(bits/2) of the circle is Found, all
/// farther than 2^-40 is NoneNumeric, anything in between throws Undecided.
CircleTest unit_circle_root_test(const IntPoly& f, unsigned precision_bits = kDefaultPrecisionBits);

struct OffendingProduct {
  unsigned k = 0;
  /// Indices into the numerically sorted eigenvalue list (non-decreasing).
  std::vector<std::size_t> indices;
  double modulus = 0;
};

struct HyperbolicityReport {
  unsigned c_tested = 0;
  bool verdict = false;
  bool certified_exact = false;
  std::optional<OffendingProduct> offending;
  unsigned precision_bits = kDefaultPrecisionBits;
};

/// Checks every k = 1..c: no product of k eigenvalues (repetition allowed) has absolute value 1.
HyperbolicityReport is_c_hyperbolic_matrix(const RatMatrix& m, unsigned c, unsigned precision_bits = kDefaultPrecisionBits);
/// Same test on the roots of f, which must satisfy f(0) != 0.
HyperbolicityReport is_c_hyperbolic_poly(const IntPoly& f, unsigned c, unsigned precision_bits = kDefaultPrecisionBits);

}  // namespace anosov
