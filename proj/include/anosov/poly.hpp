#pragma once

// Univariate polynomials over Z and Q, coefficients stored in ascending degree order.

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "anosov/rational.hpp"

namespace anosov {

class RatPoly;

/// Polynomial with arbitrary-precision integer coefficients. The zero
/// polynomial has no coefficients; otherwise the leading coefficient is nonzero.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> ascending);
  IntPoly(std::initializer_list<long> ascending);

  static IntPoly monomial(const Integer& coeff, std::size_t degree);
  static IntPoly x() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  /// Coefficient of X^i (zero beyond the degree).
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  const Integer& leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }
  bool is_constant() const { return degree() <= 0; }

  Integer content() const;
  /// Divides by the content and makes the leading coefficient positive.
  IntPoly primitive_part() const;
  IntPoly derivative() const;
  Integer eval(const Integer& x) const;
  Rational eval(const Rational& x) const;

  RatPoly to_rat() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Integer& s, const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Polynomial with rational coefficients; same representation invariants as IntPoly.
class RatPoly {
public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> ascending);
  RatPoly(std::initializer_list<long> ascending);

  static RatPoly monomial(const Rational& coeff, std::size_t degree);
  static RatPoly x() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }
  bool is_integral() const;

  RatPoly monic() const;
  RatPoly derivative() const;
  Rational eval(const Rational& x) const;
  /// Clears denominators and returns the primitive integer associate.
  IntPoly primitive_integer_part() const;
  /// Exact conversion; throws InvalidInput when some coefficient is not an integer.
  IntPoly to_int() const;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const Rational& s, const RatPoly& a);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division over Q: returns (quotient, remainder).
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly operator%(const RatPoly& a, const RatPoly& b);
/// Monic gcd over Q (zero if both inputs are zero).
RatPoly gcd(const RatPoly& a, const RatPoly& b);

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
/// Primitive gcd over Z with positive leading coefficient (primitive PRS).
IntPoly gcd(const IntPoly& a, const IntPoly& b);
/// Exact division in Z[X]; throws InconsistentResult if b does not divide a.
IntPoly exact_quotient(const IntPoly& a, const IntPoly& b);
/// True if b divides a in Q[X].
bool divides(const IntPoly& b, const IntPoly& a);

/// Primitive squarefree part f / gcd(f, f').
IntPoly squarefree_part(const IntPoly& f);

/// X^{deg f} f(1/X). Requires f(0) != 0.
IntPoly reversal(const IntPoly& f);

/// The d-th cyclotomic polynomial. Requires d >= 1.
IntPoly cyclotomic(unsigned long d);

/// Euler's totient.
unsigned long euler_phi(unsigned long d);

/// Resultant via the Sylvester matrix determinant, rows of f first:
/// Res(f, g) = lc(f)^deg(g) * prod_{f(a)=0} g(a). Both inputs nonzero.
Integer resultant(const IntPoly& f, const IntPoly& g);
Rational resultant(const RatPoly& f, const RatPoly& g);

/// Polynomial whose roots are all products a*b with f(a)=0, g(b)=0, computed as
/// Res_y(f(y), y^{deg g} g(X/y)) through power sums and Newton's identities.
/// Inputs must have nonzero constant terms. Result is primitive.
IntPoly composed_product(const IntPoly& f, const IntPoly& g);

/// Root set = all k-fold products (repetitions allowed) of roots of f.
/// f monic with f(0) != 0, k >= 1. Multiplicities are not minimal.
IntPoly eig_product_poly(const IntPoly& f, unsigned k);

/// Same root set as eig_product_poly but squarefree after every step; accepts
/// any f with f(0) != 0. Used by the hyperbolicity tests.
IntPoly eig_product_poly_squarefree(const IntPoly& f, unsigned k);

/// Exact interpolation through (x_i, y_i), distinct x_i.
RatPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace anosov
