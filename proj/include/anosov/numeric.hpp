#pragma once

// Multiprecision complex arithmetic and polynomial root isolation.

#include <boost/multiprecision/mpfr.hpp>
#include <vector>

#include "anosov/poly.hpp"

namespace anosov {

using Real = boost::multiprecision::mpfr_float;

unsigned bits_to_digits10(unsigned bits);

/// Sets the default working precision for newly created Real values; restores on exit.
class PrecisionScope {
public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
  unsigned saved_;
};

Real to_real(const Rational& q);
Real to_real(const Integer& z);
/// Nearest integer.
Integer round_to_integer(const Real& x);
/// 2^-e at the current precision.
Real pow2_neg(unsigned e);

struct Complex {
  Real re;
  Real im;
  Complex() : re(0), im(0) {}
  Complex(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex conj(const Complex& a);
Real abs(const Complex& a);
Real arg(const Complex& a);
Complex cpow(const Complex& z, long e);
Complex cexp_i(const Real& theta);

/// Evaluates sum coeffs[i] z^i.
Complex eval_complex(const std::vector<Rational>& coeffs, const Complex& z);
Complex eval_complex(const IntPoly& f, const Complex& z);

struct RootEstimate {
  Complex z;
  /// A disk of this radius about z is known to contain a root (Newton bound n|f/f'|).
  Real radius;
};

/// All complex roots of f (with multiplicity) at the given precision, by Aberth
/// iteration. Real roots come first in descending order, then conjugate pairs
/// (upper member first) ordered by increasing argument. The real/complex split
/// is fixed by an exact Sturm count when f is squarefree.
std::vector<RootEstimate> polynomial_roots(const IntPoly& f, unsigned precision_bits);

/// Number of distinct real roots (exact, Sturm sequence).
unsigned real_root_count(const IntPoly& f);

}  // namespace anosov
