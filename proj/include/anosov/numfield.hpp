#pragma once

// Number fields Q(theta) = Q[X]/(f): embeddings, units and the c-hyperbolic unit search.

#include <optional>
#include <vector>

#include "anosov/hyper.hpp"
#include "anosov/numeric.hpp"
#include "anosov/ratmat.hpp"

namespace anosov {

/// Element of a number field: coordinates in the power basis 1, theta, ..., theta^(n-1).
using FieldElem = std::vector<Rational>;

class NumberField {
public:
  /// Throws InvalidInput unless min_poly is monic and irreducible over Q.
  static NumberField make(const IntPoly& min_poly, unsigned precision_bits = kDefaultPrecisionBits);

  const IntPoly& min_poly() const { return min_poly_; }
  std::size_t degree() const { return static_cast<std::size_t>(min_poly_.degree()); }
  /// Real embeddings.
  std::size_t s() const { return s_; }
  /// Complex-conjugate pairs.
  std::size_t t() const { return t_; }
  unsigned precision_bits() const { return precision_bits_; }
  /// Images of theta: real ones in descending order, then conjugate pairs
  /// (upper half-plane member first) by increasing argument.
  const std::vector<Complex>& embeddings() const { return embeddings_; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem theta() const;
  FieldElem from_poly(const RatPoly& p) const;
  RatPoly to_poly(const FieldElem& a) const;
  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem inv(const FieldElem& a) const;
  FieldElem pow(const FieldElem& a, long e) const;
  bool is_zero(const FieldElem& a) const;

  /// Matrix of multiplication by a; column j holds the coordinates of a * theta^j.
  RatMatrix mult_matrix(const FieldElem& a) const;
  Rational norm(const FieldElem& a) const;
  /// Primitive integer minimal polynomial of a (positive leading coefficient).
  IntPoly element_min_poly(const FieldElem& a) const;
  /// Algebraic integer with norm +-1.
  bool is_unit(const FieldElem& a) const;

  Complex embed(const FieldElem& a, std::size_t i) const;
  /// log|sigma_i(a)| for the s real embeddings, then one entry per complex pair.
  std::vector<Real> log_vector(const FieldElem& a) const;
  /// log|sigma_i(a)| for all n embeddings (pairs repeated).
  std::vector<Real> log_all(const FieldElem& a) const;

private:
  IntPoly min_poly_;
  unsigned precision_bits_ = kDefaultPrecisionBits;
  std::size_t s_ = 0;
  std::size_t t_ = 0;
  std::vector<Complex> embeddings_;
};

struct UnitElem {
  FieldElem coords;
  std::vector<Real> log_vector;
};

UnitElem make_unit(const NumberField& k, const FieldElem& coords);

/// Sum_{i<=s} x_i + 2 Sum_j x_{s+j}; zero for units.
Real weighted_log_sum(const NumberField& k, const std::vector<Real>& log_vector);

/// Q(sqrt d) with theta = sqrt d.
NumberField quadratic_field(unsigned long d, unsigned precision_bits = kDefaultPrecisionBits);
/// Fundamental unit (> 1) of the maximal order of Q(sqrt d), d squarefree > 1, in the basis 1, sqrt d.
UnitElem fundamental_unit_real_quadratic(unsigned long d, unsigned precision_bits = kDefaultPrecisionBits);

/// Q(zeta_d) with theta = zeta_d.
NumberField cyclotomic_field(unsigned long d, unsigned precision_bits = kDefaultPrecisionBits);
/// (1 - zeta^a) / (1 - zeta) for 1 < a < d/2, gcd(a, d) = 1. Requires d >= 5, d != 2 mod 4.
std::vector<UnitElem> cyclotomic_unit_generators(unsigned long d, unsigned precision_bits = kDefaultPrecisionBits);

/// Units of Z[theta] with coordinates bounded by height, kept while they raise
/// the rank of the log lattice (at most s + t - 1 of them).
std::vector<UnitElem> small_height_units(const NumberField& k, long height, std::size_t max_candidates = 20000);

/// Unit generators for a field: cyclotomic units when f is cyclotomic, the
/// fundamental unit for real quadratic fields, otherwise a small-height scan.
std::vector<UnitElem> default_unit_generators(const NumberField& k);

/// n - 1 if the field has a real embedding, n/2 - 1 if totally imaginary.
std::size_t max_hyperbolicity_bound(const NumberField& k);

struct UnitSearchResult {
  std::optional<UnitElem> unit;
  IntPoly min_poly;
  HyperbolicityReport report;
  std::vector<long> exponents;
  std::size_t candidates = 0;
};

/// Enumerates products of generators with exponents |e_i| <= exponent_bound by
/// increasing max-norm (lexicographic inside a shell), screens the log vector
/// and certifies the first surviving candidate exactly. Inside each shell,
/// candidates whose only expanding embedding is the first one are tried first.
/// Torsion generators (zero log vector) are ignored.
UnitSearchResult search_c_hyperbolic_unit(const NumberField& k, const std::vector<UnitElem>& generators, unsigned c,
                                          long exponent_bound);

/// Monic integer polynomial of the given degree, constant term (-1)^degree
/// (so the companion matrix has determinant 1), irreducible and c-hyperbolic,
/// found by increasing coefficient height. Throws Error when none is found.
IntPoly find_hyperbolic_polynomial(unsigned degree, unsigned c, long max_height = 6,
                                   unsigned precision_bits = kDefaultPrecisionBits);

/// Minimal polynomial of a Gaussian period generating the totally real cyclic
/// field of degree m inside Q(zeta_p), p the least prime = 1 mod 2m.
IntPoly real_cyclic_field(unsigned m);
/// A Galois extension of Q(zeta_d) of degree m over it: the compositum with a
/// real cyclic field of degree m (conductor prime to d). Returns the minimal
/// polynomial of zeta_d + eta over Q.
IntPoly cyclotomic_compositum(unsigned long d, unsigned m);

}  // namespace anosov
