#pragma once

// Witness matrices: c-hyperbolic, integer-like matrices commuting with a representation.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "anosov/numfield.hpp"
#include "anosov/repdec.hpp"

namespace anosov {

enum class ConstructionPath { FieldThroughCommutant, BlockCompanion, LatticeSearch, TensorShortcut };
std::string to_string(ConstructionPath p);

struct WitnessCertificate {
  RatMatrix witness;
  unsigned c = 0;
  bool commutes = false;
  /// Commutation with each generator image, in generator order.
  std::vector<bool> commutes_per_generator;
  bool integer_like = false;
  HyperbolicityReport hyperbolicity;
  ConstructionPath construction_path = ConstructionPath::LatticeSearch;
  /// Characteristic polynomial (primitive integer part).
  IntPoly char_poly;

  bool valid() const { return commutes && integer_like && hyperbolicity.verdict; }
};

/// Outcome of one construction path: a valid certificate or the reason it failed.
struct WitnessAttempt {
  std::optional<WitnessCertificate> certificate;
  std::string failure;
};

/// Checks commutation with every group element image, integer-likeness and
/// c-hyperbolicity exactly (numeric root isolation only when needed).
WitnessCertificate verify_witness(const RationalRep& rep, const RatMatrix& c_matrix, unsigned c,
                                  ConstructionPath path = ConstructionPath::LatticeSearch,
                                  unsigned precision_bits = kDefaultPrecisionBits);

/// km x km matrix with identity blocks on the subdiagonal and last block
/// column -C_0, ..., -C_{m-1}. Throws InvalidInput unless every C_j is k x k
/// and commutes with m.
RatMatrix block_companion(const std::vector<RatMatrix>& coefficients, const RatMatrix& m);

constexpr long kDefaultHeightBound = 10;

/// Picks J in the commutant with irreducible minimal polynomial of the largest
/// degree found, searches Q(J) for a c-hyperbolic unit p(J) and returns C = p(J).
WitnessAttempt field_through_commutant(const RationalRep& rep, unsigned c, std::uint64_t seed,
                                       long exponent_bound = kDefaultHeightBound);

/// For an absolutely irreducible class with multiplicity m > c: W (x) I_k with W
/// the companion matrix of a degree-m c-hyperbolic unit polynomial. The witness
/// is expressed for sub_rep.multiple(m).
WitnessAttempt tensor_shortcut(const ComponentProfile& cls, unsigned c);

/// Block companion over the centre field F of the class: a monic f_0 of degree m
/// with small coefficients in O_F and unit constant term whose norm is
/// c-hyperbolic; coefficients act through the centre. Witness for sub_rep.multiple(m).
WitnessAttempt block_companion_witness(const ComponentProfile& cls, unsigned c, long height_bound = 2);

/// Integer combinations of a scaled-integral commutant basis by increasing
/// height (lexicographic inside a height); first integer-like c-hyperbolic hit.
/// At most max_candidates combinations are examined.
WitnessAttempt lattice_search(const RationalRep& rep, unsigned c, long height_bound, std::uint64_t seed,
                              std::size_t max_candidates = 200000);

struct LatticeCensus {
  std::size_t candidates = 0;
  std::size_t integer_like = 0;
  std::size_t hits = 0;
  std::optional<RatMatrix> first_hit;
};

/// Exhaustive version of lattice_search that counts instead of stopping.
LatticeCensus lattice_census(const RationalRep& rep, unsigned c, long height_bound,
                             std::size_t max_candidates = 200000);

/// Dense complex matrix, row-major.
struct ComplexMatrix {
  std::size_t n = 0;
  std::vector<Complex> a;
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t size);
  Complex& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y);
/// Throws Undecided when the matrix is numerically singular.
ComplexMatrix inverse(const ComplexMatrix& m);
Real max_abs(const ComplexMatrix& m);

/// Automorphism of a Galois-closed piece of F: theta -> image(theta), with
/// sigma o sigma_i = sigma_{perm(i)} on the embeddings.
struct GaloisAction {
  FieldElem image;
  Permutation perm;
  Real residual;
};

struct VandermondeData {
  ComplexMatrix p;
  ComplexMatrix q;
  std::size_t k = 1;
  std::vector<GaloisAction> actions;
};

/// Q = (sigma_i(theta^j)) (x) I_k and P = Q^-1, with every automorphism of F
/// found among the embeddings (degree <= 8) checked against
/// sigma(P) = P K_{pi^-1} (x) I_k. Throws Undecided when Q is too ill-conditioned.
VandermondeData vandermonde_P(const NumberField& field, std::size_t k);

/// k x k matrix over F; entries in power-basis coordinates.
using FieldMatrix = std::vector<std::vector<FieldElem>>;

/// Characteristic polynomial over Q of the restriction of scalars of c0, i.e.
/// the product of the conjugates of its characteristic polynomial over F.
IntPoly norm_char_poly(const NumberField& field, const FieldMatrix& c0);

/// P blockdiag(sigma_1(C_0), ..., sigma_n(C_0)) P^-1 computed numerically,
/// rounded to rationals with the denominators of C_0, then checked exactly:
/// equal to the restriction of scalars, commuting with `commute_with`, and
/// with characteristic polynomial norm_char_poly(C_0).
RatMatrix rationalize_conjugate_blockdiag(const NumberField& field, const VandermondeData& vd, const FieldMatrix& c0,
                                          const std::vector<RatMatrix>& commute_with = {});

/// Exact restriction of scalars sum_t M_theta^t (x) C_t for C_0 = sum_t theta^t C_t.
RatMatrix restriction_of_scalars(const NumberField& field, const FieldMatrix& c0);

}  // namespace anosov
