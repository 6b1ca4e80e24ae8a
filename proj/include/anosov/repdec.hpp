#pragma once

// Decomposition of rational representations into Q-irreducible components.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "anosov/fingrp.hpp"

namespace anosov {

constexpr unsigned kDefaultSplitTrials = 20;
constexpr unsigned kNoncommutativeSplitTrials = 400;
constexpr std::size_t kModuleSplitElements = 256;

/// Basis of {X : X A_i = B_i X for all i}, X of size rows(B) x rows(A).
std::vector<RatMatrix> intertwiners(const std::vector<RatMatrix>& a, const std::vector<RatMatrix>& b);
/// Commutant algebra of the representation, from the generator images.
std::vector<RatMatrix> commutant(const RationalRep& rep);
/// Basis of the center of the algebra spanned by `basis`.
std::vector<RatMatrix> algebra_center(const std::vector<RatMatrix>& basis);

enum class Certificate {
  /// Commutant is Q or Q[J] for an element J with irreducible minimal polynomial
  /// of full degree, so it is a field and the representation is irreducible.
  Exact,
  /// No splitting element found in the basis scan plus the random trials.
  Randomized,
};

struct SplitResult {
  bool irreducible = false;
  Certificate certificate = Certificate::Exact;
  /// Complementary invariant subspaces (columns) when reducible.
  RatMatrix first;
  RatMatrix second;
};

/// One splitting attempt: scans commutant basis elements, then `trials` random
/// combinations with coefficients in [-5, 5] or [-2, 2]; a characteristic polynomial with
/// two coprime factors or a non-squarefree minimal polynomial yields a split.
/// When the commutant is not commutative it first tries cyclic submodules
/// generated by eigenvectors of group elements, then at least 400 random trials.
SplitResult split_once(const RationalRep& rep, std::mt19937_64& rng, unsigned trials = kDefaultSplitTrials);
SplitResult split_once(const RationalRep& rep, std::uint64_t seed, unsigned trials = kDefaultSplitTrials);

/// G-invariant complement of an invariant subspace (Maschke averaging).
RatMatrix invariant_complement(const RationalRep& rep, const RatMatrix& subspace);

enum class FsSign { Plus, Zero, Minus };
std::string to_string(FsSign s);

struct ComponentProfile {
  /// Basis of the first copy (ambient coordinates).
  RatMatrix subspace_basis;
  /// The component acting on its own coordinates.
  RationalRep sub_rep;
  std::size_t multiplicity = 1;
  /// Bases of all copies, aligned so that the representation acts on each by sub_rep.
  std::vector<RatMatrix> copies;
  std::size_t dim_E = 0;
  std::size_t n_field = 0;
  std::size_t m_schur = 0;
  std::size_t e_complex = 0;
  FsSign fs_sign = FsSign::Plus;
  std::size_t r_components = 0;
  std::size_t k_dim = 0;
  Certificate certificate = Certificate::Exact;

  std::size_t dimension() const { return sub_rep.dim(); }
};

/// Profile of a certified-irreducible representation. Throws InconsistentResult
/// when dim_E / n is not a perfect square or the indicator sum is not in {e, 0, -e}.
ComponentProfile component_profile(const RationalRep& irreducible, Certificate certificate = Certificate::Exact);

/// Splits to irreducibles and groups them into equivalence classes (one
/// profile per class, with multiplicity). Deterministic given the seed.
std::vector<ComponentProfile> decompose(const RationalRep& rep, std::uint64_t seed, unsigned trials = kDefaultSplitTrials);

/// Columns of all aligned copies of all classes, in class order: a change of
/// basis in which the representation is block diagonal with blocks sub_rep.
RatMatrix aligned_basis(const std::vector<ComponentProfile>& classes);

}  // namespace anosov
