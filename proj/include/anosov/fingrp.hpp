#pragma once

// Finite matrix groups given by generators, and rational representations of them.

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "anosov/ratmat.hpp"

namespace anosov {

constexpr std::size_t kDefaultMaxOrder = 10000;

class FiniteMatrixGroup {
public:
  /// Breadth-first closure from the identity, generators applied on the right in
  /// the given order. Throws InvalidInput for non-square, mismatched or singular
  /// generators and when the order exceeds max_order.
  static std::shared_ptr<const FiniteMatrixGroup> generate(const std::vector<RatMatrix>& gens, std::size_t max_order = kDefaultMaxOrder);

  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  const std::vector<RatMatrix>& elements() const { return elements_; }
  const RatMatrix& element(std::size_t i) const { return elements_[i]; }
  const std::vector<std::size_t>& gen_indices() const { return gen_indices_; }
  std::size_t generator_count() const { return gen_indices_.size(); }

  std::size_t mul(std::size_t a, std::size_t b) const { return mul_table_[a * order() + b]; }
  std::size_t inv(std::size_t a) const { return inv_[a]; }
  std::size_t square(std::size_t a) const { return sq_map_[a]; }
  /// Index of a matrix in the group, or order() when absent.
  std::size_t index_of(const RatMatrix& m) const;

  /// Element i = element(parent(i)) * generator(via(i)); the identity has no parent.
  std::size_t parent(std::size_t i) const { return parent_[i]; }
  std::size_t via(std::size_t i) const { return via_[i]; }

  /// Partition into classes: sorted index lists, identity class first, then by least member.
  std::vector<std::vector<std::size_t>> conjugacy_classes() const;

private:
  std::size_t degree_ = 0;
  std::vector<RatMatrix> elements_;
  std::map<RatMatrix, std::size_t> lookup_;
  std::vector<std::size_t> gen_indices_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> via_;
  std::vector<std::size_t> mul_table_;
  std::vector<std::size_t> inv_;
  std::vector<std::size_t> sq_map_;
};

/// A homomorphism from a FiniteMatrixGroup into GL_N(Q), stored on every element.
using GroupPtr = std::shared_ptr<const FiniteMatrixGroup>;

class RationalRep {
public:
  /// Extends generator images along the closure words and checks the
  /// homomorphism property; throws InvalidInput when a relation is violated.
  static RationalRep from_generator_images(GroupPtr g, const std::vector<RatMatrix>& gen_images);
  /// The group acting on its own underlying space.
  static RationalRep natural(GroupPtr g);
  static RationalRep trivial(GroupPtr g, std::size_t dim);
  /// Images given directly for all elements (already known to be a homomorphism).
  static RationalRep from_all_images(GroupPtr g, std::vector<RatMatrix> images);

  const FiniteMatrixGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  std::size_t dim() const { return dim_; }
  const RatMatrix& image(std::size_t element) const { return images_[element]; }
  const std::vector<RatMatrix>& images() const { return images_; }
  std::vector<RatMatrix> generator_images() const;

  /// Character values indexed by element.
  std::vector<Rational> character() const;
  /// (1/|G|) sum_g trace(rho(g^2)).
  Rational fs_indicator_value() const;

  RationalRep direct_sum(const RationalRep& other) const;
  /// m copies of this representation.
  RationalRep multiple(std::size_t m) const;
  /// g -> s^{-1} rho(g) s.
  RationalRep conjugated(const RatMatrix& s) const;
  /// Restriction to an invariant subspace spanned by the columns of basis.
  RationalRep restricted(const RatMatrix& basis) const;

private:
  GroupPtr group_;
  std::size_t dim_ = 0;
  std::vector<RatMatrix> images_;
};

/// <chi, psi> = (1/|G|) sum_g chi(g) psi(g^-1).
Rational character_inner(const FiniteMatrixGroup& g, const std::vector<Rational>& chi, const std::vector<Rational>& psi);

}  // namespace anosov
