#include "anosov/fingrp.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace anosov {

namespace {
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
}

std::shared_ptr<const FiniteMatrixGroup> FiniteMatrixGroup::generate(const std::vector<RatMatrix>& gens, std::size_t max_order) {
  if (gens.empty()) throw InvalidInput("at least one generator is required");
  const std::size_t n = gens.front().rows();
  for (const auto& g : gens) {
    if (!g.is_square() || g.rows() != n) throw InvalidInput("generators must be square of equal size");
    if (det(g) == 0) throw InvalidInput("generator is singular");
  }
  FiniteMatrixGroup grp;
  grp.degree_ = n;
  grp.elements_.push_back(RatMatrix::identity(n));
  grp.lookup_.emplace(grp.elements_.back(), 0);
  grp.parent_.push_back(kNone);
  grp.via_.push_back(kNone);

  // right[i * s + j] = index of element_i * gen_j
  std::vector<std::size_t> right;
  for (std::size_t head = 0; head < grp.elements_.size(); ++head) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      RatMatrix prod = grp.elements_[head] * gens[j];
      auto it = grp.lookup_.find(prod);
      std::size_t idx;
      if (it == grp.lookup_.end()) {
        if (grp.elements_.size() >= max_order) throw InvalidInput("group order exceeds the configured maximum");
        idx = grp.elements_.size();
        grp.lookup_.emplace(prod, idx);
        grp.elements_.push_back(std::move(prod));
        grp.parent_.push_back(head);
        grp.via_.push_back(j);
      } else {
        idx = it->second;
      }
      right.push_back(idx);
    }
  }
  const std::size_t order = grp.elements_.size(), s = gens.size();
  for (const auto& g : gens) grp.gen_indices_.push_back(grp.lookup_.at(g));

  // mul(a, b) via the word of b: b = parent(b) * gen(via(b)).
  grp.mul_table_.assign(order * order, 0);
  for (std::size_t a = 0; a < order; ++a) {
    grp.mul_table_[a * order] = a;
    for (std::size_t b = 1; b < order; ++b)
      grp.mul_table_[a * order + b] = right[grp.mul_table_[a * order + grp.parent_[b]] * s + grp.via_[b]];
  }
  grp.inv_.assign(order, 0);
  grp.sq_map_.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b)
      if (grp.mul_table_[a * order + b] == 0) {
        grp.inv_[a] = b;
        break;
      }
    grp.sq_map_[a] = grp.mul_table_[a * order + a];
  }
  return std::make_shared<const FiniteMatrixGroup>(std::move(grp));
}

std::size_t FiniteMatrixGroup::index_of(const RatMatrix& m) const {
  auto it = lookup_.find(m);
  return it == lookup_.end() ? order() : it->second;
}

std::vector<std::vector<std::size_t>> FiniteMatrixGroup::conjugacy_classes() const {
  std::vector<std::size_t> cls(order(), kNone);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t x = 0; x < order(); ++x) {
    if (cls[x] != kNone) continue;
    std::vector<std::size_t> members{x};
    cls[x] = out.size();
    for (std::size_t h = 0; h < members.size(); ++h)
      for (std::size_t g : gen_indices_) {
        std::size_t y = mul(mul(g, members[h]), inv(g));
        if (cls[y] == kNone) {
          cls[y] = out.size();
          members.push_back(y);
        }
      }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

RationalRep RationalRep::from_generator_images(GroupPtr gp, const std::vector<RatMatrix>& gen_images) {
  const FiniteMatrixGroup& g = *gp;
  if (gen_images.size() != g.generator_count()) throw InvalidInput("one image per generator is required");
  const std::size_t n = gen_images.front().rows();
  for (const auto& m : gen_images) {
    if (!m.is_square() || m.rows() != n) throw InvalidInput("representation images must be square of equal size");
    if (det(m) == 0) throw InvalidInput("representation image is singular");
  }
  RationalRep rep;
  rep.group_ = gp;
  rep.dim_ = n;
  rep.images_.resize(g.order());
  rep.images_[0] = RatMatrix::identity(n);
  for (std::size_t i = 1; i < g.order(); ++i) rep.images_[i] = rep.images_[g.parent(i)] * gen_images[g.via(i)];
  // rho(x * s) = rho(x) rho(s) for every element x and generator s implies a homomorphism.
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t j = 0; j < g.generator_count(); ++j)
      if (rep.images_[g.mul(x, g.gen_indices()[j])] != rep.images_[x] * gen_images[j])
        throw InvalidInput("generator images do not extend to a homomorphism");
  return rep;
}

RationalRep RationalRep::natural(GroupPtr g) {
  auto images = g->elements();
  return from_all_images(std::move(g), std::move(images));
}

RationalRep RationalRep::trivial(GroupPtr g, std::size_t dim) {
  std::vector<RatMatrix> images(g->order(), RatMatrix::identity(dim));
  return from_all_images(std::move(g), std::move(images));
}

RationalRep RationalRep::from_all_images(GroupPtr g, std::vector<RatMatrix> images) {
  if (images.size() != g->order()) throw InvalidInput("one image per group element is required");
  RationalRep rep;
  rep.group_ = std::move(g);
  rep.dim_ = images.front().rows();
  rep.images_ = std::move(images);
  return rep;
}

std::vector<RatMatrix> RationalRep::generator_images() const {
  std::vector<RatMatrix> out;
  for (std::size_t i : group_->gen_indices()) out.push_back(images_[i]);
  return out;
}

std::vector<Rational> RationalRep::character() const {
  std::vector<Rational> chi;
  chi.reserve(images_.size());
  for (const auto& m : images_) chi.push_back(m.trace());
  return chi;
}

Rational RationalRep::fs_indicator_value() const {
  Rational sum = 0;
  for (std::size_t g = 0; g < images_.size(); ++g) sum += images_[group_->square(g)].trace();
  return sum / Rational(static_cast<long>(images_.size()));
}

RationalRep RationalRep::direct_sum(const RationalRep& other) const {
  if (group_ != other.group_) throw InvalidInput("direct sum of representations of different groups");
  std::vector<RatMatrix> imgs;
  for (std::size_t i = 0; i < images_.size(); ++i) imgs.push_back(block_diag({images_[i], other.images_[i]}));
  return from_all_images(group_, std::move(imgs));
}

RationalRep RationalRep::multiple(std::size_t m) const {
  if (m == 0) throw InvalidInput("multiplicity must be positive");
  std::vector<RatMatrix> imgs;
  for (const auto& x : images_) imgs.push_back(kron(RatMatrix::identity(m), x));
  return from_all_images(group_, std::move(imgs));
}

RationalRep RationalRep::conjugated(const RatMatrix& s) const {
  RatMatrix si = inverse(s);
  std::vector<RatMatrix> imgs;
  for (const auto& x : images_) imgs.push_back(si * x * s);
  return from_all_images(group_, std::move(imgs));
}

RationalRep RationalRep::restricted(const RatMatrix& basis) const {
  std::vector<RatMatrix> imgs;
  for (const auto& x : images_) imgs.push_back(solve_in_span(basis, x * basis));
  return from_all_images(group_, std::move(imgs));
}

Rational character_inner(const FiniteMatrixGroup& g, const std::vector<Rational>& chi, const std::vector<Rational>& psi) {
  Rational sum = 0;
  for (std::size_t x = 0; x < g.order(); ++x) sum += chi[x] * psi[g.inv(x)];
  return sum / Rational(static_cast<long>(g.order()));
}

}  // namespace anosov
