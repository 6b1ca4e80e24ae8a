#include "anosov/corpus.hpp"

namespace anosov::corpus {

RatMatrix rho3_a() { return {{0, -1}, {1, -1}}; }
RatMatrix rho3_b() { return {{0, -1}, {-1, 0}}; }

GroupPtr d3_group() { return FiniteMatrixGroup::generate({rho3_a(), rho3_b()}); }

RationalRep d3_rho1(const GroupPtr& g) {
  return RationalRep::from_generator_images(g, {RatMatrix{{1}}, RatMatrix{{1}}});
}

RationalRep d3_rho2(const GroupPtr& g) {
  return RationalRep::from_generator_images(g, {RatMatrix{{1}}, RatMatrix{{-1}}});
}

RationalRep d3_rho3(const GroupPtr& g) { return RationalRep::from_generator_images(g, {rho3_a(), rho3_b()}); }

RationalRep d3_rho3_prime(const GroupPtr& g) {
  return RationalRep::from_generator_images(g, {rho3_a(), RatMatrix{{0, 1}, {1, 0}}});
}

RatMatrix d3_A() { return {{0, 0, 0, 1}, {0, 0, -1, 1}, {0, -1, 0, 1}, {1, -1, -1, 1}}; }
RatMatrix d3_B() { return {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}; }

RationalRep d3_AB(const GroupPtr& g) { return RationalRep::from_generator_images(g, {d3_A(), d3_B()}); }

RationalRep q8_regular() {
  // Columns are the images of 1, i, j, k.
  RatMatrix li{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
  RatMatrix lj{{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}};
  return RationalRep::natural(FiniteMatrixGroup::generate({li, lj}));
}

RationalRep klein() { return RationalRep::natural(FiniteMatrixGroup::generate({RatMatrix{{1, 0}, {0, -1}}})); }

RationalRep trivial(std::size_t dim) {
  return RationalRep::natural(FiniteMatrixGroup::generate({RatMatrix::identity(dim)}));
}

RationalRep cyclic_companion(unsigned long d) {
  return RationalRep::natural(FiniteMatrixGroup::generate({RatMatrix::companion(cyclotomic(d))}));
}

std::vector<std::string> demo_names() { return {"d3", "q8", "klein", "torus", "c5", "c4"}; }

}  // namespace anosov::corpus
