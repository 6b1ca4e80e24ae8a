#pragma once

#include <vector>

#include "anosov/poly.hpp"

namespace anosov {

struct Factor {
  IntPoly poly;
  unsigned multiplicity = 1;
};

/// Factorization over Q (Zassenhaus: factor mod p, Hensel lift, recombine).
/// Factors are primitive with positive leading coefficient, sorted by degree
/// then coefficients; their product equals f up to a rational constant.
std::vector<Factor> factor_over_Q(const IntPoly& f);

/// True when f has degree >= 1 and is irreducible over Q.
bool is_irreducible(const IntPoly& f);

}  // namespace anosov
