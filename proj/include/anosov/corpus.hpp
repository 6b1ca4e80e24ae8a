#pragma once

// Named example representations used by the demos and the test suites.

#include <string>
#include <vector>

#include "anosov/fingrp.hpp"

namespace anosov::corpus {

/// D3 = <a, b | a^3 = b^2 = (ab)^2 = 1> generated by rho3(a), rho3(b); element
/// order follows the closure, generators a then b.
GroupPtr d3_group();
RatMatrix rho3_a();
RatMatrix rho3_b();
RationalRep d3_rho1(const GroupPtr& g);
RationalRep d3_rho2(const GroupPtr& g);
RationalRep d3_rho3(const GroupPtr& g);
/// Same as rho3 but b acts by [[0,1],[1,0]].
RationalRep d3_rho3_prime(const GroupPtr& g);
/// Degree-2 action on (y13, y14, y23, y24).
RatMatrix d3_A();
RatMatrix d3_B();
RationalRep d3_AB(const GroupPtr& g);

/// Quaternion group acting on Q^4 = span(1, i, j, k) by left multiplication.
RationalRep q8_regular();
/// C2 acting by diag(1, -1).
RationalRep klein();
/// Trivial group acting on Q^dim.
RationalRep trivial(std::size_t dim);
/// C_d acting through the companion matrix of Phi_d.
RationalRep cyclic_companion(unsigned long d);

/// Names accepted by demo: d3, q8, klein, torus, c5, c4.
std::vector<std::string> demo_names();

}  // namespace anosov::corpus
