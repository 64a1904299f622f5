#pragma once

#include <map>

#include "weylpoly/formal_sum.hpp"
#include "weylpoly/root_system.hpp"

namespace weylpoly {

// The Weyl denominator prod_{alpha in R+} (1 - e^{-alpha}), fully expanded.
FormalSum weyl_denominator(const RootSystem& rs);

// Character by the division form of the Weyl character formula: the signed
// orbit numerator sum_w (det w) e^{w(lambda+rho)-rho} divided exactly by the
// denominator. Division proceeds by cancelling the height-maximal residual
// term against the denominator's e^0 leading term; it terminates because
// the residual's support is bounded below in the height grading. Throws
// std::runtime_error if a remainder is detected (cannot happen for valid
// input).
FormalSum character_weyl_division(const RootSystem& rs, const Weight& lambda);

// Multiplicity of mu in the irreducible module of highest weight lambda.
Int weight_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu);

// ch_lambda = sum_mu A_{lambda,mu} B_mu over dominant mu below lambda in
// dominance order within lambda + Q. Solved by descending triangular
// elimination; A_{lambda,lambda} = 1 always.
struct PolytopeExpansion {
  Weight lambda;
  std::map<Weight, Int> coefficients;
};

PolytopeExpansion polytope_expansion(const RootSystem& rs, const Weight& lambda);

}  // namespace weylpoly
