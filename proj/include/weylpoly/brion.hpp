#pragma once

#include <set>
#include <string>
#include <vector>

#include "weylpoly/formal_sum.hpp"
#include "weylpoly/root_system.hpp"
#include "weylpoly/weyl.hpp"

namespace weylpoly {

// The lattice points of the Weyl polytope of lambda in the shifted root
// lattice lambda + Q: exactly the mu whose dominant orbit representative
// nu satisfies lambda - nu = nonnegative integer combination of simple
// roots. Computed by descending from lambda through simple-root
// subtractions and closing each dominant weight found under reflections.
std::set<Weight> weight_system(const RootSystem& rs, const Weight& lambda);

// The Weyl polytope sum B_lambda = sum of e^mu over weight_system(lambda);
// every coefficient is 1. This is the ground-truth oracle: it shares no
// code with the Demazure operators or the cone evaluation.
FormalSum brion_oracle(const RootSystem& rs, const Weight& lambda);

// One signed shifted simplicial cone per Weyl element w, describing the
// expansion of e^{w lambda} prod_{alpha in S} (1 - e^{-w alpha})^{-1}:
// a factor with w(alpha) positive contributes generator -w(alpha); one with
// w(alpha) negative contributes generator w(alpha), shifts the apex by
// w(alpha) and flips the sign. The lattice points of the term are
// apex + N_0-span of the generators, counted with the sign.
struct ConeTerm {
  int sign = 1;
  Weight apex;
  std::vector<Weight> generators;
};

std::vector<ConeTerm> cone_terms(const RootSystem& rs, const Weight& lambda);

// Per-weight exact evaluation of the signed cone sum. Each membership test
// solves the (invertible) generator system in exact integer arithmetic via
// the adjugate, so there is no series truncation anywhere.
class ConeEvaluator {
 public:
  ConeEvaluator(const RootSystem& rs, const Weight& lambda);

  const std::vector<ConeTerm>& cones() const { return cones_; }

  Int coefficient(const Weight& mu) const;

 private:
  struct PreparedCone {
    int sign = 1;
    Weight apex;
    std::vector<std::vector<Int>> adjugate;  // row-major, rank x rank
    Int det;
  };

  int rank_;
  std::vector<ConeTerm> cones_;
  std::vector<PreparedCone> prepared_;
};

// Coefficient of e^mu in B_lambda via the signed cone sum.
Int brion_coefficient(const RootSystem& rs, const Weight& lambda, const Weight& mu);

// B_lambda assembled from per-weight cone evaluation over the label box of
// the orbit of lambda (which contains the polytope).
FormalSum brion_sum_via_cones(const RootSystem& rs, const Weight& lambda);

enum class PolytopeSumMethod { Dominance, Cones, DemazureProduct };

PolytopeSumMethod parse_polytope_sum_method(const std::string& name);
std::string polytope_sum_method_name(PolytopeSumMethod method);

struct PolytopeSumReport {
  Weight lambda;
  FormalSum sum;
  PolytopeSumMethod method = PolytopeSumMethod::Dominance;
  std::size_t term_count = 0;
};

// Computes B_lambda by the requested method. DemazureProduct dispatches to
// the A-family operator product or the rank-2 formulas as appropriate.
PolytopeSumReport polytope_sum(const RootSystem& rs, const Weight& lambda,
                               PolytopeSumMethod method);

}  // namespace weylpoly
