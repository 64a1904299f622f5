#pragma once

#include <string>
#include <vector>

#include "weylpoly/numeric.hpp"
#include "weylpoly/rational_linalg.hpp"

namespace weylpoly {

enum class AlgebraFamily { A, C2, G2 };

struct AlgebraId {
  AlgebraFamily family = AlgebraFamily::A;
  int rank = 1;

  bool operator==(const AlgebraId&) const = default;
};

// Accepts "A1".."A9", "C2", "G2". Throws std::invalid_argument otherwise.
AlgebraId parse_algebra(const std::string& name);
std::string algebra_name(const AlgebraId& algebra);

// Full group enumeration grows as (rank+1)! for the A family; this caps it
// unless the caller overrides.
inline constexpr int kDefaultEnumerationRankCap = 7;

// Static data for one algebra, all in the Dynkin-label coordinate system:
// cartan[i][j] = (alpha_j, alpha_i^vee), so the label vector of alpha_j is
// column j of the Cartan matrix. Immutable after construction.
class RootSystem {
 public:
  explicit RootSystem(const AlgebraId& algebra,
                      int enumeration_rank_cap = kDefaultEnumerationRankCap);

  const AlgebraId& algebra() const { return algebra_; }
  int rank() const { return algebra_.rank; }
  int enumeration_rank_cap() const { return enumeration_rank_cap_; }

  const std::vector<std::vector<Label>>& cartan() const { return cartan_; }
  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  const Weight& simple_root(int i) const;  // 1-based
  const Weight& rho() const { return rho_; }
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  const RationalMatrix& cartan_inverse() const { return cartan_inverse_; }

  void check_index(int i) const;                              // 1 <= i <= rank
  void check_weight(const Weight& mu, const char* what) const;  // length == rank

 private:
  AlgebraId algebra_;
  int enumeration_rank_cap_ = kDefaultEnumerationRankCap;
  std::vector<std::vector<Label>> cartan_;
  std::vector<Weight> simple_roots_;
  Weight rho_;
  std::vector<Weight> positive_roots_;
  RationalMatrix cartan_inverse_;
};

RootSystem build_root_system(const AlgebraId& algebra,
                             int enumeration_rank_cap = kDefaultEnumerationRankCap);

// r_i(mu) = mu - mu_i * alpha_i. Involutive. i is 1-based.
Weight simple_reflection(const RootSystem& rs, int i, const Weight& mu);

// The unique rational c with mu = sum_j c_j alpha_j.
std::vector<Rational> root_coefficients(const RootSystem& rs, const Weight& mu);

// Sum of the root coefficients of mu; the grading used for exact division.
Rational height(const RootSystem& rs, const Weight& mu);

// True iff mu lies in lambda + Q, i.e. root_coefficients(lambda - mu) is
// an integer vector.
bool in_shifted_root_lattice(const RootSystem& rs, const Weight& lambda, const Weight& mu);

// All dominant weights of the given rank with label sum <= level, in
// lexicographic order.
std::vector<Weight> dominant_weights_up_to_level(int rank, long long level);

}  // namespace weylpoly
