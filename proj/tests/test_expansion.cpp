#include <doctest.h>

#include "weylpoly/brion.hpp"
#include "weylpoly/demazure.hpp"
#include "weylpoly/expansion.hpp"
#include "weylpoly/weyl.hpp"

using namespace weylpoly;

TEST_CASE("Weyl denominator expansion") {
  const RootSystem a1(parse_algebra("A1"));
  FormalSum expected_a1;
  expected_a1.add_term({0}, 1);
  expected_a1.add_term({-2}, -1);
  CHECK(weyl_denominator(a1) == expected_a1);

  // A2: the -alpha_1-alpha_2 terms from {theta} and {alpha_1,alpha_2}
  // cancel, leaving six terms.
  const RootSystem a2(parse_algebra("A2"));
  FormalSum expected_a2;
  expected_a2.add_term({0, 0}, 1);
  expected_a2.add_term({-2, 1}, -1);
  expected_a2.add_term({1, -2}, -1);
  expected_a2.add_term({-3, 0}, 1);
  expected_a2.add_term({0, -3}, 1);
  expected_a2.add_term({-2, -2}, -1);
  CHECK(weyl_denominator(a2) == expected_a2);
  CHECK(weyl_denominator(a2).coefficient({-1, -1}) == 0);
}

TEST_CASE("denominator equals the signed rho-orbit sum") {
  // prod_{alpha>0} (1 - e^{-alpha}) = sum_w det(w) e^{w rho - rho}:
  // an independent route through the group enumeration.
  for (const char* name : {"A1", "A2", "A3", "C2", "G2"}) {
    const RootSystem rs(parse_algebra(name));
    FormalSum signed_orbit;
    for (const WeylElement& w : enumerate_group(rs)) {
      signed_orbit.add_term(sub_weights(apply_weyl(rs, w, rs.rho()), rs.rho()),
                            determinant(rs, w));
    }
    CHECK(weyl_denominator(rs) == signed_orbit);
  }
}

TEST_CASE("characters by exact Weyl division") {
  const RootSystem a1(parse_algebra("A1"));
  FormalSum dim2;
  dim2.add_term({1}, 1);
  dim2.add_term({-1}, 1);
  CHECK(character_weyl_division(a1, {1}) == dim2);

  const RootSystem a2(parse_algebra("A2"));
  CHECK(character_weyl_division(a2, {1, 0}) == character_demazure(a2, {1, 0}));
  CHECK(character_weyl_division(a2, {1, 0}).support_size() == 3);
  CHECK(character_weyl_division(a2, {1, 1}).coefficient_sum() == 8);
  CHECK_THROWS_AS(character_weyl_division(a2, {0, -1}), std::invalid_argument);
}

TEST_CASE("the two character methods agree") {
  for (const char* name : {"A2", "A3", "C2", "G2"}) {
    const RootSystem rs(parse_algebra(name));
    for (const Weight& lambda : dominant_weights_up_to_level(rs.rank(), 2))
      CHECK(character_weyl_division(rs, lambda) == character_demazure(rs, lambda));
  }
}

TEST_CASE("weight multiplicities") {
  const RootSystem a2(parse_algebra("A2"));
  for (const Weight& lambda : dominant_weights_up_to_level(2, 3))
    CHECK(weight_multiplicity(a2, lambda, lambda) == 1);
  CHECK(weight_multiplicity(a2, {1, 1}, {0, 0}) == 2);
  CHECK(weight_multiplicity(a2, {1, 0}, {0, 0}) == 0);
  CHECK(weight_multiplicity(a2, {1, 0}, {5, 5}) == 0);
}

TEST_CASE("polytope expansion basics") {
  const RootSystem a2(parse_algebra("A2"));
  const PolytopeExpansion minuscule = polytope_expansion(a2, {1, 0});
  CHECK(minuscule.coefficients == std::map<Weight, Int>{{{1, 0}, 1}});

  const PolytopeExpansion adjoint = polytope_expansion(a2, {1, 1});
  CHECK(adjoint.coefficients ==
        std::map<Weight, Int>{{{1, 1}, 1}, {{0, 0}, 1}});
}

TEST_CASE("polytope expansion reconstruction and key invariants") {
  for (const char* name : {"A2", "C2", "G2"}) {
    const RootSystem rs(parse_algebra(name));
    const long long max_level = rs.algebra().family == AlgebraFamily::A ? 3 : 2;
    for (const Weight& lambda : dominant_weights_up_to_level(rs.rank(), max_level)) {
      const PolytopeExpansion expansion = polytope_expansion(rs, lambda);
      CHECK(expansion.coefficients.at(lambda) == 1);
      FormalSum reconstruction;
      for (const auto& [mu, a] : expansion.coefficients) {
        CHECK(is_dominant(mu));
        for (const Rational& c : root_coefficients(rs, sub_weights(lambda, mu))) {
          CHECK(denominator(c) == 1);
          CHECK(c >= 0);
        }
        reconstruction += scale(brion_oracle(rs, mu), a);
      }
      CHECK(reconstruction == character_demazure(rs, lambda));
    }
  }
}

TEST_CASE("type-A expansion coefficients are nonnegative") {
  for (const char* name : {"A2", "A3"}) {
    const RootSystem rs(parse_algebra(name));
    for (const Weight& lambda : dominant_weights_up_to_level(rs.rank(), 3)) {
      for (const auto& [mu, a] : polytope_expansion(rs, lambda).coefficients)
        CHECK(a >= 0);
    }
  }
  const RootSystem a3(parse_algebra("A3"));
  for (const auto& [mu, a] : polytope_expansion(a3, {1, 1, 0}).coefficients)
    CHECK(a >= 0);
}
