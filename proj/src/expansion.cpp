#include "weylpoly/expansion.hpp"

#include <stdexcept>
#include <utility>

#include "weylpoly/brion.hpp"
#include "weylpoly/demazure.hpp"
#include "weylpoly/weyl.hpp"

namespace weylpoly {

FormalSum weyl_denominator(const RootSystem& rs) {
  FormalSum denom = monomial(Weight(rs.rank(), 0));
  for (const Weight& alpha : rs.positive_roots()) {
    FormalSum factor = monomial(Weight(rs.rank(), 0));
    factor.add_term(negate_weight(alpha), -1);
    denom = denom * factor;
  }
  return denom;
}

FormalSum character_weyl_division(const RootSystem& rs, const Weight& lambda) {
  rs.check_weight(lambda, "highest weight");
  if (!is_dominant(lambda)) throw std::invalid_argument("highest weight must be dominant");

  const Weight lambda_rho = add_weights(lambda, rs.rho());
  FormalSum numerator;
  for (const WeylElement& w : enumerate_group(rs)) {
    const Weight exp = sub_weights(apply_weyl(rs, w, lambda_rho), rs.rho());
    numerator.add_term(exp, determinant(rs, w));
  }
  const FormalSum denom = weyl_denominator(rs);

  // Residual keyed by (-height, labels): the first entry is always the
  // height-maximal term, lex-least among ties.
  using Key = std::pair<Rational, Weight>;
  std::map<Key, Int> residual;
  auto residual_add = [&](const Weight& mu, const Int& c) {
    if (c == 0) return;
    const Key key{-height(rs, mu), mu};
    auto [it, inserted] = residual.emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) residual.erase(it);
    }
  };
  for (const auto& [mu, c] : numerator.terms()) residual_add(mu, c);

  // Every intermediate residual term sits at height >= the lowest numerator
  // exponent; anything below that signals an inexact division.
  const Weight lowest =
      sub_weights(apply_weyl(rs, longest_element(rs), lambda_rho), rs.rho());
  const Rational floor = height(rs, lowest) - 1;

  FormalSum quotient;
  while (!residual.empty()) {
    const auto [key, c] = *residual.begin();
    const Weight& tau = key.second;
    if (-key.first < floor)
      throw std::runtime_error("Weyl character division left a remainder");
    quotient.add_term(tau, c);
    for (const auto& [nu, d] : denom.terms()) residual_add(add_weights(tau, nu), -c * d);
  }
  return quotient;
}

Int weight_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  rs.check_weight(mu, "weight");
  return coefficient(character_demazure(rs, lambda), mu);
}

PolytopeExpansion polytope_expansion(const RootSystem& rs, const Weight& lambda) {
  FormalSum residual = character_demazure(rs, lambda);
  PolytopeExpansion expansion;
  expansion.lambda = lambda;

  const std::size_t step_cap = 10 * residual.support_size() + 100;
  std::size_t steps = 0;
  while (!residual.empty()) {
    if (++steps > step_cap)
      throw std::runtime_error("polytope expansion residual failed to terminate");
    // Dominance-maximal dominant weight in the support: minimal height of
    // lambda - nu, ties broken lexicographically.
    const Weight* best = nullptr;
    Rational best_h;
    for (const auto& [mu, c] : residual.terms()) {
      if (!is_dominant(mu)) continue;
      const Rational h = height(rs, sub_weights(lambda, mu));
      if (best == nullptr || h < best_h || (h == best_h && mu < *best)) {
        best = &mu;
        best_h = h;
      }
    }
    if (best == nullptr)
      throw std::runtime_error("polytope expansion residual lost Weyl invariance");
    const Weight nu = *best;
    const Int a = residual.coefficient(nu);
    expansion.coefficients.emplace(nu, a);
    residual -= scale(brion_oracle(rs, nu), a);
  }
  return expansion;
}

}  // namespace weylpoly
