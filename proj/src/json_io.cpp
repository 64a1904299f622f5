#include "weylpoly/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace weylpoly {

nlohmann::json int_to_json(const Int& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(value);
  return value.str();
}

Int int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected integer or decimal string");
}

nlohmann::json weight_to_json(const Weight& mu) {
  nlohmann::json j = nlohmann::json::array();
  for (Label l : mu) j.push_back(l);
  return j;
}

Weight weight_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a weight array");
  Weight mu;
  for (const auto& v : j) mu.push_back(v.get<Label>());
  return mu;
}

nlohmann::json formal_sum_to_json(const FormalSum& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [mu, c] : f.terms()) {
    terms.push_back({{"weight", weight_to_json(mu)}, {"coeff", int_to_json(c)}});
  }
  return {{"terms", terms}};
}

FormalSum formal_sum_from_json(const nlohmann::json& j) {
  FormalSum f;
  for (const auto& term : j.at("terms"))
    f.add_term(weight_from_json(term.at("weight")), int_from_json(term.at("coeff")));
  return f;
}

nlohmann::json expansion_to_json(const PolytopeExpansion& expansion) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [mu, a] : expansion.coefficients)
    coeffs.push_back({{"weight", weight_to_json(mu)}, {"coeff", int_to_json(a)}});
  return {{"lambda", weight_to_json(expansion.lambda)}, {"coefficients", coeffs}};
}

}  // namespace weylpoly
