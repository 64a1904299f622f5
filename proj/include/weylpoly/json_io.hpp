#pragma once

#include <json.hpp>

#include "weylpoly/expansion.hpp"
#include "weylpoly/formal_sum.hpp"
#include "weylpoly/numeric.hpp"

namespace weylpoly {

// Coefficients are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise, so nothing is ever rounded.
nlohmann::json int_to_json(const Int& value);
Int int_from_json(const nlohmann::json& j);

nlohmann::json weight_to_json(const Weight& mu);
Weight weight_from_json(const nlohmann::json& j);

// {"terms": [{"weight": [...], "coeff": n}, ...]} sorted lexicographically
// by weight.
nlohmann::json formal_sum_to_json(const FormalSum& f);
FormalSum formal_sum_from_json(const nlohmann::json& j);

nlohmann::json expansion_to_json(const PolytopeExpansion& expansion);

}  // namespace weylpoly
