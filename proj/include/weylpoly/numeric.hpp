#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace weylpoly {

// All coefficients are arbitrary-precision integers; every linear solve is
// done in exact rational arithmetic. Nothing in this library is ever rounded.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Label = long long;

// A weight, stored as its vector of Dynkin labels (fundamental-weight basis).
// The i-th label of mu is (mu, alpha_i^vee).
using Weight = std::vector<Label>;

inline bool is_dominant(const Weight& mu) {
  for (Label l : mu) {
    if (l < 0) return false;
  }
  return true;
}

inline Weight add_weights(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Weight sub_weights(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Weight negate_weight(const Weight& a) {
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

}  // namespace weylpoly
