#pragma once

#include <map>
#include <ostream>
#include <string>

#include "weylpoly/numeric.hpp"

namespace weylpoly {

// An element of Z[P]: a finitely supported integer-valued function on the
// weight lattice, stored sparsely as exponent -> coefficient. Zero
// coefficients are never stored, so equality of maps is equality in Z[P].
// Keys are ordered lexicographically, which fixes iteration (and hence
// serialization) order.
class FormalSum {
 public:
  using TermMap = std::map<Weight, Int>;

  FormalSum() = default;

  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  // Rank of the ambient lattice, or -1 for the empty sum (which embeds in
  // any rank).
  int rank() const { return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.size()); }

  Int coefficient(const Weight& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? Int(0) : it->second;
  }

  void add_term(const Weight& mu, const Int& c) {
    if (c == 0) return;
    check_rank(mu);
    auto [it, inserted] = terms_.emplace(mu, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Int coefficient_sum() const {
    Int s = 0;
    for (const auto& [mu, c] : terms_) s += c;
    return s;
  }

  bool operator==(const FormalSum&) const = default;

  FormalSum& operator+=(const FormalSum& other);
  FormalSum& operator-=(const FormalSum& other);

 private:
  void check_rank(const Weight& mu) const;

  TermMap terms_;
};

FormalSum monomial(const Weight& mu);
FormalSum add(const FormalSum& f, const FormalSum& g);
FormalSum scale(const FormalSum& f, const Int& k);
FormalSum multiply(const FormalSum& f, const FormalSum& g);
Int coefficient(const FormalSum& f, const Weight& mu);

FormalSum operator+(const FormalSum& f, const FormalSum& g);
FormalSum operator-(const FormalSum& f, const FormalSum& g);
FormalSum operator*(const FormalSum& f, const FormalSum& g);

std::string to_string(const FormalSum& f);
std::ostream& operator<<(std::ostream& os, const FormalSum& f);

}  // namespace weylpoly
