#include "weylpoly/formal_sum.hpp"

#include <sstream>
#include <stdexcept>

namespace weylpoly {

void FormalSum::check_rank(const Weight& mu) const {
  if (!terms_.empty() && terms_.begin()->first.size() != mu.size())
    throw std::invalid_argument("formal sum rank mismatch: term of length " +
                                std::to_string(mu.size()) + " added to rank " +
                                std::to_string(terms_.begin()->first.size()) + " sum");
}

FormalSum& FormalSum::operator+=(const FormalSum& other) {
  for (const auto& [mu, c] : other.terms()) add_term(mu, c);
  return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& other) {
  for (const auto& [mu, c] : other.terms()) add_term(mu, -c);
  return *this;
}

FormalSum monomial(const Weight& mu) {
  FormalSum f;
  f.add_term(mu, 1);
  return f;
}

FormalSum add(const FormalSum& f, const FormalSum& g) {
  FormalSum r = f;
  r += g;
  return r;
}

FormalSum scale(const FormalSum& f, const Int& k) {
  FormalSum r;
  if (k == 0) return r;
  for (const auto& [mu, c] : f.terms()) r.add_term(mu, c * k);
  return r;
}

FormalSum multiply(const FormalSum& f, const FormalSum& g) {
  if (!f.empty() && !g.empty() && f.rank() != g.rank())
    throw std::invalid_argument("formal sum rank mismatch in multiply");
  FormalSum r;
  for (const auto& [mu, a] : f.terms())
    for (const auto& [nu, b] : g.terms()) r.add_term(add_weights(mu, nu), a * b);
  return r;
}

Int coefficient(const FormalSum& f, const Weight& mu) { return f.coefficient(mu); }

FormalSum operator+(const FormalSum& f, const FormalSum& g) { return add(f, g); }

FormalSum operator-(const FormalSum& f, const FormalSum& g) {
  FormalSum r = f;
  r -= g;
  return r;
}

FormalSum operator*(const FormalSum& f, const FormalSum& g) { return multiply(f, g); }

std::string to_string(const FormalSum& f) {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mu, c] : f.terms()) {
    if (first) {
      if (c < 0) os << "- ";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const Int a = abs(c);
    if (a != 1) os << a << " ";
    os << "e(";
    for (std::size_t i = 0; i < mu.size(); ++i) {
      if (i) os << ",";
      os << mu[i];
    }
    os << ")";
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FormalSum& f) { return os << to_string(f); }

}  // namespace weylpoly
