#include "weylpoly/root_system.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace weylpoly {

AlgebraId parse_algebra(const std::string& name) {
  if (name == "C2") return {AlgebraFamily::C2, 2};
  if (name == "G2") return {AlgebraFamily::G2, 2};
  if (name.size() == 2 && name[0] == 'A' && name[1] >= '1' && name[1] <= '9')
    return {AlgebraFamily::A, name[1] - '0'};
  throw std::invalid_argument("unknown algebra '" + name + "' (expected A1..A9, C2 or G2)");
}

std::string algebra_name(const AlgebraId& algebra) {
  switch (algebra.family) {
    case AlgebraFamily::C2: return "C2";
    case AlgebraFamily::G2: return "G2";
    case AlgebraFamily::A: return "A" + std::to_string(algebra.rank);
  }
  return "?";
}

namespace {

std::vector<std::vector<Label>> cartan_matrix(const AlgebraId& algebra) {
  const int n = algebra.rank;
  std::vector<std::vector<Label>> c(n, std::vector<Label>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  switch (algebra.family) {
    case AlgebraFamily::A:
      for (int i = 0; i + 1 < n; ++i) {
        c[i][i + 1] = -1;
        c[i + 1][i] = -1;
      }
      break;
    // Rank-2 matrices with alpha_1 the short root: the entry (alpha_2,
    // alpha_1^vee) carries the full length ratio.
    case AlgebraFamily::C2:
      c[0][1] = -2;
      c[1][0] = -1;
      break;
    case AlgebraFamily::G2:
      c[0][1] = -3;
      c[1][0] = -1;
      break;
  }
  return c;
}

}  // namespace

RootSystem::RootSystem(const AlgebraId& algebra, int enumeration_rank_cap)
    : algebra_(algebra), enumeration_rank_cap_(enumeration_rank_cap) {
  if (algebra_.rank < 1) throw std::invalid_argument("rank must be >= 1");
  if (enumeration_rank_cap_ < 1) throw std::invalid_argument("rank cap must be >= 1");
  if (algebra_.family != AlgebraFamily::A && algebra_.rank != 2)
    throw std::invalid_argument("C2 and G2 have rank 2");

  const int n = algebra_.rank;
  cartan_ = cartan_matrix(algebra_);

  simple_roots_.resize(n, Weight(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) simple_roots_[j][i] = cartan_[i][j];

  rho_.assign(n, 1);

  RationalMatrix c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c(i, j) = cartan_[i][j];
  cartan_inverse_ = c.inverse();

  // Close the simple roots under simple reflections, then keep the roots
  // whose simple-root expansion is nonnegative.
  std::set<Weight> closure(simple_roots_.begin(), simple_roots_.end());
  std::vector<Weight> frontier(simple_roots_.begin(), simple_roots_.end());
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const Weight& beta : frontier) {
      for (int i = 1; i <= n; ++i) {
        Weight gamma = simple_reflection(*this, i, beta);
        if (closure.insert(gamma).second) next.push_back(gamma);
      }
    }
    frontier = std::move(next);
  }
  for (const Weight& beta : closure) {
    const auto coeffs = root_coefficients(*this, beta);
    bool nonneg = true;
    for (const Rational& x : coeffs) {
      if (x < 0) nonneg = false;
    }
    if (nonneg) positive_roots_.push_back(beta);
  }
  std::sort(positive_roots_.begin(), positive_roots_.end(),
            [this](const Weight& a, const Weight& b) {
              const Rational ha = height(*this, a), hb = height(*this, b);
              if (ha != hb) return ha < hb;
              return a < b;
            });
}

RootSystem build_root_system(const AlgebraId& algebra, int enumeration_rank_cap) {
  return RootSystem(algebra, enumeration_rank_cap);
}

const Weight& RootSystem::simple_root(int i) const {
  check_index(i);
  return simple_roots_[i - 1];
}

void RootSystem::check_index(int i) const {
  if (i < 1 || i > rank())
    throw std::invalid_argument("simple-root index " + std::to_string(i) +
                                " out of range 1.." + std::to_string(rank()));
}

void RootSystem::check_weight(const Weight& mu, const char* what) const {
  if (static_cast<int>(mu.size()) != rank())
    throw std::invalid_argument(std::string(what) + " has " + std::to_string(mu.size()) +
                                " labels, expected " + std::to_string(rank()));
}

Weight simple_reflection(const RootSystem& rs, int i, const Weight& mu) {
  rs.check_index(i);
  rs.check_weight(mu, "weight");
  const Label m = mu[i - 1];
  Weight r = mu;
  const Weight& alpha = rs.simple_roots()[i - 1];
  for (int k = 0; k < rs.rank(); ++k) r[k] -= m * alpha[k];
  return r;
}

std::vector<Rational> root_coefficients(const RootSystem& rs, const Weight& mu) {
  rs.check_weight(mu, "weight");
  return rs.cartan_inverse().multiply_integer(mu);
}

Rational height(const RootSystem& rs, const Weight& mu) {
  Rational h = 0;
  for (const Rational& c : root_coefficients(rs, mu)) h += c;
  return h;
}

bool in_shifted_root_lattice(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  const auto coeffs = root_coefficients(rs, sub_weights(lambda, mu));
  for (const Rational& c : coeffs) {
    if (denominator(c) != 1) return false;
  }
  return true;
}

std::vector<Weight> dominant_weights_up_to_level(int rank, long long level) {
  std::vector<Weight> out;
  Weight current(rank, 0);
  auto rec = [&](auto&& self, int pos, long long remaining) -> void {
    if (pos == rank) {
      out.push_back(current);
      return;
    }
    for (long long v = 0; v <= remaining; ++v) {
      current[pos] = v;
      self(self, pos + 1, remaining - v);
    }
    current[pos] = 0;
  };
  rec(rec, 0, level);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace weylpoly
