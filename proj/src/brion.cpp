#include "weylpoly/brion.hpp"

#include <algorithm>
#include <stdexcept>

#include "weylpoly/demazure.hpp"

namespace weylpoly {

namespace {

void check_dominant(const RootSystem& rs, const Weight& lambda) {
  rs.check_weight(lambda, "weight");
  if (!is_dominant(lambda)) throw std::invalid_argument("weight must be dominant");
}

// Upper bounds for the simple-root coefficients of lambda - nu over dominant
// nu in the polytope: the coefficients of lambda - w_L(lambda).
std::vector<Label> descent_bounds(const RootSystem& rs, const Weight& lambda) {
  const Weight lowest = apply_weyl(rs, longest_element(rs), lambda);
  const auto coeffs = root_coefficients(rs, sub_weights(lambda, lowest));
  std::vector<Label> bounds(coeffs.size());
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (denominator(coeffs[j]) != 1)
      throw std::logic_error("lambda - w_L(lambda) escaped the root lattice");
    bounds[j] = static_cast<Label>(numerator(coeffs[j]));
  }
  return bounds;
}

}  // namespace

std::set<Weight> weight_system(const RootSystem& rs, const Weight& lambda) {
  check_dominant(rs, lambda);
  const std::vector<Label> bounds = descent_bounds(rs, lambda);
  const int n = rs.rank();

  std::set<Weight> points;
  std::vector<Label> c(n, 0);
  // Odometer over 0 <= c_j <= bounds_j; nu = lambda - sum c_j alpha_j.
  while (true) {
    Weight nu = lambda;
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) nu[i] -= c[j] * rs.simple_roots()[j][i];
    if (is_dominant(nu)) {
      for (const Weight& mu : orbit(rs, nu)) points.insert(mu);
    }
    int pos = 0;
    while (pos < n && c[pos] == bounds[pos]) c[pos++] = 0;
    if (pos == n) break;
    ++c[pos];
  }
  return points;
}

FormalSum brion_oracle(const RootSystem& rs, const Weight& lambda) {
  FormalSum sum;
  for (const Weight& mu : weight_system(rs, lambda)) sum.add_term(mu, 1);
  return sum;
}

std::vector<ConeTerm> cone_terms(const RootSystem& rs, const Weight& lambda) {
  check_dominant(rs, lambda);
  const std::set<Weight> positive(rs.positive_roots().begin(), rs.positive_roots().end());

  std::vector<ConeTerm> cones;
  for (const WeylElement& w : enumerate_group(rs)) {
    ConeTerm cone;
    cone.sign = 1;
    cone.apex = apply_weyl(rs, w, lambda);
    for (const Weight& alpha : rs.simple_roots()) {
      const Weight image = apply_weyl(rs, w, alpha);
      if (positive.count(image)) {
        cone.generators.push_back(negate_weight(image));
      } else {
        cone.generators.push_back(image);
        cone.apex = add_weights(cone.apex, image);
        cone.sign = -cone.sign;
      }
    }
    cones.push_back(std::move(cone));
  }
  return cones;
}

ConeEvaluator::ConeEvaluator(const RootSystem& rs, const Weight& lambda)
    : rank_(rs.rank()), cones_(cone_terms(rs, lambda)) {
  prepared_.reserve(cones_.size());
  for (const ConeTerm& cone : cones_) {
    PreparedCone p;
    p.sign = cone.sign;
    p.apex = cone.apex;
    const RationalMatrix m = RationalMatrix::from_integer_columns(cone.generators);
    const Rational det = m.determinant();
    const RationalMatrix inv = m.inverse();
    // adjugate = det * inverse is integral for an integer matrix.
    p.adjugate.assign(rank_, std::vector<Int>(rank_));
    for (int i = 0; i < rank_; ++i) {
      for (int j = 0; j < rank_; ++j) {
        const Rational entry = det * inv(i, j);
        if (denominator(entry) != 1) throw std::logic_error("adjugate not integral");
        p.adjugate[i][j] = numerator(entry);
      }
    }
    if (denominator(det) != 1) throw std::logic_error("determinant not integral");
    p.det = numerator(det);
    prepared_.push_back(std::move(p));
  }
}

Int ConeEvaluator::coefficient(const Weight& mu) const {
  if (static_cast<int>(mu.size()) != rank_)
    throw std::invalid_argument("weight rank mismatch in cone evaluation");
  Int total = 0;
  for (const PreparedCone& cone : prepared_) {
    bool inside = true;
    for (int i = 0; i < rank_ && inside; ++i) {
      Int y = 0;
      for (int j = 0; j < rank_; ++j) y += cone.adjugate[i][j] * Int(mu[j] - cone.apex[j]);
      // Membership needs y / det to be a nonnegative integer.
      if (y % cone.det != 0 || y / cone.det < 0) inside = false;
    }
    if (inside) total += cone.sign;
  }
  return total;
}

Int brion_coefficient(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  check_dominant(rs, lambda);
  rs.check_weight(mu, "weight");
  return ConeEvaluator(rs, lambda).coefficient(mu);
}

FormalSum brion_sum_via_cones(const RootSystem& rs, const Weight& lambda) {
  check_dominant(rs, lambda);
  const int n = rs.rank();

  // The polytope is the convex hull of the orbit, so its label box is the
  // orbit's label box.
  Weight lo = lambda, hi = lambda;
  for (const Weight& v : orbit(rs, lambda)) {
    for (int i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  }

  const ConeEvaluator evaluator(rs, lambda);
  FormalSum sum;
  Weight mu = lo;
  while (true) {
    if (in_shifted_root_lattice(rs, lambda, mu)) sum.add_term(mu, evaluator.coefficient(mu));
    int pos = 0;
    while (pos < n && mu[pos] == hi[pos]) mu[pos++] = lo[pos];
    if (pos == n) break;
    ++mu[pos];
  }
  return sum;
}

PolytopeSumMethod parse_polytope_sum_method(const std::string& name) {
  if (name == "dominance") return PolytopeSumMethod::Dominance;
  if (name == "cones") return PolytopeSumMethod::Cones;
  if (name == "demazure") return PolytopeSumMethod::DemazureProduct;
  throw std::invalid_argument("unknown method '" + name +
                              "' (expected dominance, cones or demazure)");
}

std::string polytope_sum_method_name(PolytopeSumMethod method) {
  switch (method) {
    case PolytopeSumMethod::Dominance: return "dominance";
    case PolytopeSumMethod::Cones: return "cones";
    case PolytopeSumMethod::DemazureProduct: return "demazure";
  }
  return "?";
}

PolytopeSumReport polytope_sum(const RootSystem& rs, const Weight& lambda,
                               PolytopeSumMethod method) {
  PolytopeSumReport report;
  report.lambda = lambda;
  report.method = method;
  switch (method) {
    case PolytopeSumMethod::Dominance:
      report.sum = brion_oracle(rs, lambda);
      break;
    case PolytopeSumMethod::Cones:
      report.sum = brion_sum_via_cones(rs, lambda);
      break;
    case PolytopeSumMethod::DemazureProduct:
      report.sum = rs.algebra().family == AlgebraFamily::A ? brion_demazure_product(rs, lambda)
                                                           : brion_rank2(rs, lambda);
      break;
  }
  report.term_count = report.sum.support_size();
  return report;
}

}  // namespace weylpoly
