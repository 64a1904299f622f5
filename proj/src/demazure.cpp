#include "weylpoly/demazure.hpp"

#include <cctype>

namespace weylpoly {

FormalSum demazure_D(const RootSystem& rs, int i, const FormalSum& f) {
  rs.check_index(i);
  if (!f.empty()) rs.check_weight(f.terms().begin()->first, "formal sum");
  const Weight& alpha = rs.simple_roots()[i - 1];
  FormalSum out;
  for (const auto& [mu, c] : f.terms()) {
    const Label m = mu[i - 1];
    if (m >= 0) {
      Weight x = mu;
      for (Label k = 0; k <= m; ++k) {
        out.add_term(x, c);
        x = sub_weights(x, alpha);
      }
    } else if (m < -1) {
      Weight x = add_weights(mu, alpha);
      for (Label k = 1; k <= -m - 1; ++k) {
        out.add_term(x, -c);
        x = add_weights(x, alpha);
      }
    }
    // m == -1: the term is annihilated.
  }
  return out;
}

FormalSum demazure_d(const RootSystem& rs, int i, const FormalSum& f) {
  return demazure_D(rs, i, f) - f;
}

FormalSum demazure_w(const RootSystem& rs, const WeylElement& w, const FormalSum& f) {
  const std::vector<int> word = reduced_word(rs, w);
  FormalSum out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = demazure_D(rs, *it, out);
  return out;
}

FormalSum character_demazure(const RootSystem& rs, const Weight& lambda) {
  rs.check_weight(lambda, "highest weight");
  if (!is_dominant(lambda)) throw std::invalid_argument("highest weight must be dominant");
  return demazure_w(rs, longest_element(rs), monomial(lambda));
}

FormalSum generalized_demazure(const RootSystem& rs, int i, int j, const FormalSum& f) {
  if (rs.algebra().family != AlgebraFamily::A)
    throw std::invalid_argument("generalized Demazure operators are defined for the A family only");
  rs.check_index(i);
  rs.check_index(j);
  if (i > j) throw std::invalid_argument("generalized Demazure operator requires i <= j");
  FormalSum out = f;  // identity term
  for (int k = i; k <= j; ++k) {
    FormalSum g = demazure_d(rs, k, f);
    if (k < j) {
      std::vector<int> prefix;
      for (int l = j; l > k; --l) prefix.push_back(l);
      g = apply_weyl(rs, from_word(rs, prefix), g);
    }
    out += g;
  }
  return out;
}

FormalSum brion_demazure_product(const RootSystem& rs, const Weight& lambda) {
  if (rs.algebra().family != AlgebraFamily::A)
    throw std::invalid_argument("the Demazure polytope-sum product is defined for the A family only");
  rs.check_weight(lambda, "weight");
  if (!is_dominant(lambda)) throw std::invalid_argument("weight must be dominant");
  FormalSum f = monomial(lambda);
  for (int j = rs.rank(); j >= 1; --j) f = generalized_demazure(rs, 1, j, f);
  return f;
}

FormalSum brion_rank2(const RootSystem& rs, const Weight& lambda) {
  const AlgebraFamily family = rs.algebra().family;
  if (family != AlgebraFamily::C2 && family != AlgebraFamily::G2)
    throw std::invalid_argument("rank-2 polytope-sum operators are defined for C2 and G2 only");
  rs.check_weight(lambda, "weight");
  if (!is_dominant(lambda)) throw std::invalid_argument("weight must be dominant");

  const FormalSum f = monomial(lambda);

  // Right factor: 1 + d_2 + r_2 d_1 + r_2 r_1 d_2 + ... with alternating
  // prefixes r_2 r_1 r_2 ...; C2 stops after r_2 r_1 d_2, G2 two terms later.
  // Here index 1 is the short root; see the conventions note in the README
  // for why the operator indices run opposite to the naive reading.
  const int extra_terms = family == AlgebraFamily::C2 ? 3 : 5;
  FormalSum g = f;
  std::vector<int> prefix;
  for (int p = 0; p < extra_terms; ++p) {
    const int d_index = (p % 2 == 0) ? 2 : 1;
    FormalSum term = demazure_d(rs, d_index, f);
    if (!prefix.empty()) term = apply_weyl(rs, from_word(rs, prefix), term);
    g += term;
    prefix.push_back((p % 2 == 0) ? 2 : 1);
  }

  // Left factor: 1 + d_1.
  return g + demazure_d(rs, 1, g);
}

OperatorWord parse_operator_expression(const RootSystem& rs, const std::string& text) {
  OperatorWord word;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    OpKind kind;
    switch (text[pos]) {
      case 'r': kind = OpKind::Reflection; break;
      case 'D': kind = OpKind::Demazure; break;
      case 'd': kind = OpKind::ModifiedDemazure; break;
      default:
        throw OperatorParseError("expected atom r<i>, D<i> or d<i>", start);
    }
    ++pos;
    std::size_t digits = 0;
    long long index = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      index = index * 10 + (text[pos] - '0');
      if (index > 1000) throw OperatorParseError("index out of range", start);
      ++pos;
      ++digits;
    }
    if (digits == 0) throw OperatorParseError("expected atom r<i>, D<i> or d<i>", start);
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      throw OperatorParseError("expected atom r<i>, D<i> or d<i>", start);
    if (index < 1 || index > rs.rank())
      throw OperatorParseError("index " + std::to_string(index) + " out of range 1.." +
                                   std::to_string(rs.rank()),
                               start);
    word.push_back({kind, static_cast<int>(index)});
  }
  return word;
}

FormalSum apply_operator_word(const RootSystem& rs, const OperatorWord& word,
                              const FormalSum& f) {
  FormalSum out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    switch (it->kind) {
      case OpKind::Reflection:
        out = apply_weyl(rs, weyl_generator(rs, it->index), out);
        break;
      case OpKind::Demazure:
        out = demazure_D(rs, it->index, out);
        break;
      case OpKind::ModifiedDemazure:
        out = demazure_d(rs, it->index, out);
        break;
    }
  }
  return out;
}

}  // namespace weylpoly
