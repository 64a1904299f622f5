#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "weylpoly/formal_sum.hpp"
#include "weylpoly/root_system.hpp"
#include "weylpoly/weyl.hpp"

namespace weylpoly {

// Demazure operator D_i, by its closed piecewise action on a term e^mu with
// m = mu_i (the i-th Dynkin label):
//   m >= 0 : e^mu + e^{mu-alpha_i} + ... + e^{r_i mu}      (m+1 terms)
//   m = -1 : 0
//   m < -1 : -(e^{mu+alpha_i} + ... + e^{r_i(mu+alpha_i)}) (-m-1 terms)
// extended linearly.
FormalSum demazure_D(const RootSystem& rs, int i, const FormalSum& f);

// Modified operator d_i = D_i - 1.
FormalSum demazure_d(const RootSystem& rs, int i, const FormalSum& f);

// D_w: D_i along a reduced word of w, rightmost letter applied first. The
// result does not depend on which reduced word is chosen.
FormalSum demazure_w(const RootSystem& rs, const WeylElement& w, const FormalSum& f);

// Formal character of the irreducible module with highest weight lambda,
// as D_{w_L}(e^lambda). Requires lambda dominant.
FormalSum character_demazure(const RootSystem& rs, const Weight& lambda);

// Generalized operator (A family, 1 <= i <= j <= rank):
//   D_{i,j} = sum_{k=i}^{j} (r_j r_{j-1} ... r_{k+1}) d_k + 1,
// the Weyl prefix acting after d_k (empty prefix for k = j).
FormalSum generalized_demazure(const RootSystem& rs, int i, int j, const FormalSum& f);

// The A-family Weyl polytope sum as the ordered operator product
// D_{1,1} D_{1,2} ... D_{1,n} applied to e^lambda, rightmost factor first.
FormalSum brion_demazure_product(const RootSystem& rs, const Weight& lambda);

// The rank-2 Weyl polytope sum operators, with alpha_1 the short root:
//   C2: (1 + d_1)(1 + d_2 + r_2 d_1 + r_2 r_1 d_2)
//   G2: (1 + d_1)(1 + d_2 + r_2 d_1 + r_2 r_1 d_2 + r_2 r_1 r_2 d_1
//                   + r_2 r_1 r_2 r_1 d_2)
// applied right factor first, to e^lambda. Requires lambda dominant.
//
// The C2 operator reproduces B_lambda exactly (see the verification
// sweeps). The G2 operator of the same shape does not: it drops interior
// short-root strings for some lambda, and `verify rank2 --algebra G2`
// reports those cases as FAIL. No two-factor operator of this family
// closes the gap; see the conventions section of the README.
FormalSum brion_rank2(const RootSystem& rs, const Weight& lambda);

enum class OpKind { Reflection, Demazure, ModifiedDemazure };

struct OperatorAtom {
  OpKind kind = OpKind::Demazure;
  int index = 1;

  bool operator==(const OperatorAtom&) const = default;
};

using OperatorWord = std::vector<OperatorAtom>;

class OperatorParseError : public std::invalid_argument {
 public:
  OperatorParseError(const std::string& msg, std::size_t offset)
      : std::invalid_argument(msg + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Parses whitespace-separated atoms "r<i>", "D<i>", "d<i>".
OperatorWord parse_operator_expression(const RootSystem& rs, const std::string& text);

// Applies an operator word right-to-left (rightmost atom acts first).
FormalSum apply_operator_word(const RootSystem& rs, const OperatorWord& word, const FormalSum& f);

}  // namespace weylpoly
