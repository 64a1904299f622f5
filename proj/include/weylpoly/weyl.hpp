#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "weylpoly/formal_sum.hpp"
#include "weylpoly/numeric.hpp"
#include "weylpoly/root_system.hpp"

namespace weylpoly {

// A Weyl group element in canonical form. For the A family the canonical
// payload is a permutation of {0,..,rank} in one-line notation (perm[k] is
// the image of position k); r_j is the transposition of positions j-1, j.
// For C2/G2 the payload is the ShortLex-least reduced word. Two elements are
// equal iff their canonical payloads are.
//
// Word convention, used everywhere in this library: a word [i1,...,ik]
// denotes the composite r_{i1} o ... o r_{ik}, so the RIGHTMOST letter acts
// first on weights.
struct WeylElement {
  AlgebraFamily family = AlgebraFamily::A;
  int rank = 1;
  std::vector<int> perm;  // A family only
  std::vector<int> word;  // C2/G2 only, 1-based letters

  bool operator==(const WeylElement&) const = default;
  auto operator<=>(const WeylElement&) const = default;
};

std::string to_string(const WeylElement& w);

WeylElement weyl_identity(const RootSystem& rs);
WeylElement weyl_generator(const RootSystem& rs, int i);

// Group product a*b; acting on weights, b applies first.
WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b);
WeylElement inverse(const RootSystem& rs, const WeylElement& w);

int length(const RootSystem& rs, const WeylElement& w);
int determinant(const RootSystem& rs, const WeylElement& w);  // (-1)^length

WeylElement from_word(const RootSystem& rs, const std::vector<int>& word);

// A reduced word for w; from_word(reduced_word(w)) == w and the length is
// minimal. Deterministic choice of word.
std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& w);

// Every reduced word of w, in lexicographic order.
std::vector<std::vector<int>> all_reduced_words(const RootSystem& rs, const WeylElement& w);

// All group elements, each exactly once, in a deterministic order
// (lexicographic permutations for A, ShortLex words for C2/G2). For the A
// family the rank must not exceed the enumeration cap.
std::vector<WeylElement> enumerate_group(const RootSystem& rs);

WeylElement longest_element(const RootSystem& rs);

// {w(lambda) : w in W}, computed by closure under simple reflections.
std::set<Weight> orbit(const RootSystem& rs, const Weight& lambda);

Weight apply_weyl(const RootSystem& rs, const WeylElement& w, const Weight& mu);
FormalSum apply_weyl(const RootSystem& rs, const WeylElement& w, const FormalSum& f);

// An element of the group algebra Z[W], in canonical sparse form.
class GroupAlgebraElement {
 public:
  using TermMap = std::map<WeylElement, Int>;

  GroupAlgebraElement() = default;

  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  Int coefficient(const WeylElement& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Int(0) : it->second;
  }

  void add_term(const WeylElement& w, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool operator==(const GroupAlgebraElement&) const = default;

 private:
  TermMap terms_;
};

GroupAlgebraElement ga_single(const WeylElement& w);
GroupAlgebraElement ga_add(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement ga_multiply(const RootSystem& rs, const GroupAlgebraElement& a,
                                const GroupAlgebraElement& b);

// s_{i,j} = r_j r_{j-1} ... r_i (A family, 1 <= i <= j <= rank).
WeylElement s_elem(const RootSystem& rs, int i, int j);

// w_{i,j} = s_{i,j} + s_{i+1,j} + ... + s_{j,j} + 1 in Z[W].
GroupAlgebraElement w_elem(const RootSystem& rs, int i, int j);

// Sum of all group elements, coefficient 1 each.
GroupAlgebraElement group_sum(const RootSystem& rs);

// The fully expanded product w_{1,1} w_{1,2} ... w_{1,n} in Z[W].
GroupAlgebraElement weyl_sum_lemma_product(const RootSystem& rs);

// True iff the product above equals the sum over W with every coefficient 1.
bool verify_weyl_sum_lemma(const RootSystem& rs);

}  // namespace weylpoly
