#include <doctest.h>

#include <random>

#include "weylpoly/formal_sum.hpp"

using namespace weylpoly;

namespace {

FormalSum random_sum(std::mt19937_64& rng, int rank) {
  FormalSum f;
  const int n_terms = 1 + static_cast<int>(rng() % 4);
  for (int t = 0; t < n_terms; ++t) {
    Weight mu(rank);
    for (int i = 0; i < rank; ++i) mu[i] = static_cast<Label>(rng() % 7) - 3;
    const Int c = static_cast<long long>(rng() % 9) - 4;
    f.add_term(mu, c);
  }
  return f;
}

}  // namespace

TEST_CASE("monomials") {
  CHECK(monomial({0, 0}).terms() == FormalSum::TermMap{{{0, 0}, 1}});
  CHECK(monomial({1, 0}).terms() == FormalSum::TermMap{{{1, 0}, 1}});
  CHECK(monomial({-2, 3}).terms() == FormalSum::TermMap{{{-2, 3}, 1}});
}

TEST_CASE("cancellation keeps the form canonical") {
  const FormalSum f = monomial({1, 2});
  CHECK(add(f, scale(f, -1)).empty());
  FormalSum g;
  g.add_term({0, 0}, 0);
  CHECK(g.empty());
  g.add_term({0, 0}, 3);
  g.add_term({0, 0}, -3);
  CHECK(g.empty());
}

TEST_CASE("product convolves exponents") {
  const FormalSum product = multiply(monomial({1, 2}), monomial({-3, 1}));
  CHECK(product == monomial({-2, 3}));

  FormalSum string;  // A1: (e^1 + e^-1)^2 = e^2 + 2 e^0 + e^-2
  string.add_term({1}, 1);
  string.add_term({-1}, 1);
  const FormalSum square = multiply(string, string);
  CHECK(square.coefficient({2}) == 1);
  CHECK(square.coefficient({0}) == 2);
  CHECK(square.coefficient({-2}) == 1);
  CHECK(square.support_size() == 3);
}

TEST_CASE("coefficient lookup") {
  const FormalSum f = monomial({1, 0});
  CHECK(coefficient(f, {1, 0}) == 1);
  CHECK(coefficient(f, {0, 1}) == 0);
  CHECK(f.coefficient_sum() == 1);
}

TEST_CASE("ring axioms on random sums") {
  std::mt19937_64 rng(20240901);
  for (int trial = 0; trial < 25; ++trial) {
    const FormalSum a = random_sum(rng, 2);
    const FormalSum b = random_sum(rng, 2);
    const FormalSum c = random_sum(rng, 2);
    CHECK(multiply(a, b) == multiply(b, a));
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(multiply(a, add(b, c)) == add(multiply(a, b), multiply(a, c)));
    CHECK(add(a, b) == add(b, a));
    CHECK(scale(a, 3) == add(a, add(a, a)));
  }
}

TEST_CASE("rank mismatch is rejected") {
  FormalSum f = monomial({1, 0});
  CHECK_THROWS_AS(f.add_term({1, 0, 0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(multiply(monomial({1}), monomial({1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(add(monomial({1}), monomial({1, 0})), std::invalid_argument);
}

TEST_CASE("printing is deterministic and lexicographic") {
  FormalSum f;
  f.add_term({1, 0}, 1);
  f.add_term({0, 0}, 2);
  f.add_term({-1, 1}, -1);
  CHECK(to_string(f) == "- e(-1,1) + 2 e(0,0) + e(1,0)");
  CHECK(to_string(FormalSum{}) == "0");
}
