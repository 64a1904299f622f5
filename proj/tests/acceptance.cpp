// Acceptance suite: runs every release criterion end to end against the
// independent oracles and prints one PASS/FAIL line per criterion. All
// comparisons are exact; there are no tolerances anywhere.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include "weylpoly/brion.hpp"
#include "weylpoly/cli.hpp"
#include "weylpoly/demazure.hpp"
#include "weylpoly/expansion.hpp"
#include "weylpoly/weyl.hpp"

using namespace weylpoly;

namespace {

int criteria_passed = 0;
int criteria_failed = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << " (" << name
            << "): " << detail << "\n";
  (pass ? criteria_passed : criteria_failed)++;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. Demazure operator product vs dominance oracle, A1..A4, level <= 4.
void criterion_theorem() {
  const auto start = std::chrono::steady_clock::now();
  int cases = 0, failures = 0;
  for (int n = 1; n <= 4; ++n) {
    const RootSystem rs({AlgebraFamily::A, n});
    for (const Weight& lambda : dominant_weights_up_to_level(n, 4)) {
      ++cases;
      if (brion_demazure_product(rs, lambda) != brion_oracle(rs, lambda)) ++failures;
    }
  }
  std::ostringstream detail;
  detail << cases << " cases, " << failures << " failures, " << seconds_since(start)
         << "s";
  report(1, "A-family polytope-sum product", failures == 0 && cases == 125, detail.str());
}

// 2. Group-algebra factorization of the Weyl sum, n = 1..5.
void criterion_lemma() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::size_t> expected_counts = {2, 6, 24, 120, 720};
  bool ok = true;
  std::ostringstream detail;
  for (int n = 1; n <= 5; ++n) {
    const RootSystem rs({AlgebraFamily::A, n});
    const GroupAlgebraElement product = weyl_sum_lemma_product(rs);
    bool unit = true;
    for (const auto& [w, c] : product.terms())
      if (c != 1) unit = false;
    const bool here = unit && product == group_sum(rs) &&
                      product.support_size() == expected_counts[n - 1];
    if (!here) ok = false;
    detail << "n=" << n << ":" << product.support_size() << (here ? " " : "(FAIL) ");
  }
  detail << seconds_since(start) << "s";
  report(2, "Weyl sum factorization in Z[W]", ok, detail.str());
}

// 3. Rank-2 operator formulas vs dominance oracle, level <= 3.
void criterion_rank2() {
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream detail;
  bool ok = true;
  for (const char* name : {"C2", "G2"}) {
    const RootSystem rs(parse_algebra(name));
    int cases = 0, failures = 0;
    std::vector<std::string> failing;
    for (const Weight& lambda : dominant_weights_up_to_level(2, 3)) {
      ++cases;
      if (brion_rank2(rs, lambda) != brion_oracle(rs, lambda)) {
        ++failures;
        failing.push_back("(" + std::to_string(lambda[0]) + "," +
                          std::to_string(lambda[1]) + ")");
      }
    }
    if (failures != 0) ok = false;
    detail << name << ":" << (cases - failures) << "/" << cases << " ";
    if (!failing.empty()) {
      detail << "failing:";
      for (const auto& s : failing) detail << " " << s;
      detail << " ";
    }
  }
  detail << seconds_since(start) << "s";
  report(3, "rank-2 operator formulas", ok, detail.str());
}

// 4. Demazure character formula vs exact Weyl division, A2/A3, level <= 3.
void criterion_characters() {
  const auto start = std::chrono::steady_clock::now();
  int cases = 0, failures = 0;
  for (const char* name : {"A2", "A3"}) {
    const RootSystem rs(parse_algebra(name));
    for (const Weight& lambda : dominant_weights_up_to_level(rs.rank(), 3)) {
      ++cases;
      if (character_weyl_division(rs, lambda) != character_demazure(rs, lambda))
        ++failures;
    }
  }
  const RootSystem a2(parse_algebra("A2"));
  const bool spot = character_demazure(a2, {1, 1}).coefficient_sum() == 8 &&
                    character_demazure(a2, {1, 0}).support_size() == 3;
  std::ostringstream detail;
  detail << cases << " cases, " << failures << " failures, spot checks "
         << (spot ? "ok, " : "FAILED, ") << seconds_since(start) << "s";
  report(4, "character formula cross-check", failures == 0 && spot, detail.str());
}

// 5. Signed-cone evaluation vs oracle on a one-root margin box, A2/A3,
// level <= 3, including exact zeros outside the polytope.
void criterion_cones() {
  const auto start = std::chrono::steady_clock::now();
  long long points = 0, zeros = 0, mismatches = 0;
  for (const char* name : {"A2", "A3"}) {
    const RootSystem rs(parse_algebra(name));
    const int n = rs.rank();
    Weight margin(n, 0);
    for (const Weight& alpha : rs.simple_roots())
      for (int i = 0; i < n; ++i) margin[i] = std::max(margin[i], std::abs(alpha[i]));
    for (const Weight& lambda : dominant_weights_up_to_level(n, 3)) {
      const auto inside = weight_system(rs, lambda);
      Weight lo = lambda, hi = lambda;
      for (const Weight& mu : inside) {
        for (int i = 0; i < n; ++i) {
          lo[i] = std::min(lo[i], mu[i]);
          hi[i] = std::max(hi[i], mu[i]);
        }
      }
      for (int i = 0; i < n; ++i) {
        lo[i] -= margin[i];
        hi[i] += margin[i];
      }
      const ConeEvaluator evaluator(rs, lambda);
      Weight mu = lo;
      while (true) {
        ++points;
        const Int expected = inside.count(mu) ? 1 : 0;
        if (expected == 0) ++zeros;
        if (evaluator.coefficient(mu) != expected) ++mismatches;
        int pos = 0;
        while (pos < n && mu[pos] == hi[pos]) mu[pos++] = lo[pos];
        if (pos == n) break;
        ++mu[pos];
      }
    }
  }
  std::ostringstream detail;
  detail << points << " lattice points (" << zeros << " exact zeros), " << mismatches
         << " mismatches, " << seconds_since(start) << "s";
  report(5, "signed-cone cancellation", mismatches == 0, detail.str());
}

// 6. Demazure operator unit suite: piecewise cases, idempotence, braid,
// and reduced-word independence of D_{w_L} on A3 across all 16 words.
void criterion_demazure_units() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;

  const RootSystem a1(parse_algebra("A1"));
  {
    FormalSum up;
    up.add_term({2}, 1);
    up.add_term({0}, 1);
    up.add_term({-2}, 1);
    ok = ok && demazure_D(a1, 1, monomial({2})) == up;
    const RootSystem a2(parse_algebra("A2"));
    ok = ok && demazure_D(a2, 1, monomial({-1, 3})).empty();
    FormalSum down;
    down.add_term({-1}, -1);
    down.add_term({1}, -1);
    ok = ok && demazure_D(a1, 1, monomial({-3})) == down;
  }

  const RootSystem a2(parse_algebra("A2"));
  for (Label x = -2; x <= 2 && ok; ++x) {
    for (Label y = -2; y <= 2 && ok; ++y) {
      const FormalSum f = monomial({x, y});
      for (int i = 1; i <= 2; ++i) {
        const FormalSum Df = demazure_D(a2, i, f);
        if (demazure_D(a2, i, Df) != Df) ok = false;
      }
      if (demazure_D(a2, 1, demazure_D(a2, 2, demazure_D(a2, 1, f))) !=
          demazure_D(a2, 2, demazure_D(a2, 1, demazure_D(a2, 2, f))))
        ok = false;
    }
  }

  const RootSystem a3(parse_algebra("A3"));
  const auto words = all_reduced_words(a3, longest_element(a3));
  std::size_t comparisons = 0;
  bool independent = words.size() == 16;
  for (Label x = -2; x <= 2; ++x) {
    for (Label y = -2; y <= 2; ++y) {
      for (Label z = -2; z <= 2; ++z) {
        const FormalSum f = monomial({x, y, z});
        const FormalSum reference = demazure_w(a3, longest_element(a3), f);
        for (const auto& word : words) {
          FormalSum g = f;
          for (auto it = word.rbegin(); it != word.rend(); ++it)
            g = demazure_D(a3, *it, g);
          ++comparisons;
          if (g != reference) independent = false;
        }
      }
    }
  }
  ok = ok && independent;
  std::ostringstream detail;
  detail << words.size() << " reduced words, " << comparisons << " comparisons, "
         << seconds_since(start) << "s";
  report(6, "Demazure operator unit suite", ok, detail.str());
}

// 7. Polytope expansion: exact reconstruction, leading coefficient 1,
// the frozen A2 adjoint expansion, and type-A nonnegativity.
void criterion_expansion() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  int cases = 0;
  for (const char* name : {"A2", "A3"}) {
    const RootSystem rs(parse_algebra(name));
    for (const Weight& lambda : dominant_weights_up_to_level(rs.rank(), 3)) {
      ++cases;
      const PolytopeExpansion expansion = polytope_expansion(rs, lambda);
      if (expansion.coefficients.at(lambda) != 1) ok = false;
      FormalSum reconstruction;
      for (const auto& [mu, a] : expansion.coefficients) {
        if (a < 0) ok = false;
        reconstruction += scale(brion_oracle(rs, mu), a);
      }
      if (reconstruction != character_demazure(rs, lambda)) ok = false;
    }
  }
  const RootSystem a2(parse_algebra("A2"));
  const std::map<Weight, Int> expected = {{{1, 1}, 1}, {{0, 0}, 1}};
  if (polytope_expansion(a2, {1, 1}).coefficients != expected) ok = false;
  std::ostringstream detail;
  detail << cases << " expansions, " << seconds_since(start) << "s";
  report(7, "polytope expansion", ok, detail.str());
}

// 8. Property suites runnable through the CLI with deterministic seeds.
void criterion_verify_cli() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;

  auto run = [](const std::vector<std::string>& args, std::string& out) {
    std::ostringstream os, es;
    const int status = run_cli(args, os, es);
    out = os.str();
    return status;
  };

  std::string braid1, braid2;
  ok = ok && run({"verify", "braid", "--seed", "42"}, braid1) == 0;
  ok = ok && run({"verify", "braid", "--seed", "42"}, braid2) == 0;
  ok = ok && braid1 == braid2 && !braid1.empty();

  std::string out;
  ok = ok && run({"verify", "theorem", "--algebra", "A3", "--max-level", "3"}, out) == 0;
  ok = ok && run({"verify", "lemma", "--max-rank", "5"}, out) == 0;
  ok = ok && run({"verify", "rank2", "--algebra", "C2", "--max-level", "3"}, out) == 0;

  // The G2 sweep reports its failures; here we only require that the
  // report itself is deterministic.
  std::string g2a, g2b;
  const int g2_status = run({"verify", "rank2", "--algebra", "G2"}, g2a);
  ok = ok && run({"verify", "rank2", "--algebra", "G2"}, g2b) == g2_status;
  ok = ok && g2a == g2b;

  std::ostringstream detail;
  detail << "deterministic outputs, " << seconds_since(start) << "s";
  report(8, "verify sweeps via CLI", ok, detail.str());
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  criterion_theorem();
  criterion_lemma();
  criterion_rank2();
  criterion_characters();
  criterion_cones();
  criterion_demazure_units();
  criterion_expansion();
  criterion_verify_cli();
  std::cout << "acceptance: " << criteria_passed << "/"
            << (criteria_passed + criteria_failed) << " criteria passed in "
            << seconds_since(start) << "s\n";
  return criteria_failed == 0 ? 0 : 1;
}
