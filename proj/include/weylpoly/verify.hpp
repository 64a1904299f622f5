#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weylpoly/root_system.hpp"

namespace weylpoly {

struct VerifyCase {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCase> cases;

  bool all_pass() const {
    for (const auto& c : cases)
      if (!c.pass) return false;
    return true;
  }
};

// Demazure product vs the dominance oracle, every dominant lambda with
// label sum <= max_level (A family).
VerifyReport verify_theorem_sweep(const RootSystem& rs, long long max_level);

// w_{1,1} ... w_{1,n} in Z[W] vs the sum over the group (A family).
VerifyReport verify_lemma(const RootSystem& rs);

// The explicit rank-2 operators vs the dominance oracle (C2/G2).
VerifyReport verify_rank2_sweep(const RootSystem& rs, long long max_level);

// Seeded property suite: braid relations and idempotence of the Demazure
// operators on random sums, plus reduced-word independence of D_w across
// the whole group when it is small enough to sweep.
VerifyReport verify_braid(const RootSystem& rs, std::uint64_t seed);

}  // namespace weylpoly
