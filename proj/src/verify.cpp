#include "weylpoly/verify.hpp"

#include <random>
#include <sstream>

#include "weylpoly/brion.hpp"
#include "weylpoly/demazure.hpp"
#include "weylpoly/weyl.hpp"

namespace weylpoly {

namespace {

std::string weight_str(const Weight& mu) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i) os << ",";
    os << mu[i];
  }
  os << ")";
  return os.str();
}

// Engine output mapped by modulo: std::uniform_int_distribution is not
// portable across standard libraries, and verify output must be
// byte-identical for a given seed.
long long next_int(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

FormalSum random_sum(std::mt19937_64& rng, int rank) {
  FormalSum f;
  const long long n_terms = next_int(rng, 1, 3);
  for (long long t = 0; t < n_terms; ++t) {
    Weight mu(rank);
    for (int i = 0; i < rank; ++i) mu[i] = next_int(rng, -2, 2);
    long long c = next_int(rng, 1, 3);
    if (next_int(rng, 0, 1) == 1) c = -c;
    f.add_term(mu, c);
  }
  return f;
}

// Length-m alternating product D_a D_b D_a ... applied rightmost first.
FormalSum alternating_D(const RootSystem& rs, int a, int b, int m, const FormalSum& f) {
  FormalSum out = f;
  for (int t = m - 1; t >= 0; --t) out = demazure_D(rs, (t % 2 == 0) ? a : b, out);
  return out;
}

int coxeter_order(const RootSystem& rs, int i, int j) {
  const Label product = rs.cartan()[i - 1][j - 1] * rs.cartan()[j - 1][i - 1];
  switch (product) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  throw std::logic_error("unexpected Cartan entry product");
}

}  // namespace

VerifyReport verify_theorem_sweep(const RootSystem& rs, long long max_level) {
  if (rs.algebra().family != AlgebraFamily::A)
    throw std::invalid_argument("theorem sweep requires an A-family algebra");
  VerifyReport report;
  for (const Weight& lambda : dominant_weights_up_to_level(rs.rank(), max_level)) {
    const FormalSum product = brion_demazure_product(rs, lambda);
    const FormalSum oracle = brion_oracle(rs, lambda);
    VerifyCase c;
    c.name = "theorem " + algebra_name(rs.algebra()) + " lambda=" + weight_str(lambda);
    c.pass = product == oracle;
    c.detail = "terms=" + std::to_string(product.support_size());
    report.cases.push_back(std::move(c));
  }
  return report;
}

VerifyReport verify_lemma(const RootSystem& rs) {
  if (rs.algebra().family != AlgebraFamily::A)
    throw std::invalid_argument("lemma sweep requires an A-family algebra");
  VerifyReport report;
  const GroupAlgebraElement product = weyl_sum_lemma_product(rs);
  bool unit_coeffs = true;
  for (const auto& [w, c] : product.terms())
    if (c != 1) unit_coeffs = false;
  VerifyCase c;
  c.name = "lemma " + algebra_name(rs.algebra());
  c.pass = unit_coeffs && product == group_sum(rs);
  c.detail = "terms=" + std::to_string(product.support_size());
  report.cases.push_back(std::move(c));
  return report;
}

VerifyReport verify_rank2_sweep(const RootSystem& rs, long long max_level) {
  const AlgebraFamily family = rs.algebra().family;
  if (family != AlgebraFamily::C2 && family != AlgebraFamily::G2)
    throw std::invalid_argument("rank-2 sweep requires C2 or G2");
  VerifyReport report;
  for (const Weight& lambda : dominant_weights_up_to_level(2, max_level)) {
    const FormalSum computed = brion_rank2(rs, lambda);
    const FormalSum oracle = brion_oracle(rs, lambda);
    VerifyCase c;
    c.name = "rank2 " + algebra_name(rs.algebra()) + " lambda=" + weight_str(lambda);
    c.pass = computed == oracle;
    c.detail = "terms=" + std::to_string(computed.support_size());
    report.cases.push_back(std::move(c));
  }
  return report;
}

VerifyReport verify_braid(const RootSystem& rs, std::uint64_t seed) {
  VerifyReport report;
  std::mt19937_64 rng(seed);
  const int n = rs.rank();
  const std::string prefix = "braid " + algebra_name(rs.algebra()) + " ";
  constexpr int kSamples = 4;

  for (int i = 1; i <= n; ++i) {
    VerifyCase c;
    c.name = prefix + "idempotence D" + std::to_string(i) + " d" + std::to_string(i);
    c.pass = true;
    for (int s = 0; s < kSamples; ++s) {
      const FormalSum f = random_sum(rng, n);
      const FormalSum Df = demazure_D(rs, i, f);
      if (demazure_D(rs, i, Df) != Df) c.pass = false;
      const FormalSum df = demazure_d(rs, i, f);
      if (demazure_d(rs, i, df) != scale(df, -1)) c.pass = false;
    }
    c.detail = "samples=" + std::to_string(kSamples);
    report.cases.push_back(std::move(c));
  }

  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const int m = coxeter_order(rs, i, j);
      VerifyCase c;
      c.name = prefix + "braid D" + std::to_string(i) + " D" + std::to_string(j) +
               " order=" + std::to_string(m);
      c.pass = true;
      for (int s = 0; s < kSamples; ++s) {
        const FormalSum f = random_sum(rng, n);
        if (alternating_D(rs, i, j, m, f) != alternating_D(rs, j, i, m, f)) c.pass = false;
      }
      c.detail = "samples=" + std::to_string(kSamples);
      report.cases.push_back(std::move(c));
    }
  }

  // Reduced-word independence of D_w over the whole group (small groups).
  const std::vector<WeylElement> group = enumerate_group(rs);
  if (group.size() <= 24) {
    VerifyCase c;
    c.name = prefix + "reduced-word independence of D_w";
    c.pass = true;
    std::size_t total_words = 0;
    std::vector<FormalSum> samples;
    for (int s = 0; s < kSamples; ++s) samples.push_back(random_sum(rng, n));
    for (const WeylElement& w : group) {
      const auto words = all_reduced_words(rs, w);
      total_words += words.size();
      for (const FormalSum& f : samples) {
        const FormalSum reference = demazure_w(rs, w, f);
        for (const auto& word : words) {
          FormalSum g = f;
          for (auto it = word.rbegin(); it != word.rend(); ++it) g = demazure_D(rs, *it, g);
          if (g != reference) c.pass = false;
        }
      }
    }
    c.detail = "elements=" + std::to_string(group.size()) +
               " words=" + std::to_string(total_words);
    report.cases.push_back(std::move(c));
  }

  return report;
}

}  // namespace weylpoly
