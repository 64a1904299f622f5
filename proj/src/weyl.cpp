#include "weylpoly/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weylpoly {

namespace {

Weight apply_letters(const RootSystem& rs, const std::vector<int>& word, Weight mu) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) mu = simple_reflection(rs, *it, mu);
  return mu;
}

// ShortLex normal forms for the eight C2 / twelve G2 elements, keyed by the
// image of rho (rho is regular, so w -> w(rho) is injective).
struct Rank2Table {
  std::vector<std::vector<int>> words;
  std::map<Weight, int> by_rho_image;
  int longest_id = 0;
};

Rank2Table build_rank2_table(const RootSystem& rs) {
  Rank2Table t;
  t.words.push_back({});
  t.by_rho_image.emplace(rs.rho(), 0);
  std::vector<std::vector<int>> frontier = {{}};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& word : frontier) {
      for (int i = 1; i <= rs.rank(); ++i) {
        std::vector<int> cand = word;
        cand.push_back(i);
        Weight key = apply_letters(rs, cand, rs.rho());
        if (t.by_rho_image.emplace(key, static_cast<int>(t.words.size())).second) {
          t.words.push_back(cand);
          next.push_back(cand);
        }
      }
    }
    frontier = std::move(next);
  }
  t.longest_id = static_cast<int>(t.words.size()) - 1;
  return t;
}

const Rank2Table& rank2_table(const RootSystem& rs) {
  static const Rank2Table c2 = build_rank2_table(RootSystem({AlgebraFamily::C2, 2}));
  static const Rank2Table g2 = build_rank2_table(RootSystem({AlgebraFamily::G2, 2}));
  return rs.algebra().family == AlgebraFamily::C2 ? c2 : g2;
}

bool is_type_a(const RootSystem& rs) { return rs.algebra().family == AlgebraFamily::A; }

void check_element(const RootSystem& rs, const WeylElement& w) {
  if (w.family != rs.algebra().family || w.rank != rs.rank())
    throw std::invalid_argument("Weyl element does not belong to " + algebra_name(rs.algebra()));
}

WeylElement make_a_element(const RootSystem& rs, std::vector<int> perm) {
  return {rs.algebra().family, rs.rank(), std::move(perm), {}};
}

WeylElement make_rank2_element(const RootSystem& rs, const std::vector<int>& normal_form) {
  return {rs.algebra().family, rs.rank(), {}, normal_form};
}

WeylElement rank2_from_letters(const RootSystem& rs, const std::vector<int>& letters) {
  const Rank2Table& t = rank2_table(rs);
  Weight key = apply_letters(rs, letters, rs.rho());
  return make_rank2_element(rs, t.words[t.by_rho_image.at(key)]);
}

std::vector<int> compose_perm(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> r(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) r[k] = p[q[k]];
  return r;
}

int inversion_count(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++inv;
  return inv;
}

}  // namespace

std::string to_string(const WeylElement& w) {
  std::ostringstream os;
  bool first = true;
  std::vector<int> letters = w.word;
  if (w.family == AlgebraFamily::A) {
    // Recover a word from the permutation by sorting; see reduced_word.
    std::vector<int> onel = w.perm;
    std::vector<int> rev;
    bool sorted = false;
    while (!sorted) {
      sorted = true;
      for (std::size_t j = 0; j + 1 < onel.size(); ++j) {
        if (onel[j] > onel[j + 1]) {
          std::swap(onel[j], onel[j + 1]);
          rev.push_back(static_cast<int>(j) + 1);
          sorted = false;
          break;
        }
      }
    }
    letters.assign(rev.rbegin(), rev.rend());
  }
  if (letters.empty()) return "e";
  for (int l : letters) {
    if (!first) os << " ";
    os << "r" << l;
    first = false;
  }
  return os.str();
}

WeylElement weyl_identity(const RootSystem& rs) {
  if (is_type_a(rs)) {
    std::vector<int> id(rs.rank() + 1);
    std::iota(id.begin(), id.end(), 0);
    return make_a_element(rs, std::move(id));
  }
  return make_rank2_element(rs, {});
}

WeylElement weyl_generator(const RootSystem& rs, int i) {
  rs.check_index(i);
  return from_word(rs, {i});
}

WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
  check_element(rs, a);
  check_element(rs, b);
  if (is_type_a(rs)) return make_a_element(rs, compose_perm(a.perm, b.perm));
  std::vector<int> letters = a.word;
  letters.insert(letters.end(), b.word.begin(), b.word.end());
  return rank2_from_letters(rs, letters);
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  check_element(rs, w);
  if (is_type_a(rs)) {
    std::vector<int> inv(w.perm.size());
    for (std::size_t k = 0; k < w.perm.size(); ++k) inv[w.perm[k]] = static_cast<int>(k);
    return make_a_element(rs, std::move(inv));
  }
  std::vector<int> letters(w.word.rbegin(), w.word.rend());
  return rank2_from_letters(rs, letters);
}

int length(const RootSystem& rs, const WeylElement& w) {
  check_element(rs, w);
  if (is_type_a(rs)) return inversion_count(w.perm);
  return static_cast<int>(w.word.size());
}

int determinant(const RootSystem& rs, const WeylElement& w) {
  return (length(rs, w) % 2 == 0) ? 1 : -1;
}

WeylElement from_word(const RootSystem& rs, const std::vector<int>& word) {
  for (int i : word) rs.check_index(i);
  if (is_type_a(rs)) {
    // Fold left: the accumulated permutation times r_l swaps one-line
    // entries l-1, l.
    WeylElement acc = weyl_identity(rs);
    for (int l : word) std::swap(acc.perm[l - 1], acc.perm[l]);
    return acc;
  }
  return rank2_from_letters(rs, word);
}

std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& w) {
  check_element(rs, w);
  if (!is_type_a(rs)) return w.word;
  // Sort the one-line notation by adjacent swaps, always clearing the
  // leftmost descent; each swap strips one inversion, so the word that
  // rebuilds w (in reverse order of the swaps) is reduced.
  std::vector<int> onel = w.perm;
  std::vector<int> rev;
  bool sorted = false;
  while (!sorted) {
    sorted = true;
    for (std::size_t j = 0; j + 1 < onel.size(); ++j) {
      if (onel[j] > onel[j + 1]) {
        std::swap(onel[j], onel[j + 1]);
        rev.push_back(static_cast<int>(j) + 1);
        sorted = false;
        break;
      }
    }
  }
  return {rev.rbegin(), rev.rend()};
}

std::vector<std::vector<int>> all_reduced_words(const RootSystem& rs, const WeylElement& w) {
  const int len = length(rs, w);
  if (len == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= rs.rank(); ++i) {
    const WeylElement rest = compose(rs, weyl_generator(rs, i), w);
    if (length(rs, rest) != len - 1) continue;
    for (const auto& tail : all_reduced_words(rs, rest)) {
      std::vector<int> word;
      word.reserve(len);
      word.push_back(i);
      word.insert(word.end(), tail.begin(), tail.end());
      out.push_back(std::move(word));
    }
  }
  return out;
}

std::vector<WeylElement> enumerate_group(const RootSystem& rs) {
  if (is_type_a(rs)) {
    if (rs.rank() > rs.enumeration_rank_cap())
      throw std::invalid_argument(
          "full group enumeration for " + algebra_name(rs.algebra()) +
          " exceeds the rank cap of " + std::to_string(rs.enumeration_rank_cap()) +
          " (override with --max-rank or WEYLPOLY_MAX_RANK)");
    std::vector<int> perm(rs.rank() + 1);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<WeylElement> out;
    do {
      out.push_back(make_a_element(rs, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }
  const Rank2Table& t = rank2_table(rs);
  std::vector<WeylElement> out;
  out.reserve(t.words.size());
  for (const auto& word : t.words) out.push_back(make_rank2_element(rs, word));
  return out;
}

WeylElement longest_element(const RootSystem& rs) {
  if (is_type_a(rs)) {
    std::vector<int> perm(rs.rank() + 1);
    for (std::size_t k = 0; k < perm.size(); ++k)
      perm[k] = static_cast<int>(perm.size()) - 1 - static_cast<int>(k);
    return make_a_element(rs, std::move(perm));
  }
  const Rank2Table& t = rank2_table(rs);
  return make_rank2_element(rs, t.words[t.longest_id]);
}

std::set<Weight> orbit(const RootSystem& rs, const Weight& lambda) {
  rs.check_weight(lambda, "weight");
  std::set<Weight> seen = {lambda};
  std::vector<Weight> frontier = {lambda};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const Weight& mu : frontier) {
      for (int i = 1; i <= rs.rank(); ++i) {
        Weight nu = simple_reflection(rs, i, mu);
        if (seen.insert(nu).second) next.push_back(nu);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

Weight apply_weyl(const RootSystem& rs, const WeylElement& w, const Weight& mu) {
  check_element(rs, w);
  rs.check_weight(mu, "weight");
  if (!is_type_a(rs)) return apply_letters(rs, w.word, mu);
  // Permutation action in the A_n epsilon coordinates: pad the labels to a
  // coordinate vector c with c_i - c_{i+1} = mu_i, permute positions, read
  // the labels back off as differences.
  const std::size_t m = w.perm.size();
  std::vector<Label> c(m, 0);
  for (std::size_t k = m - 1; k-- > 0;) c[k] = c[k + 1] + mu[k];
  std::vector<Label> moved(m);
  for (std::size_t k = 0; k < m; ++k) moved[w.perm[k]] = c[k];
  Weight out(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) out[i] = moved[i] - moved[i + 1];
  return out;
}

FormalSum apply_weyl(const RootSystem& rs, const WeylElement& w, const FormalSum& f) {
  FormalSum out;
  for (const auto& [mu, c] : f.terms()) out.add_term(apply_weyl(rs, w, mu), c);
  return out;
}

GroupAlgebraElement ga_single(const WeylElement& w) {
  GroupAlgebraElement a;
  a.add_term(w, 1);
  return a;
}

GroupAlgebraElement ga_add(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  GroupAlgebraElement r = a;
  for (const auto& [w, c] : b.terms()) r.add_term(w, c);
  return r;
}

GroupAlgebraElement ga_multiply(const RootSystem& rs, const GroupAlgebraElement& a,
                                const GroupAlgebraElement& b) {
  GroupAlgebraElement r;
  for (const auto& [u, x] : a.terms())
    for (const auto& [v, y] : b.terms()) r.add_term(compose(rs, u, v), x * y);
  return r;
}

WeylElement s_elem(const RootSystem& rs, int i, int j) {
  if (!is_type_a(rs))
    throw std::invalid_argument("s_elem is defined for the A family only");
  rs.check_index(i);
  rs.check_index(j);
  if (i > j) throw std::invalid_argument("s_elem requires i <= j");
  std::vector<int> word;
  for (int k = j; k >= i; --k) word.push_back(k);
  return from_word(rs, word);
}

GroupAlgebraElement w_elem(const RootSystem& rs, int i, int j) {
  if (!is_type_a(rs))
    throw std::invalid_argument("w_elem is defined for the A family only");
  rs.check_index(i);
  rs.check_index(j);
  if (i > j) throw std::invalid_argument("w_elem requires i <= j");
  GroupAlgebraElement out = ga_single(weyl_identity(rs));
  for (int k = i; k <= j; ++k) out.add_term(s_elem(rs, k, j), 1);
  return out;
}

GroupAlgebraElement group_sum(const RootSystem& rs) {
  GroupAlgebraElement out;
  for (const WeylElement& w : enumerate_group(rs)) out.add_term(w, 1);
  return out;
}

GroupAlgebraElement weyl_sum_lemma_product(const RootSystem& rs) {
  if (!is_type_a(rs))
    throw std::invalid_argument("the Weyl-sum factorization is stated for the A family only");
  GroupAlgebraElement out = w_elem(rs, 1, 1);
  for (int j = 2; j <= rs.rank(); ++j) out = ga_multiply(rs, out, w_elem(rs, 1, j));
  return out;
}

bool verify_weyl_sum_lemma(const RootSystem& rs) {
  const GroupAlgebraElement product = weyl_sum_lemma_product(rs);
  for (const auto& [w, c] : product.terms()) {
    if (c != 1) return false;
  }
  return product == group_sum(rs);
}

}  // namespace weylpoly
