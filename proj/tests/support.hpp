#pragma once

// Shared fixtures, random code generators and brute-force oracles.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "knotoid/analysis.hpp"
#include "knotoid/codes.hpp"
#include "knotoid/moves.hpp"
#include "knotoid/planar.hpp"
#include "knotoid/skew.hpp"

namespace testing_support {

using namespace knotoid;

inline const char* const kCode21 = "Oa Ub Ua Ob ; a=+1 b=+1";
inline const char* const kCode46 = "Ua Ob Uc Od Oa Ud Ub Oc ; a=-1 b=+1 c=+1 d=-1";
inline const char* const kCode519 = "Ua Ob Uc Od Oc Ub Ue Oa Oe Ud ; a=-1 b=+1 c=+1 d=+1 e=+1";
inline const char* const kVirtual = "Oa Ub Ua Ob ; a=+1 b=-1";

inline KnotoidCode code21() { return parse_knotoid_code(kCode21); }
inline KnotoidCode code46() { return parse_knotoid_code(kCode46); }
inline KnotoidCode code519() { return parse_knotoid_code(kCode519); }

inline std::vector<KnotoidCode> fixture_codes() {
  return {code21(), code46(), code519(), generate_family(2), generate_family(3), generate_family(4)};
}

// Any word with each of n labels once Over and once Under; realizability is not enforced.
inline KnotoidCode random_code(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> slots(2 * n);
  std::iota(slots.begin(), slots.end(), 0);
  std::shuffle(slots.begin(), slots.end(), rng);
  Word word(2 * n);
  SignMap signs;
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string label = "c" + std::to_string(i);
    const bool over_first = coin(rng);
    word[slots[2 * i]] = {over_first ? Pass::Over : Pass::Under, label};
    word[slots[2 * i + 1]] = {over_first ? Pass::Under : Pass::Over, label};
    signs[label] = coin(rng) ? 1 : -1;
  }
  return KnotoidCode(std::move(word), std::move(signs));
}

inline KnotoidCode random_code_up_to(std::size_t max_n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, max_n);
  return random_code(pick(rng), rng);
}

// A realizable code: rejection sampling, falling back to a random walk from
// the trivial knotoid when rejection keeps failing.
inline KnotoidCode random_realizable_code(std::size_t max_n, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    KnotoidCode c = random_code_up_to(max_n, rng);
    if (is_realizable(c)) return c;
  }
  return random_walk(KnotoidCode{}, 2 * max_n, rng()).result();
}

// Skew pairs by scanning all position quadruples i < j < k < l of the word.
struct OraclePair {
  std::string first, second;
  int sign;
  auto operator<=>(const OraclePair&) const = default;
};

inline std::pair<std::set<OraclePair>, std::set<OraclePair>> brute_force_skew(const KnotoidCode& code) {
  const Word& w = code.word();
  const std::size_t m = w.size();
  std::set<OraclePair> upper, lower;
  auto pair_sign = [&](const std::string& x, const std::string& y) { return code.sign(x) * code.sign(y); };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k)
        for (std::size_t l = k + 1; l < m; ++l) {
          const std::string& x = w[i].label;
          const std::string& y = w[j].label;
          if (x == y || w[k].label != x || w[l].label != y) continue;
          if (w[i].pass == Pass::Over && w[j].pass == Pass::Under)
            upper.insert({x, y, pair_sign(x, y)});
          else if (w[i].pass == Pass::Under && w[j].pass == Pass::Over)
            lower.insert({x, y, pair_sign(x, y)});
        }
  return {upper, lower};
}

inline std::set<OraclePair> as_set(const std::vector<SkewPair>& pairs) {
  std::set<OraclePair> out;
  for (const auto& p : pairs) out.insert({p.first, p.second, p.sign});
  return out;
}

inline bool skew_matches_oracle(const KnotoidCode& code) {
  const auto pairs = skew_pairs(code);
  const auto [upper, lower] = brute_force_skew(code);
  return as_set(pairs.upper) == upper && as_set(pairs.lower) == lower &&
         pairs.upper.size() == upper.size() && pairs.lower.size() == lower.size();
}

// All four invariants of a realizable code.
struct Invariants {
  CassonValues c;
  HomologicalValues ch;
  friend bool operator==(const Invariants&, const Invariants&) = default;
};

inline Invariants invariants_of(const KnotoidCode& code) {
  return {casson_pm(code), casson_homological(code, all_loop_classes(code))};
}

inline Integer floor_quarter_square(Integer n) { return n * n / 4; }

inline bool bound_holds(const KnotoidCode& code) {
  const auto ch = casson_homological(code, all_loop_classes(code));
  return norm(ch.ch_plus) + norm(ch.ch_minus) <= floor_quarter_square(static_cast<Integer>(code.crossing_count()));
}

// The crossing shared by two segments (p, p+1) and (q, q+1).
inline std::string shared_label(const KnotoidCode& code, std::size_t p, std::size_t q) {
  const Word& w = code.word();
  for (std::size_t i : {p, p + 1})
    for (std::size_t j : {q, q + 1})
      if (w[i].label == w[j].label) return w[i].label;
  return {};
}

}  // namespace testing_support
