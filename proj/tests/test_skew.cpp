#include "doctest.h"
#include "support.hpp"

using namespace knotoid;
using namespace testing_support;

namespace {

std::vector<std::pair<std::string, std::string>> names(const std::vector<SkewPair>& ps) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& p : ps) out.emplace_back(p.first, p.second);
  return out;
}

using Names = std::vector<std::pair<std::string, std::string>>;

ClassMap rank1(std::initializer_list<std::pair<const std::string, Integer>> xs) {
  ClassMap m;
  for (const auto& [k, v] : xs) m[k] = class_of_rank1(v);
  return m;
}

ModuleElement t(Integer j, Integer c = 1) { return ModuleElement::term(Subgroup::cyclic(j), c); }

}  // namespace

TEST_SUITE("skew") {

TEST_CASE("skew pairs of the worked examples") {
  const auto p21 = skew_pairs(code21());
  CHECK(names(p21.upper) == Names{{"a", "b"}});
  CHECK(p21.lower.empty());
  CHECK(p21.upper[0].kind == SkewKind::Upper);
  CHECK(p21.upper[0].sign == 1);

  const auto p46 = skew_pairs(code46());
  CHECK(names(p46.upper) == Names{{"b", "c"}});
  CHECK(names(p46.lower) == Names{{"a", "b"}, {"a", "d"}});
  CHECK(p46.upper[0].sign == 1);
  CHECK(p46.lower[0].sign == -1);
  CHECK(p46.lower[1].sign == 1);

  const auto p519 = skew_pairs(code519());
  CHECK(p519.upper.empty());
  CHECK(names(p519.lower) == Names{{"a", "d"}, {"c", "d"}});
}

TEST_CASE("Casson values of the worked examples") {
  CHECK(casson_pm(code21()) == CassonValues{1, 0});
  CHECK(casson_pm(code46()) == CassonValues{1, 0});
  CHECK(casson_pm(code519()) == CassonValues{0, 0});
  CHECK(casson_pm(KnotoidCode{}) == CassonValues{0, 0});
}

TEST_CASE("homological values from given classes") {
  auto ch = casson_homological(code21(), rank1({{"a", 1}, {"b", 1}}));
  CHECK(ch.ch_plus == t(1));
  CHECK(ch.ch_minus.is_zero());

  ch = casson_homological(code46(), rank1({{"a", 1}, {"b", 2}, {"c", 2}, {"d", 1}}));
  CHECK(ch.ch_plus == t(2));
  CHECK(ch.ch_minus.is_zero());

  ch = casson_homological(code519(), rank1({{"a", 0}, {"c", -1}, {"d", 1}}));
  CHECK(ch.ch_plus.is_zero());
  CHECK(ch.ch_minus.is_zero());

  CHECK_THROWS_AS(casson_homological(code21(), rank1({{"a", 1}})), ValidationError);
}

TEST_CASE("skew pairs agree with the quadruple scan") {
  for (const auto& c : fixture_codes()) CHECK(skew_matches_oracle(c));
  for (Integer j = 1; j <= 4; ++j) CHECK(skew_matches_oracle(generate_family(j)));
  std::mt19937_64 rng(31);
  for (int i = 0; i < 2000; ++i) {
    const KnotoidCode c = random_code_up_to(8, rng);
    INFO(serialize(c));
    CHECK(skew_matches_oracle(c));
  }
}

TEST_CASE("a pair is in at most one set and never in both orders") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 500; ++i) {
    const auto ps = skew_pairs(random_code_up_to(8, rng));
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto* v : {&ps.upper, &ps.lower})
      for (const auto& p : *v) {
        CHECK(seen.insert({p.first, p.second}).second);
        CHECK_FALSE(seen.count({p.second, p.first}));
      }
  }
}

TEST_CASE("symmetries of the Casson values") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 500; ++i) {
    const KnotoidCode c = random_code_up_to(8, rng);
    const CassonValues v = casson_pm(c);
    CHECK(casson_pm(mirror(c)) == v);
    CHECK(casson_pm(switch_all(c)) == CassonValues{v.c_minus, v.c_plus});
    CHECK(casson_pm(reverse(c)) == v);
    const KnotoidCode d = random_code_up_to(5, rng);
    const CassonValues w = casson_pm(d);
    CHECK(casson_pm(concat_product(c, d)) == CassonValues{v.c_plus + w.c_plus, v.c_minus + w.c_minus});
  }
}

TEST_CASE("augmentation recovers the Casson values for any classes") {
  std::mt19937_64 rng(34);
  std::uniform_int_distribution<Integer> cls(-3, 3);
  for (int i = 0; i < 500; ++i) {
    const KnotoidCode c = random_code_up_to(7, rng);
    const std::size_t rank = 1 + i % 2;
    ClassMap classes;
    for (const auto& l : c.labels()) {
      HomologyClass h(rank);
      for (auto& x : h) x = cls(rng);
      classes[l] = h;
    }
    const auto ch = casson_homological(c, classes);
    const auto v = casson_pm(c);
    CHECK(augment(ch.ch_plus) == v.c_plus);
    CHECK(augment(ch.ch_minus) == v.c_minus);
  }
}

TEST_CASE("pair count is at most n_plus times n_minus") {
  std::mt19937_64 rng(35);
  for (int i = 0; i < 500; ++i) {
    const KnotoidCode c = random_code_up_to(8, rng);
    std::size_t n_plus = 0;
    for (const auto& l : c.labels()) n_plus += c.positions(l).over < c.positions(l).under;
    const auto ps = skew_pairs(c);
    CHECK(ps.upper.size() + ps.lower.size() <= n_plus * (c.crossing_count() - n_plus));
  }
}

}
