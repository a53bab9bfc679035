#include "doctest.h"
#include "support.hpp"
#include "knotoid/skein.hpp"

using namespace knotoid;
using namespace testing_support;

TEST_SUITE("skein") {

TEST_CASE("Conway triple of the two-crossing code at a") {
  const ConwayTriple t = conway_triple(code21(), "a");
  CHECK(t.d1 == code21());
  CHECK(to_string(t.d2.word()) == "Ua Ub Oa Ob");
  CHECK(t.d2.sign("a") == -1);
  CHECK(t.s1 == 1);
  REQUIRE(t.d0.circles().size() == 1);
  // The circle is what lies strictly between the two passes of a.
  CHECK(t.d0.circles()[0] == Word{{Pass::Under, "b"}});
  CHECK(t.d0.segment() == Word{{Pass::Over, "b"}});
  CHECK(t.d0.sign("b") == 1);
  CHECK_THROWS_AS(conway_triple(code21(), "q"), UnknownLabel);
}

TEST_CASE("normalization puts the over pass first in d1") {
  const KnotoidCode c = parse_knotoid_code("Ua Ob Oa Ub ; a=-1 b=+1");
  const ConwayTriple t = conway_triple(c, "a");
  CHECK(t.d1.positions("a").over < t.d1.positions("a").under);
  CHECK(t.d2 == c);
  CHECK(t.s1 == 1);
  const ConwayTriple u = conway_triple(mirror(code21()), "a");
  CHECK(u.s1 == -1);
}

TEST_CASE("linking values") {
  const ConwayTriple t = conway_triple(code21(), "a");
  CHECK(lk_pm(t.d0, 1) == LinkingValues{1, 0});
  // C(d1) - C(d2) computed independently: (1, 0) - (0, 0).
  CHECK(casson_pm(t.d1) == CassonValues{1, 0});
  CHECK(casson_pm(t.d2) == CassonValues{0, 0});
  const MultiKnotoidCode apart = parse_multiknotoid_code("segment: Oa Ua\ncircle: Ob Ub\n; a=+1 b=+1");
  CHECK(lk_pm(apart, 1) == LinkingValues{0, 0});
  CHECK_THROWS_AS(lk_pm(MultiKnotoidCode(Word{}, {}, {}), 1), ValidationError);
}

TEST_CASE("linking values ignore the starting point of the circle") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 200; ++i) {
    const KnotoidCode c = random_code(1 + i % 6, rng);
    for (const auto& x : c.labels()) {
      const ConwayTriple t = conway_triple(c, x);
      Word circle = t.d0.circles()[0];
      if (circle.empty()) continue;
      std::rotate(circle.begin(), circle.begin() + static_cast<std::ptrdiff_t>(i % circle.size()), circle.end());
      const MultiKnotoidCode rotated(t.d0.segment(), {circle}, t.d0.signs());
      CHECK(rotated == t.d0);
      CHECK(lk_pm(rotated, t.s1) == lk_pm(t.d0, t.s1));
    }
  }
}

TEST_CASE("skein identity on the fixtures") {
  for (const auto& c : fixture_codes())
    for (const auto& x : c.labels()) {
      const SkeinReport r = verify_skein(c, x);
      INFO(serialize(c) << " at " << x);
      CHECK(r.ok);
    }
  const SkeinReport r = verify_skein(code46(), "b");
  CHECK(r.lhs_plus == r.rhs_plus);
  CHECK(r.lhs_minus == r.rhs_minus);
}

TEST_CASE("skein identity on random codes, virtual included") {
  std::mt19937_64 rng(62);
  for (int i = 0; i < 1000; ++i) {
    const KnotoidCode c = random_code(1 + i % 7, rng);
    for (const auto& x : c.labels()) {
      INFO(serialize(c) << " at " << x);
      CHECK(verify_skein(c, x).ok);
    }
  }
}

TEST_CASE("the two linking values can differ") {
  std::mt19937_64 rng(63);
  bool witness = false;
  for (int i = 0; i < 2000 && !witness; ++i) {
    const KnotoidCode c = random_code(2 + i % 5, rng);
    for (const auto& x : c.labels()) {
      const ConwayTriple t = conway_triple(c, x);
      const LinkingValues lk = lk_pm(t.d0, t.s1);
      if (lk.lk_plus != lk.lk_minus) {
        witness = true;
        MESSAGE("witness: " << serialize(c) << " at " << x);
        break;
      }
    }
  }
  CHECK(witness);
  // The two-crossing code at a is already a witness: (1, 0).
  const ConwayTriple t = conway_triple(code21(), "a");
  const LinkingValues lk = lk_pm(t.d0, t.s1);
  CHECK(lk.lk_plus != lk.lk_minus);
}

}
