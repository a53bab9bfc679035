// Acceptance criteria 1-10: one PASS/FAIL line each, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "knotoid/skein.hpp"
#include "support.hpp"

using namespace knotoid;
using namespace testing_support;

namespace {

using Clock = std::chrono::steady_clock;

ModuleElement t(Integer j, Integer c = 1) { return ModuleElement::term(Subgroup::cyclic(j), c); }

// Codes met while checking criteria 5-8, for the per-diagram inequality.
std::vector<KnotoidCode> encountered;
// Small codes for the skew oracle.
std::vector<KnotoidCode> corpus;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string names(const std::vector<SkewPair>& ps) {
  std::string out;
  for (const auto& p : ps) out += "(" + p.first + "," + p.second + ")";
  return out;
}

Integer cls(const ClassMap& m, const std::string& x) { return m.at(x).at(0); }

Outcome criterion1() {
  Outcome o;
  const auto r = full_report(parse_knotoid_code(kCode21), "2_1");
  o.require(r.c == CassonValues{1, 0}, "C values");
  o.require(r.ch && r.ch->ch_plus == t(1) && r.ch->ch_minus.is_zero(), "CH values");
  o.require(names(r.pairs.upper) == "(a,b)" && r.pairs.lower.empty(), "skew sets");
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto r = full_report(parse_knotoid_code(kCode46), "4_6");
  o.require(r.c == CassonValues{1, 0}, "C values");
  o.require(r.ch && r.ch->ch_plus == t(2) && r.ch->ch_minus.is_zero(), "CH values");
  o.require(r.loop_classes.has_value(), "loop classes missing");
  if (!o.ok) return o;
  const ClassMap& m = *r.loop_classes;
  const Integer s = cls(m, "a");
  o.require((s == 1 || s == -1) && cls(m, "d") == s && cls(m, "b") == 2 * s && cls(m, "c") == 2 * s,
            "loop classes");
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto r = full_report(parse_knotoid_code(kCode519), "5_19");
  o.require(r.c == CassonValues{0, 0}, "C values");
  o.require(r.ch && r.ch->ch_plus.is_zero() && r.ch->ch_minus.is_zero(), "CH values");
  o.require(names(r.pairs.lower) == "(a,d)(c,d)", "lower pairs " + names(r.pairs.lower));
  o.require(r.properness == Properness::Inconclusive, "properness " + to_string(r.properness));
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::ifstream in(std::filesystem::path(KNOTOID_FIXTURES_DIR) / "reference_table.tsv");
  std::stringstream buf;
  buf << in.rdbuf();
  std::map<std::string, TableRow> rows;
  for (auto& row : parse_reference_table(buf.str())) rows[row.name] = row;
  o.require(rows.size() == 31, "table has " + std::to_string(rows.size()) + " rows");
  if (!o.ok) return o;
  auto exact = [](const InvariantReport& r, const TableRow& row) { return r.ch && r.c == row.c && *r.ch == row.ch; };
  o.require(exact(full_report(code21()), rows.at("2_1")), "row 2_1");
  o.require(exact(full_report(code46()), rows.at("4_6")), "row 4_6");
  o.require(exact(full_report(code519()), rows.at("5_19")), "row 5_19");
  const TableRow& r57 = rows.at("5_7");
  o.require(r57.c == CassonValues{2, 2} && properness_certificate(r57.c, r57.ch) == Properness::ProperByCH,
            "5_7 values do not certify through CH");
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (Integer j = 1; j <= 8; ++j) {
    const KnotoidCode d = generate_family(j);
    encountered.push_back(d);
    const auto r = full_report(d, "D");
    const std::string tag = "j=" + std::to_string(j);
    o.require(r.pairs.upper.size() == static_cast<std::size_t>(j * (j + 1) / 2), tag + " |P+|");
    o.require(r.pairs.lower.size() == static_cast<std::size_t>(j * (j - 1) / 2), tag + " |P-|");
    o.require(r.ch && norm(r.ch->ch_plus) + norm(r.ch->ch_minus) == floor_quarter_square(2 * j), tag + " norm");
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto starts = fixture_codes();  // three worked examples and D_2..D_4
  for (std::size_t w = 0; w < 200 && o.ok; ++w) {
    const KnotoidCode& start = starts[w % starts.size()];
    const Invariants expected = invariants_of(start);
    const Walk walk = random_walk(start, 30, 1000 + w);
    o.require(walk.steps.size() == 30, "walk stalled");
    for (const auto& s : walk.steps) {
      encountered.push_back(s.result);
      if (!(invariants_of(s.result) == expected)) {
        o.require(false, "walk " + std::to_string(w) + " diverged:\n" + walk.transcript());
        break;
      }
    }
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (const auto& c : fixture_codes())
    for (const auto& x : c.labels()) o.require(verify_skein(c, x).ok, serialize(c) + " at " + x);
  std::mt19937_64 rng(7007);
  for (int i = 0; i < 1000; ++i) {
    const KnotoidCode c = random_code(1 + i % 7, rng);
    encountered.push_back(c);
    corpus.push_back(c);
    for (const auto& x : c.labels()) o.require(verify_skein(c, x).ok, serialize(c) + " at " + x);
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937_64 rng(8008);
  for (int i = 0; i < 500; ++i) {
    const KnotoidCode c = random_code_up_to(8, rng);
    const KnotoidCode d = random_code_up_to(6, rng);
    encountered.push_back(c);
    corpus.push_back(c);
    const CassonValues v = casson_pm(c), w = casson_pm(d);
    const std::string code = serialize(c);
    o.require(casson_pm(mirror(c)) == v, "mirror " + code);
    o.require(casson_pm(switch_all(c)) == CassonValues{v.c_minus, v.c_plus}, "switch_all " + code);
    o.require(casson_pm(reverse(c)) == v, "reverse " + code);
    o.require(casson_pm(concat_product(c, d)) == CassonValues{v.c_plus + w.c_plus, v.c_minus + w.c_minus},
              "product " + code + " with " + serialize(d));
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::vector<KnotoidCode> all = fixture_codes();
  for (Integer j = 1; j <= 4; ++j) all.push_back(generate_family(j));
  all.push_back(parse_knotoid_code(kVirtual));
  all.insert(all.end(), corpus.begin(), corpus.end());
  for (const auto& c : encountered)
    if (c.crossing_count() <= 8) all.push_back(c);
  for (const auto& c : all)
    if (c.crossing_count() <= 8) o.require(skew_matches_oracle(c), "skew oracle " + serialize(c));

  for (const auto& c : {code21(), code46(), code519()}) {
    const PlanarMap m = build_planar_map(c);
    const DualArc bfs = dual_arc(m);
    for (const auto& arc : all_simple_dual_arcs(m))
      for (const auto& x : c.labels())
        o.require(loop_class(m, arc, x) == loop_class(m, bfs, x), "path dependence " + serialize(c));
  }

  std::vector<KnotoidCode> realizable_fixtures = fixture_codes();
  realizable_fixtures.push_back(generate_family(1));
  for (const auto& c : realizable_fixtures)
    o.require(build_planar_map(c).face_count() == c.crossing_count() + 1, "F != n+1 on " + serialize(c));

  for (const auto& c : all) {
    if (!is_realizable(c)) continue;
    const auto ch = casson_homological(c, all_loop_classes(c));
    const auto v = casson_pm(c);
    o.require(augment(ch.ch_plus) == v.c_plus && augment(ch.ch_minus) == v.c_minus, "augment " + serialize(c));
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::size_t realizable = 0;
  for (const auto& c : encountered) {
    if (!is_realizable(c)) continue;
    ++realizable;
    o.require(bound_holds(c), "inequality fails on " + serialize(c));
  }
  o.require(realizable > 6000, "only " + std::to_string(realizable) + " realizable codes met");
  if (o.ok) o.detail = std::to_string(realizable) + " realizable codes";
  return o;
}

struct Criterion {
  int number;
  const char* title;
  std::function<Outcome()> run;
  double limit_ms;  // 0: no runtime limit
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "two-crossing example", criterion1, 10},
      {2, "four-crossing example and loop classes", criterion2, 10},
      {3, "five-crossing example with vanishing invariants", criterion3, 0},
      {4, "reference rows and CH properness", criterion4, 0},
      {5, "family sharpness j=1..8", criterion5, 1000},
      {6, "move invariance over 200 walks of 30 moves", criterion6, 30000},
      {7, "skein identity", criterion7, 30000},
      {8, "symmetries on 500 random codes", criterion8, 0},
      {9, "structural oracles", criterion9, 0},
      {10, "crossing inequality per diagram", criterion10, 0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    const bool in_time = c.limit_ms == 0 || ms < c.limit_ms;
    const bool pass = o.ok && in_time;
    failures += !pass;
    std::printf("criterion %2d: %s  %-48s %10.3f ms", c.number, pass ? "PASS" : "FAIL", c.title, ms);
    if (c.limit_ms > 0) std::printf(" (limit %.0f ms)", c.limit_ms);
    if (!o.ok || !o.detail.empty()) std::printf("  %s", o.detail.c_str());
    if (!in_time) std::printf("  runtime limit exceeded");
    std::printf("\n");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
