#include "knotoid/skein.hpp"

#include <set>

namespace knotoid {

ConwayTriple conway_triple(const KnotoidCode& code, const std::string& x) {
  const auto& pos = code.positions(x);
  ConwayTriple t;
  t.crossing = x;
  if (pos.over < pos.under) {
    t.d1 = code;
    t.d2 = switch_crossing(code, x);
  } else {
    t.d1 = switch_crossing(code, x);
    t.d2 = code;
  }
  t.s1 = t.d1.sign(x);

  const auto& p1 = t.d1.positions(x);
  Word segment, circle;
  for (std::size_t i = 0; i < t.d1.size(); ++i) {
    if (i == p1.over || i == p1.under) continue;
    (i > p1.over && i < p1.under ? circle : segment).push_back(t.d1.word()[i]);
  }
  SignMap signs = t.d1.signs();
  signs.erase(x);
  t.d0 = MultiKnotoidCode(std::move(segment), {std::move(circle)}, std::move(signs));
  return t;
}

LinkingValues lk_pm(const MultiKnotoidCode& d0, int s1) {
  if (d0.circles().size() != 1)
    throw ValidationError("lk is defined for one segment and one circle, got " +
                          std::to_string(d0.circles().size()) + " circles");
  std::set<std::string> on_circle;
  for (const auto& it : d0.circles().front()) on_circle.insert(it.label);
  LinkingValues v;
  for (const auto& it : d0.segment()) {
    if (!on_circle.count(it.label)) continue;
    (it.pass == Pass::Over ? v.lk_plus : v.lk_minus) += d0.sign(it.label);
  }
  v.lk_plus *= s1;
  v.lk_minus *= s1;
  return v;
}

SkeinReport verify_skein(const KnotoidCode& code, const std::string& x) {
  const ConwayTriple t = conway_triple(code, x);
  const CassonValues c1 = casson_pm(t.d1);
  const CassonValues c2 = casson_pm(t.d2);
  const LinkingValues lk = lk_pm(t.d0, t.s1);
  SkeinReport r;
  r.crossing = x;
  r.s1 = t.s1;
  r.lhs_plus = c1.c_plus - c2.c_plus;
  r.lhs_minus = c1.c_minus - c2.c_minus;
  r.rhs_plus = lk.lk_plus;
  r.rhs_minus = lk.lk_minus;
  r.ok = r.lhs_plus == r.rhs_plus && r.lhs_minus == r.rhs_minus;
  return r;
}

}  // namespace knotoid
