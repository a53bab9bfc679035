#include "knotoid/skew.hpp"

namespace knotoid {

SkewPairs skew_pairs(const KnotoidCode& code) {
  SkewPairs out;
  const auto& labels = code.labels();
  for (const auto& x : labels) {
    const auto& px = code.positions(x);
    for (const auto& y : labels) {
      if (x == y) continue;
      const auto& py = code.positions(y);
      int sign = code.sign(x) * code.sign(y);
      if (px.over < py.under && py.under < px.under && px.under < py.over)
        out.upper.push_back(SkewPair{x, y, SkewKind::Upper, sign});
      else if (px.under < py.over && py.over < px.over && px.over < py.under)
        out.lower.push_back(SkewPair{x, y, SkewKind::Lower, sign});
    }
  }
  return out;
}

CassonValues casson_pm(const SkewPairs& pairs) {
  CassonValues v;
  for (const auto& p : pairs.upper) v.c_plus += p.sign;
  for (const auto& p : pairs.lower) v.c_minus += p.sign;
  return v;
}

CassonValues casson_pm(const KnotoidCode& code) { return casson_pm(skew_pairs(code)); }

HomologicalValues casson_homological(const SkewPairs& pairs, const ClassMap& classes) {
  auto lookup = [&](const std::string& label) -> const HomologyClass& {
    auto it = classes.find(label);
    if (it == classes.end())
      throw ValidationError("no homology class given for crossing '" + label + "'");
    return it->second;
  };
  auto sum = [&](const std::vector<SkewPair>& ps) {
    ModuleElement e;
    for (const auto& p : ps)
      e += ModuleElement::term(subgroup_from_generators(lookup(p.first), lookup(p.second)), p.sign);
    return e;
  };
  return HomologicalValues{sum(pairs.upper), sum(pairs.lower)};
}

HomologicalValues casson_homological(const KnotoidCode& code, const ClassMap& classes) {
  return casson_homological(skew_pairs(code), classes);
}

}  // namespace knotoid
