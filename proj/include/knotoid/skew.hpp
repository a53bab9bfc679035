#pragma once

// Skew pairs of crossings and the Casson-type sums over them.

#include <map>
#include <string>
#include <vector>

#include "knotoid/codes.hpp"
#include "knotoid/homology.hpp"

namespace knotoid {

enum class SkewKind { Upper, Lower };

// Upper: x+ < y- < x- < y+.  Lower: x- < y+ < x+ < y-.
struct SkewPair {
  std::string first;
  std::string second;
  SkewKind kind = SkewKind::Upper;
  int sign = 1;

  friend bool operator==(const SkewPair&, const SkewPair&) = default;
};

struct SkewPairs {
  std::vector<SkewPair> upper;
  std::vector<SkewPair> lower;
};

struct CassonValues {
  Integer c_plus = 0;
  Integer c_minus = 0;

  friend bool operator==(const CassonValues&, const CassonValues&) = default;
};

struct HomologicalValues {
  ModuleElement ch_plus;
  ModuleElement ch_minus;

  friend bool operator==(const HomologicalValues&, const HomologicalValues&) = default;
};

using ClassMap = std::map<std::string, HomologyClass>;

// Ordered by (position of first's earlier item, position of second's earlier item).
SkewPairs skew_pairs(const KnotoidCode& code);

CassonValues casson_pm(const KnotoidCode& code);
CassonValues casson_pm(const SkewPairs& pairs);

// Throws ValidationError when a label in some skew pair has no class.
HomologicalValues casson_homological(const KnotoidCode& code, const ClassMap& classes);
HomologicalValues casson_homological(const SkewPairs& pairs, const ClassMap& classes);

}  // namespace knotoid
