#pragma once

#include <string>

#include "knotoid/codes.hpp"
#include "knotoid/skew.hpp"

namespace knotoid {

// The two states of a crossing x and its oriented smoothing. d1 is the
// state in which the over pass of x comes first; s1 is sign(x) in d1 and
// may be -1. d0 has one circle: the items strictly between the passes of x
// in d1, starting right after the first one.
struct ConwayTriple {
  std::string crossing;
  KnotoidCode d1;
  KnotoidCode d2;
  MultiKnotoidCode d0;
  int s1 = 1;
};

ConwayTriple conway_triple(const KnotoidCode& code, const std::string& x);

struct LinkingValues {
  Integer lk_plus = 0;   // s1 * sum of sign(y), segment over circle at y
  Integer lk_minus = 0;  // s1 * sum of sign(y), segment under circle at y

  friend bool operator==(const LinkingValues&, const LinkingValues&) = default;
};

// Throws ValidationError unless d0 has exactly one circle.
LinkingValues lk_pm(const MultiKnotoidCode& d0, int s1);

struct SkeinReport {
  std::string crossing;
  int s1 = 1;
  Integer lhs_plus = 0;
  Integer rhs_plus = 0;
  Integer lhs_minus = 0;
  Integer rhs_minus = 0;
  bool ok = false;
};

// lhs = C(d1) - C(d2) componentwise; rhs = lk(d0).
SkeinReport verify_skein(const KnotoidCode& code, const std::string& x);

}  // namespace knotoid
