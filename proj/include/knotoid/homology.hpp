#pragma once

// Subgroups of Z^k in Hermite normal form and the free Z-module on them.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "knotoid/error.hpp"

namespace knotoid {

using Integer = std::int64_t;

using HomologyClass = std::vector<Integer>;

HomologyClass class_of_rank1(Integer multiple);

// A subgroup of Z^k stored by the nonzero rows of its row-style Hermite
// normal form: pivots strictly increasing to the right and positive, entries
// above each pivot reduced into [0, pivot). The representation is unique, so
// equality and ordering are syntactic.
class Subgroup {
 public:
  Subgroup() = default;  // trivial subgroup of Z^0
  static Subgroup trivial(std::size_t rank);
  // <j> in Z; sign of j is irrelevant.
  static Subgroup cyclic(Integer j);
  static Subgroup generated_by(std::span<const HomologyClass> generators, std::size_t rank);

  std::size_t ambient_rank() const noexcept { return rank_; }
  const std::vector<HomologyClass>& basis() const noexcept { return basis_; }
  bool is_trivial() const noexcept { return basis_.empty(); }
  // For rank 1: the nonnegative generator j of <j>.
  Integer generator() const;

  // "<j>" for rank 1, "<[a,b],[c,d]>" otherwise, "<0>" when trivial.
  std::string to_string() const;

  friend auto operator<=>(const Subgroup&, const Subgroup&) = default;
  friend bool operator==(const Subgroup&, const Subgroup&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<HomologyClass> basis_;
};

// Row-style HNF of the lattice spanned by `rows`, zero rows dropped.
std::vector<HomologyClass> hermite_normal_form(std::vector<HomologyClass> rows, std::size_t rank);

Subgroup subgroup_from_generators(const HomologyClass& v1, const HomologyClass& v2);

// Finite formal sum of subgroups with nonzero integer coefficients.
class ModuleElement {
 public:
  ModuleElement() = default;
  static ModuleElement term(const Subgroup& s, Integer coefficient = 1);

  const std::map<Subgroup, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(const Subgroup& s) const;

  ModuleElement& operator+=(const ModuleElement& other);
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }

  // Terms sorted by subgroup, "c*<j>" joined by " + "; the zero element is "0".
  std::string to_string() const;
  // Inverse of to_string for rank-1 elements.
  static ModuleElement parse(std::string_view text);

  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

 private:
  std::map<Subgroup, Integer> terms_;
};

ModuleElement add(const ModuleElement& a, const ModuleElement& b);
ModuleElement scale(const ModuleElement& a, Integer n);
Integer norm(const ModuleElement& e);
// Sum of coefficients (forgets the subgroups).
Integer augment(const ModuleElement& e);

}  // namespace knotoid
