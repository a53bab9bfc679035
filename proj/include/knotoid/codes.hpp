#pragma once

// Signed Gauss codes of knotoids and multi-knotoids.
//
// A knotoid code is the linear word of over/under passes read from the
// beginning of the diagram to its end, together with a sign per crossing.
// Codes are immutable values; every constructor validates.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "knotoid/error.hpp"

namespace knotoid {

enum class Pass : std::uint8_t { Over, Under };

constexpr Pass opposite(Pass p) noexcept {
  return p == Pass::Over ? Pass::Under : Pass::Over;
}

struct Item {
  Pass pass = Pass::Over;
  std::string label;

  friend bool operator==(const Item&, const Item&) = default;
};

using Word = std::vector<Item>;
using SignMap = std::map<std::string, int>;

// Labels are alphanumeric, optionally followed by primes (introduced when
// a product relabels a colliding crossing).
bool is_valid_label(std::string_view label) noexcept;

class KnotoidCode {
 public:
  struct Positions {
    std::size_t over = 0;
    std::size_t under = 0;
    std::size_t first() const noexcept { return over < under ? over : under; }
    std::size_t second() const noexcept { return over < under ? under : over; }
  };

  // The trivial knotoid (empty word).
  KnotoidCode() = default;
  // Throws ValidationError unless every label occurs exactly twice, once per
  // pass, and carries exactly one sign in {+1, -1}.
  KnotoidCode(Word word, SignMap signs);

  const Word& word() const noexcept { return word_; }
  const SignMap& signs() const noexcept { return signs_; }
  std::size_t size() const noexcept { return word_.size(); }
  std::size_t crossing_count() const noexcept { return word_.size() / 2; }
  bool empty() const noexcept { return word_.empty(); }

  bool contains(const std::string& label) const;
  int sign(const std::string& label) const;
  const Positions& positions(const std::string& label) const;
  // Labels ordered by first occurrence in the word.
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  friend bool operator==(const KnotoidCode& a, const KnotoidCode& b) {
    return a.word_ == b.word_ && a.signs_ == b.signs_;
  }

 private:
  Word word_;
  SignMap signs_;
  std::vector<std::string> labels_;
  std::map<std::string, Positions> positions_;
};

// One open segment plus closed components. Circles keep an explicit start
// item but compare equal up to cyclic rotation.
class MultiKnotoidCode {
 public:
  MultiKnotoidCode() = default;
  MultiKnotoidCode(Word segment, std::vector<Word> circles, SignMap signs);

  const Word& segment() const noexcept { return segment_; }
  const std::vector<Word>& circles() const noexcept { return circles_; }
  const SignMap& signs() const noexcept { return signs_; }
  int sign(const std::string& label) const;

  // Only valid when there are no circles.
  KnotoidCode as_knotoid() const;

  friend bool operator==(const MultiKnotoidCode& a, const MultiKnotoidCode& b);

 private:
  Word segment_;
  std::vector<Word> circles_;
  SignMap signs_;
};

bool equal_up_to_rotation(const Word& a, const Word& b);

struct NamedCode {
  std::string name;
  KnotoidCode code;
};

// Parses one code block ("name" line optional, "#" comments allowed).
KnotoidCode parse_knotoid_code(std::string_view text);
NamedCode parse_named_code(std::string_view text);
// Parses a document of "---"-separated blocks.
std::vector<NamedCode> parse_code_document(std::string_view text);
MultiKnotoidCode parse_multiknotoid_code(std::string_view text);

std::string serialize(const KnotoidCode& code);
std::string serialize(const NamedCode& code);
std::string serialize(const MultiKnotoidCode& code);
std::string to_string(const Item& item);
std::string to_string(const Word& word);

KnotoidCode switch_all(const KnotoidCode& code);
KnotoidCode reverse(const KnotoidCode& code);
KnotoidCode mirror(const KnotoidCode& code);
// Switches the single crossing `label` and negates its sign.
KnotoidCode switch_crossing(const KnotoidCode& code, const std::string& label);
// Semigroup product: k1 followed by k2. Labels of k2 that collide with
// labels already in use receive "'" suffixes until unique.
KnotoidCode concat_product(const KnotoidCode& k1, const KnotoidCode& k2);

}  // namespace knotoid
