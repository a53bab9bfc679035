#include "knotoid/codes.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <utility>

namespace knotoid {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool is_comment(std::string_view line) {
  line = trim(line);
  return !line.empty() && line.front() == '#';
}

Item parse_item(std::string_view token) {
  if (token.size() < 2 || (token[0] != 'O' && token[0] != 'U'))
    throw ParseError("bad item '" + std::string(token) + "': expected O<label> or U<label>");
  std::string label(token.substr(1));
  if (!is_valid_label(label))
    throw ParseError("bad crossing label '" + label + "' in item '" + std::string(token) + "'");
  return Item{token[0] == 'O' ? Pass::Over : Pass::Under, std::move(label)};
}

Word parse_items(std::string_view s) {
  Word word;
  for (auto token : split_ws(s)) word.push_back(parse_item(token));
  return word;
}

SignMap parse_signs(std::string_view s) {
  SignMap signs;
  for (auto token : split_ws(s)) {
    auto eq = token.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw ParseError("bad sign assignment '" + std::string(token) + "'");
    std::string label(token.substr(0, eq));
    std::string_view value = token.substr(eq + 1);
    if (!is_valid_label(label))
      throw ParseError("bad crossing label '" + label + "' in sign assignment");
    int sign = 0;
    if (value == "+1" || value == "1") {
      sign = 1;
    } else if (value == "-1") {
      sign = -1;
    } else {
      throw ParseError("bad sign value '" + std::string(value) + "' for '" + label + "'");
    }
    if (!signs.emplace(label, sign).second)
      throw ValidationError("duplicate sign for crossing '" + label + "'");
  }
  return signs;
}

// Checks the two-occurrence rule over all components and the sign table.
void validate_components(const std::vector<const Word*>& components, const SignMap& signs) {
  std::map<std::string, std::pair<int, int>> counts;
  for (const Word* w : components) {
    for (const Item& it : *w) {
      if (!is_valid_label(it.label))
        throw ValidationError("bad crossing label '" + it.label + "'");
      auto& c = counts[it.label];
      (it.pass == Pass::Over ? c.first : c.second) += 1;
    }
  }
  for (const auto& [label, c] : counts) {
    if (c.first + c.second != 2)
      throw ValidationError("crossing '" + label + "' occurs " + std::to_string(c.first + c.second) +
                            " times; expected exactly 2");
    if (c.first != 1)
      throw ValidationError("crossing '" + label + "' needs one over and one under pass");
    auto s = signs.find(label);
    if (s == signs.end()) throw ValidationError("missing sign for crossing '" + label + "'");
    if (s->second != 1 && s->second != -1)
      throw ValidationError("sign of crossing '" + label + "' must be +1 or -1");
  }
  for (const auto& [label, sign] : signs) {
    (void)sign;
    if (!counts.count(label))
      throw ValidationError("sign given for crossing '" + label + "' that does not occur");
  }
}

std::string signs_to_string(const std::vector<std::string>& order, const SignMap& signs) {
  std::string out;
  for (const auto& label : order) {
    if (!out.empty()) out += ' ';
    out += label;
    out += signs.at(label) > 0 ? "=+1" : "=-1";
  }
  return out;
}

struct Block {
  std::string name;
  std::vector<std::string_view> body;
};

Block read_block(std::string_view text) {
  Block block;
  bool seen_content = false;
  for (auto raw : split_lines(text)) {
    auto line = trim(raw);
    if (line.empty() || is_comment(line)) continue;
    if (!seen_content && line.size() > 4 && line.substr(0, 4) == "name" &&
        std::isspace(static_cast<unsigned char>(line[4]))) {
      block.name = std::string(trim(line.substr(4)));
      seen_content = true;
      continue;
    }
    seen_content = true;
    block.body.push_back(line);
  }
  return block;
}

KnotoidCode parse_code_line(std::string_view line) {
  auto semi = line.find(';');
  if (semi != std::string_view::npos && line.find(';', semi + 1) != std::string_view::npos)
    throw ParseError("more than one ';' in code line");
  std::string_view items = semi == std::string_view::npos ? line : line.substr(0, semi);
  std::string_view signs =
      semi == std::string_view::npos ? std::string_view{} : line.substr(semi + 1);
  return KnotoidCode(parse_items(items), parse_signs(signs));
}

KnotoidCode code_from_block(const Block& block) {
  if (block.body.empty()) return KnotoidCode{};
  if (block.body.size() > 1)
    throw ParseError("expected a single code line, found " + std::to_string(block.body.size()));
  return parse_code_line(block.body.front());
}

}  // namespace

bool is_valid_label(std::string_view label) noexcept {
  std::size_t i = 0;
  while (i < label.size() && std::isalnum(static_cast<unsigned char>(label[i]))) ++i;
  if (i == 0) return false;
  while (i < label.size() && label[i] == '\'') ++i;
  return i == label.size();
}

KnotoidCode::KnotoidCode(Word word, SignMap signs) : word_(std::move(word)), signs_(std::move(signs)) {
  validate_components({&word_}, signs_);
  for (std::size_t i = 0; i < word_.size(); ++i) {
    const Item& it = word_[i];
    auto [pos, inserted] = positions_.try_emplace(it.label);
    if (inserted) labels_.push_back(it.label);
    (it.pass == Pass::Over ? pos->second.over : pos->second.under) = i;
  }
}

bool KnotoidCode::contains(const std::string& label) const { return positions_.count(label) != 0; }

int KnotoidCode::sign(const std::string& label) const {
  auto it = signs_.find(label);
  if (it == signs_.end()) throw UnknownLabel(label);
  return it->second;
}

const KnotoidCode::Positions& KnotoidCode::positions(const std::string& label) const {
  auto it = positions_.find(label);
  if (it == positions_.end()) throw UnknownLabel(label);
  return it->second;
}

MultiKnotoidCode::MultiKnotoidCode(Word segment, std::vector<Word> circles, SignMap signs)
    : segment_(std::move(segment)), circles_(std::move(circles)), signs_(std::move(signs)) {
  std::vector<const Word*> components{&segment_};
  for (const auto& c : circles_) components.push_back(&c);
  validate_components(components, signs_);
}

int MultiKnotoidCode::sign(const std::string& label) const {
  auto it = signs_.find(label);
  if (it == signs_.end()) throw UnknownLabel(label);
  return it->second;
}

KnotoidCode MultiKnotoidCode::as_knotoid() const {
  if (!circles_.empty()) throw ValidationError("multi-knotoid has closed components");
  return KnotoidCode(segment_, signs_);
}

bool equal_up_to_rotation(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t shift = 0; shift < b.size(); ++shift) {
    bool same = true;
    for (std::size_t i = 0; i < a.size() && same; ++i) same = a[i] == b[(i + shift) % b.size()];
    if (same) return true;
  }
  return false;
}

bool operator==(const MultiKnotoidCode& a, const MultiKnotoidCode& b) {
  if (a.segment_ != b.segment_ || a.signs_ != b.signs_ || a.circles_.size() != b.circles_.size())
    return false;
  for (std::size_t i = 0; i < a.circles_.size(); ++i)
    if (!equal_up_to_rotation(a.circles_[i], b.circles_[i])) return false;
  return true;
}

KnotoidCode parse_knotoid_code(std::string_view text) { return parse_named_code(text).code; }

NamedCode parse_named_code(std::string_view text) {
  Block block = read_block(text);
  return NamedCode{block.name, code_from_block(block)};
}

std::vector<NamedCode> parse_code_document(std::string_view text) {
  std::vector<NamedCode> out;
  std::string current;
  auto flush = [&] {
    Block block = read_block(current);
    if (!block.name.empty() || !block.body.empty())
      out.push_back(NamedCode{block.name, code_from_block(block)});
    current.clear();
  };
  for (auto raw : split_lines(text)) {
    if (trim(raw) == "---") {
      flush();
    } else {
      current.append(raw);
      current.push_back('\n');
    }
  }
  flush();
  if (out.empty()) out.push_back(NamedCode{});
  return out;
}

MultiKnotoidCode parse_multiknotoid_code(std::string_view text) {
  Block block = read_block(text);
  Word segment;
  std::vector<Word> circles;
  SignMap signs;
  bool have_segment = false;
  bool have_signs = false;
  for (auto line : block.body) {
    if (have_signs) throw ParseError("content after the sign line");
    if (line.front() == ';') {
      signs = parse_signs(line.substr(1));
      have_signs = true;
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("expected 'segment:', 'circle:' or '; <signs>' line");
    auto key = trim(line.substr(0, colon));
    auto rest = line.substr(colon + 1);
    if (rest.find(';') != std::string_view::npos || rest.find(':') != std::string_view::npos)
      throw ParseError("each 'segment:'/'circle:' section must be on its own line");
    if (key == "segment") {
      if (have_segment) throw ParseError("more than one 'segment:' line");
      if (!circles.empty()) throw ParseError("'segment:' must precede 'circle:' lines");
      segment = parse_items(rest);
      have_segment = true;
    } else if (key == "circle") {
      if (!have_segment) throw ParseError("'segment:' must precede 'circle:' lines");
      circles.push_back(parse_items(rest));
    } else {
      throw ParseError("unknown section '" + std::string(key) + "'");
    }
  }
  if (!have_segment && !block.body.empty()) throw ParseError("missing 'segment:' line");
  return MultiKnotoidCode(std::move(segment), std::move(circles), std::move(signs));
}

std::string to_string(const Item& item) {
  return (item.pass == Pass::Over ? "O" : "U") + item.label;
}

std::string to_string(const Word& word) {
  std::string out;
  for (const auto& it : word) {
    if (!out.empty()) out += ' ';
    out += to_string(it);
  }
  return out;
}

std::string serialize(const KnotoidCode& code) {
  if (code.empty()) return {};
  return to_string(code.word()) + " ; " + signs_to_string(code.labels(), code.signs());
}

std::string serialize(const NamedCode& code) {
  std::string out;
  if (!code.name.empty()) out = "name " + code.name + "\n";
  return out + serialize(code.code);
}

std::string serialize(const MultiKnotoidCode& code) {
  std::vector<std::string> order;
  std::set<std::string> seen;
  auto collect = [&](const Word& w) {
    for (const auto& it : w)
      if (seen.insert(it.label).second) order.push_back(it.label);
  };
  collect(code.segment());
  for (const auto& c : code.circles()) collect(c);

  std::string out = "segment:";
  if (!code.segment().empty()) out += " " + to_string(code.segment());
  for (const auto& c : code.circles()) {
    out += "\ncircle:";
    if (!c.empty()) out += " " + to_string(c);
  }
  out += "\n;";
  if (!order.empty()) out += " " + signs_to_string(order, code.signs());
  return out;
}

KnotoidCode switch_all(const KnotoidCode& code) {
  Word word = code.word();
  for (auto& it : word) it.pass = opposite(it.pass);
  return KnotoidCode(std::move(word), code.signs());
}

KnotoidCode reverse(const KnotoidCode& code) {
  Word word(code.word().rbegin(), code.word().rend());
  return KnotoidCode(std::move(word), code.signs());
}

KnotoidCode mirror(const KnotoidCode& code) {
  SignMap signs = code.signs();
  for (auto& [label, s] : signs) s = -s;
  return KnotoidCode(code.word(), std::move(signs));
}

KnotoidCode switch_crossing(const KnotoidCode& code, const std::string& label) {
  if (!code.contains(label)) throw UnknownLabel(label);
  Word word = code.word();
  for (auto& it : word)
    if (it.label == label) it.pass = opposite(it.pass);
  SignMap signs = code.signs();
  signs[label] = -signs[label];
  return KnotoidCode(std::move(word), std::move(signs));
}

KnotoidCode concat_product(const KnotoidCode& k1, const KnotoidCode& k2) {
  std::set<std::string> used(k1.labels().begin(), k1.labels().end());
  std::map<std::string, std::string> rename;
  for (const auto& label : k2.labels()) {
    std::string fresh = label;
    // A k2 label may only keep its name if no other k2 label could be renamed onto it.
    while (used.count(fresh) || (fresh != label && k2.contains(fresh))) fresh += '\'';
    used.insert(fresh);
    rename.emplace(label, fresh);
  }
  Word word = k1.word();
  SignMap signs = k1.signs();
  for (const auto& it : k2.word()) word.push_back(Item{it.pass, rename.at(it.label)});
  for (const auto& [label, s] : k2.signs()) signs.emplace(rename.at(label), s);
  return KnotoidCode(std::move(word), std::move(signs));
}

}  // namespace knotoid
