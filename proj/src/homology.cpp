#include "knotoid/homology.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <utility>

namespace knotoid {

namespace {

Integer floor_div(Integer a, Integer b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void axpy(HomologyClass& row, Integer q, const HomologyClass& pivot) {
  for (std::size_t i = 0; i < row.size(); ++i) row[i] -= q * pivot[i];
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

HomologyClass class_of_rank1(Integer multiple) { return HomologyClass{multiple}; }

std::vector<HomologyClass> hermite_normal_form(std::vector<HomologyClass> rows, std::size_t rank) {
  for (const auto& r : rows)
    if (r.size() != rank) throw ValidationError("homology class rank mismatch");

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < rank && pivot_row < rows.size(); ++col) {
    // Euclid on column `col` over rows [pivot_row, end).
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = pivot_row; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        if (best == rows.size() || std::llabs(rows[r][col]) < std::llabs(rows[best][col])) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[pivot_row], rows[best]);
      bool clean = true;
      for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        axpy(rows[r], rows[r][col] / rows[pivot_row][col], rows[pivot_row]);
        if (rows[r][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[pivot_row][col] == 0) continue;
    if (rows[pivot_row][col] < 0)
      for (auto& v : rows[pivot_row]) v = -v;
    for (std::size_t r = 0; r < pivot_row; ++r)
      axpy(rows[r], floor_div(rows[r][col], rows[pivot_row][col]), rows[pivot_row]);
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

Subgroup Subgroup::trivial(std::size_t rank) {
  Subgroup s;
  s.rank_ = rank;
  return s;
}

Subgroup Subgroup::cyclic(Integer j) {
  HomologyClass g{j};
  return generated_by(std::span<const HomologyClass>(&g, 1), 1);
}

Subgroup Subgroup::generated_by(std::span<const HomologyClass> generators, std::size_t rank) {
  Subgroup s;
  s.rank_ = rank;
  s.basis_ = hermite_normal_form({generators.begin(), generators.end()}, rank);
  return s;
}

Integer Subgroup::generator() const {
  if (rank_ != 1) throw ValidationError("generator() is defined for subgroups of Z only");
  return basis_.empty() ? 0 : basis_.front().front();
}

std::string Subgroup::to_string() const {
  if (basis_.empty()) return "<0>";
  if (rank_ == 1) return "<" + std::to_string(basis_.front().front()) + ">";
  std::string out = "<";
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    if (r) out += ',';
    out += '[';
    for (std::size_t i = 0; i < basis_[r].size(); ++i) {
      if (i) out += ',';
      out += std::to_string(basis_[r][i]);
    }
    out += ']';
  }
  return out + ">";
}

Subgroup subgroup_from_generators(const HomologyClass& v1, const HomologyClass& v2) {
  if (v1.size() != v2.size()) throw ValidationError("homology class rank mismatch");
  const HomologyClass gens[2] = {v1, v2};
  return Subgroup::generated_by(gens, v1.size());
}

ModuleElement ModuleElement::term(const Subgroup& s, Integer coefficient) {
  ModuleElement e;
  if (coefficient != 0) e.terms_.emplace(s, coefficient);
  return e;
}

Integer ModuleElement::coefficient(const Subgroup& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? 0 : it->second;
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& other) {
  for (const auto& [s, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

std::string ModuleElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [s, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += std::to_string(c) + "*" + s.to_string();
  }
  return out;
}

ModuleElement ModuleElement::parse(std::string_view text) {
  text = trim(text);
  if (text == "0") return {};
  ModuleElement e;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(" + ", start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = trim(text.substr(start, end - start));
    start = end + 3;

    auto lt = token.find('<');
    if (lt == std::string_view::npos || token.back() != '>')
      throw ParseError("bad module term '" + std::string(token) + "'");
    std::string_view coeff = token.substr(0, lt);
    if (!coeff.empty() && coeff.back() == '*') coeff.remove_suffix(1);
    Integer c = 1;
    if (coeff == "-") {
      c = -1;
    } else if (!coeff.empty() && coeff != "+") {
      char* endp = nullptr;
      std::string tmp(coeff);
      c = std::strtoll(tmp.c_str(), &endp, 10);
      if (endp == tmp.c_str() || *endp != '\0') throw ParseError("bad coefficient '" + tmp + "'");
    }
    std::string gen(token.substr(lt + 1, token.size() - lt - 2));
    char* endp = nullptr;
    Integer j = std::strtoll(gen.c_str(), &endp, 10);
    if (gen.empty() || *endp != '\0') throw ParseError("bad subgroup '<" + gen + ">'");
    e += term(Subgroup::cyclic(j), c);
    if (end == text.size()) break;
  }
  return e;
}

ModuleElement add(const ModuleElement& a, const ModuleElement& b) { return a + b; }

ModuleElement scale(const ModuleElement& a, Integer n) {
  ModuleElement out;
  if (n == 0) return out;
  for (const auto& [s, c] : a.terms()) out += ModuleElement::term(s, c * n);
  return out;
}

Integer norm(const ModuleElement& e) {
  Integer n = 0;
  for (const auto& [s, c] : e.terms()) n += c < 0 ? -c : c;
  return n;
}

Integer augment(const ModuleElement& e) {
  Integer n = 0;
  for (const auto& [s, c] : e.terms()) n += c;
  return n;
}

}  // namespace knotoid
