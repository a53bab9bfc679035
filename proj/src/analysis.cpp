#include "knotoid/analysis.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <future>
#include <iomanip>
#include <sstream>

#include "knotoid/planar.hpp"

namespace knotoid {

namespace {

std::string pairs_to_string(const std::vector<SkewPair>& pairs) {
  if (pairs.empty()) return "-";
  std::string out;
  for (const auto& p : pairs) {
    if (!out.empty()) out += ' ';
    out += "(" + p.first + "," + p.second + ")" + (p.sign > 0 ? "+" : "-");
  }
  return out;
}

std::string class_to_string(const HomologyClass& c) {
  if (c.size() == 1) return std::to_string(c.front());
  std::string out = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out + "]";
}

nlohmann::ordered_json pairs_to_json(const std::vector<SkewPair>& pairs) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& p : pairs) arr.push_back({{"first", p.first}, {"second", p.second}, {"sign", p.sign}});
  return arr;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s) {
  std::string tmp(trim(s));
  std::size_t used = 0;
  Integer v = 0;
  try {
    v = std::stoll(tmp, &used);
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + tmp + "'");
  }
  if (used != tmp.size()) throw ParseError("bad integer '" + tmp + "'");
  return v;
}

InvariantReport finish_report(const KnotoidCode& code, const std::string& name,
                              std::optional<ClassMap> classes) {
  InvariantReport r;
  r.name = name;
  r.diagram_crossings = code.crossing_count();
  r.pairs = skew_pairs(code);
  r.c = casson_pm(r.pairs);
  std::size_t rank = 1;
  if (classes) {
    r.ch = casson_homological(r.pairs, *classes);
    if (!classes->empty()) rank = classes->begin()->second.size();
    r.norm_sum = norm(r.ch->ch_plus) + norm(r.ch->ch_minus);
    r.loop_classes = std::move(classes);
  } else {
    r.norm_sum = (r.c.c_plus < 0 ? -r.c.c_plus : r.c.c_plus) + (r.c.c_minus < 0 ? -r.c.c_minus : r.c.c_minus);
  }
  r.crossing_lower_bound = crossing_lower_bound(r.norm_sum);
  r.properness = properness_certificate(r.c, r.ch, rank);
  return r;
}

}  // namespace

Integer crossing_lower_bound(Integer norm_sum) {
  Integer n = 0;
  while ((n * n) / 4 < norm_sum) ++n;
  return n;
}

Integer crossing_lower_bound(const ModuleElement& ch_plus, const ModuleElement& ch_minus) {
  return crossing_lower_bound(norm(ch_plus) + norm(ch_minus));
}

std::string to_string(Properness p) {
  switch (p) {
    case Properness::ProperByC: return "ProperByC";
    case Properness::ProperByCH: return "ProperByCH";
    case Properness::Inconclusive: return "Inconclusive";
  }
  return "?";
}

Properness properness_certificate(const CassonValues& c, const std::optional<HomologicalValues>& ch,
                                  std::size_t rank) {
  if (c.c_plus != c.c_minus) return Properness::ProperByC;
  if (!ch) return Properness::Inconclusive;
  const Subgroup trivial = Subgroup::trivial(rank);
  if (ch->ch_plus != ModuleElement::term(trivial, c.c_plus) ||
      ch->ch_minus != ModuleElement::term(trivial, c.c_minus))
    return Properness::ProperByCH;
  return Properness::Inconclusive;
}

KnotoidCode generate_family(Integer j) {
  if (j < 1) throw ValidationError("family index must be at least 1");
  const Integer n = 2 * j;
  Word word;
  SignMap signs;
  for (int half = 0; half < 2; ++half)
    for (Integer k = 1; k <= n; ++k) {
      const bool odd = k % 2 == 1;
      const bool over = half == 0 ? odd : !odd;
      word.push_back(Item{over ? Pass::Over : Pass::Under, "x" + std::to_string(k)});
      signs["x" + std::to_string(k)] = 1;
    }
  return KnotoidCode(std::move(word), std::move(signs));
}

InvariantReport full_report(const KnotoidCode& code, const std::string& name) {
  std::optional<ClassMap> classes;
  try {
    classes = all_loop_classes(code);
  } catch (const NonRealizable&) {
  }
  return finish_report(code, name, std::move(classes));
}

InvariantReport full_report(const KnotoidCode& code, const std::string& name, const ClassMap& classes) {
  return finish_report(code, name, classes);
}

nlohmann::ordered_json to_json(const InvariantReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["diagram_crossings"] = r.diagram_crossings;
  j["c_plus"] = r.c.c_plus;
  j["c_minus"] = r.c.c_minus;
  j["ch_plus"] = r.ch ? r.ch->ch_plus.to_string() : "virtual";
  j["ch_minus"] = r.ch ? r.ch->ch_minus.to_string() : "virtual";
  j["norm_sum"] = r.norm_sum;
  j["crossing_lower_bound"] = r.crossing_lower_bound;
  j["properness"] = to_string(r.properness);
  j["upper_pairs"] = pairs_to_json(r.pairs.upper);
  j["lower_pairs"] = pairs_to_json(r.pairs.lower);
  if (r.loop_classes) {
    nlohmann::ordered_json classes = nlohmann::ordered_json::object();
    for (const auto& [label, c] : *r.loop_classes) {
      if (c.size() == 1) classes[label] = c.front();
      else classes[label] = c;
    }
    j["loop_classes"] = classes;
  } else {
    j["loop_classes"] = nullptr;
  }
  return j;
}

std::string to_text(const InvariantReport& r) {
  std::ostringstream os;
  os << "name:                 " << (r.name.empty() ? "-" : r.name) << '\n'
     << "crossings:            " << r.diagram_crossings << '\n'
     << "C+:                   " << r.c.c_plus << '\n'
     << "C-:                   " << r.c.c_minus << '\n'
     << "CH+:                  " << (r.ch ? r.ch->ch_plus.to_string() : "virtual") << '\n'
     << "CH-:                  " << (r.ch ? r.ch->ch_minus.to_string() : "virtual") << '\n'
     << "upper pairs:          " << pairs_to_string(r.pairs.upper) << '\n'
     << "lower pairs:          " << pairs_to_string(r.pairs.lower) << '\n';
  os << "loop classes:         ";
  if (!r.loop_classes) {
    os << "virtual";
  } else if (r.loop_classes->empty()) {
    os << "-";
  } else {
    bool first = true;
    for (const auto& [label, c] : *r.loop_classes) {
      os << (first ? "" : " ") << label << '=' << class_to_string(c);
      first = false;
    }
  }
  os << '\n'
     << "norm sum:             " << r.norm_sum << '\n'
     << "crossing lower bound: " << r.crossing_lower_bound << '\n'
     << "properness:           " << to_string(r.properness) << '\n';
  return os.str();
}

OddBoundProbe odd_crossing_probe(const InvariantReport& r) {
  const auto n = static_cast<Integer>(r.diagram_crossings);
  OddBoundProbe p;
  p.lhs = r.norm_sum + 1;
  p.rhs = (n * n) / 4;
  p.holds = p.lhs <= p.rhs;
  return p;
}

MoveCheck check_move_invariance(const KnotoidCode& code, std::size_t steps, std::uint64_t seed,
                                std::size_t trials) {
  auto invariants = [](const KnotoidCode& c) {
    return std::pair{casson_pm(c), casson_homological(c, all_loop_classes(c))};
  };
  const auto expected = invariants(code);
  MoveCheck check;
  check.trials = trials;
  check.steps = steps;
  for (std::size_t t = 0; t < trials; ++t) {
    Walk walk = random_walk(code, steps, seed + t);
    for (std::size_t i = 0; i < walk.steps.size(); ++i) {
      ++check.moves_applied;
      if (invariants(walk.steps[i].result) != expected) {
        check.failing_step = i + 1;
        check.failure = std::move(walk);
        return check;
      }
    }
  }
  return check;
}

std::vector<TableRow> parse_reference_table(std::string_view text) {
  std::vector<TableRow> rows;
  std::size_t start = 0;
  std::size_t line_no = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string_view> fields;
    std::size_t f = 0;
    while (true) {
      std::size_t tab = line.find('\t', f);
      fields.push_back(trim(line.substr(f, tab == std::string_view::npos ? std::string_view::npos : tab - f)));
      if (tab == std::string_view::npos) break;
      f = tab + 1;
    }
    if (fields.size() != 5)
      throw ParseError("reference table line " + std::to_string(line_no) + ": expected 5 tab-separated fields");
    TableRow row;
    row.name = std::string(fields[0]);
    row.c = CassonValues{parse_integer(fields[1]), parse_integer(fields[2])};
    row.ch = HomologicalValues{ModuleElement::parse(fields[3]), ModuleElement::parse(fields[4])};
    rows.push_back(std::move(row));
  }
  return rows;
}

bool matches_row(const InvariantReport& report, const TableRow& row) {
  if (!report.ch) return false;
  const bool direct = report.c == row.c && *report.ch == row.ch;
  const bool swapped = report.c == CassonValues{row.c.c_minus, row.c.c_plus} &&
                       *report.ch == HomologicalValues{row.ch.ch_minus, row.ch.ch_plus};
  return direct || swapped;
}

std::vector<CatalogEntry> evaluate_catalog(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw ValidationError("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::recursive_directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".knd") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  auto evaluate_file = [](const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ValidationError("cannot read " + file.string());
    std::stringstream buf;
    buf << in.rdbuf();
    std::vector<CatalogEntry> out;
    const auto codes = parse_code_document(buf.str());
    for (std::size_t i = 0; i < codes.size(); ++i) {
      std::string name = codes[i].name;
      if (name.empty())
        name = file.stem().string() + (codes.size() > 1 ? "#" + std::to_string(i + 1) : std::string{});
      out.push_back(CatalogEntry{file, full_report(codes[i].code, name)});
    }
    return out;
  };

  std::vector<std::future<std::vector<CatalogEntry>>> jobs;
  for (const auto& f : files) jobs.push_back(std::async(std::launch::async, evaluate_file, f));
  std::vector<CatalogEntry> entries;
  for (auto& j : jobs) {
    auto part = j.get();
    entries.insert(entries.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return entries;
}

void write_catalog_reports(const std::vector<CatalogEntry>& entries, const std::filesystem::path& out) {
  std::filesystem::create_directories(out);
  for (const auto& e : entries) {
    std::string file = e.report.name;
    for (char& ch : file)
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' && ch != '-' && ch != '.') ch = '_';
    std::ofstream os(out / (file + ".json"));
    if (!os) throw ValidationError("cannot write report for " + e.report.name);
    os << to_json(e.report).dump(2) << '\n';
  }
}

std::string summary_table(const std::vector<CatalogEntry>& entries) {
  std::vector<std::array<std::string, 5>> rows;
  rows.push_back({"#", "C+", "C-", "CH+", "CH-"});
  for (const auto& e : entries) {
    const auto& r = e.report;
    rows.push_back({r.name, std::to_string(r.c.c_plus), std::to_string(r.c.c_minus),
                    r.ch ? r.ch->ch_plus.to_string() : "virtual", r.ch ? r.ch->ch_minus.to_string() : "virtual"});
  }
  std::array<std::size_t, 5> width{};
  for (const auto& row : rows)
    for (std::size_t i = 0; i < 5; ++i) width[i] = std::max(width[i], row[i].size());
  std::ostringstream os;
  auto rule = [&] {
    os << std::string(width[0] + width[1] + width[2] + width[3] + width[4] + 8, '-') << '\n';
  };
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    os << std::left << std::setw(static_cast<int>(width[0])) << row[0] << " | " << std::right
       << std::setw(static_cast<int>(width[1])) << row[1] << ' ' << std::setw(static_cast<int>(width[2])) << row[2]
       << " | " << std::setw(static_cast<int>(width[3])) << row[3] << ' ' << std::setw(static_cast<int>(width[4]))
       << row[4] << '\n';
    if (r == 0) rule();
  }
  return os.str();
}

}  // namespace knotoid
