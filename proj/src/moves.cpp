#include "knotoid/moves.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "knotoid/planar.hpp"

namespace knotoid {

namespace {

std::string sign_str(int s) { return s > 0 ? "+1" : "-1"; }

struct R2Site {
  std::size_t first = 0;   // start of the earlier adjacent pair
  std::size_t second = 0;  // start of the later adjacent pair
};

// Locates the two adjacent pairs of an R2 bigon on {x, y}, checking passes and signs.
std::optional<R2Site> find_r2_site(const KnotoidCode& code, const std::string& x, const std::string& y) {
  if (x == y || !code.contains(x) || !code.contains(y)) return std::nullopt;
  const auto& px = code.positions(x);
  const auto& py = code.positions(y);
  const std::array<std::size_t, 4> all{px.first(), px.second(), py.first(), py.second()};
  std::array<std::size_t, 4> sorted = all;
  std::sort(sorted.begin(), sorted.end());
  if (sorted[1] != sorted[0] + 1 || sorted[3] != sorted[2] + 1) return std::nullopt;
  const auto& w = code.word();
  const std::size_t p = sorted[0], q = sorted[2];
  if (w[p].label == w[p + 1].label || w[q].label == w[q + 1].label) return std::nullopt;
  if (w[p].pass != w[p + 1].pass || w[q].pass != w[q + 1].pass || w[p].pass == w[q].pass)
    return std::nullopt;
  if (code.sign(x) == code.sign(y)) return std::nullopt;
  return R2Site{p, q};
}

bool valid_r3_sites(const KnotoidCode& code, const std::vector<std::size_t>& sites) {
  if (sites.size() != 3) return false;
  const auto& w = code.word();
  for (std::size_t i = 0; i < 3; ++i) {
    if (sites[i] + 1 >= w.size()) return false;
    if (i > 0 && sites[i] < sites[i - 1] + 2) return false;
  }
  std::map<std::string, int> seen;
  int over_over = 0, under_under = 0, mixed = 0;
  for (std::size_t p : sites) {
    if (w[p].label == w[p + 1].label) return false;
    ++seen[w[p].label];
    ++seen[w[p + 1].label];
    if (w[p].pass == Pass::Over && w[p + 1].pass == Pass::Over) ++over_over;
    else if (w[p].pass == Pass::Under && w[p + 1].pass == Pass::Under) ++under_under;
    else ++mixed;
  }
  if (seen.size() != 3) return false;
  for (const auto& [label, count] : seen)
    if (count != 2) return false;
  return over_over == 1 && under_under == 1 && mixed == 1;
}

// The rewrite alone, without any planarity check.
KnotoidCode rewrite(const KnotoidCode& code, const MoveInstance& m) {
  const auto& w = code.word();
  Word word;
  SignMap signs = code.signs();
  switch (m.kind) {
    case MoveKind::R1Insert: {
      if (m.sites.size() != 1 || m.labels.size() != 1 || m.signs.size() != 1)
        throw IllegalMove("malformed R1Insert");
      const std::size_t g = m.sites[0];
      if (g > w.size()) throw IllegalMove("R1Insert gap out of range");
      if (code.contains(m.labels[0])) throw IllegalMove("R1Insert label already in use");
      word.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(g));
      word.push_back(Item{m.pass, m.labels[0]});
      word.push_back(Item{opposite(m.pass), m.labels[0]});
      word.insert(word.end(), w.begin() + static_cast<std::ptrdiff_t>(g), w.end());
      signs[m.labels[0]] = m.signs[0];
      break;
    }
    case MoveKind::R1Delete: {
      if (m.sites.size() != 1) throw IllegalMove("malformed R1Delete");
      const std::size_t p = m.sites[0];
      if (p + 1 >= w.size() || w[p].label != w[p + 1].label)
        throw IllegalMove("no kink at position " + std::to_string(p));
      word = w;
      word.erase(word.begin() + static_cast<std::ptrdiff_t>(p),
                 word.begin() + static_cast<std::ptrdiff_t>(p + 2));
      signs.erase(w[p].label);
      break;
    }
    case MoveKind::R2Insert: {
      if (m.sites.size() != 2 || m.labels.size() != 2 || m.signs.size() != 2)
        throw IllegalMove("malformed R2Insert");
      const std::size_t ga = m.sites[0], gb = m.sites[1];
      if (ga > gb || gb > w.size()) throw IllegalMove("R2Insert gaps out of range");
      const auto& x = m.labels[0];
      const auto& y = m.labels[1];
      if (x == y || code.contains(x) || code.contains(y)) throw IllegalMove("R2Insert labels not fresh");
      if (m.signs[0] == m.signs[1]) throw IllegalMove("R2Insert needs opposite signs");
      const Pass q = opposite(m.pass);
      for (std::size_t g = 0; g <= w.size(); ++g) {
        if (g == ga) {
          word.push_back(Item{m.pass, x});
          word.push_back(Item{m.pass, y});
        }
        if (g == gb) {
          word.push_back(Item{q, m.antiparallel ? y : x});
          word.push_back(Item{q, m.antiparallel ? x : y});
        }
        if (g < w.size()) word.push_back(w[g]);
      }
      signs[x] = m.signs[0];
      signs[y] = m.signs[1];
      break;
    }
    case MoveKind::R2Delete: {
      if (m.labels.size() != 2) throw IllegalMove("malformed R2Delete");
      if (!find_r2_site(code, m.labels[0], m.labels[1]))
        throw IllegalMove("no R2 pattern on " + m.labels[0] + "," + m.labels[1]);
      for (const auto& it : w)
        if (it.label != m.labels[0] && it.label != m.labels[1]) word.push_back(it);
      signs.erase(m.labels[0]);
      signs.erase(m.labels[1]);
      break;
    }
    case MoveKind::R3: {
      if (!valid_r3_sites(code, m.sites)) throw IllegalMove("no R3 pattern at the given sites");
      word = w;
      for (std::size_t p : m.sites) std::swap(word[p], word[p + 1]);
      break;
    }
  }
  return KnotoidCode(std::move(word), std::move(signs));
}

// Edges bounding the move's disk, in the map where that disk must be a face.
std::vector<std::size_t> disk_edges(const KnotoidCode& source, const MoveInstance& m) {
  switch (m.kind) {
    case MoveKind::R1Insert: return {m.sites[0] + 1};
    case MoveKind::R1Delete: return {m.sites[0] + 1};
    case MoveKind::R2Insert: return {m.sites[0] + 1, m.sites[1] + 3};
    case MoveKind::R2Delete: {
      auto site = find_r2_site(source, m.labels[0], m.labels[1]);
      return {site->first + 1, site->second + 1};
    }
    case MoveKind::R3: return {m.sites[0] + 1, m.sites[1] + 1, m.sites[2] + 1};
  }
  return {};
}

bool well_formed(const MoveInstance& m) {
  switch (m.kind) {
    case MoveKind::R1Insert: return m.sites.size() == 1 && m.labels.size() == 1 && m.signs.size() == 1;
    case MoveKind::R1Delete: return m.sites.size() == 1;
    case MoveKind::R2Insert: return m.sites.size() == 2 && m.labels.size() == 2 && m.signs.size() == 2;
    case MoveKind::R2Delete: return m.labels.size() == 2;
    case MoveKind::R3: return m.sites.size() == 3;
  }
  return false;
}

bool checked_on_result(MoveKind kind) {
  return kind == MoveKind::R1Insert || kind == MoveKind::R2Insert;
}

std::optional<KnotoidCode> try_apply(const KnotoidCode& code, const MoveInstance& m) {
  if (!well_formed(m)) return std::nullopt;
  KnotoidCode result;
  try {
    result = rewrite(code, m);
  } catch (const Error&) {
    return std::nullopt;
  }
  const KnotoidCode& checked = checked_on_result(m.kind) ? result : code;
  const PlanarMap map = trace_planar_map(checked);
  if (!map.is_spherical()) return std::nullopt;
  if (!map.face_with_edges(disk_edges(code, m))) return std::nullopt;
  if (!checked_on_result(m.kind) && !is_realizable(result)) return std::nullopt;
  return result;
}

void push_if_legal(std::vector<MoveInstance>& out, const KnotoidCode& code, MoveInstance m) {
  if (try_apply(code, m)) out.push_back(std::move(m));
}

std::vector<MoveInstance> r1_deletions(const KnotoidCode& code) {
  std::vector<MoveInstance> out;
  const auto& w = code.word();
  for (std::size_t p = 0; p + 1 < w.size(); ++p)
    if (w[p].label == w[p + 1].label) push_if_legal(out, code, MoveInstance{MoveKind::R1Delete, {p}, {}, Pass::Over, {}, false});
  return out;
}

std::vector<MoveInstance> r2_deletions(const KnotoidCode& code) {
  std::vector<MoveInstance> out;
  const auto& w = code.word();
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    if (w[p].label == w[p + 1].label || w[p].pass != w[p + 1].pass) continue;
    auto site = find_r2_site(code, w[p].label, w[p + 1].label);
    if (!site || site->first != p) continue;
    push_if_legal(out, code,
                  MoveInstance{MoveKind::R2Delete, {}, {w[p].label, w[p + 1].label}, w[p].pass, {}, false});
  }
  return out;
}

std::vector<MoveInstance> r3_moves(const KnotoidCode& code, const PlanarMap& map) {
  std::vector<MoveInstance> out;
  for (const auto& face : map.faces()) {
    if (face.size() != 3) continue;
    std::vector<std::size_t> sites;
    bool interior = true;
    for (const Dart& d : face) {
      if (d.edge == 0 || d.edge + 1 >= map.edge_count()) interior = false;
      else sites.push_back(d.edge - 1);
    }
    if (!interior) continue;
    std::sort(sites.begin(), sites.end());
    if (!valid_r3_sites(code, sites)) continue;
    push_if_legal(out, code, MoveInstance{MoveKind::R3, sites, {}, Pass::Over, {}, false});
  }
  std::sort(out.begin(), out.end(), [](const MoveInstance& a, const MoveInstance& b) { return a.sites < b.sites; });
  return out;
}

std::vector<MoveInstance> r1_insertions(const KnotoidCode& code) {
  std::vector<MoveInstance> out;
  const std::string k = fresh_label(code);
  for (std::size_t g = 0; g <= code.size(); ++g)
    for (Pass p : {Pass::Over, Pass::Under})
      for (int s : {1, -1}) push_if_legal(out, code, MoveInstance{MoveKind::R1Insert, {g}, {k}, p, {s}, false});
  return out;
}

std::vector<MoveInstance> r2_insertions(const KnotoidCode& code, const PlanarMap& map) {
  std::vector<MoveInstance> out;
  const std::string x = fresh_label(code);
  const std::string y = fresh_label(code, {x});
  const std::size_t gaps = code.size() + 1;
  for (std::size_t ga = 0; ga < gaps; ++ga) {
    for (std::size_t gb = ga; gb < gaps; ++gb) {
      const std::set<std::size_t> fa{map.left_face(ga), map.right_face(ga)};
      if (!fa.count(map.left_face(gb)) && !fa.count(map.right_face(gb))) continue;
      for (bool anti : {false, true})
        for (Pass p : {Pass::Over, Pass::Under})
          for (int s : {1, -1})
            push_if_legal(out, code, MoveInstance{MoveKind::R2Insert, {ga, gb}, {x, y}, p, {s, -s}, anti});
    }
  }
  return out;
}

}  // namespace

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::R1Insert: return "R1Insert";
    case MoveKind::R1Delete: return "R1Delete";
    case MoveKind::R2Insert: return "R2Insert";
    case MoveKind::R2Delete: return "R2Delete";
    case MoveKind::R3: return "R3";
  }
  return "?";
}

std::string MoveInstance::describe() const {
  std::ostringstream os;
  os << to_string(kind);
  switch (kind) {
    case MoveKind::R1Insert:
      os << " gap=" << sites.at(0) << ' ' << (pass == Pass::Over ? 'O' : 'U') << labels.at(0)
         << " sign=" << sign_str(signs.at(0));
      break;
    case MoveKind::R1Delete: os << " at=" << sites.at(0); break;
    case MoveKind::R2Insert:
      os << " gaps=" << sites.at(0) << ',' << sites.at(1) << ' ' << (pass == Pass::Over ? 'O' : 'U')
         << labels.at(0) << '/' << labels.at(1) << " signs=" << sign_str(signs.at(0)) << ','
         << sign_str(signs.at(1)) << (antiparallel ? " antiparallel" : " parallel");
      break;
    case MoveKind::R2Delete: os << " labels=" << labels.at(0) << ',' << labels.at(1); break;
    case MoveKind::R3: os << " segments=" << sites.at(0) << ',' << sites.at(1) << ',' << sites.at(2); break;
  }
  return os.str();
}

std::string fresh_label(const KnotoidCode& code, const std::vector<std::string>& taken) {
  for (std::size_t i = 1;; ++i) {
    std::string label = "k" + std::to_string(i);
    if (!code.contains(label) && std::find(taken.begin(), taken.end(), label) == taken.end()) return label;
  }
}

std::vector<MoveInstance> enumerate_moves(const KnotoidCode& code) {
  const PlanarMap map = build_planar_map(code);
  std::vector<MoveInstance> out = r1_deletions(code);
  auto append = [&](std::vector<MoveInstance> v) { out.insert(out.end(), v.begin(), v.end()); };
  append(r2_deletions(code));
  append(r3_moves(code, map));
  append(r1_insertions(code));
  append(r2_insertions(code, map));
  return out;
}

bool is_legal(const KnotoidCode& code, const MoveInstance& move) { return try_apply(code, move).has_value(); }

KnotoidCode apply(const KnotoidCode& code, const MoveInstance& move) {
  if (!well_formed(move)) throw IllegalMove("malformed " + to_string(move.kind) + " instance");
  auto result = try_apply(code, move);
  if (!result) throw IllegalMove("illegal move " + move.describe() + " on '" + serialize(code) + "'");
  return *std::move(result);
}

MoveInstance inverse(const KnotoidCode& code, const MoveInstance& m) {
  const auto& w = code.word();
  switch (m.kind) {
    case MoveKind::R1Insert:
      return MoveInstance{MoveKind::R1Delete, {m.sites.at(0)}, {}, Pass::Over, {}, false};
    case MoveKind::R1Delete: {
      const Item& it = w.at(m.sites.at(0));
      return MoveInstance{MoveKind::R1Insert, {m.sites[0]}, {it.label}, it.pass, {code.sign(it.label)}, false};
    }
    case MoveKind::R2Insert:
      return MoveInstance{MoveKind::R2Delete, {}, m.labels, m.pass, {}, false};
    case MoveKind::R2Delete: {
      auto site = find_r2_site(code, m.labels.at(0), m.labels.at(1));
      if (!site) throw IllegalMove("no R2 pattern to invert");
      const Item& a = w[site->first];
      const Item& b = w[site->first + 1];
      return MoveInstance{MoveKind::R2Insert,
                          {site->first, site->second - 2},
                          {a.label, b.label},
                          a.pass,
                          {code.sign(a.label), code.sign(b.label)},
                          w[site->second].label != a.label};
    }
    case MoveKind::R3: return m;
  }
  return m;
}

std::string Walk::transcript() const {
  std::ostringstream os;
  os << "start: " << serialize(start) << '\n';
  for (std::size_t i = 0; i < steps.size(); ++i)
    os << i + 1 << ": " << steps[i].move.describe() << " -> " << serialize(steps[i].result) << '\n';
  return os.str();
}

Walk random_walk(const KnotoidCode& code, std::size_t steps, std::uint64_t seed, const WalkOptions& options) {
  build_planar_map(code);
  Walk walk{code, {}};
  std::mt19937_64 rng(seed);
  const std::size_t cap = code.crossing_count() + options.max_extra_crossings;

  for (std::size_t step = 0; step < steps; ++step) {
    const KnotoidCode& current = walk.result();
    std::vector<MoveKind> kinds{MoveKind::R1Delete, MoveKind::R2Delete, MoveKind::R3};
    if (current.crossing_count() + 1 <= cap) kinds.push_back(MoveKind::R1Insert);
    if (current.crossing_count() + 2 <= cap) kinds.push_back(MoveKind::R2Insert);
    std::optional<PlanarMap> map;
    std::vector<MoveInstance> candidates;
    while (!kinds.empty() && candidates.empty()) {
      std::uniform_int_distribution<std::size_t> pick_kind(0, kinds.size() - 1);
      const std::size_t k = pick_kind(rng);
      if (!map) map = build_planar_map(current);
      switch (kinds[k]) {
        case MoveKind::R1Delete: candidates = r1_deletions(current); break;
        case MoveKind::R2Delete: candidates = r2_deletions(current); break;
        case MoveKind::R3: candidates = r3_moves(current, *map); break;
        case MoveKind::R1Insert: candidates = r1_insertions(current); break;
        case MoveKind::R2Insert: candidates = r2_insertions(current, *map); break;
      }
      kinds.erase(kinds.begin() + static_cast<std::ptrdiff_t>(k));
    }
    if (candidates.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    MoveInstance move = candidates[pick(rng)];
    KnotoidCode next = apply(current, move);
    walk.steps.push_back(WalkStep{std::move(move), std::move(next)});
  }
  return walk;
}

}  // namespace knotoid
