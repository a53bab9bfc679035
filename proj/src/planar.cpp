#include "knotoid/planar.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace knotoid {

namespace {

// Sign convention of the intersection pairing relative to the annulus
// generator; calibrated on the 2-crossing code "Oa Ub Ua Ob" (see header).
constexpr Integer kGeneratorOrientation = 1;

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

}  // namespace

std::size_t PlanarMap::crossing_vertex(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw UnknownLabel(label);
  return static_cast<std::size_t>(it - labels_.begin());
}

std::optional<std::size_t> PlanarMap::face_with_edges(std::vector<std::size_t> edges) const {
  std::sort(edges.begin(), edges.end());
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    if (faces_[f].size() != edges.size()) continue;
    std::vector<std::size_t> got;
    for (const Dart& d : faces_[f]) got.push_back(d.edge);
    std::sort(got.begin(), got.end());
    if (got == edges) return f;
  }
  return std::nullopt;
}

PlanarMap trace_planar_map(const KnotoidCode& code) {
  PlanarMap m;
  const std::size_t n = code.crossing_count();
  const std::size_t edges = 2 * n + 1;
  m.crossings_ = n;
  m.labels_ = code.labels();
  m.rotation_.resize(n + 2);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& pos = code.positions(m.labels_[v]);
    m.positions_.push_back(pos);
    const std::size_t over_in = 2 * pos.over + 1;
    const std::size_t over_out = 2 * (pos.over + 1);
    const std::size_t under_in = 2 * pos.under + 1;
    const std::size_t under_out = 2 * (pos.under + 1);
    if (code.sign(m.labels_[v]) > 0)
      m.rotation_[v] = {over_out, under_out, over_in, under_in};
    else
      m.rotation_[v] = {over_out, under_in, over_in, under_out};
  }
  m.rotation_[n] = {0};
  m.rotation_[n + 1] = {2 * (edges - 1) + 1};

  // Vertex and rotation slot of every half-edge.
  std::vector<std::size_t> vertex_of(2 * edges), slot_of(2 * edges);
  for (std::size_t v = 0; v < m.rotation_.size(); ++v)
    for (std::size_t i = 0; i < m.rotation_[v].size(); ++i) {
      vertex_of[m.rotation_[v][i]] = v;
      slot_of[m.rotation_[v][i]] = i;
    }

  // Dart 2e runs forward along edge e, dart 2e+1 backward; a dart's id is
  // the id of the half-edge it leaves from.
  auto arriving_half = [](std::size_t dart) { return dart % 2 == 0 ? dart + 1 : dart - 1; };

  std::vector<std::size_t> face_of(2 * edges, kNone);
  for (std::size_t start = 0; start < 2 * edges; ++start) {
    if (face_of[start] != kNone) continue;
    const std::size_t f = m.faces_.size();
    m.faces_.emplace_back();
    std::size_t dart = start;
    do {
      face_of[dart] = f;
      m.faces_[f].push_back(Dart{dart / 2, dart % 2 == 0});
      const std::size_t h = arriving_half(dart);
      const auto& rot = m.rotation_[vertex_of[h]];
      const std::size_t next_half = rot[(slot_of[h] + rot.size() - 1) % rot.size()];
      dart = next_half;
    } while (dart != start);
  }

  m.left_.resize(edges);
  m.right_.resize(edges);
  for (std::size_t e = 0; e < edges; ++e) {
    m.left_[e] = face_of[2 * e];
    m.right_[e] = face_of[2 * e + 1];
  }
  return m;
}

PlanarMap build_planar_map(const KnotoidCode& code) {
  PlanarMap m = trace_planar_map(code);
  if (!m.is_spherical())
    throw NonRealizable("code '" + serialize(code) + "' has no diagram in the sphere (Euler characteristic " +
                        std::to_string(m.euler_characteristic()) + ")");
  return m;
}

bool is_realizable(const KnotoidCode& code) { return trace_planar_map(code).is_spherical(); }

EndpointFaces endpoint_faces(const PlanarMap& map) {
  return EndpointFaces{map.left_face(0), map.left_face(map.edge_count() - 1)};
}

DualArc dual_arc(const PlanarMap& map) {
  const auto [leg, head] = endpoint_faces(map);
  if (leg == head) return {};
  const std::size_t faces = map.face_count();
  std::vector<std::size_t> via_edge(faces, kNone);
  std::vector<std::size_t> parent(faces, kNone);
  std::vector<bool> seen(faces, false);
  std::deque<std::size_t> queue{head};
  seen[head] = true;
  while (!queue.empty() && !seen[leg]) {
    const std::size_t f = queue.front();
    queue.pop_front();
    for (std::size_t e = 0; e < map.edge_count(); ++e) {
      const std::size_t l = map.left_face(e), r = map.right_face(e);
      if (l == r) continue;
      std::size_t to = kNone;
      if (r == f) to = l;
      else if (l == f) to = r;
      if (to == kNone || seen[to]) continue;
      seen[to] = true;
      parent[to] = f;
      via_edge[to] = e;
      queue.push_back(to);
    }
  }
  DualArc arc;
  for (std::size_t f = leg; f != head; f = parent[f]) {
    const std::size_t e = via_edge[f];
    arc.push_back(DualStep{e, map.left_face(e) == f ? CrossDirection::RightToLeft
                                                    : CrossDirection::LeftToRight});
  }
  std::reverse(arc.begin(), arc.end());
  return arc;
}

std::vector<DualArc> all_simple_dual_arcs(const PlanarMap& map) {
  const auto [leg, head] = endpoint_faces(map);
  std::vector<DualArc> out;
  std::vector<bool> visited(map.face_count(), false);
  DualArc path;
  std::function<void(std::size_t)> dfs = [&](std::size_t f) {
    if (f == leg) {
      out.push_back(path);
      return;
    }
    for (std::size_t e = 0; e < map.edge_count(); ++e) {
      const std::size_t l = map.left_face(e), r = map.right_face(e);
      if (l == r) continue;
      for (int side = 0; side < 2; ++side) {
        const std::size_t from = side == 0 ? r : l;
        const std::size_t to = side == 0 ? l : r;
        if (from != f || visited[to]) continue;
        visited[to] = true;
        path.push_back(DualStep{e, side == 0 ? CrossDirection::RightToLeft : CrossDirection::LeftToRight});
        dfs(to);
        path.pop_back();
        visited[to] = false;
      }
    }
  };
  visited[head] = true;
  dfs(head);
  return out;
}

namespace {

std::vector<std::size_t> edges_between(const KnotoidCode::Positions& pos) {
  std::vector<std::size_t> out;
  for (std::size_t e = pos.first() + 1; e <= pos.second(); ++e) out.push_back(e);
  return out;
}

}  // namespace

std::vector<std::size_t> loop_edges(const KnotoidCode& code, const std::string& x) {
  return edges_between(code.positions(x));
}

std::vector<std::size_t> loop_edges(const PlanarMap& map, const std::string& x) {
  return edges_between(map.crossing_positions(map.crossing_vertex(x)));
}

HomologyClass loop_class(const PlanarMap& map, const DualArc& arc, const std::string& x) {
  const auto& pos = map.crossing_positions(map.crossing_vertex(x));
  Integer count = 0;
  for (const DualStep& step : arc) {
    if (step.edge <= pos.first() || step.edge > pos.second()) continue;
    count += step.direction == CrossDirection::RightToLeft ? 1 : -1;
  }
  return class_of_rank1(kGeneratorOrientation * count);
}

ClassMap all_loop_classes(const KnotoidCode& code) {
  const PlanarMap map = build_planar_map(code);
  const DualArc arc = dual_arc(map);
  ClassMap classes;
  for (const auto& label : code.labels()) classes.emplace(label, loop_class(map, arc, label));
  return classes;
}

}  // namespace knotoid
