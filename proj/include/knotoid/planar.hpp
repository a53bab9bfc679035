#pragma once

// Combinatorial map of a knotoid diagram in the sphere and the homology of
// crossing loops in the annulus obtained by deleting small disks around the
// two endpoints.
//
// Vertex ids: crossings 0..n-1 (in label first-occurrence order), then the
// leg (beginning) n and the head (end) n+1. Edge i runs from the vertex of
// word item i-1 (the leg for i = 0) to the vertex of item i (the head for
// i = 2n), so there are 2n+1 edges oriented along the diagram. Half-edge
// 2i is the tail end of edge i, 2i+1 its head end.
//
// The counterclockwise rotation at a crossing of sign +1 is
// (over-out, under-out, over-in, under-in); for -1 it is
// (over-out, under-in, over-in, under-out).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "knotoid/codes.hpp"
#include "knotoid/homology.hpp"
#include "knotoid/skew.hpp"

namespace knotoid {

struct Dart {
  std::size_t edge = 0;
  bool forward = true;  // along the diagram orientation

  friend bool operator==(const Dart&, const Dart&) = default;
};

class PlanarMap {
 public:
  std::size_t crossing_count() const noexcept { return crossings_; }
  std::size_t vertex_count() const noexcept { return crossings_ + 2; }
  std::size_t edge_count() const noexcept { return 2 * crossings_ + 1; }
  std::size_t face_count() const noexcept { return faces_.size(); }
  long euler_characteristic() const noexcept {
    return static_cast<long>(vertex_count()) - static_cast<long>(edge_count()) +
           static_cast<long>(face_count());
  }
  bool is_spherical() const noexcept { return euler_characteristic() == 2; }

  std::size_t leg_vertex() const noexcept { return crossings_; }
  std::size_t head_vertex() const noexcept { return crossings_ + 1; }
  // Counterclockwise half-edges around `vertex`.
  const std::vector<std::size_t>& rotation(std::size_t vertex) const { return rotation_.at(vertex); }
  // Each face is a cycle of darts traversed with the face on the left.
  const std::vector<std::vector<Dart>>& faces() const noexcept { return faces_; }
  std::size_t left_face(std::size_t edge) const { return left_.at(edge); }
  std::size_t right_face(std::size_t edge) const { return right_.at(edge); }
  const std::string& crossing_label(std::size_t vertex) const { return labels_.at(vertex); }
  std::size_t crossing_vertex(const std::string& label) const;
  // Word positions of the two passes through a crossing vertex.
  const KnotoidCode::Positions& crossing_positions(std::size_t vertex) const {
    return positions_.at(vertex);
  }

  // Index of a face whose boundary uses exactly the given edges, each once.
  std::optional<std::size_t> face_with_edges(std::vector<std::size_t> edges) const;

 private:
  friend PlanarMap trace_planar_map(const KnotoidCode& code);

  std::size_t crossings_ = 0;
  std::vector<std::string> labels_;
  std::vector<KnotoidCode::Positions> positions_;
  std::vector<std::vector<std::size_t>> rotation_;
  std::vector<std::vector<Dart>> faces_;
  std::vector<std::size_t> left_;
  std::vector<std::size_t> right_;
};

// Builds the map on whatever closed surface the rotation system defines;
// it is spherical exactly when the code is realizable.
PlanarMap trace_planar_map(const KnotoidCode& code);
// As trace_planar_map, but throws NonRealizable unless the map is spherical.
PlanarMap build_planar_map(const KnotoidCode& code);
bool is_realizable(const KnotoidCode& code);

struct EndpointFaces {
  std::size_t leg_face = 0;
  std::size_t head_face = 0;
};

EndpointFaces endpoint_faces(const PlanarMap& map);

enum class CrossDirection { RightToLeft, LeftToRight };

struct DualStep {
  std::size_t edge = 0;
  CrossDirection direction = CrossDirection::RightToLeft;

  friend bool operator==(const DualStep&, const DualStep&) = default;
};

// Path of an arc from the head face to the leg face, one step per crossed edge.
using DualArc = std::vector<DualStep>;

// Breadth-first shortest dual path; ties go to the smallest edge index.
DualArc dual_arc(const PlanarMap& map);

// Every simple dual path (no face visited twice) from head face to leg face.
std::vector<DualArc> all_simple_dual_arcs(const PlanarMap& map);

// Edges of the loop l(x): the diagram between the two passes through x.
std::vector<std::size_t> loop_edges(const KnotoidCode& code, const std::string& x);
std::vector<std::size_t> loop_edges(const PlanarMap& map, const std::string& x);

// Intersection number of l(x) with the arc, as a multiple of the annulus
// generator g. Orientation of g is fixed so that [l(a)] = +g for the code
// "Oa Ub Ua Ob ; a=+1 b=+1".
HomologyClass loop_class(const PlanarMap& map, const DualArc& arc, const std::string& x);

// Throws NonRealizable for virtual codes.
ClassMap all_loop_classes(const KnotoidCode& code);

}  // namespace knotoid
