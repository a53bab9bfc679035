#pragma once

// Reidemeister moves as rewrites of the Gauss word.
//
// Every move happens inside a disk that avoids the endpoints. A candidate
// rewrite is accepted only when the disk is a face of the relevant spherical
// map: the monogon of a kink, the bigon of an R2 pair, or the triangle of an
// R3 site. Insertions are checked on the result, deletions and R3 on the
// source.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "knotoid/codes.hpp"

namespace knotoid {

enum class MoveKind { R1Insert, R1Delete, R2Insert, R2Delete, R3 };

std::string to_string(MoveKind kind);

struct MoveInstance {
  MoveKind kind = MoveKind::R1Insert;
  // R1Insert: {gap}.  R2Insert: {first gap, second gap} with first <= second,
  // gaps numbered in the source word (gap i sits before item i).
  // R1Delete: {position of the first item}.  R3: the three segment starts,
  // each segment being items (p, p+1).
  std::vector<std::size_t> sites;
  // R1Insert: {k}.  R2Insert / R2Delete: {x, y} in the order met at the first gap.
  std::vector<std::string> labels;
  // Pass of the first inserted item (R1Insert) or of both items at the first gap (R2Insert).
  Pass pass = Pass::Over;
  // Signs of the inserted labels, parallel to `labels`.
  std::vector<int> signs;
  // R2 only: the second strand meets the pair in the reverse order.
  bool antiparallel = false;

  std::string describe() const;

  friend bool operator==(const MoveInstance&, const MoveInstance&) = default;
};

// Deletions, R3 sites, and the bounded insertion set: R1 at every gap in
// both pass orders and both signs, R2 for every pair of gaps whose edges
// share a face (both strand orders, both pass choices, both sign patterns).
std::vector<MoveInstance> enumerate_moves(const KnotoidCode& code);

// Throws IllegalMove if the pattern is absent or the move is not planar.
KnotoidCode apply(const KnotoidCode& code, const MoveInstance& move);

// The move that undoes `move` on apply(code, move).
MoveInstance inverse(const KnotoidCode& code, const MoveInstance& move);

bool is_legal(const KnotoidCode& code, const MoveInstance& move);

// Smallest label of the form "k<N>" unused in the code, skipping `taken`.
std::string fresh_label(const KnotoidCode& code, const std::vector<std::string>& taken = {});

struct WalkStep {
  MoveInstance move;
  KnotoidCode result;
};

struct Walk {
  KnotoidCode start;
  std::vector<WalkStep> steps;
  const KnotoidCode& result() const { return steps.empty() ? start : steps.back().result; }
  // One line per applied move, replayable by hand.
  std::string transcript() const;
};

struct WalkOptions {
  // Insertions never take the diagram more than this many crossings past the
  // starting code.
  std::size_t max_extra_crossings = 4;
};

// Each step draws a move kind uniformly among the kinds with legal
// candidates, then a candidate uniformly; deterministic given the seed.
Walk random_walk(const KnotoidCode& code, std::size_t steps, std::uint64_t seed,
                 const WalkOptions& options = {});

}  // namespace knotoid
