#pragma once

#include <array>
#include <compare>
#include <utility>
#include <vector>

#include "curveslide/errors.hpp"

namespace curveslide {

// One side of one triangle before gluing. Sides of a triangle are indexed
// 0,1,2 counterclockwise; side s runs from vertex s to vertex s+1 (mod 3).
struct Slot {
  int triangle = 0;
  int side = 0;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

// Corner c of a triangle lies between sides c and c+1 (mod 3), i.e. at
// vertex c+1. A triangulation with T triangles has 3T corners, all of which
// meet the puncture.
struct Corner {
  int triangle = 0;
  int corner = 0;
  friend auto operator<=>(const Corner&, const Corner&) = default;
};

// The cyclic order of triangle corners and edge ends around the puncture.
// Walking counterclockwise, the corner after (t, c) is the corner (t', c')
// with glued(t, c+1) = (t', c'); the edge end crossed between them is the
// edge of that glued pair. crossings[k] separates corners[k] from
// corners[k+1 mod N], and records the slot one exits through walking
// forward. The walk starts at corner (0, 0).
struct VertexLink {
  struct Crossing {
    int edge = 0;
    Slot out;
  };
  std::vector<Corner> corners;
  std::vector<Crossing> crossings;
  std::vector<int> corner_position;               // 3t+c -> position in corners
  std::vector<std::array<int, 2>> edge_positions; // per edge, its two crossing positions, sorted

  int size() const { return static_cast<int>(corners.size()); }
  int position_of(Corner c) const { return corner_position[3 * c.triangle + c.corner]; }
  // Corners exactly half the link apart.
  bool corners_antipodal(Corner a, Corner b) const;
};

// An ideal triangulation of a once-punctured oriented surface, encoded as a
// rotation system: T triangles whose 3T sides are glued in pairs. Immutable
// after construction; safe to share across threads.
class Triangulation {
 public:
  // Validates and builds. Edge indices are assigned in pair order.
  // Throws Error with code duplicate_slot, self_gluing, folded_triangle,
  // bad_count, invalid_slot or multiple_punctures on invalid input.
  static Triangulation from_gluing(const std::vector<std::pair<Slot, Slot>>& pairs);

  int triangles() const { return triangle_count_; }
  int edges() const { return edge_count_; }
  int link_size() const { return 3 * triangle_count_; }

  Slot glued(Slot s) const { return glued_[slot_id(s)]; }
  int edge_of(Slot s) const { return edge_of_[slot_id(s)]; }
  const std::pair<Slot, Slot>& edge_slots(int edge) const { return edge_slots_[edge]; }
  const std::vector<std::pair<Slot, Slot>>& gluing_pairs() const { return edge_slots_; }

  const VertexLink& link() const { return link_; }
  // Edges whose two ends are exactly half the link apart, sorted.
  const std::vector<int>& antipodal_edges() const { return antipodal_; }

  int slot_id(Slot s) const { return 3 * s.triangle + s.side; }

 private:
  Triangulation() = default;

  int triangle_count_ = 0;
  int edge_count_ = 0;
  std::vector<Slot> glued_;
  std::vector<int> edge_of_;
  std::vector<std::pair<Slot, Slot>> edge_slots_;
  VertexLink link_;
  std::vector<int> antipodal_;
};

// The once-punctured genus-g surface, g >= 1: a 4g-gon with boundary word
// a1 b1 a1' b1' a2 b2 ... fan-triangulated from one vertex. 4g-2 triangles,
// 6g-3 edges. Boundary identifications are listed first, then the fan
// diagonals.
Triangulation standard_surface(int genus);

// The two-triangle punctured torus with sides glued straight across:
// (0,s) to (1,s) for s = 0,1,2. Edge order a, b, c.
Triangulation punctured_torus();

}  // namespace curveslide
