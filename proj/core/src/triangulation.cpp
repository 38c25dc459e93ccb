#include "curveslide/triangulation.hpp"

#include <algorithm>
#include <string>

namespace curveslide {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::duplicate_slot: return "duplicate slot";
    case Errc::self_gluing: return "self gluing";
    case Errc::folded_triangle: return "folded triangle";
    case Errc::multiple_punctures: return "multiple punctures";
    case Errc::bad_count: return "bad count";
    case Errc::invalid_slot: return "invalid slot";
    case Errc::length_mismatch: return "length mismatch";
    case Errc::not_admissible: return "not admissible";
    case Errc::not_normal: return "not normal";
    case Errc::band_not_maximal: return "band not maximal";
    case Errc::peripheral_present: return "peripheral present";
    case Errc::cap_too_small: return "cap too small";
    case Errc::not_torus_fixture: return "not the torus fixture";
    case Errc::parse_error: return "parse error";
    case Errc::internal: return "internal error";
  }
  return "unknown error";
}

namespace {

std::string slot_str(Slot s) {
  return "(" + std::to_string(s.triangle) + "," + std::to_string(s.side) + ")";
}

}  // namespace

bool VertexLink::corners_antipodal(Corner a, Corner b) const {
  int n = size();
  int d = position_of(a) - position_of(b);
  d = ((d % n) + n) % n;
  return 2 * d == n;
}

Triangulation Triangulation::from_gluing(const std::vector<std::pair<Slot, Slot>>& pairs) {
  if (pairs.empty()) fail(Errc::bad_count, "no gluing pairs");

  int max_triangle = -1;
  for (const auto& [a, b] : pairs) {
    for (Slot s : {a, b}) {
      if (s.triangle < 0 || s.side < 0 || s.side > 2)
        fail(Errc::invalid_slot, "slot " + slot_str(s) + " out of range");
      max_triangle = std::max(max_triangle, s.triangle);
    }
    if (a == b) fail(Errc::self_gluing, "slot " + slot_str(a) + " glued to itself");
    if (a.triangle == b.triangle)
      fail(Errc::folded_triangle,
           "slots " + slot_str(a) + " and " + slot_str(b) + " of one triangle glued");
  }

  Triangulation tri;
  tri.triangle_count_ = max_triangle + 1;
  const int t = tri.triangle_count_;
  if (2 * static_cast<int>(pairs.size()) != 3 * t)
    fail(Errc::bad_count, std::to_string(pairs.size()) + " pairs for " + std::to_string(t) +
                              " triangles; need 3T/2");
  tri.edge_count_ = static_cast<int>(pairs.size());

  tri.glued_.assign(3 * t, Slot{-1, -1});
  tri.edge_of_.assign(3 * t, -1);
  tri.edge_slots_ = pairs;
  for (int e = 0; e < tri.edge_count_; ++e) {
    const auto& [a, b] = pairs[e];
    for (Slot s : {a, b})
      if (tri.edge_of_[tri.slot_id(s)] != -1)
        fail(Errc::duplicate_slot, "slot " + slot_str(s) + " appears in two gluing pairs");
    tri.glued_[tri.slot_id(a)] = b;
    tri.glued_[tri.slot_id(b)] = a;
    tri.edge_of_[tri.slot_id(a)] = e;
    tri.edge_of_[tri.slot_id(b)] = e;
  }

  // Walk the vertex link from corner (0,0). A single puncture means one
  // cycle through all 3T corners.
  const int n = 3 * t;
  VertexLink& link = tri.link_;
  link.corners.reserve(n);
  link.crossings.reserve(n);
  link.corner_position.assign(n, -1);
  Corner cur{0, 0};
  for (int step = 0; step < n; ++step) {
    if (link.corner_position[3 * cur.triangle + cur.corner] != -1)
      fail(Errc::multiple_punctures, "vertex link closes after " + std::to_string(step) +
                                         " of " + std::to_string(n) + " corners");
    link.corner_position[3 * cur.triangle + cur.corner] = step;
    link.corners.push_back(cur);
    Slot out{cur.triangle, (cur.corner + 1) % 3};
    Slot in = tri.glued(out);
    link.crossings.push_back({tri.edge_of(out), out});
    cur = Corner{in.triangle, in.side};
  }
  if (!(cur == Corner{0, 0}))
    fail(Errc::multiple_punctures, "vertex link is not a single cycle");

  link.edge_positions.assign(tri.edge_count_, {-1, -1});
  for (int k = 0; k < n; ++k) {
    auto& pos = link.edge_positions[link.crossings[k].edge];
    (pos[0] == -1 ? pos[0] : pos[1]) = k;
  }
  for (int e = 0; e < tri.edge_count_; ++e)
    if (tri.link_.edge_positions[e][1] == -1)
      fail(Errc::internal, "edge " + std::to_string(e) + " crossed once in the link");

  for (int e = 0; e < tri.edge_count_; ++e) {
    auto [p, q] = tri.link_.edge_positions[e];
    if (2 * (q - p) == n) tri.antipodal_.push_back(e);
  }
  return tri;
}

Triangulation standard_surface(int genus) {
  if (genus < 1) fail(Errc::bad_count, "genus must be >= 1");
  const int g = genus;
  // Polygon vertices V0..V_{4g-1} counterclockwise, sides S_i = V_i V_{i+1}.
  // Triangle t (t = 0..4g-3) has vertices (V0, V_{t+1}, V_{t+2}); its side 1
  // is the polygon side S_{t+1}, sides 0 and 2 are fan diagonals except at
  // the two ends of the fan where they are S_0 and S_{4g-1}.
  auto polygon_slot = [&](int i) -> Slot {
    if (i == 0) return {0, 0};
    if (i == 4 * g - 1) return {4 * g - 3, 2};
    return {i - 1, 1};
  };
  std::vector<std::pair<Slot, Slot>> pairs;
  for (int k = 0; k < g; ++k) {
    pairs.emplace_back(polygon_slot(4 * k), polygon_slot(4 * k + 2));
    pairs.emplace_back(polygon_slot(4 * k + 1), polygon_slot(4 * k + 3));
  }
  for (int t = 0; t + 1 <= 4 * g - 3; ++t) pairs.emplace_back(Slot{t, 2}, Slot{t + 1, 0});
  return Triangulation::from_gluing(pairs);
}

Triangulation punctured_torus() {
  return Triangulation::from_gluing({{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}});
}

}  // namespace curveslide
