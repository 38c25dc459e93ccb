#include "curveslide/coloring.hpp"

#include <numeric>
#include <string>

namespace curveslide {

namespace {

void require_length(const Triangulation& tri, const Coloring& f) {
  if (static_cast<int>(f.size()) != tri.edges())
    fail(Errc::length_mismatch, "coloring has " + std::to_string(f.size()) + " values for " +
                                    std::to_string(tri.edges()) + " edges");
}

}  // namespace

Admissibility check_admissible(const Triangulation& tri, const Coloring& f) {
  require_length(tri, f);
  for (int t = 0; t < tri.triangles(); ++t) {
    int side[3];
    for (int s = 0; s < 3; ++s) side[s] = f[tri.edge_of({t, s})];
    if ((side[0] + side[1] + side[2]) % 2 != 0)
      return {Admissibility::Status::parity_violation, t, {}};
    for (int c = 0; c < 3; ++c)
      if (side[c] + side[(c + 1) % 3] - side[(c + 2) % 3] < 0)
        return {Admissibility::Status::negative_corner, t, Corner{t, c}};
  }
  return {};
}

void require_admissible(const Triangulation& tri, const Coloring& f) {
  Admissibility a = check_admissible(tri, f);
  if (a.ok()) return;
  if (a.status == Admissibility::Status::parity_violation)
    fail(Errc::not_admissible, "odd side sum in triangle " + std::to_string(a.triangle));
  fail(Errc::not_admissible, "negative corner number at corner (" +
                                 std::to_string(a.corner.triangle) + "," +
                                 std::to_string(a.corner.corner) + ")");
}

CornerNumbers corner_numbers(const Triangulation& tri, const Coloring& f) {
  require_admissible(tri, f);
  CornerNumbers cn;
  cn.value.resize(tri.triangles());
  for (int t = 0; t < tri.triangles(); ++t) {
    int side[3];
    for (int s = 0; s < 3; ++s) side[s] = f[tri.edge_of({t, s})];
    for (int c = 0; c < 3; ++c)
      cn.value[t][c] = (side[c] + side[(c + 1) % 3] - side[(c + 2) % 3]) / 2;
  }
  return cn;
}

int weight(const Coloring& f) { return std::accumulate(f.begin(), f.end(), 0); }

StripResult strip_peripherals(const Triangulation& tri, const Coloring& f) {
  require_admissible(tri, f);
  // Each pass lowers every corner number by exactly one, so the number of
  // peripheral components is the minimum corner number.
  CornerNumbers cn = corner_numbers(tri, f);
  int depth = cn.value.empty() ? 0 : cn.value[0][0];
  for (const auto& v : cn.value)
    for (int c = 0; c < 3; ++c) depth = std::min(depth, v[c]);
  StripResult out{f, depth};
  for (int& v : out.coloring) v -= 2 * depth;
  return out;
}

Coloring pushoff_coloring(const Triangulation& tri, int edge, PushoffSide side) {
  if (edge < 0 || edge >= tri.edges()) fail(Errc::invalid_slot, "no edge " + std::to_string(edge));
  const VertexLink& link = tri.link();
  auto [p, q] = link.edge_positions[edge];
  const int n = link.size();
  Coloring out(tri.edges(), 0);
  int from = (side == PushoffSide::ccw) ? p : q;
  int to = (side == PushoffSide::ccw) ? q : p + n;
  for (int k = from + 1; k < to; ++k) out[link.crossings[k % n].edge] += 1;
  return out;
}

}  // namespace curveslide
