#include "curveslide/curves.hpp"

#include <algorithm>
#include <string>

// The multicurve of an admissible coloring is reconstructed triangle by
// triangle. In a triangle with side values (a, b, c) the arcs cutting each
// corner are counted by the corner numbers; along a side the points nearest
// an endpoint belong to the corner at that endpoint, and the arcs at one
// corner are nested with depth 1 innermost (closest to the puncture).
//
// Coordinates used here: side s of a triangle runs from vertex s to vertex
// s+1, and `along` counts crossing points from vertex s. The arc at corner
// c with depth d meets side c at along f(c)-d and side c+1 at along d-1.
// Gluings reverse orientation, so crossing an edge sends along j to
// f-1-j on the glued slot. Crossing points of an edge are published in
// canonical order: counted from the end of the edge with the smaller
// position in the vertex link.

namespace curveslide {

namespace {

Coloring word_coloring(const Triangulation& tri, const std::vector<Visit>& word) {
  Coloring c(tri.edges(), 0);
  for (const Visit& v : word) c[tri.edge_of({v.triangle, v.entry})] += 1;
  return c;
}

bool all_twos(const Coloring& c) {
  return std::all_of(c.begin(), c.end(), [](int v) { return v == 2; });
}

Component make_component(const Triangulation& tri, std::vector<Visit> word) {
  Component comp;
  comp.coloring = word_coloring(tri, word);
  comp.peripheral = all_twos(comp.coloring);
  comp.word = std::move(word);
  return comp;
}

void check_word(const Triangulation& tri, const std::vector<Visit>& word) {
  if (word.empty()) fail(Errc::internal, "empty visit word");
  const int n = static_cast<int>(word.size());
  for (int i = 0; i < n; ++i) {
    const Visit& v = word[i];
    if (v.triangle < 0 || v.triangle >= tri.triangles() || v.entry < 0 || v.entry > 2 ||
        v.exit < 0 || v.exit > 2)
      fail(Errc::invalid_slot, "visit out of range");
    const Visit& w = word[(i + 1) % n];
    if (tri.glued({v.triangle, v.exit}) != Slot{w.triangle, w.entry})
      fail(Errc::internal, "consecutive visits do not pass through glued slots");
  }
}

}  // namespace

CurveSystem CurveSystem::from_words(const Triangulation& tri,
                                    std::vector<std::vector<Visit>> words) {
  CurveSystem cs;
  for (auto& w : words) {
    check_word(tri, w);
    cs.components_.push_back(make_component(tri, std::move(w)));
  }
  return cs;
}

bool CurveSystem::normal() const {
  for (const Component& c : components_)
    for (const Visit& v : c.word)
      if (v.same_slot()) return false;
  return true;
}

const std::vector<CurveSystem::ArcRef>& CurveSystem::arcs_at(const Triangulation& tri,
                                                             Corner c) const {
  if (!indexed_) fail(Errc::internal, "curve system has no depth index (not built by trace)");
  return corner_arcs_[3 * c.triangle + c.corner];
}

const std::vector<std::vector<CurveSystem::ArcRef>>& CurveSystem::edge_crossings() const {
  if (!indexed_) fail(Errc::internal, "curve system has no depth index (not built by trace)");
  return edge_crossings_;
}

CurveSystem trace(const Triangulation& tri, const Coloring& f) {
  require_admissible(tri, f);
  const CornerNumbers cn = corner_numbers(tri, f);
  const VertexLink& link = tri.link();

  // Per slot: value of its edge and whether the canonical end of that edge
  // is the slot's low end (vertex s).
  const int slots = 3 * tri.triangles();
  std::vector<int> slot_value(slots);
  std::vector<char> canonical_is_low(slots);
  for (int e = 0; e < tri.edges(); ++e) {
    auto [a, b] = tri.edge_slots(e);
    int pos_low_a = link.position_of({a.triangle, (a.side + 2) % 3});
    int pos_low_b = link.position_of({b.triangle, (b.side + 2) % 3});
    slot_value[tri.slot_id(a)] = slot_value[tri.slot_id(b)] = f[e];
    canonical_is_low[tri.slot_id(a)] = pos_low_a < pos_low_b;
    canonical_is_low[tri.slot_id(b)] = pos_low_b < pos_low_a;
  }
  auto canonical_index = [&](Slot s, int along) {
    return canonical_is_low[tri.slot_id(s)] ? along : slot_value[tri.slot_id(s)] - 1 - along;
  };

  CurveSystem cs;
  cs.indexed_ = true;
  cs.corner_arcs_.resize(slots);
  for (int t = 0; t < tri.triangles(); ++t)
    for (int c = 0; c < 3; ++c) cs.corner_arcs_[3 * t + c].resize(cn.value[t][c]);
  cs.edge_crossings_.resize(tri.edges());
  for (int e = 0; e < tri.edges(); ++e) cs.edge_crossings_[e].resize(f[e]);

  std::vector<std::vector<char>> seen(tri.edges());
  for (int e = 0; e < tri.edges(); ++e) seen[e].assign(f[e], 0);

  for (int e0 = 0; e0 < tri.edges(); ++e0) {
    for (int k0 = 0; k0 < f[e0]; ++k0) {
      if (seen[e0][k0]) continue;
      auto [a, b] = tri.edge_slots(e0);
      Slot start = std::min(a, b);
      int start_along = canonical_is_low[tri.slot_id(start)] ? k0 : f[e0] - 1 - k0;

      std::vector<Visit> word;
      const int comp = static_cast<int>(cs.components_.size());
      Slot slot = start;
      int along = start_along;
      do {
        const int t = slot.triangle, s = slot.side;
        const int edge = tri.edge_of(slot);
        seen[edge][canonical_index(slot, along)] = 1;
        cs.edge_crossings_[edge][canonical_index(slot, along)] = {
            comp, static_cast<int>(word.size())};
        // Low points on side s belong to the corner at vertex s, the rest
        // to the corner at vertex s+1.
        const int low_corner = (s + 2) % 3;
        int corner, depth, exit_side, exit_along;
        if (along < cn.value[t][low_corner]) {
          corner = low_corner;
          depth = along + 1;
          exit_side = (s + 2) % 3;
          exit_along = slot_value[tri.slot_id({t, exit_side})] - depth;
        } else {
          corner = s;
          depth = slot_value[tri.slot_id(slot)] - along;
          exit_side = (s + 1) % 3;
          exit_along = depth - 1;
        }
        cs.corner_arcs_[3 * t + corner][depth - 1] = {comp, static_cast<int>(word.size())};
        word.push_back({t, s, exit_side});
        Slot out{t, exit_side};
        slot = tri.glued(out);
        along = slot_value[tri.slot_id(out)] - 1 - exit_along;
      } while (!(slot == start && along == start_along));
      cs.components_.push_back(make_component(tri, std::move(word)));
    }
  }
  return cs;
}

const std::vector<Component>& components(const Triangulation& tri, const CurveSystem& cs) {
  (void)tri;
  if (!cs.normal()) fail(Errc::not_normal, "curve system has a same-slot visit");
  return cs.components();
}

int normalize_words(const Triangulation& tri, std::vector<std::vector<Visit>>& words) {
  int steps = 0;
  for (size_t idx = 0; idx < words.size();) {
    std::vector<Visit>& w = words[idx];
    const int n = static_cast<int>(w.size());
    int pos = -1;
    for (int i = 0; i < n; ++i)
      if (w[i].same_slot()) {
        pos = i;
        break;
      }
    if (pos < 0) {
      ++idx;
      continue;
    }
    if (n == 1) fail(Errc::internal, "one-visit component cannot close up");
    if (n == 2) {
      // Removing the return erases both crossings; what remains is a closed
      // circle inside one triangle, which crosses nothing and vanishes.
      ++steps;
      words.erase(words.begin() + static_cast<long>(idx));
      continue;
    }
    const int pred = (pos + n - 1) % n, succ = (pos + 1) % n;
    if (w[pred].triangle != w[succ].triangle)
      fail(Errc::internal, "splice neighbors in different triangles");
    Visit merged{w[pred].triangle, w[pred].entry, w[succ].exit};
    std::vector<Visit> nw;
    nw.reserve(n - 2);
    for (int i = 1; i <= n - 3; ++i) nw.push_back(w[(succ + i) % n]);
    nw.push_back(merged);
    w = std::move(nw);
    ++steps;
  }
  (void)tri;
  return steps;
}

CurveSystem normalize(const Triangulation& tri, const CurveSystem& cs) {
  std::vector<std::vector<Visit>> words;
  words.reserve(cs.components().size());
  for (const Component& c : cs.components()) words.push_back(c.word);
  normalize_words(tri, words);
  return CurveSystem::from_words(tri, std::move(words));
}

Coloring coloring_of(const Triangulation& tri, const CurveSystem& cs) {
  if (!cs.normal()) fail(Errc::not_normal, "curve system has a same-slot visit");
  Coloring total(tri.edges(), 0);
  for (const Component& c : cs.components())
    for (int e = 0; e < tri.edges(); ++e) total[e] += c.coloring[e];
  return total;
}

}  // namespace curveslide
