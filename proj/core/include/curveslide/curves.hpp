#pragma once

#include "curveslide/coloring.hpp"

namespace curveslide {

// One passage of a curve through a triangle, entering and leaving through
// the named sides. A normal visit uses two distinct sides and cuts the
// corner between them; an entry == exit visit is a removable return.
struct Visit {
  int triangle = 0;
  int entry = 0;
  int exit = 0;
  bool same_slot() const { return entry == exit; }
  friend auto operator<=>(const Visit&, const Visit&) = default;
};

// A closed component: a cyclic word of visits, consecutive visits joined
// through glued slots. A component crossing every edge exactly twice runs
// once around the puncture (peripheral).
struct Component {
  std::vector<Visit> word;
  Coloring coloring;        // this component's crossings per edge
  bool peripheral = false;
};

// The multicurve of a coloring, made explicit. Systems built by trace()
// carry a depth index: the arcs cutting each corner ordered from the
// puncture outwards, and the crossing points along each edge ordered from
// the edge's canonical end (the end with the smaller link position).
class CurveSystem {
 public:
  struct ArcRef {
    int component = 0;
    int visit = 0;
  };

  CurveSystem() = default;

  // Builds from raw cyclic visit words, checking that consecutive visits
  // pass through glued slots. No depth index.
  static CurveSystem from_words(const Triangulation& tri, std::vector<std::vector<Visit>> words);

  const std::vector<Component>& components() const { return components_; }
  bool normal() const;
  bool indexed() const { return indexed_; }

  // Arcs cutting a corner, innermost (depth 1) first. Traced systems only.
  const std::vector<ArcRef>& arcs_at(const Triangulation& tri, Corner c) const;
  // Per edge, the visit entered through each crossing point, in canonical
  // point order. Traced systems only.
  const std::vector<std::vector<ArcRef>>& edge_crossings() const;

 private:
  friend CurveSystem trace(const Triangulation&, const Coloring&);
  friend CurveSystem normalize(const Triangulation&, const CurveSystem&);

  std::vector<Component> components_;
  std::vector<std::vector<ArcRef>> corner_arcs_;     // 3t+c -> arcs by depth
  std::vector<std::vector<ArcRef>> edge_crossings_;  // edge -> refs by canonical point
  bool indexed_ = false;
};

// Reconstructs the multicurve realizing an admissible coloring: each corner
// is cut by a nested family of arcs counted by its corner number, and arcs
// match across each edge by position from the canonical end. Deterministic;
// components are listed in order of first discovery along the edges.
CurveSystem trace(const Triangulation& tri, const Coloring& f);

// Shorthand for cs.components(); requires a normal system.
const std::vector<Component>& components(const Triangulation& tri, const CurveSystem& cs);

// Removes every entry == exit visit: its two crossings on that edge are
// erased and the two neighboring visits (both in the glued triangle) are
// spliced into one, which is re-examined. A two-visit component whose
// return is removed vanishes entirely. Each splice step removes exactly two
// crossings, so normalization ends within weight/2 steps.
CurveSystem normalize(const Triangulation& tri, const CurveSystem& cs);

// In-place form returning the number of splice steps. Drops vanished
// components.
int normalize_words(const Triangulation& tri, std::vector<std::vector<Visit>>& words);

// Per-edge crossing counts. Throws not_normal if a same-slot visit remains;
// the counts of a normal system are the admissible coloring of its isotopy
// class.
Coloring coloring_of(const Triangulation& tri, const CurveSystem& cs);

}  // namespace curveslide
