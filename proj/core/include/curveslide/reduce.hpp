#pragma once

#include <cstdint>
#include <optional>

#include "curveslide/slide.hpp"

namespace curveslide {

// One applied slide. plateau marks zero-delta steps taken while searching a
// weight plateau for a descent; outside those, weights strictly decrease.
struct ReductionStep {
  Band band;
  int delta = 0;
  Coloring coloring;  // coloring after this step
  bool plateau = false;
};

struct ReductionTrace {
  Coloring initial;
  Coloring stripped;       // initial minus peripheral components
  Coloring final_coloring; // admits no weight-decreasing slide
  int peripheral_count = 0;
  std::vector<ReductionStep> steps;
  bool plateau_used = false;
};

// Reduces to least weight: strips peripheral components, then repeatedly
// applies the slide with the most negative measured delta (ties broken by
// smallest band start). When no slide decreases weight, a breadth-first
// search over zero-delta slides looks for a coloring that admits a descent;
// reduction ends when that closure contains none.
ReductionTrace reduce(const Triangulation& tri, const Coloring& f);

// All least-weight colorings representing the same diagram of the closed
// surface, with a weight-preserving slide path (band start positions) from
// the reduced representative to each member.
struct MinimalSet {
  std::vector<Coloring> colorings;      // sorted
  std::vector<std::vector<int>> moves;  // moves[i] leads from reduction.final_coloring to colorings[i]
  int weight = 0;
  ReductionTrace reduction;
};

MinimalSet minimal_set(const Triangulation& tri, const Coloring& f);

// A replayable chain of slides: starting from `start`, slide the maximal
// band at each listed start position in turn, ending at `end`.
struct SlidePath {
  Coloring start;
  std::vector<int> band_starts;
  Coloring end;
};

// Applies a slide path; throws band_not_maximal if a listed band is absent.
Coloring replay(const Triangulation& tri, const SlidePath& path);

struct EquivalenceCertificate {
  Coloring common;   // least common minimal coloring
  SlidePath from_f;  // stripped f -> common
  SlidePath from_g;  // stripped g -> common
};

// Two colorings represent the same diagram of the closed surface exactly
// when their peripheral counts match and their minimal sets meet (in which
// case the sets are equal).
struct EquivalenceVerdict {
  bool equivalent = false;
  int peripheral_f = 0;
  int peripheral_g = 0;
  std::optional<EquivalenceCertificate> certificate;
};

EquivalenceVerdict equivalent(const Triangulation& tri, const Coloring& f, const Coloring& g);

// Whether the reduced coloring is certain to be the only least-weight
// representative: guaranteed unless it has a maximal half band, or some
// component is a pushoff of an antipodal edge. Either obstruction is
// necessary for non-uniqueness, not sufficient.
struct UniquenessVerdict {
  enum class Obstruction { none, half_band, antipodal_pushoff };
  bool guaranteed = false;
  Obstruction obstruction = Obstruction::none;
  int edge = -1;  // the antipodal edge, when that is the obstruction
  Coloring reduced;
};

UniquenessVerdict unique_minimizer(const Triangulation& tri, const Coloring& f);

// Independent oracle: the set of colorings reachable from stripped f by
// slides whose intermediate weights stay within cap. Monotone reduction
// paths exist between any two representatives, so membership of another
// coloring's stripped form (with cap at least both weights) decides
// equivalence. Throws cap_too_small if cap < weight(f).
std::vector<Coloring> bfs_closure(const Triangulation& tri, const Coloring& f, int cap,
                                  std::int64_t max_states = 5'000'000);

// Classical classification oracle on the two-triangle punctured torus
// fixture: each component has a well-defined signed crossing pair with
// edges a and b, invariant under handleslides. Requires the fixture
// (not_torus_fixture) and no peripheral components (peripheral_present).
struct TorusSlope {
  int p = 0;
  int q = 0;
  int multiplicity = 0;
  friend auto operator<=>(const TorusSlope&, const TorusSlope&) = default;
};

TorusSlope torus_slope(const Triangulation& tri, const Coloring& f);

// Reproducible fuzzer: applies `steps` slides at pseudo-randomly chosen
// maximal bands to the stripped coloring, then restores the peripheral
// components. The result represents the same diagram as f.
Coloring random_representative(const Triangulation& tri, const Coloring& f, int steps,
                               std::uint64_t seed);

}  // namespace curveslide
