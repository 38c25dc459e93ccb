#pragma once

#include "curveslide/bands.hpp"
#include "curveslide/curves.hpp"

namespace curveslide {

// Outcome of sliding the innermost strand of a maximal band across the
// puncture. delta is the signed weight change; it is always even. cascades
// counts the visits removed by normalization beyond the two guaranteed end
// merges (each splice step removes two), so for a band of length k on a
// link of N corners, delta = N - 2k - 2 - cascades, except when the
// innermost strand closes up on itself, where the bound is N - 2k.
struct SlideResult {
  Coloring coloring;
  int delta = 0;
  int cascades = 0;
};

// Pushes the innermost strand of the band across the puncture: the strand
// through the band corners is deleted together with its entry and exit
// crossings, a replacement path is routed the other way around the puncture
// through the complementary corners, the loose ends are merged with the
// strand's continuations in the two gap triangles, and the result is
// normalized. Requires f admissible with no peripheral components
// (peripheral_present otherwise) and band maximal for f (band_not_maximal
// otherwise). The result represents the same diagram of the closed surface
// and has the same number of components.
SlideResult slide(const Triangulation& tri, const Coloring& f, const Band& band);

// slide() applied to every maximal band, in band order.
std::vector<std::pair<Band, SlideResult>> all_slides(const Triangulation& tri, const Coloring& f);

}  // namespace curveslide
