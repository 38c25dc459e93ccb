#pragma once

#include "curveslide/coloring.hpp"

namespace curveslide {

// A maximal run of corners with positive corner numbers in the cyclic order
// around the puncture, flanked by gaps (corners with corner number zero).
// Long bands run more than halfway around the link, short bands less; a band
// whose flanking gaps are antipodal corners is a half band (then its length
// is N/2 - 1). A band of exactly half the corners is called equatorial here;
// the slide engine treats it like any other band and measures its weight
// change directly.
enum class BandClass { short_band, half_band, equatorial, long_band };

const char* band_class_name(BandClass c);

struct Band {
  int start = 0;       // link position of the first band corner
  int length = 0;      // number of corners in the band
  int gap_before = 0;  // link position of the flanking gap preceding start
  int gap_after = 0;   // link position of the flanking gap following the band
  BandClass cls = BandClass::short_band;
};

struct BandDecomposition {
  bool no_gaps = false;      // every corner number >= 1: a peripheral component is present
  std::vector<Band> bands;   // by start position; empty when no_gaps or the coloring is zero
};

// Requires f admissible.
BandDecomposition bands(const Triangulation& tri, const Coloring& f);

// Classification from the band's position data alone.
BandClass classify(const Triangulation& tri, const Band& band);

}  // namespace curveslide
