#include "curveslide/slide.hpp"

#include <algorithm>
#include <string>

// A handleslide in visit-word form. The innermost strand of a maximal band
// occupies the depth-1 arcs at the band's corners; in the traced system
// these are consecutive visits V_i..V_j of one component, entered through a
// crossing x next to the gap before the band and left through a crossing y
// next to the gap after it. Pushing the strand across the puncture deletes
// V_i..V_j with x and y, and routes the strand the other way around: in
// reverse link order through every complementary corner, one crossing per
// edge end passed. The neighbors A (ending at x) and B (starting at y) live
// in the gap triangles; the new path's ends merge with them there, which
// shortens the path by one corner at each end. Merges can create same-slot
// returns, so the rewritten word is normalized afterwards.
//
// Degenerate shapes handled uniformly on the cyclic word:
//  - A and B are the same visit (the component is the strand plus one arc):
//    that visit receives both end merges.
//  - The component *is* the strand (x = y, a single crossing on an edge of
//    value 1): the whole word is replaced by the closed complementary path.
//  - The band has a single flanking gap (length N-1): A and B merge with
//    each other into one return visit, which normalization then removes.

namespace curveslide {

namespace {

std::vector<Visit> flipped(const std::vector<Visit>& word) {
  std::vector<Visit> out;
  out.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out.push_back({it->triangle, it->exit, it->entry});
  return out;
}

SlideResult slide_traced(const Triangulation& tri, const Coloring& f, const Band& band,
                         const CurveSystem& cs) {
  const VertexLink& link = tri.link();
  const int n = link.size();
  const int k = band.length;
  const int i = band.start;
  const int gap_prev = band.gap_before, gap_next = band.gap_after;
  const Corner before = link.corners[gap_prev];  // corner c of t_prev
  const Corner after = link.corners[gap_next];   // corner d of t_post

  // The innermost strand: depth-1 arcs at the band corners.
  std::vector<CurveSystem::ArcRef> refs;
  refs.reserve(k);
  for (int o = 0; o < k; ++o) refs.push_back(cs.arcs_at(tri, link.corners[(i + o) % n])[0]);
  const int comp = refs[0].component;
  for (const auto& r : refs)
    if (r.component != comp) fail(Errc::internal, "band strand spans two components");

  std::vector<Visit> word = cs.components()[comp].word;
  const int len = static_cast<int>(word.size());
  int pos0 = refs[0].visit;
  const Corner first = link.corners[i];
  if (word[pos0].triangle != first.triangle) fail(Errc::internal, "band strand mismatch");
  if (word[pos0].entry != first.corner) {
    // The component traverses the band against the link direction; curves
    // are unoriented, so flip the word.
    word = flipped(word);
    pos0 = len - 1 - pos0;
    for (auto& r : refs) r.visit = len - 1 - r.visit;
  }
  for (int o = 0; o < k; ++o) {
    const Corner c = link.corners[(i + o) % n];
    const int q = (pos0 + o) % len;
    if (refs[o].visit != q || !(word[q] == Visit{c.triangle, c.corner, (c.corner + 1) % 3}))
      fail(Errc::internal, "band strand is not consecutive in its component");
  }

  // Replacement visits traverse a complementary corner against the link
  // direction.
  auto reverse_visit = [&](int p) {
    const Corner c = link.corners[p];
    return Visit{c.triangle, (c.corner + 1) % 3, c.corner};
  };

  const int interior = n - k - 2;  // complementary corners between the gaps; -1 if one gap
  std::vector<Visit> replacement;
  if (len == k) {
    // Strand closes on itself: replace the whole component by the closed
    // complementary path through all n-k remaining corners.
    if (interior < 0) fail(Errc::internal, "self-closing strand with a single gap");
    for (int o = 0; o < n - k; ++o) replacement.push_back(reverse_visit((gap_prev - o + n) % n));
  } else {
    std::vector<Visit> rot(len);
    const int base = (pos0 + len - 1) % len;  // position of A
    for (int x = 0; x < len; ++x) rot[x] = word[(base + x) % len];
    const Visit a = rot[0];
    if (a.triangle != before.triangle || a.exit != (before.corner + 1) % 3)
      fail(Errc::internal, "strand continuation before the band is misplaced");
    if (len == k + 1) {
      // A and B coincide; it takes both end merges.
      if (a.entry != after.corner || a.triangle != after.triangle)
        fail(Errc::internal, "strand continuation after the band is misplaced");
      if (interior < 0) fail(Errc::internal, "single-gap band closed by one visit");
      replacement.push_back({before.triangle, (after.corner + 1) % 3, before.corner});
      for (int o = 0; o < interior; ++o)
        replacement.push_back(reverse_visit((i - 2 - o + 2 * n) % n));
    } else {
      const Visit b = rot[k + 1];
      if (b.triangle != after.triangle || b.entry != after.corner)
        fail(Errc::internal, "strand continuation after the band is misplaced");
      if (interior == -1) {
        // One flanking gap: the two continuations join into a single return
        // visit next to it.
        replacement.push_back({a.triangle, a.entry, b.exit});
      } else {
        replacement.push_back({a.triangle, a.entry, before.corner});
        for (int o = 0; o < interior; ++o)
          replacement.push_back(reverse_visit((i - 2 - o + 2 * n) % n));
        replacement.push_back({b.triangle, (after.corner + 1) % 3, b.exit});
      }
      replacement.insert(replacement.end(), rot.begin() + k + 2, rot.end());
    }
  }

  std::vector<std::vector<Visit>> words;
  words.reserve(cs.components().size());
  for (int ci = 0; ci < static_cast<int>(cs.components().size()); ++ci)
    words.push_back(ci == comp ? replacement : cs.components()[ci].word);
  const size_t component_count = words.size();
  const int steps = normalize_words(tri, words);
  if (words.size() != component_count)
    fail(Errc::internal, "handleslide collapsed a component");
  CurveSystem rewritten = CurveSystem::from_words(tri, std::move(words));
  Coloring g = coloring_of(tri, rewritten);
  require_admissible(tri, g);
  const int delta = weight(g) - weight(f);
  return {std::move(g), delta, 2 * steps};
}

const Band& matching_band(const BandDecomposition& dec, const Band& band) {
  if (dec.no_gaps) fail(Errc::peripheral_present, "every corner is positive; strip first");
  for (const Band& b : dec.bands)
    if (b.start == band.start && b.length == band.length) return b;
  fail(Errc::band_not_maximal, "no maximal band of length " + std::to_string(band.length) +
                                   " at position " + std::to_string(band.start));
}

}  // namespace

SlideResult slide(const Triangulation& tri, const Coloring& f, const Band& band) {
  require_admissible(tri, f);
  const BandDecomposition dec = bands(tri, f);
  const Band& b = matching_band(dec, band);
  return slide_traced(tri, f, b, trace(tri, f));
}

std::vector<std::pair<Band, SlideResult>> all_slides(const Triangulation& tri,
                                                     const Coloring& f) {
  require_admissible(tri, f);
  const BandDecomposition dec = bands(tri, f);
  if (dec.no_gaps) fail(Errc::peripheral_present, "every corner is positive; strip first");
  std::vector<std::pair<Band, SlideResult>> out;
  if (dec.bands.empty()) return out;
  const CurveSystem cs = trace(tri, f);
  out.reserve(dec.bands.size());
  for (const Band& b : dec.bands) out.emplace_back(b, slide_traced(tri, f, b, cs));
  return out;
}

}  // namespace curveslide
