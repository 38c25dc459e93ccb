#include "curveslide/slide.hpp"

#include "doctest.h"

using namespace curveslide;

namespace {

std::vector<Coloring> torus_colorings(int cap) {
  std::vector<Coloring> out;
  for (int a = 0; a <= cap; ++a)
    for (int b = 0; a + b <= cap; ++b)
      for (int c = 0; a + b + c <= cap; ++c) {
        if ((a + b + c) % 2 != 0) continue;
        if (a > b + c || b > a + c || c > a + b) continue;
        out.push_back({a, b, c});
      }
  return out;
}

Band band_at(const Triangulation& tri, const Coloring& f, int start) {
  for (const Band& b : bands(tri, f).bands)
    if (b.start == start) return b;
  FAIL("no band at position ", start);
  return {};
}

}  // namespace

TEST_CASE("hand-checked slides on the torus") {
  Triangulation pt = punctured_torus();
  SUBCASE("(0,1,1), band at position 4: identity after two cascaded removals") {
    SlideResult r = slide(pt, {0, 1, 1}, band_at(pt, {0, 1, 1}, 4));
    CHECK(r.coloring == Coloring{0, 1, 1});
    CHECK(r.delta == 0);
    CHECK(r.cascades == 2);
  }
  SUBCASE("(0,1,1), band at position 1") {
    SlideResult r = slide(pt, {0, 1, 1}, band_at(pt, {0, 1, 1}, 1));
    CHECK(r.coloring == Coloring{0, 1, 1});
    CHECK(r.delta == 0);
  }
  SUBCASE("(2,1,1), half band at positions 2..3: clean identity") {
    SlideResult r = slide(pt, {2, 1, 1}, band_at(pt, {2, 1, 1}, 2));
    CHECK(r.coloring == Coloring{2, 1, 1});
    CHECK(r.delta == 0);
    CHECK(r.cascades == 0);
  }
  SUBCASE("(2,1,1), the other half band") {
    SlideResult r = slide(pt, {2, 1, 1}, band_at(pt, {2, 1, 1}, 5));
    CHECK(r.coloring == Coloring{2, 1, 1});
    CHECK(r.delta == 0);
  }
}

TEST_CASE("slide input validation") {
  Triangulation pt = punctured_torus();
  SUBCASE("peripheral components are rejected") {
    Band b{0, 1, 5, 1, BandClass::short_band};
    try {
      slide(pt, {2, 2, 2}, b);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::peripheral_present);
    }
  }
  SUBCASE("a non-maximal band is rejected") {
    Band b{2, 1, 1, 3, BandClass::short_band};  // the true band at 2 has length 2
    try {
      slide(pt, {2, 1, 1}, b);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::band_not_maximal);
    }
  }
}

TEST_CASE("all_slides") {
  Triangulation pt = punctured_torus();
  SUBCASE("(2,1,1): two entries, both delta 0") {
    auto slides = all_slides(pt, {2, 1, 1});
    REQUIRE(slides.size() == 2);
    for (const auto& [band, res] : slides) CHECK(res.delta == 0);
  }
  SUBCASE("(0,1,1): both slides return the same coloring") {
    auto slides = all_slides(pt, {0, 1, 1});
    REQUIRE(slides.size() == 2);
    for (const auto& [band, res] : slides) CHECK(res.coloring == Coloring{0, 1, 1});
  }
  SUBCASE("all-zero coloring: nothing to slide") {
    CHECK(all_slides(pt, {0, 0, 0}).empty());
  }
}

TEST_CASE("slide invariants over all torus colorings of weight <= 12") {
  Triangulation pt = punctured_torus();
  const int n = pt.link_size();
  for (const Coloring& f : torus_colorings(12)) {
    StripResult stripped = strip_peripherals(pt, f);
    const Coloring& g = stripped.coloring;
    if (weight(g) == 0) continue;
    size_t component_count = trace(pt, g).components().size();
    for (const auto& [band, res] : all_slides(pt, g)) {
      CHECK(res.delta % 2 == 0);
      CHECK(res.delta <= n - 2 * band.length - 2);
      CHECK(res.delta == n - 2 * band.length - 2 - res.cascades);
      CHECK(check_admissible(pt, res.coloring).ok());
      CHECK(trace(pt, res.coloring).components().size() == component_count);
    }
  }
}

TEST_CASE("long and equatorial bands always shorten") {
  // genus-2 colorings built from pushoff sums; any band past the halfway
  // mark must have a strictly negative measured delta.
  Triangulation g2 = standard_surface(2);
  const int n = g2.link_size();
  std::vector<Coloring> pool;
  for (int e = 0; e < g2.edges(); ++e) {
    pool.push_back(pushoff_coloring(g2, e, PushoffSide::ccw));
    pool.push_back(pushoff_coloring(g2, e, PushoffSide::cw));
  }
  int seen_long = 0;
  for (size_t x = 0; x < pool.size(); ++x) {
    for (size_t y = x; y < pool.size(); ++y) {
      Coloring f = pool[x];
      for (int i = 0; i < g2.edges(); ++i) f[i] += pool[y][i];
      REQUIRE(check_admissible(g2, f).ok());
      Coloring s = strip_peripherals(g2, f).coloring;
      if (weight(s) == 0) continue;
      for (const auto& [band, res] : all_slides(g2, s)) {
        if (2 * band.length >= n) {
          CHECK(res.delta < 0);
          ++seen_long;
        }
        CHECK(res.delta % 2 == 0);
        CHECK(check_admissible(g2, res.coloring).ok());
      }
    }
  }
  CHECK(seen_long > 0);
}
