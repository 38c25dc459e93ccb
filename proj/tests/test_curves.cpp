#include "curveslide/curves.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"

using namespace curveslide;

namespace {

// All admissible torus colorings with weight at most `cap`, generated from
// the literal parity and triangle-inequality conditions.
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

// A visit set ignoring direction: (triangle, {sides}).
std::multiset<std::tuple<int, int, int>> visit_shape(const Component& comp) {
  std::multiset<std::tuple<int, int, int>> s;
  for (const Visit& v : comp.word)
    s.insert({v.triangle, std::min(v.entry, v.exit), std::max(v.entry, v.exit)});
  return s;
}

}  // namespace

TEST_CASE("tracing torus colorings") {
  Triangulation pt = punctured_torus();
  SUBCASE("(0,1,1): one two-visit component") {
    CurveSystem cs = trace(pt, {0, 1, 1});
    REQUIRE(cs.components().size() == 1);
    const Component& c = cs.components()[0];
    CHECK(c.word.size() == 2);
    CHECK(!c.peripheral);
    CHECK(c.coloring == Coloring{0, 1, 1});
    CHECK(visit_shape(c) ==
          std::multiset<std::tuple<int, int, int>>{{0, 1, 2}, {1, 1, 2}});
  }
  SUBCASE("(2,2,2): one peripheral component with six visits") {
    CurveSystem cs = trace(pt, {2, 2, 2});
    REQUIRE(cs.components().size() == 1);
    CHECK(cs.components()[0].word.size() == 6);
    CHECK(cs.components()[0].peripheral);
  }
  SUBCASE("(0,2,2): two parallel components") {
    CurveSystem cs = trace(pt, {0, 2, 2});
    REQUIRE(cs.components().size() == 2);
    for (const Component& c : cs.components()) {
      CHECK(c.coloring == Coloring{0, 1, 1});
      CHECK(!c.peripheral);
    }
  }
  SUBCASE("(0,0,0): empty system") {
    CurveSystem cs = trace(pt, {0, 0, 0});
    CHECK(cs.components().empty());
    CHECK(coloring_of(pt, cs) == Coloring{0, 0, 0});
  }
  SUBCASE("tracing is deterministic") {
    CurveSystem a = trace(pt, {4, 3, 3});
    CurveSystem b = trace(pt, {4, 3, 3});
    REQUIRE(a.components().size() == b.components().size());
    for (size_t i = 0; i < a.components().size(); ++i)
      CHECK(a.components()[i].word == b.components()[i].word);
  }
}

TEST_CASE("round trip over all torus colorings of weight <= 12") {
  Triangulation pt = punctured_torus();
  for (const Coloring& f : torus_colorings(12)) {
    CurveSystem cs = trace(pt, f);
    CHECK(coloring_of(pt, cs) == f);
    CHECK(cs.normal());
    // component colorings sum to the whole and are admissible
    Coloring sum(pt.edges(), 0);
    for (const Component& c : cs.components()) {
      CHECK(check_admissible(pt, c.coloring).ok());
      for (int e = 0; e < pt.edges(); ++e) sum[e] += c.coloring[e];
    }
    CHECK(sum == f);
  }
}

TEST_CASE("round trip on a genus-2 sample") {
  Triangulation g2 = standard_surface(2);
  std::vector<Coloring> sample;
  sample.push_back(Coloring(g2.edges(), 2));
  sample.push_back(Coloring(g2.edges(), 4));
  for (int e = 0; e < g2.edges(); ++e) {
    sample.push_back(pushoff_coloring(g2, e, PushoffSide::ccw));
    sample.push_back(pushoff_coloring(g2, e, PushoffSide::cw));
  }
  for (const Coloring& f : sample) {
    if (!check_admissible(g2, f).ok()) continue;
    CHECK(coloring_of(g2, trace(g2, f)) == f);
  }
}

TEST_CASE("normalization") {
  Triangulation pt = punctured_torus();
  SUBCASE("a same-slot visit is spliced away, dropping the weight by 2") {
    // Hand-built word on the torus: a strand detouring across edge b.
    std::vector<Visit> word = {{0, 0, 1}, {1, 1, 1}, {0, 1, 2}, {1, 2, 0}};
    CurveSystem cs = CurveSystem::from_words(pt, {word});
    CHECK(!cs.normal());
    CHECK_THROWS_AS(coloring_of(pt, cs), Error);
    CurveSystem norm = normalize(pt, cs);
    CHECK(norm.normal());
    CHECK(coloring_of(pt, norm) == Coloring{1, 0, 1});
    REQUIRE(norm.components().size() == 1);
    CHECK(norm.components()[0].word.size() == 2);
  }
  SUBCASE("an already normal system is unchanged") {
    CurveSystem cs = trace(pt, {2, 1, 1});
    CurveSystem norm = normalize(pt, cs);
    REQUIRE(norm.components().size() == cs.components().size());
    for (size_t i = 0; i < cs.components().size(); ++i)
      CHECK(norm.components()[i].word == cs.components()[i].word);
  }
  SUBCASE("a two-visit return collapses to nothing") {
    // A circle crossing edge c twice and turning back on both sides bounds
    // a disk; normalization erases it.
    std::vector<Visit> word = {{0, 2, 2}, {1, 2, 2}};
    CurveSystem cs = CurveSystem::from_words(pt, {word});
    CurveSystem norm = normalize(pt, cs);
    CHECK(norm.components().empty());
  }
}

TEST_CASE("word validation catches broken chains") {
  Triangulation pt = punctured_torus();
  CHECK_THROWS_AS(CurveSystem::from_words(pt, {{{0, 0, 1}, {0, 1, 0}}}), Error);
}

TEST_CASE("depth index of a traced system") {
  Triangulation pt = punctured_torus();
  CurveSystem cs = trace(pt, {2, 1, 1});
  // corner numbers are 1,0,1 in both triangles
  CHECK(cs.arcs_at(pt, {0, 0}).size() == 1);
  CHECK(cs.arcs_at(pt, {0, 1}).empty());
  CHECK(cs.arcs_at(pt, {0, 2}).size() == 1);
  // edge a carries two crossing points, edges b and c one each
  CHECK(cs.edge_crossings()[0].size() == 2);
  CHECK(cs.edge_crossings()[1].size() == 1);
  CHECK(cs.edge_crossings()[2].size() == 1);
  // a rebuilt system has no index
  CurveSystem raw = CurveSystem::from_words(pt, {cs.components()[0].word});
  CHECK(!raw.indexed());
  CHECK_THROWS_AS(raw.arcs_at(pt, {0, 0}), Error);
}
