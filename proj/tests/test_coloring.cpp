#include "curveslide/coloring.hpp"

#include "doctest.h"

using namespace curveslide;

TEST_CASE("admissibility") {
  Triangulation pt = punctured_torus();
  SUBCASE("odd triangle sum") {
    Admissibility a = check_admissible(pt, {1, 1, 1});
    CHECK(a.status == Admissibility::Status::parity_violation);
  }
  SUBCASE("negative corner") {
    Admissibility a = check_admissible(pt, {4, 1, 1});
    CHECK(a.status == Admissibility::Status::negative_corner);
  }
  SUBCASE("ok") { CHECK(check_admissible(pt, {2, 1, 1}).ok()); }
  SUBCASE("wrong length throws") {
    CHECK_THROWS_AS(check_admissible(pt, {1, 1}), Error);
  }
}

TEST_CASE("corner numbers") {
  Triangulation pt = punctured_torus();
  SUBCASE("(2,1,1)") {
    CornerNumbers cn = corner_numbers(pt, {2, 1, 1});
    for (int t = 0; t < 2; ++t) {
      CHECK(cn.at({t, 0}) == 1);
      CHECK(cn.at({t, 1}) == 0);
      CHECK(cn.at({t, 2}) == 1);
    }
  }
  SUBCASE("(0,0,0) all zero") {
    CornerNumbers cn = corner_numbers(pt, {0, 0, 0});
    for (int t = 0; t < 2; ++t)
      for (int c = 0; c < 3; ++c) CHECK(cn.at({t, c}) == 0);
  }
  SUBCASE("(2,2,2) all one") {
    CornerNumbers cn = corner_numbers(pt, {2, 2, 2});
    for (int t = 0; t < 2; ++t)
      for (int c = 0; c < 3; ++c) CHECK(cn.at({t, c}) == 1);
  }
  SUBCASE("corners flanking a side sum to its value") {
    Triangulation g2 = standard_surface(2);
    Coloring f(g2.edges(), 2);
    CornerNumbers cn = corner_numbers(g2, f);
    for (int t = 0; t < g2.triangles(); ++t)
      for (int s = 0; s < 3; ++s)
        CHECK(cn.at({t, (s + 2) % 3}) + cn.at({t, s}) == f[g2.edge_of({t, s})]);
  }
}

TEST_CASE("weight") {
  CHECK(weight({2, 1, 1}) == 4);
  CHECK(weight({0, 0, 0}) == 0);
  CHECK(weight(Coloring(9, 2)) == 18);
}

TEST_CASE("stripping peripheral components") {
  Triangulation pt = punctured_torus();
  SUBCASE("(2,2,2) is one peripheral") {
    StripResult r = strip_peripherals(pt, {2, 2, 2});
    CHECK(r.coloring == Coloring{0, 0, 0});
    CHECK(r.removed == 1);
  }
  SUBCASE("(0,1,1) has a gap already") {
    StripResult r = strip_peripherals(pt, {0, 1, 1});
    CHECK(r.coloring == Coloring{0, 1, 1});
    CHECK(r.removed == 0);
  }
  SUBCASE("(2,3,3) strips once") {
    StripResult r = strip_peripherals(pt, {2, 3, 3});
    CHECK(r.coloring == Coloring{0, 1, 1});
    CHECK(r.removed == 1);
  }
  SUBCASE("weight drops by 2E per component and stays admissible") {
    Triangulation g2 = standard_surface(2);
    Coloring f(g2.edges(), 4);
    StripResult r = strip_peripherals(g2, f);
    CHECK(check_admissible(g2, r.coloring).ok());
    CHECK(weight(f) - weight(r.coloring) == 2 * g2.edges() * r.removed);
  }
}

TEST_CASE("pushoff colorings") {
  Triangulation pt = punctured_torus();
  SUBCASE("torus pushoffs") {
    CHECK(pushoff_coloring(pt, 0, PushoffSide::ccw) == Coloring{0, 1, 1});
    CHECK(pushoff_coloring(pt, 0, PushoffSide::cw) == Coloring{0, 1, 1});
    CHECK(pushoff_coloring(pt, 1, PushoffSide::ccw) == Coloring{1, 0, 1});
    CHECK(pushoff_coloring(pt, 1, PushoffSide::cw) == Coloring{1, 0, 1});
    CHECK(pushoff_coloring(pt, 2, PushoffSide::ccw) == Coloring{1, 1, 0});
  }
  SUBCASE("side weights are the crossing counts between the ends") {
    Triangulation g2 = standard_surface(2);
    const VertexLink& link = g2.link();
    const int n = link.size();
    for (int e = 0; e < g2.edges(); ++e) {
      auto [p, q] = link.edge_positions[e];
      Coloring ccw = pushoff_coloring(g2, e, PushoffSide::ccw);
      Coloring cw = pushoff_coloring(g2, e, PushoffSide::cw);
      CHECK(weight(ccw) == q - p - 1);
      CHECK(weight(cw) == n - (q - p) - 1);
      CHECK(check_admissible(g2, ccw).ok());
      CHECK(check_admissible(g2, cw).ok());
      bool antipodal = 2 * (q - p) == n;
      CHECK((weight(ccw) == weight(cw)) == antipodal);
    }
  }
}
