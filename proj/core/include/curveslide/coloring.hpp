#pragma once

#include <vector>

#include "curveslide/triangulation.hpp"

namespace curveslide {

// One nonnegative integer per edge, indexed by edge order: the geometric
// intersection number of a simple diagram with each edge. Admissible means
// every triangle has an even side sum and nonnegative corner numbers.
using Coloring = std::vector<int>;

// Corner numbers of a coloring: at the corner between sides a and b, with
// opposite side c, the number of strands cutting the corner is
// (f(a)+f(b)-f(c))/2. The two corner numbers flanking a side sum to the
// side's value.
struct CornerNumbers {
  std::vector<std::array<int, 3>> value;  // [triangle][corner]
  int at(Corner c) const { return value[c.triangle][c.corner]; }
};

struct Admissibility {
  enum class Status { ok, parity_violation, negative_corner };
  Status status = Status::ok;
  int triangle = -1;  // offending triangle for either violation
  Corner corner;      // offending corner for negative_corner
  bool ok() const { return status == Status::ok; }
};

// Throws length_mismatch if f has the wrong length; otherwise reports the
// first violation in triangle order.
Admissibility check_admissible(const Triangulation& tri, const Coloring& f);

// Throws length_mismatch / not_admissible unless f is admissible.
void require_admissible(const Triangulation& tri, const Coloring& f);

// Requires f admissible.
CornerNumbers corner_numbers(const Triangulation& tri, const Coloring& f);

int weight(const Coloring& f);

// Removes puncture-parallel components. Such a component crosses every edge
// twice, so it is present exactly when every corner number is >= 1; each one
// is removed by subtracting 2 from every edge value. The result has a zero
// corner (a gap) or is all zero.
struct StripResult {
  Coloring coloring;
  int removed = 0;
};
StripResult strip_peripherals(const Triangulation& tri, const Coloring& f);

// The closed curve obtained by closing edge `edge` up through the puncture
// and pushing it off to one side. Its coloring counts one crossing for each
// edge end strictly between the two ends of `edge` on the chosen side of the
// link; ccw is the side swept walking forward from the lower-position end.
enum class PushoffSide { ccw, cw };
Coloring pushoff_coloring(const Triangulation& tri, int edge, PushoffSide side);

}  // namespace curveslide
