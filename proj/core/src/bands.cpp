#include "curveslide/bands.hpp"

#include <algorithm>

namespace curveslide {

const char* band_class_name(BandClass c) {
  switch (c) {
    case BandClass::short_band: return "short";
    case BandClass::half_band: return "half";
    case BandClass::equatorial: return "equatorial";
    case BandClass::long_band: return "long";
  }
  return "?";
}

BandClass classify(const Triangulation& tri, const Band& band) {
  const int n = tri.link_size();
  if (2 * band.length > n) return BandClass::long_band;
  if (2 * band.length == n) return BandClass::equatorial;
  const VertexLink& link = tri.link();
  if (link.corners_antipodal(link.corners[band.gap_before], link.corners[band.gap_after]))
    return BandClass::half_band;
  return BandClass::short_band;
}

BandDecomposition bands(const Triangulation& tri, const Coloring& f) {
  CornerNumbers cn = corner_numbers(tri, f);
  const VertexLink& link = tri.link();
  const int n = link.size();
  std::vector<char> positive(n);
  bool any_zero = false, any_positive = false;
  for (int p = 0; p < n; ++p) {
    positive[p] = cn.at(link.corners[p]) > 0;
    (positive[p] ? any_positive : any_zero) = true;
  }
  BandDecomposition out;
  if (!any_zero) {
    out.no_gaps = true;
    return out;
  }
  if (!any_positive) return out;
  for (int p = 0; p < n; ++p) {
    if (!positive[p] || positive[(p + n - 1) % n]) continue;  // not a run start
    int len = 1;
    while (positive[(p + len) % n]) ++len;
    Band b{p, len, (p + n - 1) % n, (p + len) % n, BandClass::short_band};
    b.cls = classify(tri, b);
    out.bands.push_back(b);
  }
  std::sort(out.bands.begin(), out.bands.end(),
            [](const Band& a, const Band& b) { return a.start < b.start; });
  return out;
}

}  // namespace curveslide
