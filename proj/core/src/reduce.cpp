#include "curveslide/reduce.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>

namespace curveslide {

namespace {

// Index of the best slide: most negative delta, ties by smallest band start.
// -1 if the list is empty.
int best_slide(const std::vector<std::pair<Band, SlideResult>>& slides) {
  int best = -1;
  for (int i = 0; i < static_cast<int>(slides.size()); ++i)
    if (best < 0 || slides[i].second.delta < slides[best].second.delta) best = i;
  return best;
}

// Searches the zero-delta closure of cur for a coloring admitting a strict
// descent. On success appends the plateau path and the descending step and
// advances cur.
bool plateau_descend(const Triangulation& tri, Coloring& cur,
                     std::vector<ReductionStep>& steps) {
  std::set<Coloring> visited{cur};
  std::deque<std::pair<Coloring, std::vector<ReductionStep>>> queue;
  queue.emplace_back(cur, std::vector<ReductionStep>{});
  while (!queue.empty()) {
    auto [g, path] = std::move(queue.front());
    queue.pop_front();
    auto slides = all_slides(tri, g);
    int best = best_slide(slides);
    if (best >= 0 && slides[best].second.delta < 0) {
      for (auto& s : path) steps.push_back(std::move(s));
      const auto& [band, res] = slides[best];
      steps.push_back({band, res.delta, res.coloring, false});
      cur = res.coloring;
      return true;
    }
    for (const auto& [band, res] : slides) {
      if (res.delta != 0 || visited.count(res.coloring)) continue;
      visited.insert(res.coloring);
      auto next = path;
      next.push_back({band, 0, res.coloring, true});
      queue.emplace_back(res.coloring, std::move(next));
    }
  }
  return false;
}

}  // namespace

ReductionTrace reduce(const Triangulation& tri, const Coloring& f) {
  require_admissible(tri, f);
  ReductionTrace out;
  out.initial = f;
  StripResult stripped = strip_peripherals(tri, f);
  out.stripped = stripped.coloring;
  out.peripheral_count = stripped.removed;

  Coloring cur = stripped.coloring;
  while (true) {
    auto slides = all_slides(tri, cur);
    int best = best_slide(slides);
    if (best < 0) break;  // no bands: the empty diagram
    if (slides[best].second.delta < 0) {
      const auto& [band, res] = slides[best];
      out.steps.push_back({band, res.delta, res.coloring, false});
      cur = res.coloring;
      continue;
    }
    if (!plateau_descend(tri, cur, out.steps)) break;
    out.plateau_used = true;
  }
  out.final_coloring = cur;
  return out;
}

MinimalSet minimal_set(const Triangulation& tri, const Coloring& f) {
  MinimalSet out;
  out.reduction = reduce(tri, f);
  const Coloring& m0 = out.reduction.final_coloring;
  out.weight = weight(m0);

  std::map<Coloring, std::vector<int>> paths;
  paths.emplace(m0, std::vector<int>{});
  std::deque<Coloring> queue{m0};
  while (!queue.empty()) {
    Coloring g = std::move(queue.front());
    queue.pop_front();
    const std::vector<int>& base = paths.at(g);
    for (const auto& [band, res] : all_slides(tri, g)) {
      if (res.delta < 0)
        fail(Errc::internal, "reduced coloring still admits a descending slide");
      if (res.delta != 0 || paths.count(res.coloring)) continue;
      auto path = base;
      path.push_back(band.start);
      paths.emplace(res.coloring, std::move(path));
      queue.push_back(paths.find(res.coloring)->first);
    }
  }
  for (auto& [coloring, path] : paths) {
    if (weight(coloring) != out.weight)
      fail(Errc::internal, "weight-preserving closure changed weight");
    out.colorings.push_back(coloring);
    out.moves.push_back(path);
  }
  return out;
}

Coloring replay(const Triangulation& tri, const SlidePath& path) {
  Coloring cur = path.start;
  for (int start : path.band_starts) {
    BandDecomposition dec = bands(tri, cur);
    const Band* hit = nullptr;
    for (const Band& b : dec.bands)
      if (b.start == start) hit = &b;
    if (!hit)
      fail(Errc::band_not_maximal, "no maximal band at position " + std::to_string(start));
    cur = slide(tri, cur, *hit).coloring;
  }
  return cur;
}

EquivalenceVerdict equivalent(const Triangulation& tri, const Coloring& f, const Coloring& g) {
  MinimalSet mf = minimal_set(tri, f);
  MinimalSet mg = minimal_set(tri, g);
  EquivalenceVerdict out;
  out.peripheral_f = mf.reduction.peripheral_count;
  out.peripheral_g = mg.reduction.peripheral_count;

  std::vector<Coloring> common;
  std::set_intersection(mf.colorings.begin(), mf.colorings.end(), mg.colorings.begin(),
                        mg.colorings.end(), std::back_inserter(common));
  if (!common.empty() && mf.colorings != mg.colorings)
    fail(Errc::internal, "minimal sets meet but differ");
  out.equivalent = !common.empty() && out.peripheral_f == out.peripheral_g;
  if (!out.equivalent) return out;

  auto path_to = [&](const MinimalSet& ms, const Coloring& target) {
    SlidePath p;
    p.start = ms.reduction.stripped;
    for (const ReductionStep& s : ms.reduction.steps) p.band_starts.push_back(s.band.start);
    const auto it = std::lower_bound(ms.colorings.begin(), ms.colorings.end(), target);
    const auto& closure_moves = ms.moves[it - ms.colorings.begin()];
    p.band_starts.insert(p.band_starts.end(), closure_moves.begin(), closure_moves.end());
    p.end = target;
    return p;
  };
  EquivalenceCertificate cert;
  cert.common = common.front();
  cert.from_f = path_to(mf, cert.common);
  cert.from_g = path_to(mg, cert.common);
  out.certificate = std::move(cert);
  return out;
}

UniquenessVerdict unique_minimizer(const Triangulation& tri, const Coloring& f) {
  UniquenessVerdict out;
  out.reduced = reduce(tri, f).final_coloring;

  BandDecomposition dec = bands(tri, out.reduced);
  for (const Band& b : dec.bands)
    if (b.cls == BandClass::half_band) {
      out.obstruction = UniquenessVerdict::Obstruction::half_band;
      return out;
    }

  if (weight(out.reduced) > 0) {
    const CurveSystem cs = trace(tri, out.reduced);
    for (int e : tri.antipodal_edges()) {
      for (PushoffSide side : {PushoffSide::ccw, PushoffSide::cw}) {
        Coloring push = pushoff_coloring(tri, e, side);
        for (const Component& comp : cs.components()) {
          if (comp.coloring == push) {
            out.obstruction = UniquenessVerdict::Obstruction::antipodal_pushoff;
            out.edge = e;
            return out;
          }
        }
      }
    }
  }
  out.guaranteed = true;
  return out;
}

std::vector<Coloring> bfs_closure(const Triangulation& tri, const Coloring& f, int cap,
                                  std::int64_t max_states) {
  require_admissible(tri, f);
  if (cap < weight(f))
    fail(Errc::cap_too_small, "cap " + std::to_string(cap) + " below weight " +
                                  std::to_string(weight(f)));
  Coloring start = strip_peripherals(tri, f).coloring;
  std::set<Coloring> visited{start};
  std::deque<Coloring> queue{start};
  while (!queue.empty()) {
    Coloring g = std::move(queue.front());
    queue.pop_front();
    for (const auto& [band, res] : all_slides(tri, g)) {
      if (weight(res.coloring) > cap || visited.count(res.coloring)) continue;
      if (static_cast<std::int64_t>(visited.size()) >= max_states)
        fail(Errc::internal, "closure exceeded " + std::to_string(max_states) + " states");
      visited.insert(res.coloring);
      queue.push_back(res.coloring);
    }
  }
  return {visited.begin(), visited.end()};
}

TorusSlope torus_slope(const Triangulation& tri, const Coloring& f) {
  if (tri.gluing_pairs() != punctured_torus().gluing_pairs())
    fail(Errc::not_torus_fixture, "slopes are defined on the two-triangle torus fixture");
  require_admissible(tri, f);
  if (strip_peripherals(tri, f).removed != 0)
    fail(Errc::peripheral_present, "strip peripheral components before taking slopes");
  if (weight(f) == 0) return {0, 0, 0};

  const CurveSystem cs = trace(tri, f);
  TorusSlope out;
  out.multiplicity = static_cast<int>(cs.components().size());
  bool first = true;
  for (const Component& comp : cs.components()) {
    // Signed crossings with edges a (0) and b (1): positive when leaving
    // through the first slot of the gluing pair.
    int p = 0, q = 0;
    for (const Visit& v : comp.word) {
      const int e = tri.edge_of({v.triangle, v.exit});
      if (e > 1) continue;
      const int sign = (Slot{v.triangle, v.exit} == tri.edge_slots(e).first) ? 1 : -1;
      (e == 0 ? p : q) += sign;
    }
    if (p < 0 || (p == 0 && q < 0)) {
      p = -p;
      q = -q;
    }
    if (p == 0 && q == 0) fail(Errc::internal, "component is nullhomologous on the torus");
    if (std::gcd(p, std::abs(q)) != 1) fail(Errc::internal, "component slope is not primitive");
    if (first) {
      out.p = p;
      out.q = q;
      first = false;
    } else if (p != out.p || q != out.q) {
      fail(Errc::internal, "components of one diagram have different slopes");
    }
  }
  return out;
}

Coloring random_representative(const Triangulation& tri, const Coloring& f, int steps,
                               std::uint64_t seed) {
  require_admissible(tri, f);
  StripResult stripped = strip_peripherals(tri, f);
  Coloring cur = stripped.coloring;
  std::mt19937_64 rng(seed);
  for (int s = 0; s < steps; ++s) {
    BandDecomposition dec = bands(tri, cur);
    if (dec.bands.empty()) break;
    const Band& b = dec.bands[rng() % dec.bands.size()];
    cur = slide(tri, cur, b).coloring;
  }
  for (int& v : cur) v += 2 * stripped.removed;
  return cur;
}

}  // namespace curveslide
