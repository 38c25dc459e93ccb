#include "curveslide/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace curveslide {

namespace {

[[noreturn]] void parse_fail(const std::string& name, int line, const std::string& msg) {
  fail(Errc::parse_error, name + ":" + std::to_string(line) + ": " + msg);
}

}  // namespace

Triangulation read_triangulation(std::istream& in, const std::string& name) {
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_line()) parse_fail(name, lineno, "missing `triangles T` header");
  std::istringstream header(line);
  std::string keyword;
  int t = 0;
  if (!(header >> keyword >> t) || keyword != "triangles" || t <= 0)
    parse_fail(name, lineno, "expected `triangles T` with T > 0, got `" + line + "`");

  std::vector<std::pair<Slot, Slot>> pairs;
  const int expected = 3 * t / 2;
  for (int i = 0; i < expected; ++i) {
    if (!next_line()) parse_fail(name, lineno + 1, "expected " + std::to_string(expected) +
                                                       " glue lines, got " + std::to_string(i));
    std::istringstream row(line);
    std::string glue;
    Slot a, b;
    if (!(row >> glue >> a.triangle >> a.side >> b.triangle >> b.side) || glue != "glue")
      parse_fail(name, lineno, "expected `glue t s t' s'`, got `" + line + "`");
    std::string extra;
    if (row >> extra) parse_fail(name, lineno, "trailing tokens after gluing: `" + extra + "`");
    if (a.triangle >= t || b.triangle >= t)
      parse_fail(name, lineno, "triangle index beyond header count");
    pairs.emplace_back(a, b);
  }
  if (next_line()) parse_fail(name, lineno, "trailing content after gluing list");
  if (3 * t % 2 != 0) parse_fail(name, 1, "triangle count must be even");
  return Triangulation::from_gluing(pairs);
}

Triangulation read_triangulation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, path + ": cannot open");
  return read_triangulation(in, path);
}

void write_triangulation(std::ostream& out, const Triangulation& tri) {
  out << "triangles " << tri.triangles() << "\n";
  for (const auto& [a, b] : tri.gluing_pairs())
    out << "glue " << a.triangle << " " << a.side << " " << b.triangle << " " << b.side << "\n";
}

Coloring read_coloring(std::istream& in, const Triangulation& tri, const std::string& name) {
  std::string line;
  int lineno = 0;
  bool found = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      found = true;
      break;
    }
  }
  if (!found) parse_fail(name, lineno, "empty coloring file");
  std::istringstream row(line);
  Coloring f;
  long long v = 0;
  while (row >> v) {
    if (v < 0) parse_fail(name, lineno, "negative value " + std::to_string(v));
    f.push_back(static_cast<int>(v));
  }
  if (!row.eof()) parse_fail(name, lineno, "non-integer token in coloring");
  if (static_cast<int>(f.size()) != tri.edges())
    parse_fail(name, lineno, std::to_string(f.size()) + " values for " +
                                 std::to_string(tri.edges()) + " edges");
  Admissibility a = check_admissible(tri, f);
  if (a.status == Admissibility::Status::parity_violation)
    fail(Errc::not_admissible,
         name + ": odd side sum in triangle " + std::to_string(a.triangle));
  if (a.status == Admissibility::Status::negative_corner)
    fail(Errc::not_admissible, name + ": negative corner number at corner (" +
                                   std::to_string(a.corner.triangle) + "," +
                                   std::to_string(a.corner.corner) + ")");
  return f;
}

Coloring read_coloring_file(const std::string& path, const Triangulation& tri) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, path + ": cannot open");
  return read_coloring(in, tri, path);
}

void write_coloring(std::ostream& out, const Coloring& f) {
  out << coloring_str(f) << "\n";
}

std::string coloring_str(const Coloring& f) {
  std::string s;
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(f[i]);
  }
  return s;
}

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Point {
  double x, y;
};

Point polar(double radius, double angle) {
  return {280.0 + radius * std::cos(angle), 280.0 + radius * std::sin(angle)};
}

}  // namespace

std::string render_link(const Triangulation& tri, const Coloring& f) {
  const CornerNumbers cn = corner_numbers(tri, f);
  const BandDecomposition dec = bands(tri, f);
  const VertexLink& link = tri.link();
  const int n = link.size();
  const double step = 2.0 * kPi / n;
  auto angle = [&](double pos) { return pos * step - kPi / 2.0; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"560\" height=\"560\" "
         "viewBox=\"0 0 560 560\">\n";
  svg << "<style>text{font:11px monospace;text-anchor:middle;dominant-baseline:middle}"
         ".sector{stroke:#444;stroke-width:1}.sector.gap{fill:#d8d8d8}.sector.band{fill:#fff}"
         ".bandarc{fill:none;stroke-width:3}.bandarc.short{stroke:#2a7}.bandarc.half{stroke:#27b}"
         ".bandarc.equatorial{stroke:#a2b}.bandarc.long{stroke:#c33}</style>\n";
  svg << "<circle cx=\"280\" cy=\"280\" r=\"6\" fill=\"#000\"/>\n";

  svg << "<g>\n";
  for (int p = 0; p < n; ++p) {
    const Corner c = link.corners[p];
    const int value = cn.at(c);
    const double a0 = angle(p) + 0.04, a1 = angle(p + 1) - 0.04;
    const Point o0 = polar(190, a0), o1 = polar(190, a1);
    const Point i1 = polar(120, a1), i0 = polar(120, a0);
    svg << "<path class=\"sector " << (value == 0 ? "gap" : "band") << "\" d=\"M " << num(o0.x)
        << " " << num(o0.y) << " A 190 190 0 0 1 " << num(o1.x) << " " << num(o1.y) << " L "
        << num(i1.x) << " " << num(i1.y) << " A 120 120 0 0 0 " << num(i0.x) << " " << num(i0.y)
        << " Z\"/>\n";
    const Point label = polar(155, angle(p + 0.5));
    svg << "<text x=\"" << num(label.x) << "\" y=\"" << num(label.y) << "\">" << value
        << "</text>\n";
    const Point id = polar(104, angle(p + 0.5));
    svg << "<text x=\"" << num(id.x) << "\" y=\"" << num(id.y) << "\" fill=\"#888\">"
        << c.triangle << "." << c.corner << "</text>\n";
    const Point edge_label = polar(205, angle(p + 1.0));
    svg << "<text x=\"" << num(edge_label.x) << "\" y=\"" << num(edge_label.y)
        << "\" fill=\"#555\">e" << link.crossings[p].edge << "</text>\n";
  }
  svg << "</g>\n";

  svg << "<g>\n";
  for (const Band& b : dec.bands) {
    const double a0 = angle(b.start + 0.25);
    const double a1 = angle(b.start + b.length - 0.25);
    const Point from = polar(222, a0), to = polar(222, a1);
    const int large = 2 * b.length > n ? 1 : 0;
    svg << "<path class=\"bandarc " << band_class_name(b.cls) << "\" d=\"M " << num(from.x)
        << " " << num(from.y) << " A 222 222 0 " << large << " 1 " << num(to.x) << " "
        << num(to.y) << "\"/>\n";
    const Point label = polar(244, angle(b.start + 0.5 * b.length));
    svg << "<text x=\"" << num(label.x) << "\" y=\"" << num(label.y) << "\">"
        << band_class_name(b.cls) << "</text>\n";
  }
  svg << "</g>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace curveslide
