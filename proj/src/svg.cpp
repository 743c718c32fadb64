#include "diskcert/svg.hpp"

#include <cmath>
#include <sstream>

namespace diskcert {

namespace {

constexpr int kMarginCells = 2;

std::int64_t px(std::int64_t units) {
  return (units + kMarginCells * kCellUnits) * kSvgCellPixels / kCellUnits;
}

std::string ramp(double t) {
  const int hue = static_cast<int>(std::lround(270.0 * t));
  return "hsl(" + std::to_string(hue) + ",80%,45%)";
}

void path(std::ostringstream& out, const char* cls, const std::vector<Point>& pts) {
  out << "  <path class=\"" << cls << "\" d=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) out << (i ? " L " : "M ") << px(pts[i].x) << " " << px(pts[i].y);
  out << "\"/>\n";
}

void mark(std::ostringstream& out, const char* cls, const BoundaryElement& e, const std::string& colour) {
  if (e.is_vertex()) {
    const Point p = e.representative();
    out << "  <circle class=\"" << cls << "\" cx=\"" << px(p.x) << "\" cy=\"" << px(p.y) << "\" r=\"4\" fill=\""
        << colour << "\"><title>" << e.label() << "</title></circle>\n";
  } else {
    const Point a = to_units(e.edge().first());
    const Point b = to_units(e.edge().second());
    out << "  <line class=\"" << cls << "\" x1=\"" << px(a.x) << "\" y1=\"" << px(a.y) << "\" x2=\"" << px(b.x)
        << "\" y2=\"" << px(b.y) << "\" stroke=\"" << colour << "\"><title>" << e.label() << "</title></line>\n";
  }
}

}  // namespace

std::string emit_svg(const Certificate& cert) {
  const CubicalSet& set = cert.set;
  const std::int64_t w = (set.width() + 2 * kMarginCells) * kSvgCellPixels;
  const std::int64_t h = (set.height() + 2 * kMarginCells) * kSvgCellPixels;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 "
      << w << " " << h << "\" data-cell-pixels=\"" << kSvgCellPixels << "\">\n";
  out << "  <style>.cell{fill:#d8d8d8;stroke:#999;stroke-width:1}"
         ".gamma-interior{fill:none;stroke:#1f5fbf;stroke-width:2}"
         ".gamma-complement{fill:none;stroke:#bf5f1f;stroke-width:2;stroke-dasharray:6 3}"
         "line.boundary-mark{stroke-width:4}.extra-edge{stroke:#333;stroke-width:2}"
         "line.failure-mark{stroke:#d00;stroke-width:4}.annotation{font:12px sans-serif;fill:#d00}</style>\n";
  for (const Cell& c : set.cells()) {
    out << "  <rect class=\"cell\" x=\"" << px(kCellUnits * c.x) << "\" y=\"" << px(kCellUnits * c.y)
        << "\" width=\"" << kSvgCellPixels << "\" height=\"" << kSvgCellPixels << "\"/>\n";
  }
  for (const Edge& e : set.extra_edges()) {
    const Point a = to_units(e.first());
    const Point b = to_units(e.second());
    out << "  <line class=\"extra-edge\" x1=\"" << px(a.x) << "\" y1=\"" << px(a.y) << "\" x2=\"" << px(b.x)
        << "\" y2=\"" << px(b.y) << "\"/>\n";
  }
  for (const Vertex& v : set.extra_vertices()) {
    const Point p = to_units(v);
    out << "  <circle class=\"extra-vertex\" cx=\"" << px(p.x) << "\" cy=\"" << px(p.y) << "\" r=\"3\"/>\n";
  }

  if (cert.split && cert.cyclic) {
    path(out, "gamma-interior", cert.split->gamma_interior.vertices);
    path(out, "gamma-complement", cert.split->gamma_complement.vertices);
    for (const auto& [e, v] : cert.cyclic->values) mark(out, "boundary-mark", e, ramp(v.to_double()));
  } else {
    const CriterionReport& c = cert.criterion;
    std::vector<std::string> notes;
    if (!c.nonempty_interior) notes.push_back("empty interior");
    if (c.nonempty_interior && !c.cond1.connected) {
      notes.push_back("cond1 failed: " + std::to_string(c.cond1.components) + " interior components");
    }
    if (!c.cond2.connected) {
      notes.push_back("cond2 failed: " + std::to_string(c.cond2.components) + " complement components");
    }
    if (!c.cond3()) notes.push_back("cond3 failed: " + std::to_string(c.cond3_failures.size()) + " elements");
    if (!c.cond4()) notes.push_back("cond4 failed: " + std::to_string(c.cond4_failures.size()) + " elements");
    for (const auto& e : c.cond3_failures) mark(out, "failure-mark", e, "#d00");
    for (const auto& e : c.cond4_failures) mark(out, "failure-mark", e, "#d00");
    for (std::size_t i = 0; i < notes.size(); ++i) {
      out << "  <text class=\"annotation\" x=\"4\" y=\"" << 14 * (i + 1) << "\">" << notes[i] << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace diskcert
