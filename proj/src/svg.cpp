#include <algorithm>
#include <sstream>

#include "stab/toolkit.hpp"

namespace stab {

namespace {

constexpr int kScale = 40;
constexpr int kMargin = 30;

struct Mapper {
  int min_x, min_y, max_y;
  double x(double v) const { return kMargin + (v - min_x) * kScale; }
  double y(double v) const { return kMargin + (max_y - v) * kScale; }  // flip for svg
};

const char* kFacePalette[] = {"#cfe8ff", "#ffe3c2", "#d8f2d0", "#f2d4f0", "#fff3b0", "#d9d9f3"};

}  // namespace

std::string render_svg(const OrthoPolygon& poly, const std::map<Segment, Rational>* edge_values,
                       const Partition* partition) {
  Arrangement arr = build_arrangement(poly);
  int min_x = poly.vertices[0].x, max_x = min_x, min_y = poly.vertices[0].y, max_y = min_y;
  for (Point v : poly.vertices) {
    min_x = std::min(min_x, v.x);
    max_x = std::max(max_x, v.x);
    min_y = std::min(min_y, v.y);
    max_y = std::max(max_y, v.y);
  }
  Mapper m{min_x, min_y, max_y};
  int width = (max_x - min_x) * kScale + 2 * kMargin;
  int height = (max_y - min_y) * kScale + 2 * kMargin;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";

  if (partition) {
    int i = 0;
    for (const Rect& r : partition->rectangles) {
      out << "  <rect class=\"face\" x=\"" << m.x(r.x1) << "\" y=\"" << m.y(r.y2) << "\" width=\""
          << (r.x2 - r.x1) * kScale << "\" height=\"" << (r.y2 - r.y1) * kScale << "\" fill=\""
          << kFacePalette[i++ % 6] << "\" stroke=\"none\"/>\n";
    }
  }

  out << "  <path class=\"outline\" d=\"";
  for (size_t i = 0; i < poly.vertices.size(); ++i) {
    Point v = poly.vertices[i];
    out << (i == 0 ? "M" : "L") << m.x(v.x) << " " << m.y(v.y) << " ";
  }
  out << "Z\" fill=\"none\" stroke=\"black\" stroke-width=\"2.5\"/>\n";

  for (const Segment& e : arr.internal_edges)
    out << "  <line class=\"grid\" x1=\"" << m.x(e.p.x) << "\" y1=\"" << m.y(e.p.y) << "\" x2=\""
        << m.x(e.q.x) << "\" y2=\"" << m.y(e.q.y)
        << "\" stroke=\"#888\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";

  if (partition)
    for (const Segment& e : partition->segments)
      out << "  <line class=\"sel\" x1=\"" << m.x(e.p.x) << "\" y1=\"" << m.y(e.p.y) << "\" x2=\""
          << m.x(e.q.x) << "\" y2=\"" << m.y(e.q.y) << "\" stroke=\"#c22\" stroke-width=\"2.5\"/>\n";

  if (edge_values)
    for (const auto& [e, value] : *edge_values) {
      double cx = (e.p.x + e.q.x) / 2.0, cy = (e.p.y + e.q.y) / 2.0;
      out << "  <text class=\"value\" x=\"" << m.x(cx) + 3 << "\" y=\"" << m.y(cy) - 3
          << "\" font-size=\"12\">" << value.get_str() << "</text>\n";
    }

  for (Point v : arr.reflex)
    out << "  <circle class=\"reflex\" cx=\"" << m.x(v.x) << "\" cy=\"" << m.y(v.y)
        << "\" r=\"4\" fill=\"black\"/>\n";
  for (Point v : arr.steiner)
    out << "  <circle class=\"steiner\" cx=\"" << m.x(v.x) << "\" cy=\"" << m.y(v.y)
        << "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";
  for (Point v : arr.border)
    out << "  <rect class=\"border\" x=\"" << m.x(v.x) - 3 << "\" y=\"" << m.y(v.y) - 3
        << "\" width=\"6\" height=\"6\" fill=\"#555\"/>\n";

  out << "</svg>\n";
  return out.str();
}

}  // namespace stab
