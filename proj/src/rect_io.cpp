#include <algorithm>
#include <sstream>

#include "stab/toolkit.hpp"

namespace stab {

OrthoPolygon parse_rect(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  long expected = -1;
  std::vector<Point> pts;
  while (std::getline(in, line)) {
    ++lineno;
    size_t pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    if (expected < 0) {
      if (!(ls >> expected)) {
        std::string junk;
        std::istringstream probe(line);
        if (probe >> junk)
          throw Error(Errc::SyntaxError, "line " + std::to_string(lineno) + ": expected vertex count");
        expected = -1;
        continue;
      }
      if (expected < 0)
        throw Error(Errc::SyntaxError, "line " + std::to_string(lineno) + ": negative vertex count");
    } else {
      long x, y;
      if (!(ls >> x >> y)) {
        std::string junk;
        std::istringstream probe(line);
        if (!(probe >> junk)) continue;  // blank after comment strip
        throw Error(Errc::SyntaxError, "line " + std::to_string(lineno) + ": expected 'x y'");
      }
      std::string extra;
      if (ls >> extra)
        throw Error(Errc::SyntaxError, "line " + std::to_string(lineno) + ": trailing tokens");
      pts.push_back(Point{int(x), int(y)});
      if (long(pts.size()) == expected) break;
    }
  }
  if (expected < 0) throw Error(Errc::SyntaxError, "missing vertex count");
  if (long(pts.size()) != expected)
    throw Error(Errc::SyntaxError, "expected " + std::to_string(expected) + " vertices, got " +
                                       std::to_string(pts.size()));
  return validate_polygon(std::move(pts));
}

std::string write_rect(const OrthoPolygon& poly) {
  // Canonical start: lexicographically smallest vertex.
  size_t start = 0;
  for (size_t i = 1; i < poly.vertices.size(); ++i)
    if (poly.vertices[i] < poly.vertices[start]) start = i;
  std::ostringstream out;
  out << poly.vertices.size() << "\n";
  for (size_t i = 0; i < poly.vertices.size(); ++i) {
    Point v = poly.vertices[(start + i) % poly.vertices.size()];
    out << v.x << " " << v.y << "\n";
  }
  return out.str();
}

}  // namespace stab
