#include "stab/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

namespace stab {

namespace {

std::string pt_str(Point v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

// Cross product z-component of (b-a) x (c-b).
long long turn(Point a, Point b, Point c) {
  long long ux = b.x - a.x, uy = b.y - a.y;
  long long vx = c.x - b.x, vy = c.y - b.y;
  return ux * vy - uy * vx;
}

bool closed_overlap(int a1, int a2, int b1, int b2) {
  return std::max(a1, b1) <= std::min(a2, b2);
}

// Closed intersection test for two axis-parallel segments.
bool segments_touch(const Segment& a, const Segment& b) {
  if (a.axis() == b.axis()) {
    if (a.axis() == Axis::Horizontal) {
      return a.p.y == b.p.y && closed_overlap(a.p.x, a.q.x, b.p.x, b.q.x);
    }
    return a.p.x == b.p.x && closed_overlap(a.p.y, a.q.y, b.p.y, b.q.y);
  }
  const Segment& h = a.axis() == Axis::Horizontal ? a : b;
  const Segment& v = a.axis() == Axis::Horizontal ? b : a;
  return h.p.x <= v.p.x && v.p.x <= h.q.x && v.p.y <= h.p.y && h.p.y <= v.q.y;
}

}  // namespace

Segment Segment::make(Point a, Point b) {
  if (a == b) throw Error(Errc::NonRectilinear, "degenerate segment at " + pt_str(a));
  if (a.x != b.x && a.y != b.y)
    throw Error(Errc::NonRectilinear, "segment " + pt_str(a) + "-" + pt_str(b) + " is not axis-parallel");
  Segment s;
  if (b < a) std::swap(a, b);
  s.p = a;
  s.q = b;
  return s;
}

bool Segment::contains(Point v) const {
  if (axis() == Axis::Horizontal) return v.y == p.y && p.x <= v.x && v.x <= q.x;
  return v.x == p.x && p.y <= v.y && v.y <= q.y;
}

bool Segment::contains_interior(Point v) const {
  if (axis() == Axis::Horizontal) return v.y == p.y && p.x < v.x && v.x < q.x;
  return v.x == p.x && p.y < v.y && v.y < q.y;
}

EdgeAngle edge_angle(const Segment& ua, const Segment& ub) {
  Point u, a, b;
  if (ua.p == ub.p) { u = ua.p; a = ua.q; b = ub.q; }
  else if (ua.p == ub.q) { u = ua.p; a = ua.q; b = ub.p; }
  else if (ua.q == ub.p) { u = ua.q; a = ua.p; b = ub.q; }
  else if (ua.q == ub.q) { u = ua.q; a = ua.p; b = ub.p; }
  else throw Error(Errc::NoCommonEndpoint, "edges share no endpoint");
  if (ua == ub) return EdgeAngle::SameDirection;
  if (ua.axis() != ub.axis()) return EdgeAngle::Perpendicular;
  long long da = (a.x - u.x) + (a.y - u.y);
  long long db = (b.x - u.x) + (b.y - u.y);
  return da * db > 0 ? EdgeAngle::SameDirection : EdgeAngle::Opposite;
}

long long OrthoPolygon::area2() const {
  long long s = 0;
  for (size_t i = 0; i < vertices.size(); ++i) {
    Point a = vertices[i];
    Point b = vertices[(i + 1) % vertices.size()];
    s += (long long)a.x * b.y - (long long)b.x * a.y;
  }
  return s;
}

bool OrthoPolygon::boundary_contains(Point v) const {
  for (size_t i = 0; i < vertices.size(); ++i) {
    Point a = vertices[i];
    Point b = vertices[(i + 1) % vertices.size()];
    if (Segment::make(a, b).contains(v)) return true;
  }
  return false;
}

bool OrthoPolygon::interior_contains2(long long x2, long long y2) const {
  // Boundary points are not interior.
  bool inside = false;
  for (size_t i = 0; i < vertices.size(); ++i) {
    Point a = vertices[i];
    Point b = vertices[(i + 1) % vertices.size()];
    long long ax = 2LL * a.x, ay = 2LL * a.y, bx = 2LL * b.x, by = 2LL * b.y;
    if (ay == by) {
      if (y2 == ay && std::min(ax, bx) <= x2 && x2 <= std::max(ax, bx)) return false;
      continue;
    }
    if (ax == x2 && std::min(ay, by) <= y2 && y2 <= std::max(ay, by)) return false;
    // Half-open crossing rule for the ray going in +x direction.
    if ((ay <= y2) != (by <= y2) && ax > x2) inside = !inside;
  }
  return inside;
}

OrthoPolygon validate_polygon(std::vector<Point> pts) {
  if (pts.size() < 4)
    throw Error(Errc::TooFewVertices, "polygon needs at least 4 vertices, got " + std::to_string(pts.size()));
  size_t n = pts.size();
  for (size_t i = 0; i < n; ++i) {
    Point a = pts[i], b = pts[(i + 1) % n];
    if (a == b) throw Error(Errc::Collinear, "duplicate consecutive vertex " + pt_str(a));
    if (a.x != b.x && a.y != b.y)
      throw Error(Errc::NonRectilinear, "edge " + pt_str(a) + "-" + pt_str(b) + " is not axis-parallel");
  }
  for (size_t i = 0; i < n; ++i) {
    Point a = pts[i], b = pts[(i + 1) % n], c = pts[(i + 2) % n];
    bool e1h = a.y == b.y, e2h = b.y == c.y;
    if (e1h == e2h) throw Error(Errc::Collinear, "collinear consecutive vertices at " + pt_str(b));
  }
  // Simplicity: non-adjacent edges must be disjoint; adjacent perpendicular
  // edges can only share the common vertex.
  for (size_t i = 0; i < n; ++i) {
    Segment ei = Segment::make(pts[i], pts[(i + 1) % n]);
    for (size_t j = i + 1; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      Segment ej = Segment::make(pts[j], pts[(j + 1) % n]);
      if (segments_touch(ei, ej))
        throw Error(Errc::SelfIntersecting, "boundary touches itself near " + pt_str(pts[j]));
    }
  }
  OrthoPolygon poly;
  poly.vertices = std::move(pts);
  long long a2 = poly.area2();
  if (a2 == 0) throw Error(Errc::SelfIntersecting, "polygon encloses no area");
  if (a2 < 0) std::reverse(poly.vertices.begin(), poly.vertices.end());
  return poly;
}

void classify_vertices(const OrthoPolygon& poly, std::vector<Point>& reflex,
                       std::vector<Point>& convex) {
  reflex.clear();
  convex.clear();
  size_t n = poly.vertices.size();
  for (size_t i = 0; i < n; ++i) {
    Point a = poly.vertices[(i + n - 1) % n];
    Point b = poly.vertices[i];
    Point c = poly.vertices[(i + 1) % n];
    (turn(a, b, c) < 0 ? reflex : convex).push_back(b);
  }
  std::sort(reflex.begin(), reflex.end());
  std::sort(convex.begin(), convex.end());
}

namespace {

// Walks the ray from `from` along (dx, dy) and returns the nearest boundary
// point on it. The caller guarantees the ray starts into the interior.
Point ray_stop(const OrthoPolygon& poly, Point from, int dx, int dy) {
  std::optional<int> best;  // distance along the ray
  size_t n = poly.vertices.size();
  for (size_t i = 0; i < n; ++i) {
    Point a = poly.vertices[i];
    Point b = poly.vertices[(i + 1) % n];
    Segment e = Segment::make(a, b);
    if (dy == 0) {
      if (e.axis() == Axis::Vertical) {
        if (e.p.y <= from.y && from.y <= e.q.y) {
          int t = (e.p.x - from.x) * dx;
          if (t > 0 && (!best || t < *best)) best = t;
        }
      } else if (e.p.y == from.y) {
        for (Point v : {e.p, e.q}) {
          int t = (v.x - from.x) * dx;
          if (t > 0 && (!best || t < *best)) best = t;
        }
      }
    } else {
      if (e.axis() == Axis::Horizontal) {
        if (e.p.x <= from.x && from.x <= e.q.x) {
          int t = (e.p.y - from.y) * dy;
          if (t > 0 && (!best || t < *best)) best = t;
        }
      } else if (e.p.x == from.x) {
        for (Point v : {e.p, e.q}) {
          int t = (v.y - from.y) * dy;
          if (t > 0 && (!best || t < *best)) best = t;
        }
      }
    }
  }
  Point stop{from.x + dx * (best ? *best : 0), from.y + dy * (best ? *best : 0)};
  return stop;
}

}  // namespace

std::vector<Segment> build_grid(const OrthoPolygon& poly) {
  std::vector<Point> reflex, convex;
  classify_vertices(poly, reflex, convex);
  std::set<Point> reflex_set(reflex.begin(), reflex.end());

  std::set<Segment> grid;
  size_t n = poly.vertices.size();
  for (size_t i = 0; i < n; ++i) {
    Point prev = poly.vertices[(i + n - 1) % n];
    Point u = poly.vertices[i];
    Point next = poly.vertices[(i + 1) % n];
    if (!reflex_set.count(u)) continue;
    // The incoming edge extends past u in its travel direction; the outgoing
    // edge extends past u against its travel direction.
    int dx1 = (u.x > prev.x) - (u.x < prev.x);
    int dy1 = (u.y > prev.y) - (u.y < prev.y);
    int dx2 = (u.x > next.x) - (u.x < next.x);
    int dy2 = (u.y > next.y) - (u.y < next.y);
    for (auto [dx, dy] : {std::pair{dx1, dy1}, std::pair{dx2, dy2}}) {
      Point stop = ray_stop(poly, u, dx, dy);
      if (stop != u) grid.insert(Segment::make(u, stop));
    }
  }
  return {grid.begin(), grid.end()};
}

std::optional<VertexClass> Arrangement::classify(Point v) const {
  if (std::binary_search(reflex.begin(), reflex.end(), v)) return VertexClass::Reflex;
  if (std::binary_search(convex.begin(), convex.end(), v)) return VertexClass::Convex;
  if (std::binary_search(steiner.begin(), steiner.end(), v)) return VertexClass::Steiner;
  if (std::binary_search(border.begin(), border.end(), v)) return VertexClass::Border;
  return std::nullopt;
}

int Arrangement::internal_index(const Segment& s) const {
  auto it = std::lower_bound(internal_edges.begin(), internal_edges.end(), s);
  if (it != internal_edges.end() && *it == s) return int(it - internal_edges.begin());
  return -1;
}

int Arrangement::extended_index(const Segment& s) const {
  auto it = std::lower_bound(extended_edges.begin(), extended_edges.end(), s);
  if (it != extended_edges.end() && *it == s) return int(it - extended_edges.begin());
  return -1;
}

bool StabLine::crosses(const Segment& s) const {
  if (axis == Axis::Horizontal) {
    if (s.axis() != Axis::Vertical) return false;
    return lo2 < 2 * s.p.x && 2 * s.p.x < hi2 && 2 * s.p.y < coord2 && coord2 < 2 * s.q.y;
  }
  if (s.axis() != Axis::Horizontal) return false;
  return lo2 < 2 * s.p.y && 2 * s.p.y < hi2 && 2 * s.p.x < coord2 && coord2 < 2 * s.q.x;
}

void compute_extended_edges(const Arrangement& arr, std::vector<Segment>& edges,
                            std::vector<std::vector<int>>& cover) {
  std::set<Segment> out;
  std::set<Point> reflex_set(arr.reflex.begin(), arr.reflex.end());
  for (const Segment& g : arr.grid_segments) {
    // Arrangement vertices along the grid segment, in canonical order.
    std::vector<Point> pts;
    for (const auto& [v, _] : arr.incidence)
      if (g.contains(v)) pts.push_back(v);
    std::sort(pts.begin(), pts.end());
    for (size_t i = 0; i < pts.size(); ++i) {
      if (!reflex_set.count(pts[i])) continue;
      for (size_t j = 0; j < pts.size(); ++j)
        if (j != i) out.insert(Segment::make(pts[i], pts[j]));
    }
  }
  edges.assign(out.begin(), out.end());
  cover.clear();
  cover.resize(edges.size());
  for (size_t e = 0; e < edges.size(); ++e) {
    for (size_t i = 0; i < arr.internal_edges.size(); ++i) {
      const Segment& piece = arr.internal_edges[i];
      if (piece.axis() != edges[e].axis()) continue;
      if (edges[e].contains(piece.p) && edges[e].contains(piece.q)) cover[e].push_back(int(i));
    }
  }
}

std::vector<StabLine> compute_stab_lines(const Arrangement& arr) {
  std::vector<StabLine> lines;
  for (Axis axis : {Axis::Horizontal, Axis::Vertical}) {
    std::set<int> coords;
    for (Point v : arr.polygon.vertices) coords.insert(axis == Axis::Horizontal ? v.y : v.x);
    for (const auto& [v, _] : arr.incidence) coords.insert(axis == Axis::Horizontal ? v.y : v.x);
    std::vector<int> cs(coords.begin(), coords.end());
    for (size_t i = 0; i + 1 < cs.size(); ++i) {
      int coord2 = 2 * cs[i] + 1;
      // Boundary edges perpendicular to the line that span the strip.
      std::vector<int> hits;
      size_t n = arr.polygon.vertices.size();
      for (size_t k = 0; k < n; ++k) {
        Segment e = Segment::make(arr.polygon.vertices[k], arr.polygon.vertices[(k + 1) % n]);
        if (axis == Axis::Horizontal) {
          if (e.axis() == Axis::Vertical && 2 * e.p.y < coord2 && coord2 < 2 * e.q.y)
            hits.push_back(e.p.x);
        } else {
          if (e.axis() == Axis::Horizontal && 2 * e.p.x < coord2 && coord2 < 2 * e.q.x)
            hits.push_back(e.p.y);
        }
      }
      std::sort(hits.begin(), hits.end());
      for (size_t k = 0; k + 1 < hits.size(); k += 2)
        lines.push_back(StabLine{axis, coord2, 2 * hits[k], 2 * hits[k + 1]});
    }
  }
  std::sort(lines.begin(), lines.end());
  return lines;
}

Arrangement build_arrangement(const OrthoPolygon& poly) {
  Arrangement arr;
  arr.polygon = poly;
  classify_vertices(poly, arr.reflex, arr.convex);
  arr.grid_segments = build_grid(poly);

  // Steiner vertices: proper interior crossings of perpendicular grid segments.
  std::set<Point> steiner;
  for (const Segment& a : arr.grid_segments) {
    if (a.axis() != Axis::Horizontal) continue;
    for (const Segment& b : arr.grid_segments) {
      if (b.axis() != Axis::Vertical) continue;
      Point x{b.p.x, a.p.y};
      if (a.contains_interior(x) && b.contains_interior(x)) steiner.insert(x);
    }
  }
  arr.steiner.assign(steiner.begin(), steiner.end());

  // Border vertices: grid endpoints on the boundary that are not polygon vertices.
  std::set<Point> poly_verts(poly.vertices.begin(), poly.vertices.end());
  std::set<Point> border;
  for (const Segment& g : arr.grid_segments)
    for (Point v : {g.p, g.q})
      if (!poly_verts.count(v)) border.insert(v);
  arr.border.assign(border.begin(), border.end());

  // Split grid segments at arrangement vertices into internal edges.
  std::set<Segment> internal;
  for (const Segment& g : arr.grid_segments) {
    std::vector<Point> pts{g.p, g.q};
    for (Point s : arr.steiner)
      if (g.contains_interior(s)) pts.push_back(s);
    std::sort(pts.begin(), pts.end());
    for (size_t i = 0; i + 1 < pts.size(); ++i) internal.insert(Segment::make(pts[i], pts[i + 1]));
  }
  arr.internal_edges.assign(internal.begin(), internal.end());

  for (size_t i = 0; i < arr.internal_edges.size(); ++i) {
    arr.incidence[arr.internal_edges[i].p].push_back(int(i));
    arr.incidence[arr.internal_edges[i].q].push_back(int(i));
  }
  // Vertices with no incident internal edge (convex corners) still belong to
  // the arrangement's vertex set.
  for (Point v : poly.vertices) arr.incidence[v];

  // Boundary edges split at border vertices.
  size_t n = poly.vertices.size();
  for (size_t i = 0; i < n; ++i) {
    Segment e = Segment::make(poly.vertices[i], poly.vertices[(i + 1) % n]);
    std::vector<Point> pts{e.p, e.q};
    for (Point b : arr.border)
      if (e.contains_interior(b)) pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    for (size_t k = 0; k + 1 < pts.size(); ++k)
      arr.boundary_edges.push_back(Segment::make(pts[k], pts[k + 1]));
  }
  std::sort(arr.boundary_edges.begin(), arr.boundary_edges.end());

  compute_extended_edges(arr, arr.extended_edges, arr.cover);
  arr.stab_lines = compute_stab_lines(arr);
  return arr;
}

}  // namespace stab
