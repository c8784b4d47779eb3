#include "stab/partition.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <set>

namespace stab {

namespace {

// Directions in counterclockwise order.
constexpr int kEast = 0, kNorth = 1, kWest = 2, kSouth = 3;
constexpr int kDx[4] = {1, 0, -1, 0};
constexpr int kDy[4] = {0, 1, 0, -1};

int dir_of(Point from, Point to) {
  if (to.y == from.y) return to.x > from.x ? kEast : kWest;
  return to.y > from.y ? kNorth : kSouth;
}

struct Subdivision {
  // For each vertex, the neighbouring vertex reached in each direction.
  std::map<Point, std::array<std::optional<Point>, 4>> arcs;
  std::map<Point, int> interior_degree;

  void add_piece(const Segment& s, bool interior) {
    arcs[s.p][dir_of(s.p, s.q)] = s.q;
    arcs[s.q][dir_of(s.q, s.p)] = s.p;
    if (interior) {
      interior_degree[s.p] += 1;
      interior_degree[s.q] += 1;
    }
  }
};

std::vector<Segment> split_at(const Segment& s, std::set<Point>& cuts) {
  std::vector<Point> pts{s.p, s.q};
  for (Point c : cuts)
    if (s.contains_interior(c)) pts.push_back(c);
  std::sort(pts.begin(), pts.end());
  std::vector<Segment> out;
  for (size_t i = 0; i + 1 < pts.size(); ++i) out.push_back(Segment::make(pts[i], pts[i + 1]));
  return out;
}

Point overlap_start(const Segment& a, const Segment& b) { return std::max(a.p, b.p); }

long long shoelace2(const std::vector<Point>& cycle) {
  long long s = 0;
  for (size_t i = 0; i < cycle.size(); ++i) {
    Point a = cycle[i], b = cycle[(i + 1) % cycle.size()];
    s += (long long)a.x * b.y - (long long)b.x * a.y;
  }
  return s;
}

}  // namespace

Partition make_partition(const OrthoPolygon& poly, std::vector<Segment> segments) {
  std::sort(segments.begin(), segments.end());

  std::vector<Point> reflex, convex;
  classify_vertices(poly, reflex, convex);
  std::set<Point> reflex_set(reflex.begin(), reflex.end());

  std::vector<Segment> boundary;
  for (size_t i = 0; i < poly.vertices.size(); ++i)
    boundary.push_back(Segment::make(poly.vertices[i], poly.vertices[(i + 1) % poly.vertices.size()]));

  DiagnosticReport report;
  std::set<Point> cuts;  // applied to interior segments and boundary edges alike

  // Pairwise relations between interior segments.
  for (size_t i = 0; i < segments.size(); ++i) {
    for (size_t j = i + 1; j < segments.size(); ++j) {
      const Segment &a = segments[i], &b = segments[j];
      if (a.axis() == b.axis()) {
        bool same_line = a.axis() == Axis::Horizontal ? a.p.y == b.p.y : a.p.x == b.p.x;
        if (!same_line) continue;
        bool overlap = a.axis() == Axis::Horizontal
                           ? std::max(a.p.x, b.p.x) < std::min(a.q.x, b.q.x)
                           : std::max(a.p.y, b.p.y) < std::min(a.q.y, b.q.y);
        if (overlap)
          report.violations.push_back(
              {ViolationKind::PlanarityOverlap, overlap_start(a, b), std::pair{a, b}});
        continue;
      }
      const Segment& h = a.axis() == Axis::Horizontal ? a : b;
      const Segment& v = a.axis() == Axis::Horizontal ? b : a;
      Point x{v.p.x, h.p.y};
      if (h.contains(x) && v.contains(x)) cuts.insert(x);
    }
  }

  // Relations against the boundary: an interior segment may only touch it at
  // its own endpoints.
  for (const Segment& s : segments) {
    for (const Segment& b : boundary) {
      if (s.axis() == b.axis()) {
        bool same_line = s.axis() == Axis::Horizontal ? s.p.y == b.p.y : s.p.x == b.p.x;
        if (!same_line) continue;
        bool overlap = s.axis() == Axis::Horizontal
                           ? std::max(s.p.x, b.p.x) < std::min(s.q.x, b.q.x)
                           : std::max(s.p.y, b.p.y) < std::min(s.q.y, b.q.y);
        if (overlap)
          report.violations.push_back(
              {ViolationKind::PlanarityOverlap, overlap_start(s, b), std::pair{s, b}});
        continue;
      }
      const Segment& h = s.axis() == Axis::Horizontal ? s : b;
      const Segment& v = s.axis() == Axis::Horizontal ? b : s;
      Point x{v.p.x, h.p.y};
      if (!h.contains(x) || !v.contains(x)) continue;
      if (s.contains_interior(x) && b.contains_interior(x)) {
        report.violations.push_back({ViolationKind::Crossing, x, std::pair{s, b}});
        continue;
      }
      cuts.insert(x);
    }
  }
  if (!report.violations.empty()) {
    std::sort(report.violations.begin(), report.violations.end());
    throw NotAPartitionError(report, "segments overlap or leave the polygon");
  }

  Subdivision sub;
  std::vector<Segment> interior_pieces;
  for (const Segment& s : segments)
    for (const Segment& piece : split_at(s, cuts)) {
      interior_pieces.push_back(piece);
      sub.add_piece(piece, true);
    }
  for (const Segment& b : boundary)
    for (const Segment& piece : split_at(b, cuts)) sub.add_piece(piece, false);

  // Angular criterion: every gap between consecutive incident directions that
  // opens into the polygon must be at most pi.
  for (const auto& [v, nb] : sub.arcs) {
    std::vector<int> dirs;
    for (int d = 0; d < 4; ++d)
      if (nb[d]) dirs.push_back(d);
    for (size_t i = 0; i < dirs.size(); ++i) {
      int a = dirs[i];
      int b = dirs[(i + 1) % dirs.size()];
      int gap = dirs.size() == 1 ? 4 : (b - a + 4) % 4;
      if (gap <= 2) continue;
      // Probe the middle of the wedge; a bad gap outside the polygon is the
      // exterior wedge of a boundary vertex and is fine.
      int px, py;
      if (gap == 3) {
        px = kDx[(a + 1) % 4] + kDx[(a + 2) % 4];
        py = kDy[(a + 1) % 4] + kDy[(a + 2) % 4];
      } else {
        px = kDx[(a + 2) % 4];
        py = kDy[(a + 2) % 4];
      }
      if (!poly.interior_contains2(2LL * v.x + px, 2LL * v.y + py)) continue;
      auto deg = sub.interior_degree.find(v);
      int interior_deg = deg == sub.interior_degree.end() ? 0 : deg->second;
      ViolationKind kind;
      if (reflex_set.count(v)) kind = ViolationKind::KneeAtReflex;
      else if (interior_deg == 1) kind = ViolationKind::Island;
      else kind = ViolationKind::KneeAtSteiner;
      report.violations.push_back({kind, v, std::nullopt});
    }
  }
  if (!report.violations.empty()) {
    std::sort(report.violations.begin(), report.violations.end());
    report.violations.erase(std::unique(report.violations.begin(), report.violations.end()),
                            report.violations.end());
    throw NotAPartitionError(report, "selection does not induce a rectangular partition");
  }

  // Face walk with the region kept on the left of each directed arc.
  std::set<std::pair<Point, int>> visited;
  std::vector<Rect> rects;
  long long outer_faces = 0;
  for (const auto& [v0, nb0] : sub.arcs) {
    for (int d0 = 0; d0 < 4; ++d0) {
      if (!nb0[d0] || visited.count({v0, d0})) continue;
      std::vector<Point> cycle;
      Point v = v0;
      int d = d0;
      do {
        visited.insert({v, d});
        cycle.push_back(v);
        Point u = *sub.arcs.at(v)[d];
        const auto& nb = sub.arcs.at(u);
        int nd = -1;
        for (int turn : {1, 0, 3, 2}) {  // left, straight, right, back
          int cand = (d + turn) % 4;
          if (nb[cand]) {
            nd = cand;
            break;
          }
        }
        v = u;
        d = nd;
      } while (!(v == v0 && d == d0));
      long long area2 = shoelace2(cycle);
      if (area2 < 0) {
        ++outer_faces;
        continue;
      }
      int corners = 0;
      int lo_x = cycle[0].x, hi_x = cycle[0].x, lo_y = cycle[0].y, hi_y = cycle[0].y;
      for (size_t i = 0; i < cycle.size(); ++i) {
        Point prev = cycle[(i + cycle.size() - 1) % cycle.size()];
        Point cur = cycle[i];
        Point next = cycle[(i + 1) % cycle.size()];
        if (dir_of(prev, cur) != dir_of(cur, next)) ++corners;
        lo_x = std::min(lo_x, cur.x);
        hi_x = std::max(hi_x, cur.x);
        lo_y = std::min(lo_y, cur.y);
        hi_y = std::max(hi_y, cur.y);
      }
      Rect r{lo_x, lo_y, hi_x, hi_y};
      if (corners != 4 || 2 * r.area() != area2)
        throw std::logic_error("face flood found a non-rectangular face");
      rects.push_back(r);
    }
  }
  if (outer_faces != 1) throw std::logic_error("face flood expected exactly one outer face");
  long long total = 0;
  for (const Rect& r : rects) total += r.area();
  if (2 * total != poly.area2()) throw std::logic_error("faces do not tile the polygon");

  Partition part;
  part.polygon = poly;
  std::sort(interior_pieces.begin(), interior_pieces.end());
  part.segments = std::move(interior_pieces);
  std::sort(rects.begin(), rects.end());
  part.rectangles = std::move(rects);
  return part;
}

Partition validate_partition(const EdgeSelection& sel, const Arrangement& arr) {
  std::vector<Segment> segs;
  for (int e : sel.derived_internal) segs.push_back(arr.internal_edges[e]);
  return make_partition(arr.polygon, std::move(segs));
}

StabbingReport stabbing_number(const Partition& part, const Arrangement& arr) {
  StabbingReport rep;
  rep.stabbing_number = 1;
  for (const StabLine& line : arr.stab_lines) {
    int count = 1;
    for (const Segment& s : part.segments)
      if (line.crosses(s)) ++count;
    rep.per_line[line] = count;
    rep.stabbing_number = std::max(rep.stabbing_number, count);
  }
  return rep;
}

std::vector<Segment> maximal_segments(const Partition& part) {
  // Group collinear segments and merge touching or overlapping spans.
  std::map<std::pair<Axis, int>, std::vector<std::pair<int, int>>> lines;
  for (const Segment& s : part.segments) {
    if (s.axis() == Axis::Horizontal)
      lines[{Axis::Horizontal, s.p.y}].push_back({s.p.x, s.q.x});
    else
      lines[{Axis::Vertical, s.p.x}].push_back({s.p.y, s.q.y});
  }
  std::vector<Segment> out;
  for (auto& [key, spans] : lines) {
    std::sort(spans.begin(), spans.end());
    int lo = spans[0].first, hi = spans[0].second;
    auto flush = [&](int a, int b) {
      if (key.first == Axis::Horizontal) out.push_back(Segment::make({a, key.second}, {b, key.second}));
      else out.push_back(Segment::make({key.second, a}, {key.second, b}));
    };
    for (size_t i = 1; i < spans.size(); ++i) {
      if (spans[i].first <= hi) {
        hi = std::max(hi, spans[i].second);
      } else {
        flush(lo, hi);
        lo = spans[i].first;
        hi = spans[i].second;
      }
    }
    flush(lo, hi);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Dragging normalization.

namespace {

// Coordinate frames for the dragging sweep: every drag is run with the moving
// segment horizontal and the motion pointing down.
struct Frame {
  bool transpose = false;
  bool flip = false;  // applied after the transpose

  Point fwd(Point p) const {
    if (transpose) std::swap(p.x, p.y);
    if (flip) p.y = -p.y;
    return p;
  }
  Point inv(Point p) const {
    if (flip) p.y = -p.y;
    if (transpose) std::swap(p.x, p.y);
    return p;
  }
  Segment fwd(const Segment& s) const { return Segment::make(fwd(s.p), fwd(s.q)); }
  Segment inv(const Segment& s) const { return Segment::make(inv(s.p), inv(s.q)); }
};

struct DragWorld {
  OrthoPolygon poly;
  std::vector<Point> reflex;
  std::vector<Segment> horizontal_border;
  std::vector<Segment> segs;
};

DragWorld build_world(const OrthoPolygon& poly, const std::vector<Segment>& segs,
                      const Frame& frame) {
  DragWorld w;
  std::vector<Point> pts;
  for (Point p : poly.vertices) pts.push_back(frame.fwd(p));
  w.poly = validate_polygon(std::move(pts));
  std::vector<Point> convex;
  classify_vertices(w.poly, w.reflex, convex);
  for (size_t i = 0; i < w.poly.vertices.size(); ++i) {
    Segment b = Segment::make(w.poly.vertices[i], w.poly.vertices[(i + 1) % w.poly.vertices.size()]);
    if (b.axis() == Axis::Horizontal) w.horizontal_border.push_back(b);
  }
  for (const Segment& s : segs) w.segs.push_back(frame.fwd(s));
  std::sort(w.segs.begin(), w.segs.end());
  return w;
}

bool closed_overlap(int a1, int a2, int b1, int b2) { return std::max(a1, b1) <= std::min(a2, b2); }

// Drags `e` (horizontal) downwards through `w.segs` until it dissolves into
// the border, is cut by it, or gains a reflex endpoint. Returns the number of
// landing events.
int drag_down(DragWorld& w, Segment e) {
  auto it = std::find(w.segs.begin(), w.segs.end(), e);
  assert(it != w.segs.end());
  w.segs.erase(it);
  std::set<Point> reflex_set(w.reflex.begin(), w.reflex.end());
  int events = 0;

  for (;;) {
    ++events;
    int c = e.p.y;
    int x1 = e.p.x, x2 = e.q.x;

    std::optional<int> target;
    auto consider = [&](int y) {
      if (y < c && (!target || y > *target)) target = y;
    };
    for (const Segment& s : w.segs)
      if (s.axis() == Axis::Horizontal && closed_overlap(s.p.x, s.q.x, x1, x2)) consider(s.p.y);
    for (Point r : w.reflex)
      if (x1 <= r.x && r.x <= x2) consider(r.y);
    for (const Segment& b : w.horizontal_border)
      if (closed_overlap(b.p.x, b.q.x, x1, x2)) consider(b.p.y);
    assert(target);  // the polygon's lower border always lies below
    int t = *target;

    // Attached perpendicular segments shrink on the approach side and stretch
    // on the trailing side; crossings slide through untouched.
    for (auto vs = w.segs.begin(); vs != w.segs.end();) {
      Segment& v = *vs;
      if (v.axis() == Axis::Vertical && v.p.x > x1 && v.p.x < x2) {
        if (v.q.y == c) {  // hangs below e
          if (v.p.y == t) {
            vs = w.segs.erase(vs);
            continue;
          }
          v = Segment::make(v.p, {v.p.x, t});
        } else if (v.p.y == c) {  // stands on top of e
          v = Segment::make({v.p.x, t}, v.q);
        }
      }
      ++vs;
    }

    // Landing: merge with every collinear segment reachable through the span,
    // then cut away the stretches lying on the border.
    int u1 = x1, u2 = x2;
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto vs = w.segs.begin(); vs != w.segs.end();) {
        if (vs->axis() == Axis::Horizontal && vs->p.y == t && closed_overlap(vs->p.x, vs->q.x, u1, u2)) {
          u1 = std::min(u1, vs->p.x);
          u2 = std::max(u2, vs->q.x);
          vs = w.segs.erase(vs);
          grew = true;
        } else {
          ++vs;
        }
      }
    }
    std::vector<std::pair<int, int>> pieces{{u1, u2}};
    for (const Segment& b : w.horizontal_border) {
      if (b.p.y != t) continue;
      std::vector<std::pair<int, int>> next;
      for (auto [a1, a2] : pieces) {
        int c1 = std::max(a1, b.p.x), c2 = std::min(a2, b.q.x);
        if (c1 >= c2) {
          next.push_back({a1, a2});
          continue;
        }
        if (a1 < c1) next.push_back({a1, c1});
        if (c2 < a2) next.push_back({c2, a2});
      }
      pieces = std::move(next);
    }

    if (pieces.empty()) return events;  // dissolved into the border
    if (pieces.size() == 1) {
      Segment landed = Segment::make({pieces[0].first, t}, {pieces[0].second, t});
      if (reflex_set.count(landed.p) || reflex_set.count(landed.q)) {
        w.segs.push_back(landed);
        return events;
      }
      e = landed;  // keep dragging the merged segment
      continue;
    }
    for (auto [a1, a2] : pieces)
      w.segs.push_back(Segment::make({a1, t}, {a2, t}));
    return events;  // border cuts anchor the pieces at reflex corners
  }
}

}  // namespace

Partition normalize_dragging(const Partition& part) {
  const OrthoPolygon& poly = part.polygon;
  std::vector<Point> reflex, convex;
  classify_vertices(poly, reflex, convex);
  std::set<Point> reflex_set(reflex.begin(), reflex.end());

  std::vector<Segment> segs = maximal_segments(part);

  int min_x = poly.vertices[0].x, max_x = min_x, min_y = poly.vertices[0].y, max_y = min_y;
  for (Point v : poly.vertices) {
    min_x = std::min(min_x, v.x);
    max_x = std::max(max_x, v.x);
    min_y = std::min(min_y, v.y);
    max_y = std::max(max_y, v.y);
  }
  long long guard = (long long)(segs.size() + 2) * ((max_x - min_x) + (max_y - min_y) + 2) * 4 + 64;
  long long spent = 0;

  for (;;) {
    Partition current = make_partition(poly, segs);
    segs = maximal_segments(current);

    std::optional<Segment> pick;
    for (const Segment& s : segs) {
      if (reflex_set.count(s.p) || reflex_set.count(s.q)) continue;
      pick = s;
      break;
    }
    if (!pick) break;

    // Work in a frame where the chosen segment is horizontal.
    Frame frame;
    frame.transpose = pick->axis() == Axis::Vertical;
    DragWorld w = build_world(poly, segs, frame);
    Segment e = frame.fwd(*pick);
    int c = e.p.y, x1 = e.p.x, x2 = e.q.x;

    // Side description from the face tiling: a side is empty when a single
    // rectangle spans the whole segment there.
    std::vector<Segment> tsegs = w.segs;
    Partition tpart = make_partition(w.poly, tsegs);
    int below_count = 0, above_count = 0;
    std::optional<Rect> below_one, above_one;
    int below_faces = 0, above_faces = 0;
    for (const Rect& r : tpart.rectangles) {
      if (std::max(r.x1, x1) >= std::min(r.x2, x2)) continue;
      if (r.y2 == c) {
        ++below_faces;
        below_one = r;
      } else if (r.y1 == c) {
        ++above_faces;
        above_one = r;
      }
    }
    bool below_empty = below_faces == 1 && below_one->x1 == x1 && below_one->x2 == x2;
    bool above_empty = above_faces == 1 && above_one->x1 == x1 && above_one->x2 == x2;
    if (below_empty && above_empty) {
      segs.erase(std::find(segs.begin(), segs.end(), *pick));
      continue;
    }
    for (const Segment& s : w.segs) {
      if (s.axis() != Axis::Vertical || s.p.x <= x1 || s.p.x >= x2) continue;
      if (s.q.y == c) ++below_count;       // top endpoint on e: hangs below
      else if (s.p.y == c) ++above_count;  // bottom endpoint on e: stands above
    }

    // Drag toward the side with at least as many attached segments; ties go to
    // the lexicographically smaller rectangle corner, i.e. downwards here.
    bool down = below_count >= above_count;
    if (!down) {
      Frame flip;
      flip.flip = true;
      DragWorld fw = build_world(w.poly, w.segs, flip);
      spent += drag_down(fw, flip.fwd(e));
      // map back out of both frames
      std::vector<Segment> back;
      for (const Segment& s : fw.segs) back.push_back(frame.inv(flip.inv(s)));
      segs = std::move(back);
    } else {
      spent += drag_down(w, e);
      std::vector<Segment> back;
      for (const Segment& s : w.segs) back.push_back(frame.inv(s));
      segs = std::move(back);
    }
    std::sort(segs.begin(), segs.end());
    if (spent > guard)
      throw Error(Errc::IterationGuardExceeded,
                  "dragging exceeded its event budget; partition state is inconsistent");
  }

  return make_partition(poly, segs);
}

}  // namespace stab
