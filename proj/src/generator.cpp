#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "stab/toolkit.hpp"

namespace stab {

namespace {

using Cell = Point;  // unit cell with lower-left corner (x, y)

// Corner turn count of the cell union's boundary; a corner is a lattice point
// whose 2x2 occupancy has 1 or 3 cells. Two diagonal cells are a pinch.
struct Occupancy {
  std::set<Cell> cells;

  bool filled(int x, int y) const { return cells.count({x, y}) != 0; }

  int corner_kind(Point v) const {  // 0 plain, 1 corner, -1 pinch
    bool a = filled(v.x - 1, v.y - 1), b = filled(v.x, v.y - 1);
    bool c = filled(v.x - 1, v.y), d = filled(v.x, v.y);
    int n = a + b + c + d;
    if (n == 1 || n == 3) return 1;
    if (n == 2 && a == d) return -1;  // diagonal pair either way
    return 0;
  }
};

int vertex_count(const Occupancy& occ) {
  std::set<Point> corners;
  for (Cell c : occ.cells)
    for (int dx = 0; dx <= 1; ++dx)
      for (int dy = 0; dy <= 1; ++dy) corners.insert({c.x + dx, c.y + dy});
  int total = 0;
  for (Point v : corners)
    if (occ.corner_kind(v) == 1) ++total;
  return total;
}

bool creates_pinch(const Occupancy& occ, Cell c) {
  Occupancy next = occ;
  next.cells.insert(c);
  for (int dx = 0; dx <= 1; ++dx)
    for (int dy = 0; dy <= 1; ++dy)
      if (next.corner_kind({c.x + dx, c.y + dy}) == -1) return true;
  return false;
}

bool creates_hole(const Occupancy& occ, Cell c) {
  Occupancy next = occ;
  next.cells.insert(c);
  int min_x = c.x, max_x = c.x, min_y = c.y, max_y = c.y;
  for (Cell k : next.cells) {
    min_x = std::min(min_x, k.x);
    max_x = std::max(max_x, k.x);
    min_y = std::min(min_y, k.y);
    max_y = std::max(max_y, k.y);
  }
  // Flood the complement from outside the bounding box; every empty cell in
  // the box must be reachable.
  std::set<Cell> seen;
  std::vector<Cell> stack{{min_x - 1, min_y - 1}};
  seen.insert(stack[0]);
  while (!stack.empty()) {
    Cell cur = stack.back();
    stack.pop_back();
    for (auto [dx, dy] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
      Cell nb{cur.x + dx, cur.y + dy};
      if (nb.x < min_x - 1 || nb.x > max_x + 1 || nb.y < min_y - 1 || nb.y > max_y + 1) continue;
      if (next.cells.count(nb) || seen.count(nb)) continue;
      seen.insert(nb);
      stack.push_back(nb);
    }
  }
  for (int x = min_x; x <= max_x; ++x)
    for (int y = min_y; y <= max_y; ++y)
      if (!next.cells.count({x, y}) && !seen.count({x, y})) return true;
  return false;
}

// Traces the boundary cycle counterclockwise and collapses collinear runs.
OrthoPolygon trace_polygon(const Occupancy& occ) {
  // Directed boundary edges with the interior on the left.
  std::map<Point, Point> next;
  for (Cell c : occ.cells) {
    if (!occ.filled(c.x, c.y - 1)) next[{c.x, c.y}] = {c.x + 1, c.y};          // south side, east
    if (!occ.filled(c.x, c.y + 1)) next[{c.x + 1, c.y + 1}] = {c.x, c.y + 1};  // north side, west
    if (!occ.filled(c.x - 1, c.y)) next[{c.x, c.y + 1}] = {c.x, c.y};          // west side, south
    if (!occ.filled(c.x + 1, c.y)) next[{c.x + 1, c.y}] = {c.x + 1, c.y + 1};  // east side, north
  }
  Point start = next.begin()->first;
  for (const auto& [v, _] : next) start = std::min(start, v);
  std::vector<Point> walk;
  Point cur = start;
  do {
    walk.push_back(cur);
    cur = next.at(cur);
  } while (cur != start);
  std::vector<Point> pts;
  for (size_t i = 0; i < walk.size(); ++i) {
    Point prev = walk[(i + walk.size() - 1) % walk.size()];
    Point here = walk[i];
    Point after = walk[(i + 1) % walk.size()];
    bool straight = (prev.x == here.x && here.x == after.x) || (prev.y == here.y && here.y == after.y);
    if (!straight) pts.push_back(here);
  }
  // Shift to the origin.
  int min_x = pts[0].x, min_y = pts[0].y;
  for (Point v : pts) {
    min_x = std::min(min_x, v.x);
    min_y = std::min(min_y, v.y);
  }
  for (Point& v : pts) {
    v.x -= min_x;
    v.y -= min_y;
  }
  return validate_polygon(std::move(pts));
}

}  // namespace

OrthoPolygon generate_polygon(int n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0)
    throw Error(Errc::GenerationFailed, "vertex count must be even and at least 4");

  const int max_restarts = 64;
  for (int attempt = 0; attempt < max_restarts; ++attempt) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + attempt + 1);
    Occupancy occ;
    occ.cells.insert({0, 0});
    const int step_budget = 16 * n + 64;
    for (int step = 0; step < step_budget; ++step) {
      int v = vertex_count(occ);
      if (v == n) return trace_polygon(occ);

      std::set<Cell> candidate_set;
      for (Cell c : occ.cells)
        for (auto [dx, dy] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
          Cell nb{c.x + dx, c.y + dy};
          if (!occ.cells.count(nb)) candidate_set.insert(nb);
        }
      std::vector<Cell> ok;
      std::vector<Cell> preferred;
      for (Cell c : candidate_set) {
        if (creates_pinch(occ, c) || creates_hole(occ, c)) continue;
        ok.push_back(c);
        Occupancy next = occ;
        next.cells.insert(c);
        int dv = vertex_count(next) - v;
        if ((v < n && dv > 0) || (v > n && dv < 0)) preferred.push_back(c);
      }
      if (ok.empty()) break;
      const std::vector<Cell>& pool = preferred.empty() ? ok : preferred;
      occ.cells.insert(pool[rng() % pool.size()]);
    }
  }
  throw Error(Errc::GenerationFailed,
              "could not grow a polygon with " + std::to_string(n) + " vertices from seed " +
                  std::to_string(seed));
}

}  // namespace stab
