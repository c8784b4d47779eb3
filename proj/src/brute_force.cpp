#include <algorithm>
#include <bit>
#include <cstdint>

#include "stab/solver.hpp"

namespace stab {

namespace {

void model_columns(const Arrangement& arr, ModelKind kind, std::vector<Segment>& cols,
                   std::vector<std::vector<int>>& cover) {
  switch (kind) {
    case ModelKind::Rpst:
      cols = arr.internal_edges;
      cover.clear();
      for (size_t i = 0; i < cols.size(); ++i) cover.push_back({int(i)});
      break;
    case ModelKind::Rpst2:
      cols = arr.extended_edges;
      cover = arr.cover;
      break;
    case ModelKind::Conforming:
      conforming_columns(arr, cols, cover);
      break;
  }
}

}  // namespace

MipSolution brute_force(const Arrangement& arr, ModelKind kind) {
  std::vector<Segment> cols;
  std::vector<std::vector<int>> cover;
  model_columns(arr, kind, cols, cover);
  const int n = int(cols.size());
  if (n > 24) throw Error(Errc::TooLarge, "brute force limited to 24 edges, got " + std::to_string(n));
  if (arr.internal_edges.size() > 63)
    throw Error(Errc::TooLarge, "brute force limited to 63 internal edges");

  std::vector<std::uint64_t> cover_mask(n, 0);
  for (int c = 0; c < n; ++c)
    for (int e : cover[c]) cover_mask[c] |= 1ULL << e;

  std::vector<std::uint64_t> reflex_mask;
  for (Point u : arr.reflex) {
    std::uint64_t m = 0;
    for (int e : arr.incidence.at(u)) m |= 1ULL << e;
    reflex_mask.push_back(m);
  }
  struct SteinerMask {
    std::uint64_t horizontal = 0, vertical = 0;
  };
  std::vector<SteinerMask> steiner_mask;
  for (Point u : arr.steiner) {
    SteinerMask m;
    for (int e : arr.incidence.at(u)) {
      if (arr.internal_edges[e].axis() == Axis::Horizontal) m.horizontal |= 1ULL << e;
      else m.vertical |= 1ULL << e;
    }
    steiner_mask.push_back(m);
  }
  std::vector<std::uint64_t> line_mask;
  for (const StabLine& line : arr.stab_lines) {
    std::uint64_t m = 0;
    for (size_t e = 0; e < arr.internal_edges.size(); ++e)
      if (line.crosses(arr.internal_edges[e])) m |= 1ULL << e;
    line_mask.push_back(m);
  }

  long long best_k = -1;
  std::uint64_t best_sel = 0;
  std::uint64_t best_expansion = 0;
  const std::uint64_t end = 1ULL << n;
  for (std::uint64_t sel = 0; sel < end; ++sel) {
    std::uint64_t expansion = 0;
    for (std::uint64_t rest = sel; rest;) {
      int c = std::countr_zero(rest);
      rest &= rest - 1;
      expansion |= cover_mask[c];
    }
    bool ok = true;
    for (std::uint64_t m : reflex_mask)
      if (!(expansion & m)) { ok = false; break; }
    if (!ok) continue;
    for (const SteinerMask& m : steiner_mask) {
      std::uint64_t h = expansion & m.horizontal;
      std::uint64_t v = expansion & m.vertical;
      int cnt = std::popcount(h | v);
      if (cnt == 1 || (cnt == 2 && h && v)) { ok = false; break; }
    }
    if (!ok) continue;
    long long k = 1;
    for (std::uint64_t m : line_mask) k = std::max(k, 1 + (long long)std::popcount(expansion & m));
    if (best_k < 0 || k < best_k) {
      best_k = k;
      best_sel = sel;
      best_expansion = expansion;
    }
  }

  MipSolution out;
  out.status = SolveStatus::Optimal;  // the full edge set is always feasible
  out.k_opt = best_k;
  out.nodes = (long long)end;
  out.dual_bound = Rational((long)best_k);
  out.incumbent.model_kind = kind;
  for (int c = 0; c < n; ++c)
    if (best_sel >> c & 1) out.incumbent.chosen.push_back(c);
  for (size_t e = 0; e < arr.internal_edges.size(); ++e)
    if (best_expansion >> e & 1) out.incumbent.derived_internal.push_back(int(e));
  return out;
}

}  // namespace stab
