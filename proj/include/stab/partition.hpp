#pragma once

#include <map>

#include "stab/diagnostics.hpp"
#include "stab/solver.hpp"

namespace stab {

struct Rect {
  int x1, y1, x2, y2;
  auto operator<=>(const Rect&) const = default;
  long long area() const { return (long long)(x2 - x1) * (y2 - y1); }
};

struct Partition {
  OrthoPolygon polygon;
  std::vector<Segment> segments;    // interior edges after splitting, sorted
  std::vector<Rect> rectangles;     // the induced tiling, sorted
};

class NotAPartitionError : public Error {
public:
  NotAPartitionError(DiagnosticReport report, const std::string& what)
      : Error(Errc::NotAPartition, what), report_(std::move(report)) {}
  const DiagnosticReport& report() const { return report_; }

private:
  DiagnosticReport report_;
};

// Checks the local angular criterion at every subdivision vertex (each gap
// measured inside P must be at most pi), then floods the faces through a
// half-edge walk and asserts every bounded face is a rectangle.
Partition make_partition(const OrthoPolygon& poly, std::vector<Segment> segments);

// The same check applied to a model selection's internal edges.
Partition validate_partition(const EdgeSelection& sel, const Arrangement& arr);

struct StabbingReport {
  std::map<StabLine, int> per_line;
  int stabbing_number = 1;
};

// Counts, for each stabbing line, one plus the partition segments it crosses.
StabbingReport stabbing_number(const Partition& part, const Arrangement& arr);

// Merges collinear touching partition segments into maximal interior segments.
std::vector<Segment> maximal_segments(const Partition& part);

// Proposition-style normalization: repeatedly drags maximal segments without a
// reflex endpoint toward the side with at least as many attached perpendicular
// segments until every maximal segment is anchored at a reflex vertex (or has
// been deleted/absorbed). Never increases the stabbing number.
Partition normalize_dragging(const Partition& part);

}  // namespace stab
