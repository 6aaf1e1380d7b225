#pragma once

#include <string>
#include <vector>

#include "dexp/nsystem/geometry.hpp"

namespace dexp {

/// Plot data for the combined graph: one segment per component per interval,
/// plus the division points.
struct GraphData {
  struct Segment {
    int component = 0;  // 1-based rank
    Rat q0, q1, v0, v1, slope;
    friend bool operator==(const Segment&, const Segment&) = default;
  };
  struct DivisionPoint {
    Rat q;
    std::string kind;                  // "ordinary" | "switch"
    std::string label;                 // primary label, e.g. "delta(2,1)"
    std::vector<std::string> aliases;  // e.g. "mu(n+1)" on delta(n,2)
    friend bool operator==(const DivisionPoint&, const DivisionPoint&) = default;
  };

  int n = 0;
  std::vector<Segment> segments;
  std::vector<DivisionPoint> division_points;

  friend bool operator==(const GraphData&, const GraphData&) = default;
};

GraphData export_graph(const SystemGeometry& g);

/// Rebuilds breakpoints (q, values, labels, switch marks) and rising units
/// from plot data; `params` supplies what the plot does not carry.
SystemGeometry geometry_from_graph(const GraphData& data, const Params& params);

}  // namespace dexp
