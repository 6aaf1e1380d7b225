#include "dexp/nsystem/graph.hpp"

#include <map>
#include <stdexcept>

namespace dexp {

GraphData export_graph(const SystemGeometry& g) {
  GraphData out;
  out.n = g.n();
  const auto width = static_cast<int>(g.params.A.size());
  for (int r = 1; r <= width; ++r) {
    for (std::size_t i = 0; i + 1 < g.points.size(); ++i) {
      const auto& lo = g.points[i];
      const auto& hi = g.points[i + 1];
      const auto idx = static_cast<std::size_t>(r - 1);
      GraphData::Segment s{r, lo.q, hi.q, lo.values[idx], hi.values[idx], Rat(0)};
      s.slope = (s.v1 - s.v0) / (s.q1 - s.q0);
      out.segments.push_back(std::move(s));
    }
  }
  for (const auto& pt : g.points) {
    GraphData::DivisionPoint d;
    d.q = pt.q;
    d.kind = pt.switch_point ? "switch" : "ordinary";
    d.label = pt.labels.empty() ? "" : pt.labels.front().str();
    for (std::size_t i = 1; i < pt.labels.size(); ++i) d.aliases.push_back(pt.labels[i].str());
    out.division_points.push_back(std::move(d));
  }
  return out;
}

SystemGeometry geometry_from_graph(const GraphData& data, const Params& params) {
  if (data.n != params.n) throw std::invalid_argument("graph dimension does not match parameters");
  SystemGeometry g;
  g.params = params;
  const auto width = static_cast<std::size_t>(params.n + 1);

  std::map<Rat, std::size_t> where;
  for (const auto& d : data.division_points) {
    Breakpoint<Rat> pt;
    pt.q = d.q;
    pt.values.assign(width, Rat(0));
    pt.labels.push_back(PointLabel::parse(d.label));
    for (const auto& a : d.aliases) pt.labels.push_back(PointLabel::parse(a));
    pt.switch_point = d.kind == "switch";
    where[d.q] = g.points.size();
    g.points.push_back(std::move(pt));
  }
  std::vector<std::vector<int>> rising(g.points.empty() ? 0 : g.points.size() - 1);
  std::vector<Rat> slope(rising.size(), Rat(0));
  for (const auto& s : data.segments) {
    const auto lo = where.at(s.q0);
    const auto hi = where.at(s.q1);
    const auto r = static_cast<std::size_t>(s.component - 1);
    g.points.at(lo).values.at(r) = s.v0;
    g.points.at(hi).values.at(r) = s.v1;
    if (!s.slope.is_zero()) {
      rising.at(lo).push_back(s.component);
      slope.at(lo) = s.slope;
    }
  }
  for (std::size_t i = 0; i < rising.size(); ++i) g.intervals.push_back({rising[i], slope[i]});
  return g;
}

}  // namespace dexp
