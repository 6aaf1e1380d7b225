#include "dexp/nsystem/geometry.hpp"

#include <algorithm>
#include <regex>
#include <set>

namespace dexp {

std::string PointLabel::str() const {
  switch (kind) {
    case PointKind::start: return "start";
    case PointKind::end: return "end";
    case PointKind::delta: return "delta(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case PointKind::mu: return "mu(" + std::to_string(i) + ")";
  }
  return "?";
}

PointLabel PointLabel::parse(const std::string& text) {
  if (text == "start") return start();
  if (text == "end") return end();
  static const std::regex delta_re(R"(delta\((\d+),([12])\))");
  static const std::regex mu_re(R"(mu\((\d+)\))");
  std::smatch m;
  if (std::regex_match(text, m, delta_re)) return delta(std::stoi(m[1]), std::stoi(m[2]));
  if (std::regex_match(text, m, mu_re)) return mu(std::stoi(m[1]));
  throw std::invalid_argument("unknown division point label '" + text + "'");
}

namespace {

std::string at(const Breakpoint<Rat>& p) {
  return p.labels.empty() ? "q=" + p.q.str() : p.labels.front().str();
}

void check_interval(const SystemGeometry& g, std::size_t i, std::vector<std::string>& out) {
  const auto& lo = g.points[i];
  const auto& hi = g.points[i + 1];
  const std::string where = "interval " + at(lo) + ".." + at(hi);
  const Rat len = hi.q - lo.q;
  if (len <= 0) return;  // reported by the ordering check
  const std::size_t width = std::min(lo.values.size(), hi.values.size());

  std::vector<int> rising;
  std::vector<Rat> slopes;
  for (std::size_t r = 0; r < width; ++r) {
    const Rat s = (hi.values[r] - lo.values[r]) / len;
    if (s < 0) out.push_back(where + ": component " + std::to_string(r + 1) + " decreases");
    if (!s.is_zero()) {
      rising.push_back(static_cast<int>(r + 1));
      slopes.push_back(s);
    }
  }

  RisingUnit observed{rising, Rat(0)};
  bool unit_ok = false;
  if (rising.size() == 1 && slopes[0] == 1) {
    observed.slope = Rat(1);
    unit_ok = true;
  } else if (rising.size() == 2 && rising[1] == rising[0] + 1 && slopes[0] == Rat(1, 2) &&
             slopes[1] == Rat(1, 2)) {
    const auto a = static_cast<std::size_t>(rising[0] - 1);
    observed.slope = Rat(1, 2);
    unit_ok = lo.values[a] == lo.values[a + 1] && hi.values[a] == hi.values[a + 1];
    if (!unit_ok) out.push_back(where + ": slope-1/2 pair does not coincide");
  }
  if (!unit_ok) {
    out.push_back(where + ": not a single rising unit");
    return;
  }
  if (i < g.intervals.size() && !(g.intervals[i] == observed)) {
    out.push_back(where + ": recorded rising unit disagrees with the values");
  }
}

}  // namespace

AxiomReport check_axioms(const SystemGeometry& g) {
  AxiomReport rep;
  auto& v = rep.violations;
  const Params& p = g.params;
  const int n = p.n;
  const auto width = static_cast<std::size_t>(n + 1);

  if (g.points.size() < 2) {
    v.emplace_back("geometry has fewer than two breakpoints");
    return rep;
  }
  if (g.intervals.size() != g.points.size() - 1) {
    v.emplace_back("interval count does not match breakpoint count");
  }

  const auto& first = g.points.front();
  const auto& last = g.points.back();
  if (!(first.q == 1)) v.emplace_back("first breakpoint is not q=1");
  if (first.values != p.A) v.emplace_back("boundary values at q=1 differ from A");
  if (!(last.q == p.C)) v.emplace_back("last breakpoint is not q=C");
  {
    std::vector<Rat> ca;
    for (const auto& a : p.A) ca.push_back(p.C * a);
    if (last.values != ca) v.emplace_back("boundary values at q=C differ from C·A");
  }

  for (std::size_t i = 0; i < g.points.size(); ++i) {
    const auto& pt = g.points[i];
    if (pt.values.size() != width) {
      v.push_back("wrong component count at " + at(pt));
      continue;
    }
    if (i > 0 && !(g.points[i - 1].q < pt.q)) v.push_back("breakpoints not increasing at " + at(pt));
    for (std::size_t r = 1; r < width; ++r) {
      if (pt.values[r - 1] > pt.values[r]) {
        v.push_back("ordering fails at " + at(pt));
        break;
      }
    }
    Rat sum(0);
    for (const auto& x : pt.values) sum += x;
    if (!(sum == pt.q)) v.push_back("sum identity fails at " + at(pt));
  }

  for (std::size_t i = 0; i + 1 < g.points.size(); ++i) check_interval(g, i, v);

  std::set<Rat> distinct;
  for (const auto& pt : g.points) distinct.insert(pt.q);
  if (distinct.size() != static_cast<std::size_t>(3 * n + 1)) {
    v.push_back("expected " + std::to_string(3 * n + 1) + " division points, found " +
                std::to_string(distinct.size()));
  }

  // Every expected label exactly once; switch marks exactly on mu(1..n).
  std::vector<PointLabel> expected{PointLabel::start(), PointLabel::end()};
  for (int k = 2; k <= n; ++k) {
    expected.push_back(PointLabel::delta(k, 1));
    expected.push_back(PointLabel::delta(k, 2));
  }
  for (int l = 0; l <= n + 1; ++l) expected.push_back(PointLabel::mu(l));
  for (const auto& want : expected) {
    int count = 0;
    for (const auto& pt : g.points) count += pt.has_label(want) ? 1 : 0;
    if (count != 1) v.push_back("label " + want.str() + " appears " + std::to_string(count) + " times");
  }
  for (const auto& pt : g.points) {
    bool should_switch = false;
    for (const auto& l : pt.labels)
      if (l.kind == PointKind::mu && l.i >= 1 && l.i <= n) should_switch = true;
    if (pt.switch_point != should_switch) {
      v.push_back("label: " + at(pt) + (should_switch ? " must be a switch point" : " must be ordinary"));
    }
  }
  return rep;
}

SystemGeometry build_geometry(const Params& p) {
  const auto report = validate_params(p);
  if (!report.valid()) throw InvalidParams(report);
  SystemGeometry g = build_geometry_unchecked(p);
  const auto axioms = check_axioms(g);
  if (!axioms.ok()) throw GeometryError("axiom check failed: " + axioms.violations.front());
  return g;
}

SystemGeometry shifted_geometry(const SystemGeometry& g, long m) {
  const Rat factor = g.params.C.pow(m);
  SystemGeometry out = g;
  for (auto& pt : out.points) {
    pt.q *= factor;
    for (auto& x : pt.values) x *= factor;
  }
  return out;
}

NSystem::NSystem(SystemGeometry geometry) : geometry_(std::move(geometry)) {}

std::vector<Rat> NSystem::operator()(const Rat& q) const {
  if (q < 1) throw std::domain_error("outside domain: q=" + q.str() + " < 1");
  const Rat& c = geometry_.params.C;
  Rat reduced = q;
  Rat scale(1);
  while (reduced >= c) {
    reduced /= c;
    scale *= c;
  }
  const auto& pts = geometry_.points;
  // Last breakpoint with q_i <= reduced; reduced < C keeps i+1 in range.
  auto it = std::upper_bound(pts.begin(), pts.end(), reduced,
                             [](const Rat& x, const Breakpoint<Rat>& b) { return x < b.q; });
  const auto i = static_cast<std::size_t>(std::distance(pts.begin(), it) - 1);
  const auto& lo = pts[i];
  const auto& hi = pts[i + 1];
  const Rat t = (reduced - lo.q) / (hi.q - lo.q);
  std::vector<Rat> out(lo.values.size());
  for (std::size_t r = 0; r < out.size(); ++r) {
    out[r] = (lo.values[r] + (hi.values[r] - lo.values[r]) * t) * scale;
  }
  return out;
}

std::vector<Rat> eval_system(const NSystem& s, const Rat& q) { return s(q); }

}  // namespace dexp
