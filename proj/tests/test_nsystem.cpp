#include <gtest/gtest.h>

#include "dexp/exponents/exponents.hpp"
#include "dexp/io/json.hpp"
#include "dexp/nsystem/graph.hpp"
#include "oracles.hpp"

namespace dexp {
namespace {

std::vector<Rat> rats(std::initializer_list<const char*> xs) {
  std::vector<Rat> out;
  for (const char* x : xs) out.push_back(Rat::parse(x));
  return out;
}

TEST(CanonicalParams, MatchesTheStatedPoint) {
  const Params p3 = canonical_params(3);
  EXPECT_EQ(p3.A, rats({"1/8", "1/8", "1/4", "1/2"}));
  EXPECT_EQ(p3.B, rats({"5/16", "5/8"}));
  EXPECT_EQ(p3.C, Rat(3));
  EXPECT_EQ(p3.D, Rat(11, 32));

  const Params p4 = canonical_params(4);
  EXPECT_EQ(p4.A, rats({"1/16", "1/16", "1/8", "1/4", "1/2"}));
  EXPECT_EQ(p4.B, rats({"5/32", "5/16", "5/8"}));
  EXPECT_EQ(p4.D, Rat(11, 64));
}

TEST(CanonicalParams, ValidAndNormalizedForAllSupportedN) {
  for (int n = 3; n <= 8; ++n) {
    const Params p = canonical_params(n);
    Rat sum(0);
    for (const auto& a : p.A) sum += a;
    EXPECT_EQ(sum, Rat(1)) << n;
    EXPECT_TRUE(validate_params(p).valid()) << n;
  }
  EXPECT_THROW(canonical_params(2), UnsupportedDimension);
}

TEST(Validate, NamesEachFailedInequality) {
  Params p = canonical_params(3);
  p.b(2) = Rat(3, 8);
  const auto r = validate_params(p);
  EXPECT_EQ(r.violations, (std::vector<std::string>{"B_2 < D", "B_2 < C·A_2"}));

  Params q = canonical_params(3);
  q.a(1) = Rat(1, 16);
  q.a(4) = Rat(9, 16);
  const auto rq = validate_params(q);
  EXPECT_EQ(rq.violations, (std::vector<std::string>{"A_1 = A_2"}));

  Params s = canonical_params(3);
  s.a(4) = Rat(1, 4) + Rat(1, 1000);
  const auto rs = validate_params(s);
  ASSERT_FALSE(rs.valid());
  EXPECT_EQ(rs.violations.front(), "A_1 + ... + A_4 = 1");

  Params t = canonical_params(3);
  t.n = 2;
  EXPECT_THROW(validate_params(t), UnsupportedDimension);
}

TEST(Validate, BoundaryEqualityIsRejected) {
  Params p = canonical_params(3);
  p.D = p.C * p.a(2);  // strict inequality D < C·A_2 now an equality
  EXPECT_EQ(validate_params(p).violations, (std::vector<std::string>{"D < C·A_2"}));
  EXPECT_THROW(build_geometry(p), InvalidParams);
}

TEST(Geometry, CanonicalN3Breakpoints) {
  const SystemGeometry g = build_geometry(canonical_params(3));
  std::vector<Rat> qs;
  std::vector<std::string> labels;
  for (const auto& pt : g.points) {
    qs.push_back(pt.q);
    labels.push_back(pt.labels.front().str());
  }
  EXPECT_EQ(qs, rats({"1", "9/8", "5/4", "23/16", "27/16", "41/16", "43/16", "87/32", "47/16", "3"}));
  EXPECT_EQ(labels, (std::vector<std::string>{"start", "delta(2,1)", "delta(2,2)", "delta(3,1)", "delta(3,2)",
                                              "mu(3)", "mu(2)", "mu(1)", "mu(0)", "end"}));
  EXPECT_TRUE(g.points[4].has_label(PointLabel::mu(4)));
  EXPECT_EQ(g.points.front().values, rats({"1/8", "1/8", "1/4", "1/2"}));
  EXPECT_EQ(g.points.back().values, rats({"3/8", "3/8", "3/4", "3/2"}));
}

TEST(Geometry, BreakpointsAgreeWithIndependentMoveWalk) {
  for (int n = 3; n <= 8; ++n) {
    const Params p = canonical_params(n);
    const SystemGeometry g = build_geometry(p);
    const auto k = oracle::kinks(p);
    ASSERT_EQ(k.size() + 1, g.points.size()) << n;
    for (std::size_t i = 0; i < k.size(); ++i) {
      EXPECT_EQ(g.points[i].q, k[i]);
      EXPECT_EQ(g.points[i].values, oracle::eval(p, k[i]));
    }
  }
}

TEST(Geometry, DivisionPointCountIs3nPlus1) {
  for (int n = 3; n <= 8; ++n) {
    const SystemGeometry g = build_geometry(canonical_params(n));
    EXPECT_EQ(g.points.size(), static_cast<std::size_t>(3 * n + 1)) << n;
    EXPECT_TRUE(check_axioms(g).ok()) << n;
    EXPECT_EQ(g.points.back().q, Rat(3));
  }
}

TEST(Geometry, SwitchPointsAreTheMuLabels) {
  const SystemGeometry g = build_geometry(canonical_params(5));
  for (const auto& pt : g.points) {
    const auto& l = pt.labels.front();
    const bool expect = l.kind == PointKind::mu && l.i >= 1 && l.i <= 5;
    EXPECT_EQ(pt.switch_point, expect) << l.str();
  }
}

TEST(Geometry, LabelTextRoundTrips) {
  for (const auto& l : {PointLabel::start(), PointLabel::delta(4, 2), PointLabel::mu(0), PointLabel::end()}) {
    EXPECT_EQ(PointLabel::parse(l.str()), l);
  }
  EXPECT_THROW(PointLabel::parse("nu(3)"), std::invalid_argument);
}

TEST(Geometry, IntervalSlopesSumToOne) {
  for (int n = 3; n <= 8; ++n) {
    const SystemGeometry g = build_geometry(canonical_params(n));
    for (std::size_t i = 0; i < g.intervals.size(); ++i) {
      const auto& u = g.intervals[i];
      EXPECT_EQ(u.slope * Rat(static_cast<long>(u.ranks.size())), Rat(1));
      Rat sum(0);
      for (const auto& v : g.points[i].values) sum += v;
      EXPECT_EQ(sum, g.points[i].q);
    }
  }
}

TEST(Geometry, InjectedValueFaultIsReported) {
  SystemGeometry g = build_geometry(canonical_params(3));
  g.points[3].values[0] += Rat(1, 1000);
  const auto report = check_axioms(g);
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.violations.front(), "sum identity fails at delta(3,1)");
}

TEST(Geometry, InjectedLabelFaultIsReported) {
  SystemGeometry g = build_geometry(canonical_params(3));
  g.points[g.index_of(PointLabel::mu(1))].switch_point = false;
  const auto report = check_axioms(g);
  ASSERT_FALSE(report.ok());
  EXPECT_NE(report.violations.front().find("mu(1)"), std::string::npos);
  EXPECT_NE(report.violations.front().find("switch"), std::string::npos);
}

TEST(Geometry, ClosureHoldsOnRandomValidPoints) {
  for (int n = 3; n <= 6; ++n) {
    const Params c = canonical_params(n);
    const Rat radius(1, 1L << (n + 3));
    for (const auto& s : sample_neighborhood(c, radius, 25, 100 + static_cast<std::uint64_t>(n))) {
      const SystemGeometry g = build_geometry(s.params);
      EXPECT_EQ(g.points.back().q, s.params.C);
      EXPECT_TRUE(check_axioms(g).ok());
    }
  }
}

TEST(NSystem, EvaluatesInsideAndBeyondTheFundamentalInterval) {
  const NSystem s(build_geometry(canonical_params(3)));
  EXPECT_EQ(eval_system(s, Rat(9, 4)), rats({"1/8", "5/16", "5/8", "19/16"}));
  EXPECT_EQ(eval_system(s, Rat(27, 8)), rats({"3/8", "3/4", "3/4", "3/2"}));
  EXPECT_EQ(eval_system(s, Rat(1)), rats({"1/8", "1/8", "1/4", "1/2"}));
  EXPECT_EQ(eval_system(s, Rat(3)), rats({"3/8", "3/8", "3/4", "3/2"}));
  EXPECT_THROW(eval_system(s, Rat(1, 2)), std::domain_error);
}

TEST(NSystem, AgreesWithMoveWalkOnRationalGrid) {
  const Params p = canonical_params(4);
  const NSystem s(build_geometry(p));
  for (long i = 0; i <= 400; ++i) {
    const Rat q = Rat(1) + Rat(i, 50);  // 1 .. 9, crossing two periods
    ASSERT_EQ(eval_system(s, q), oracle::eval(p, q)) << q;
  }
}

TEST(NSystem, SelfSimilarUnderPowersOfC) {
  const NSystem s(build_geometry(canonical_params(3)));
  oracle::SmallRats gen(99);
  for (int t = 0; t < 100; ++t) {
    const Rat q = Rat(27) + Rat(static_cast<long>(gen.raw() % 5000), 97);
    const long m = static_cast<long>(gen.raw() % 7) - 3;
    const Rat scale = Rat(3).pow(m);
    auto lhs = eval_system(s, scale * q);
    auto rhs = eval_system(s, q);
    for (auto& x : rhs) x *= scale;
    EXPECT_EQ(lhs, rhs) << q << " m=" << m;
  }
}

TEST(NSystem, ComponentsAreOrderedAndContinuous) {
  const NSystem s(build_geometry(canonical_params(4)));
  std::vector<Rat> prev;
  for (long i = 0; i <= 2000; ++i) {
    const Rat q = Rat(1) + Rat(i, 500);
    const auto v = eval_system(s, q);
    for (std::size_t r = 1; r < v.size(); ++r) EXPECT_LE(v[r - 1], v[r]);
    if (!prev.empty()) {
      for (std::size_t r = 0; r < v.size(); ++r) {
        EXPECT_GE(v[r], prev[r]);
        EXPECT_LE(v[r] - prev[r], Rat(1, 500));
      }
    }
    prev = v;
  }
}

TEST(Graph, SegmentsAreContinuousWithAllowedSlopes) {
  for (int n = 3; n <= 8; ++n) {
    const GraphData d = export_graph(build_geometry(canonical_params(n)));
    EXPECT_EQ(d.division_points.size(), static_cast<std::size_t>(3 * n + 1));
    std::map<int, Rat> last_end;
    for (const auto& seg : d.segments) {
      EXPECT_TRUE(seg.slope == Rat(0) || seg.slope == Rat(1, 2) || seg.slope == Rat(1));
      EXPECT_EQ(seg.v1 - seg.v0, seg.slope * (seg.q1 - seg.q0));
      auto it = last_end.find(seg.component);
      if (it != last_end.end()) EXPECT_EQ(it->second, seg.v0);
      last_end[seg.component] = seg.v1;
    }
  }
}

TEST(Graph, JsonRoundTripRebuildsTheGeometry) {
  for (int n = 3; n <= 6; ++n) {
    const Params p = canonical_params(n);
    const SystemGeometry g = build_geometry(p);
    const GraphData d = export_graph(g);
    const std::string text = io::dump(io::to_json(d));
    const GraphData back = io::graph_from_json(io::json::parse(text));
    EXPECT_EQ(back, d);
    const SystemGeometry rebuilt = geometry_from_graph(back, p);
    ASSERT_EQ(rebuilt.points.size(), g.points.size());
    for (std::size_t i = 0; i < g.points.size(); ++i) {
      EXPECT_EQ(rebuilt.points[i].q, g.points[i].q);
      EXPECT_EQ(rebuilt.points[i].values, g.points[i].values);
      EXPECT_EQ(rebuilt.points[i].labels, g.points[i].labels);
      EXPECT_EQ(rebuilt.points[i].switch_point, g.points[i].switch_point);
    }
    EXPECT_EQ(rebuilt.intervals, g.intervals);
    EXPECT_TRUE(check_axioms(rebuilt).ok());
  }
}

}  // namespace
}  // namespace dexp
