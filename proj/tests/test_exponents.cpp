#include <gtest/gtest.h>

#include "dexp/exponents/exponents.hpp"
#include "oracles.hpp"

namespace dexp {
namespace {

std::vector<Rat> rats(std::initializer_list<const char*> xs) {
  std::vector<Rat> out;
  for (const char* x : xs) out.push_back(Rat::parse(x));
  return out;
}

// Exponents from the independent move walk, scanning its own kink list.
ExponentTuple oracle_exponents(const Params& p) {
  ExponentTuple t;
  t.n = p.n;
  t.uniform.resize(static_cast<std::size_t>(p.n));
  t.ordinary.resize(static_cast<std::size_t>(p.n));
  const auto qs = oracle::kinks(p);
  for (int k = 1; k <= p.n; ++k) {
    const auto e = oracle::scan(p, k, qs);
    t.uniform[static_cast<std::size_t>(p.n - k)] = e.max.inverse() - 1;
    t.ordinary[static_cast<std::size_t>(p.n - k)] = e.min.inverse() - 1;
  }
  return t;
}

TEST(Trajectory, CanonicalN3FrozenValues) {
  const ExponentTuple t = trajectory_exponents(build_geometry(canonical_params(3)));
  EXPECT_EQ(t.uniform, rats({"8/15", "13/7", "7"}));
  EXPECT_EQ(t.ordinary, rats({"24/17", "36/7", "83/4"}));
}

TEST(Trajectory, BruteForceOracleReproducesFrozenValues) {
  const Params p = canonical_params(3);
  const ExponentTuple o = oracle_exponents(p);
  EXPECT_EQ(o.uniform, rats({"8/15", "13/7", "7"}));
  EXPECT_EQ(o.ordinary, rats({"24/17", "36/7", "83/4"}));

  // 10^4 rational grid points of [1, 3): every sampled ratio lies inside the
  // exact extremes, and the grid gets within the sampling resolution of them.
  const auto grid = oracle::grid(p, 10000);
  for (int k = 1; k <= 3; ++k) {
    const auto g = oracle::scan(p, k, grid);
    const Rat exact_max = (o.uniform[static_cast<std::size_t>(3 - k)] + 1).inverse();
    const Rat exact_min = (o.ordinary[static_cast<std::size_t>(3 - k)] + 1).inverse();
    EXPECT_LE(g.max, exact_max) << k;
    EXPECT_GE(g.min, exact_min) << k;
    EXPECT_LT(exact_max - g.max, Rat(1, 1000)) << k;
    EXPECT_LT(g.min - exact_min, Rat(1, 1000)) << k;
  }
}

TEST(Trajectory, MatchesOracleOnCanonicalAndSampledPoints) {
  for (int n = 3; n <= 6; ++n) {
    const Params c = canonical_params(n);
    std::vector<Params> points{c};
    for (const auto& s : sample_neighborhood(c, Rat(1, 1L << (n + 3)), 20, 31)) points.push_back(s.params);
    for (const auto& p : points) {
      const ExponentTuple t = trajectory_exponents(build_geometry(p));
      const ExponentTuple o = oracle_exponents(p);
      EXPECT_EQ(t.uniform, o.uniform) << n;
      EXPECT_EQ(t.ordinary, o.ordinary) << n;
    }
  }
}

TEST(Trajectory, AttainmentLabelsAtCanonicalN3) {
  const ExponentTuple t = trajectory_exponents(build_geometry(canonical_params(3)));
  std::vector<std::string> up, down;
  for (const auto& a : t.uniform_at) up.push_back(a->label);
  for (const auto& a : t.ordinary_at) down.push_back(a->label);
  EXPECT_EQ(up, (std::vector<std::string>{"delta(3,1)", "delta(2,2)", "start"}));
  EXPECT_EQ(down, (std::vector<std::string>{"mu(3)", "mu(2)", "mu(1)"}));
  for (const auto& a : t.uniform_at) EXPECT_TRUE(a->strict);
  EXPECT_EQ(t.uniform_at[0]->q, Rat(23, 16));
}

TEST(Trajectory, InvariantUnderScalingByC) {
  for (int n = 3; n <= 5; ++n) {
    const SystemGeometry g = build_geometry(canonical_params(n));
    const ExponentTuple base = trajectory_exponents(g);
    for (long m : {-2L, -1L, 1L, 3L}) {
      const ExponentTuple s = trajectory_exponents(shifted_geometry(g, m));
      EXPECT_EQ(s.uniform, base.uniform);
      EXPECT_EQ(s.ordinary, base.ordinary);
      for (std::size_t d = 0; d < base.uniform_at.size(); ++d) {
        EXPECT_EQ(s.uniform_at[d]->label, base.uniform_at[d]->label);
        EXPECT_EQ(s.uniform_at[d]->q, base.uniform_at[d]->q * Rat(3).pow(m));
      }
    }
  }
}

TEST(ClosedForms, CanonicalN3Table) {
  const ExponentTuple t = closed_forms_paper(canonical_params(3));
  EXPECT_EQ(t.uniform, rats({"8/7", "13/7", "7"}));
  EXPECT_EQ(t.ordinary, rats({"24/17", "36/7", "83/4"}));
}

TEST(ClosedForms, PoleIsNamed) {
  ParamSet<Rat> p = canonical_params(3);
  p.a(2) = Rat(0);
  try {
    (void)closed_forms_paper(p);
    FAIL() << "expected PoleError";
  } catch (const PoleError& e) {
    EXPECT_STREQ(e.what(), "pole at A_2");
  }
}

TEST(Derived, CanonicalN3Quantities) {
  const DerivedQuantities q = mnuv(canonical_params(3));
  EXPECT_EQ(q.M, rats({"3/4", "1/2", "0"}));
  EXPECT_EQ(q.N, rats({"1/8", "7/16", "17/16"}));
  EXPECT_EQ(q.U, rats({"12/7", "8/17"}));
  EXPECT_EQ(q.V, rats({"6", "8/7"}));
}

TEST(Derived, MiddleUniformIsTheDeltaK2Configuration) {
  for (int n = 3; n <= 8; ++n) {
    const Params p = canonical_params(n);
    const DerivedQuantities q = mnuv(p);
    const ExponentTuple t = trajectory_exponents(build_geometry(p));
    for (int k = 2; k <= n - 1; ++k) {
      EXPECT_EQ(t.uniform[static_cast<std::size_t>(n - k)], (q.m(k + 1) + p.b(k)) / q.nn(k)) << n << " " << k;
    }
    // Link V_2 = What_1 - 1 + U_2/V_1 at n = 3: 8/7 = 6/7 + 2/7.
    if (n == 3) EXPECT_EQ(q.v(2), t.uniform[1] - 1 + q.u(2) / q.v(1));
  }
}

TEST(Criterion, CanonicalN3Values) {
  const SystemGeometry g = build_geometry(canonical_params(3));
  EXPECT_EQ(criterion_lhs(g, 2), Rat(1, 3));
  EXPECT_EQ(criterion_lhs(g, 3), Rat(15, 23));
  const auto rows = criterion_report(g);
  ASSERT_EQ(rows.size(), 2U);
  EXPECT_EQ(rows[0].observed, '<');
  EXPECT_EQ(rows[0].claimed, '>');
  EXPECT_EQ(rows[1].observed, '>');
  EXPECT_EQ(rows[1].claimed, '<');
}

TEST(Criterion, OutOfRangeK) {
  const SystemGeometry g = build_geometry(canonical_params(3));
  try {
    (void)criterion_lhs(g, 1);
    FAIL() << "expected out_of_range";
  } catch (const std::out_of_range& e) {
    EXPECT_EQ(std::string(e.what()).rfind("no such division point", 0), 0U);
  }
  EXPECT_THROW(criterion_lhs(g, 4), std::out_of_range);
}

TEST(Compare, ReflexiveAndCanonicalMismatches) {
  const ExponentTuple t = trajectory_exponents(build_geometry(canonical_params(3)));
  EXPECT_EQ(compare(t, t).mismatch_count(), 0U);
  EXPECT_EQ(compare(t, t).equal_count(), 6U);
  for (int n = 3; n <= 8; ++n) {
    const Params p = canonical_params(n);
    const DiffReport d = compare(trajectory_exponents(build_geometry(p)), closed_forms_paper(p));
    EXPECT_EQ(d.mismatches(), std::vector<std::string>{"What_0"}) << n;
    EXPECT_EQ(d.entries.front().trajectory, trajectory_uniform0_formula(p));
  }
  EXPECT_THROW(compare(t, closed_forms_paper(canonical_params(4))), std::invalid_argument);
}

TEST(Chains, CanonicalTuplesPass) {
  for (int n = 3; n <= 8; ++n) {
    const SystemGeometry g = build_geometry(canonical_params(n));
    const ExponentTuple t = trajectory_exponents(g);
    EXPECT_TRUE(check_chains(t).empty()) << n;
    EXPECT_TRUE(check_attainment(g, t).empty()) << n;
  }
}

TEST(Chains, TamperedLowerBoundIsReported) {
  ExponentTuple t = trajectory_exponents(build_geometry(canonical_params(3)));
  t.uniform[2] = Rat(2);  // bound (d+1)/(n-d) = 3 at d = 2
  const auto v = check_chains(t);
  ASSERT_FALSE(v.empty());
  bool found = false;
  for (const auto& s : v) found = found || s == "bound: What_2 >= 3 at d=2";
  EXPECT_TRUE(found);
}

TEST(Chains, TamperedOrdinaryBelowUniformIsReported) {
  ExponentTuple t = trajectory_exponents(build_geometry(canonical_params(3)));
  t.ordinary[1] = t.uniform[1] - Rat(1, 10);
  const auto v = check_chains(t);
  ASSERT_FALSE(v.empty());
  bool found = false;
  for (const auto& s : v) found = found || s == "W >= What at d=1";
  EXPECT_TRUE(found) << v.front();
}

TEST(Sample, CanonicalN3Neighborhood) {
  const auto samples = sample_neighborhood(canonical_params(3), Rat(1, 64), 100, 7);
  ASSERT_EQ(samples.size(), 100U);
  for (const auto& s : samples) {
    EXPECT_TRUE(validate_params(s.params).valid());
    EXPECT_TRUE(check_chains(s.exponents).empty());
  }
  const auto again = sample_neighborhood(canonical_params(3), Rat(1, 64), 100, 7);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    EXPECT_EQ(again[i].index, samples[i].index);
    EXPECT_EQ(again[i].exponents.uniform, samples[i].exponents.uniform);
  }
}

TEST(Sample, ZeroRadiusRepeatsTheCenter) {
  const Params c = canonical_params(3);
  const ExponentTuple base = trajectory_exponents(build_geometry(c));
  const auto samples = sample_neighborhood(c, Rat(0), 5, 1);
  ASSERT_EQ(samples.size(), 5U);
  for (const auto& s : samples) {
    EXPECT_EQ(s.params.A, c.A);
    EXPECT_EQ(s.exponents.uniform, base.uniform);
    EXPECT_EQ(s.exponents.ordinary, base.ordinary);
  }
  EXPECT_TRUE(sample_neighborhood(c, Rat(1, 64), 0, 1).empty());
}

TEST(Sample, OversizedBoxIsRejectedOrReduced) {
  try {
    const auto s = sample_neighborhood(canonical_params(3), Rat(1), 10, 7);
    EXPECT_LT(s.size(), 10U);
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("neighborhood too large"), std::string::npos);
  }
}

TEST(Attainment, HoldsOnSampledPoints) {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& s : sample_neighborhood(canonical_params(n), Rat(1, 1L << (n + 3)), 30, 5)) {
      const SystemGeometry g = build_geometry(s.params);
      EXPECT_TRUE(check_attainment(g, s.exponents).empty());
    }
  }
}

}  // namespace
}  // namespace dexp
