#include <gtest/gtest.h>

#include "dexp/cfrac/cfrac.hpp"
#include "oracles.hpp"

namespace dexp {
namespace {

TEST(CfInputs, CanonicalN3) {
  const CFData<Rat> d = cf_inputs(canonical_params(3));
  ASSERT_EQ(d.e.size(), 1U);
  ASSERT_EQ(d.f.size(), 2U);
  EXPECT_EQ(d.ee(1), Rat(12, 7));
  EXPECT_EQ(d.f[0], Rat(6, 7));
  EXPECT_EQ(d.f[1], Rat(6));
}

TEST(CfInputs, ArityFollowsN) {
  const CFData<Rat> d = cf_inputs(canonical_params(4));
  EXPECT_EQ(d.e.size(), 2U);
  EXPECT_EQ(d.f.size(), 3U);
  const CFData<Poly> s = cf_symbols(3);
  EXPECT_EQ(s.ee(2), Poly::var("e_2"));
  EXPECT_EQ(s.f[3], Poly::var("f_3"));
}

TEST(Convergents, CanonicalN3) {
  const auto s = convergents(cf_inputs(canonical_params(3)));
  EXPECT_EQ(s.num(-1), Rat(1));
  EXPECT_EQ(s.den(-1), Rat(0));
  EXPECT_EQ(s.num(0), Rat(6, 7));
  EXPECT_EQ(s.den(0), Rat(1));
  EXPECT_EQ(s.num(1), Rat(48, 7));
  EXPECT_EQ(s.den(1), Rat(6));
  EXPECT_EQ(convergent_ratio(s), Rat(8, 7));
  EXPECT_EQ(nested_value(cf_inputs(canonical_params(3))), Rat(6, 7) + Rat(12, 7) / Rat(6));
}

TEST(Convergents, HandNestedExample) {
  const CFData<Rat> d{{Rat(1), Rat(1)}, {Rat(1), Rat(2), Rat(2)}};
  EXPECT_EQ(convergent_ratio(convergents(d)), Rat(7, 5));
  EXPECT_EQ(nested_value(d), Rat(7, 5));
}

TEST(Convergents, VanishingDenominatorThrows) {
  const CFData<Rat> d{{Rat(1)}, {Rat(1), Rat(0)}};
  EXPECT_THROW(convergent_ratio(convergents(d)), DivisionByZero);
  EXPECT_THROW(nested_value(d), DivisionByZero);
  const CFData<Rat> bad{{Rat(1)}, {Rat(1)}};
  EXPECT_THROW(convergents(bad), std::invalid_argument);
}

TEST(Convergents, DeterminantIdentityOnRandomInputs) {
  oracle::SmallRats gen(41);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + gen.raw() % 6;
    CFData<Rat> d;
    d.f.push_back(gen.next());
    for (std::size_t k = 1; k <= m; ++k) {
      d.e.push_back(gen.nonzero());
      d.f.push_back(gen.nonzero());
    }
    const auto s = convergents(d);
    Rat prod(1);
    for (long k = 1; k <= static_cast<long>(m); ++k) {
      prod *= d.ee(static_cast<std::size_t>(k));
      const Rat sign = (k % 2 == 1) ? Rat(1) : Rat(-1);  // (-1)^(k-1)
      EXPECT_EQ(s.num(k) * s.den(k - 1) - s.num(k - 1) * s.den(k), sign * prod);
    }
    try {
      EXPECT_EQ(convergent_ratio(s), nested_value(d));
    } catch (const DivisionByZero&) {
      // an intermediate tail vanished; the identity is vacuous here
    }
  }
}

TEST(Convergents, SymbolicConstantTerms) {
  for (int n = 3; n <= 6; ++n) {
    const std::size_t m = static_cast<std::size_t>(n - 2);
    const CFData<Poly> d = cf_symbols(m);
    std::set<std::string> evars;
    for (std::size_t k = 1; k <= m; ++k) evars.insert("e_" + std::to_string(k));
    Poly all(1), tail(1);
    for (std::size_t k = 0; k <= m; ++k) {
      all *= d.f[k];
      if (k >= 1) tail *= d.f[k];
    }
    const auto s = convergents(d);
    EXPECT_EQ(constant_term(s.num(static_cast<long>(m)), evars), all) << n;
    EXPECT_EQ(constant_term(s.den(static_cast<long>(m)), evars), tail) << n;

    const auto printed = convergents(d, Recurrence::printed);
    EXPECT_NE(constant_term(printed.num(static_cast<long>(m)), evars), all) << n;
  }
}

TEST(IdentityCheck, PassesOnCanonicalAndSampledPoints) {
  for (int n = 3; n <= 6; ++n) {
    const Params c = canonical_params(n);
    EXPECT_TRUE(cf_identity_check(c).pass()) << n;
    for (const auto& s : sample_neighborhood(c, Rat(1, 1L << (n + 3)), 10, 3)) {
      EXPECT_TRUE(cf_identity_check(s.params).pass()) << n;
    }
  }
}

TEST(IdentityCheck, WithoutSpecializingCFailsAtN3) {
  const Params p = canonical_params(3);
  const CFData<Rat> d = cf_inputs(p, false);
  EXPECT_EQ(d.ee(1), Rat(36, 7));
  EXPECT_EQ(convergent_ratio(convergents(d)), Rat(12, 7));
  const CheckReport r = cf_identity_check(p, false);
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(r.rows.front().lhs, "12/7");
  EXPECT_EQ(r.rows.front().rhs, "8/7");
}

TEST(ConstantTermCheck, AllRowsPassForSmallN) {
  for (int n = 3; n <= 6; ++n) {
    const CheckReport r = constant_term_check(n);
    EXPECT_TRUE(r.pass()) << n;
    EXPECT_GE(r.rows.size(), 5U);
  }
}

TEST(ConstantTermCheck, ExponentPolynomialsAvoidWhat0) {
  for (int n = 3; n <= 6; ++n) {
    const auto s = convergents(cf_exponent_symbols(n));
    EXPECT_FALSE(s.num(n - 2).contains("What_0"));
    EXPECT_FALSE(s.den(n - 2).contains("What_0"));
  }
}

}  // namespace
}  // namespace dexp
