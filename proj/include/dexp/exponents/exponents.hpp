#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dexp/nsystem/geometry.hpp"

namespace dexp {

/// Where the extremum of S_k(q)/q behind one exponent is attained.
struct Attainment {
  std::string label;
  Rat q;
  bool strict = true;  // no other division point ties the extremum

  friend bool operator==(const Attainment&, const Attainment&) = default;
};

/// The 2n exponents, indexed by d = 0..n-1: uniform[d] is What_d and
/// ordinary[d] is W_d. Attainments are present for trajectory tuples only.
template <class T>
struct BasicExponents {
  int n = 0;
  std::vector<T> uniform;
  std::vector<T> ordinary;
  std::vector<std::optional<Attainment>> uniform_at;
  std::vector<std::optional<Attainment>> ordinary_at;
};

using ExponentTuple = BasicExponents<Rat>;

/// Exponents read off the combined graph: for k = 1..n, the max and min of
/// S_k(q)/q = (P_1 + ... + P_k)(q)/q over every division point in [1, C)
/// give What_{n-k} = 1/max - 1 and W_{n-k} = 1/min - 1. Ties go to the
/// smallest q. Each value is cross-checked against the quotient
/// (P_{k+1} + ... + P_{n+1})(q*) / S_k(q*).
template <class T>
BasicExponents<T> trajectory_exponents(const BasicGeometry<T>& g) {
  const int n = g.n();
  BasicExponents<T> out;
  out.n = n;
  out.uniform.resize(static_cast<std::size_t>(n));
  out.ordinary.resize(static_cast<std::size_t>(n));
  out.uniform_at.resize(static_cast<std::size_t>(n));
  out.ordinary_at.resize(static_cast<std::size_t>(n));

  const std::size_t count = g.points.size() - 1;  // [1, C): the end point is excluded
  for (int k = 1; k <= n; ++k) {
    std::vector<T> head(count), tail(count), ratio(count);
    for (std::size_t i = 0; i < count; ++i) {
      const auto& pt = g.points[i];
      T s = T(Rat(0));
      T rest = T(Rat(0));
      for (std::size_t r = 0; r < pt.values.size(); ++r) {
        if (static_cast<int>(r) < k) {
          s = s + pt.values[r];
        } else {
          rest = rest + pt.values[r];
        }
      }
      head[i] = s;
      tail[i] = rest;
      ratio[i] = checked_div(s, pt.q, "q");
    }
    std::size_t imax = 0, imin = 0;
    for (std::size_t i = 1; i < count; ++i) {
      if (value_of(ratio[i]) > value_of(ratio[imax])) imax = i;
      if (value_of(ratio[i]) < value_of(ratio[imin])) imin = i;
    }
    auto strict = [&](std::size_t best) {
      for (std::size_t i = 0; i < count; ++i)
        if (i != best && value_of(ratio[i]) == value_of(ratio[best])) return false;
      return true;
    };
    auto attained = [&](std::size_t i) {
      const auto& pt = g.points[i];
      return Attainment{pt.labels.front().str(), value_of(pt.q), strict(i)};
    };
    const std::string sk = "S_" + std::to_string(k);
    const T one = T(Rat(1));
    const T hat = checked_div(one, ratio[imax], sk + "/q") - one;
    const T ord = checked_div(one, ratio[imin], sk + "/q") - one;
    if (!(value_of(hat) == value_of(checked_div(tail[imax], head[imax], sk))) ||
        !(value_of(ord) == value_of(checked_div(tail[imin], head[imin], sk)))) {
      throw GeometryError("quotient form disagrees with the ratio scan for k=" + std::to_string(k));
    }
    const auto d = static_cast<std::size_t>(n - k);
    out.uniform[d] = hat;
    out.ordinary[d] = ord;
    out.uniform_at[d] = attained(imax);
    out.ordinary_at[d] = attained(imin);
  }
  return out;
}

/// The closed-form table, transcribed term by term:
///   What_{n-1} = 1/A_2 - 1
///   What_0     = (1 - (2A_2 + A_3 + ... + A_n)) / (A_2 + B_2 + ... + B_{n-1})
///   What_{n-k} = (1 - (2A_2 + A_3 + ... + A_{k+1}) + B_k) / (A_2 + B_2 + ... + B_k),  2 <= k <= n-1
///   W_{n-k}    = C (1 - (2A_2 + A_3 + ... + A_k)) / (A_2 + B_2 + ... + B_k),        2 <= k <= n
///   W_{n-1}    = (D + C (1 - 2A_2)) / A_2
template <class T>
BasicExponents<T> closed_forms_paper(const ParamSet<T>& p) {
  const int n = p.n;
  const T one = T(Rat(1));
  BasicExponents<T> out;
  out.n = n;
  out.uniform.resize(static_cast<std::size_t>(n));
  out.ordinary.resize(static_cast<std::size_t>(n));
  out.uniform_at.resize(static_cast<std::size_t>(n));
  out.ordinary_at.resize(static_cast<std::size_t>(n));
  auto sum_a = [&](int upto) {  // 2A_2 + A_3 + ... + A_upto
    T s = p.a(2) + p.a(2);
    for (int i = 3; i <= upto; ++i) s = s + p.a(i);
    return s;
  };
  auto sum_b = [&](int upto) {  // A_2 + B_2 + ... + B_upto
    T s = p.a(2);
    for (int i = 2; i <= upto; ++i) s = s + p.b(i);
    return s;
  };
  auto d = [n](int k) { return static_cast<std::size_t>(n - k); };

  out.uniform[d(1)] = checked_div(one, p.a(2), "A_2") - one;
  out.uniform[0] = checked_div(one - sum_a(n), sum_b(n - 1), "A_2 + B_2 + ... + B_{n-1}");
  for (int k = 2; k <= n - 1; ++k) {
    out.uniform[d(k)] = checked_div(one - sum_a(k + 1) + p.b(k), sum_b(k),
                                    "A_2 + B_2 + ... + B_" + std::to_string(k));
  }
  for (int k = 2; k <= n; ++k) {
    out.ordinary[d(k)] =
        checked_div(p.C * (one - sum_a(k)), sum_b(k), "A_2 + B_2 + ... + B_" + std::to_string(k));
  }
  out.ordinary[d(1)] = checked_div(p.D + p.C * (one - p.a(2) - p.a(2)), p.a(2), "A_2");
  return out;
}

/// Substitution layer. Index accessors use the mathematical ranges:
/// M_k (2 <= k <= n+1), N_k (1 <= k <= n), U_k (2 <= k <= n), V_k (1 <= k <= n-1).
template <class T>
struct BasicDerived {
  int n = 0;
  std::vector<T> M, N, U, V;

  const T& m(int k) const { return M.at(static_cast<std::size_t>(k - 2)); }
  const T& nn(int k) const { return N.at(static_cast<std::size_t>(k - 1)); }
  const T& u(int k) const { return U.at(static_cast<std::size_t>(k - 2)); }
  const T& v(int k) const { return V.at(static_cast<std::size_t>(k - 1)); }
};

using DerivedQuantities = BasicDerived<Rat>;

/// M_k = 1 - (A_1 + ... + A_k), N_k = A_1 + B_2 + ... + B_k, U_k = M_k/N_k,
/// V_k = M_{k+1}/N_k for k >= 2 and V_1 = (1 - 2A_2)/A_2.
template <class T>
BasicDerived<T> mnuv(const ParamSet<T>& p) {
  const int n = p.n;
  const T one = T(Rat(1));
  BasicDerived<T> q;
  q.n = n;
  T acc = p.a(1);
  for (int k = 2; k <= n + 1; ++k) {
    acc = acc + p.a(k);
    q.M.push_back(one - acc);
  }
  T nk = p.a(1);
  q.N.push_back(nk);
  for (int k = 2; k <= n; ++k) {
    nk = nk + p.b(k);
    q.N.push_back(nk);
  }
  for (int k = 2; k <= n; ++k) q.U.push_back(checked_div(q.m(k), q.nn(k), "N_" + std::to_string(k)));
  q.V.push_back(checked_div(one - p.a(2) - p.a(2), p.a(2), "A_2"));
  for (int k = 2; k <= n - 1; ++k) {
    q.V.push_back(checked_div(q.m(k + 1), q.nn(k), "N_" + std::to_string(k)));
  }
  return q;
}

/// S_k(delta_{k,1}) / delta_{k,1}; the maximum of S_k/q sits at delta_{k,1}
/// when this is >= 1/2 and at delta_{k,2} when it is <= 1/2.
/// Throws std::out_of_range("no such division point") unless 2 <= k <= n.
Rat criterion_lhs(const SystemGeometry& g, int k);

struct CriterionRow {
  int k = 0;
  Rat lhs;
  char observed = '=';  // '<', '=', '>' relative to 1/2
  char claimed = '=';   // tabulated side: '>' for k <= n-1, '<' for k = n
  bool matches_claim() const { return observed == claimed; }
};

std::vector<CriterionRow> criterion_report(const SystemGeometry& g);

struct DiffEntry {
  std::string name;  // "What_0", "W_2", ...
  Rat trajectory;
  Rat table;
  bool equal = false;
};

struct DiffReport {
  int n = 0;
  std::vector<DiffEntry> entries;
  std::vector<CriterionRow> criteria;

  std::size_t equal_count() const;
  std::size_t mismatch_count() const { return entries.size() - equal_count(); }
  std::vector<std::string> mismatches() const;
};

/// Exact entrywise comparison; throws std::invalid_argument on mismatched n.
DiffReport compare(const ExponentTuple& trajectory, const ExponentTuple& table);

/// Checks both monotone chains, W_d >= What_d and What_d >= (d+1)/(n-d).
std::vector<std::string> check_chains(const ExponentTuple& t);

/// Checks that the minimum of S_k/q sits at mu(k) and the maximum at q = 1
/// (k = 1) or at delta(k,1)/delta(k,2) on the side picked by criterion_lhs.
std::vector<std::string> check_attainment(const SystemGeometry& g, const ExponentTuple& t);

/// What_0 as read off the graph when its maximum is at delta(n,1):
/// M_n / (N_{n-1} + M_n).
Rat trajectory_uniform0_formula(const Params& p);

struct Sample {
  std::uint64_t index = 0;
  Params params;
  ExponentTuple exponents;
};

/// Deterministic pseudorandom rational perturbations of the free parameters
/// of `center` within +-radius. Candidate j is drawn from a generator seeded
/// by (seed, j) only, so the result does not depend on evaluation order.
/// Invalid candidates are rejected; at most 64 * count candidates are drawn.
/// Throws std::runtime_error("neighborhood too large") if none is valid.
std::vector<Sample> sample_neighborhood(const Params& center, const Rat& radius, std::size_t count,
                                        std::uint64_t seed);

}  // namespace dexp
