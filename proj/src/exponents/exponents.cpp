#include "dexp/exponents/exponents.hpp"

#include <random>
#include <stdexcept>

namespace dexp {

Rat criterion_lhs(const SystemGeometry& g, int k) {
  if (k < 2 || k > g.n()) {
    throw std::out_of_range("no such division point: delta(" + std::to_string(k) + ",1)");
  }
  const auto& pt = g.points[g.index_of(PointLabel::delta(k, 1))];
  Rat s(0);
  for (int r = 0; r < k; ++r) s += pt.values[static_cast<std::size_t>(r)];
  return s / pt.q;
}

std::vector<CriterionRow> criterion_report(const SystemGeometry& g) {
  std::vector<CriterionRow> rows;
  const Rat half(1, 2);
  for (int k = 2; k <= g.n(); ++k) {
    CriterionRow row;
    row.k = k;
    row.lhs = criterion_lhs(g, k);
    row.observed = row.lhs > half ? '>' : (row.lhs < half ? '<' : '=');
    row.claimed = k <= g.n() - 1 ? '>' : '<';
    rows.push_back(row);
  }
  return rows;
}

std::size_t DiffReport::equal_count() const {
  std::size_t c = 0;
  for (const auto& e : entries) c += e.equal ? 1 : 0;
  return c;
}

std::vector<std::string> DiffReport::mismatches() const {
  std::vector<std::string> out;
  for (const auto& e : entries)
    if (!e.equal) out.push_back(e.name);
  return out;
}

DiffReport compare(const ExponentTuple& trajectory, const ExponentTuple& table) {
  if (trajectory.n != table.n) throw std::invalid_argument("compare: tuples have different n");
  DiffReport rep;
  rep.n = trajectory.n;
  for (int d = 0; d < trajectory.n; ++d) {
    const auto i = static_cast<std::size_t>(d);
    rep.entries.push_back({"What_" + std::to_string(d), trajectory.uniform[i], table.uniform[i],
                           trajectory.uniform[i] == table.uniform[i]});
  }
  for (int d = 0; d < trajectory.n; ++d) {
    const auto i = static_cast<std::size_t>(d);
    rep.entries.push_back({"W_" + std::to_string(d), trajectory.ordinary[i], table.ordinary[i],
                           trajectory.ordinary[i] == table.ordinary[i]});
  }
  return rep;
}

std::vector<std::string> check_chains(const ExponentTuple& t) {
  std::vector<std::string> v;
  const int n = t.n;
  auto name = [](const char* s, int d) { return std::string(s) + "_" + std::to_string(d); };
  for (int d = 0; d + 1 < n; ++d) {
    const auto i = static_cast<std::size_t>(d);
    if (t.uniform[i] > t.uniform[i + 1]) v.push_back("chain: " + name("What", d) + " <= " + name("What", d + 1));
    if (t.ordinary[i] > t.ordinary[i + 1]) v.push_back("chain: " + name("W", d) + " <= " + name("W", d + 1));
  }
  for (int d = 0; d < n; ++d) {
    const auto i = static_cast<std::size_t>(d);
    if (t.ordinary[i] < t.uniform[i]) v.push_back("W >= What at d=" + std::to_string(d));
    const Rat bound(d + 1, n - d);
    if (t.uniform[i] < bound) {
      v.push_back("bound: " + name("What", d) + " >= " + bound.str() + " at d=" + std::to_string(d));
    }
  }
  return v;
}

std::vector<std::string> check_attainment(const SystemGeometry& g, const ExponentTuple& t) {
  std::vector<std::string> v;
  const int n = g.n();
  const Rat half(1, 2);
  for (int k = 1; k <= n; ++k) {
    const auto d = static_cast<std::size_t>(n - k);
    const auto& mx = t.uniform_at.at(d);
    const auto& mn = t.ordinary_at.at(d);
    if (!mx || !mn) {
      v.push_back("missing attainment for k=" + std::to_string(k));
      continue;
    }
    if (mn->label != PointLabel::mu(k).str()) {
      v.push_back("min of S_" + std::to_string(k) + "/q at " + mn->label + ", expected mu(" + std::to_string(k) + ")");
    }
    std::string want;
    if (k == 1) {
      want = PointLabel::start().str();
    } else {
      const Rat lhs = criterion_lhs(g, k);
      want = (lhs >= half ? PointLabel::delta(k, 1) : PointLabel::delta(k, 2)).str();
    }
    if (mx->label != want) {
      v.push_back("max of S_" + std::to_string(k) + "/q at " + mx->label + ", expected " + want);
    }
  }
  return v;
}

Rat trajectory_uniform0_formula(const Params& p) {
  const auto q = mnuv(p);
  return q.m(p.n) / (q.nn(p.n - 1) + q.m(p.n));
}

namespace {

constexpr std::uint64_t kSteps = 1024;

Rat perturbation(std::mt19937_64& rng, const Rat& radius) {
  const auto j = static_cast<long>(rng() % (2 * kSteps + 1)) - static_cast<long>(kSteps);
  return radius * Rat(j, static_cast<long>(kSteps));
}

}  // namespace

std::vector<Sample> sample_neighborhood(const Params& center, const Rat& radius, std::size_t count,
                                        std::uint64_t seed) {
  if (radius < 0) throw std::invalid_argument("radius must be non-negative");
  std::vector<Sample> out;
  if (count == 0) return out;
  const auto base = free_vector(center);
  const std::uint64_t budget = 64 * static_cast<std::uint64_t>(count);
  for (std::uint64_t j = 0; j < budget && out.size() < count; ++j) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                      static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(j >> 32U)};
    std::mt19937_64 rng(seq);
    auto free = base;
    for (auto& x : free) x += perturbation(rng, radius);
    Params p = from_free(center.n, free);
    if (!validate_params(p).valid()) continue;
    SystemGeometry g = build_geometry_unchecked(p);
    if (!check_axioms(g).ok()) continue;
    Sample s;
    s.index = out.size();
    s.exponents = trajectory_exponents(g);
    s.params = std::move(p);
    out.push_back(std::move(s));
  }
  if (out.empty()) throw std::runtime_error("neighborhood too large: no valid sample");
  return out;
}

}  // namespace dexp
