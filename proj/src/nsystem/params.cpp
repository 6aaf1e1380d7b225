#include "dexp/nsystem/params.hpp"

#include "dexp/nsystem/validate.hpp"

namespace dexp {

std::vector<std::string> free_names(int n) {
  std::vector<std::string> names;
  for (int k = 2; k <= n; ++k) names.push_back("A_" + std::to_string(k));
  for (int k = 2; k <= n; ++k) names.push_back("B_" + std::to_string(k));
  names.emplace_back("C");
  names.emplace_back("D");
  return names;
}

ParamSet<DualRat> seed_duals(const Params& p) {
  const auto free = free_vector(p);
  std::vector<DualRat> seeded;
  seeded.reserve(free.size());
  for (std::size_t i = 0; i < free.size(); ++i) {
    seeded.push_back(DualRat::variable(free[i], i, free.size()));
  }
  return from_free(p.n, seeded);
}

Params canonical_params(int n) {
  if (n < 3) throw UnsupportedDimension(n);
  const Rat two(2);
  Params p;
  p.n = n;
  p.C = Rat(3);
  p.A.resize(static_cast<std::size_t>(n + 1));
  p.B.resize(static_cast<std::size_t>(n - 1));
  p.a(1) = two.pow(-n);
  p.a(2) = two.pow(-n);
  for (int k = 3; k <= n + 1; ++k) p.a(k) = two.pow(-n + k - 2);
  p.D = Rat(11, 8) * two.pow(-n + 1);
  for (int k = 2; k <= n; ++k) p.b(k) = Rat(5, 4) * two.pow(-n + k - 1);
  return p;
}

namespace {

std::string idx(const char* sym, int k) { return std::string(sym) + "_" + std::to_string(k); }

std::string join_report(const ValidationReport& r) {
  std::string msg = "invalid parameters:";
  for (const auto& v : r.violations) msg += " [" + v + "]";
  return msg;
}

}  // namespace

InvalidParams::InvalidParams(const ValidationReport& r)
    : std::invalid_argument(join_report(r)), report(r) {}

ValidationReport validate_params(const Params& p) {
  const int n = p.n;
  if (n < 3) throw UnsupportedDimension(n);
  ValidationReport r;
  auto require = [&r](bool ok, std::string name) {
    if (!ok) r.violations.push_back(std::move(name));
  };
  if (p.A.size() != static_cast<std::size_t>(n + 1) || p.B.size() != static_cast<std::size_t>(n - 1)) {
    r.violations.push_back("shape: expected " + std::to_string(n + 1) + " A values and " +
                           std::to_string(n - 1) + " B values");
    return r;
  }

  for (int k = 1; k <= n + 1; ++k) require(p.a(k) > 0, idx("A", k) + " > 0");
  for (int k = 2; k <= n; ++k) require(p.b(k) > 0, idx("B", k) + " > 0");
  require(p.C > 0, "C > 0");
  require(p.D > 0, "D > 0");

  require(p.a(1) == p.a(2), "A_1 = A_2");
  Rat sum(0);
  for (const auto& a : p.A) sum += a;
  require(sum == 1, "A_1 + ... + A_" + std::to_string(n + 1) + " = 1");

  for (int k = 2; k <= n; ++k) require(p.a(k) < p.a(k + 1), idx("A", k) + " < " + idx("A", k + 1));
  for (int k = 2; k < n; ++k) require(p.b(k) < p.b(k + 1), idx("B", k) + " < " + idx("B", k + 1));

  require(p.b(2) < p.D, "B_2 < D");
  require(p.D < p.C * p.a(2), "D < C·A_2");

  for (int k = 2; k <= n; ++k) {
    require(p.a(k + 1) < p.b(k), idx("A", k + 1) + " < " + idx("B", k));
    if (k + 2 <= n + 1) require(p.b(k) < p.a(k + 2), idx("B", k) + " < " + idx("A", k + 2));
    require(p.b(k) < p.C * p.a(k), idx("B", k) + " < C·" + idx("A", k));
  }
  return r;
}

}  // namespace dexp
