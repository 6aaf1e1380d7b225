#include "dexp/certify/certify.hpp"

namespace dexp {

std::string to_string(FunctionSet s) { return s == FunctionSet::trajectory ? "trajectory" : "paper_table"; }

FunctionSet parse_function_set(const std::string& text) {
  if (text == "trajectory") return FunctionSet::trajectory;
  if (text == "paper" || text == "paper_table") return FunctionSet::paper_table;
  throw std::invalid_argument("unknown function set '" + text + "'");
}

std::vector<std::string> exponent_names(int n) {
  std::vector<std::string> names;
  for (int d = 0; d < n; ++d) names.push_back("What_" + std::to_string(d));
  for (int d = 0; d < n; ++d) names.push_back("W_" + std::to_string(d));
  return names;
}

namespace {

void check_dim(int n, const Params& p) {
  if (n < 3) throw UnsupportedDimension(n);
  if (p.n != n) throw std::invalid_argument("certificate dimension does not match parameters");
}

RatMat rows_of(const BasicExponents<DualRat>& e, std::size_t cols) {
  RatMat m(0, cols);
  auto push = [&](const DualRat& x) {
    std::vector<Rat> r(cols);
    for (std::size_t j = 0; j < cols; ++j) r[j] = x.partial(j);
    m.append_row(r);
  };
  for (const auto& x : e.uniform) push(x);
  for (const auto& x : e.ordinary) push(x);
  return m;
}

std::vector<bool> stability_flags(const ExponentTuple& t) {
  std::vector<bool> flags;
  for (const auto& a : t.uniform_at) flags.push_back(a && a->strict);
  for (const auto& a : t.ordinary_at) flags.push_back(a && a->strict);
  return flags;
}

}  // namespace

RatMat jacobian(FunctionSet set, const Params& p) {
  const auto cols = free_count(p.n);
  if (set == FunctionSet::paper_table) {
    const auto report = validate_params(p);
    if (!report.valid()) throw InvalidParams(report);
    return rows_of(closed_forms_paper(seed_duals(p)), cols);
  }
  const SystemGeometry g = build_geometry(p);
  const ExponentTuple t = trajectory_exponents(g);
  const auto names = exponent_names(p.n);
  const auto flags = stability_flags(t);
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (!flags[i]) {
      const auto& at = i < t.uniform_at.size() ? t.uniform_at[i] : t.ordinary_at[i - t.uniform_at.size()];
      throw BranchNotStable(names[i] + " extremum tied at " + (at ? at->label : std::string("?")));
    }
  }
  // Same scan on dual numbers: the comparisons only look at values, so the
  // active breakpoints match the rational run and gradients follow them.
  const auto dual_geometry = build_geometry_unchecked(seed_duals(p));
  return rows_of(trajectory_exponents(dual_geometry), cols);
}

Certificate certificate_from_matrix(std::string kind, const Params& p, std::string set_name,
                                    std::vector<std::string> rows, RatMat m, std::size_t expected_rank) {
  Certificate c;
  c.kind = std::move(kind);
  c.n = p.n;
  c.basepoint = p;
  c.function_set = std::move(set_name);
  c.row_names = std::move(rows);
  c.column_names = free_names(p.n);
  c.rank = mat_rank(m);
  if (m.square()) c.determinant = mat_det(m);
  c.matrix = std::move(m);
  c.expected_rank = expected_rank;
  return c;
}

Certificate independence_certificate(int n, const Params& p, FunctionSet set) {
  check_dim(n, p);
  Certificate c = certificate_from_matrix("independence", p, to_string(set), exponent_names(n), jacobian(set, p),
                                          static_cast<std::size_t>(2 * n));
  if (set == FunctionSet::trajectory) c.stability = stability_flags(trajectory_exponents(build_geometry(p)));
  return c;
}

Certificate uniform_block_certificate(int n, const Params& p, FunctionSet set) {
  check_dim(n, p);
  const RatMat full = jacobian(set, p);
  std::vector<std::size_t> rows;
  for (int d = 0; d < n; ++d) rows.push_back(static_cast<std::size_t>(d));
  auto names = exponent_names(n);
  names.resize(static_cast<std::size_t>(n));
  Certificate c = certificate_from_matrix("uniform_block", p, to_string(set), std::move(names),
                                          full.select_rows(rows), static_cast<std::size_t>(n));
  if (set == FunctionSet::trajectory) {
    auto flags = stability_flags(trajectory_exponents(build_geometry(p)));
    flags.resize(static_cast<std::size_t>(n));
    c.stability = std::move(flags);
  }
  return c;
}

Certificate specialization_rank_check(int n, const Params& p) {
  check_dim(n, p);
  const auto report = validate_params(p);
  if (!report.valid()) throw InvalidParams(report);

  // Variables: A_3..A_n then B_2..B_n; A_2 and D stay constant, C is set to 1.
  const auto vars = static_cast<std::size_t>(2 * n - 3);
  std::vector<DualRat> free;
  std::size_t slot = 0;
  free.emplace_back(p.a(2));
  for (int k = 3; k <= n; ++k) free.push_back(DualRat::variable(p.a(k), slot++, vars));
  for (int k = 2; k <= n; ++k) free.push_back(DualRat::variable(p.b(k), slot++, vars));
  free.emplace_back(Rat(1));
  free.emplace_back(p.D);
  const auto q = mnuv(from_free(n, free));

  std::vector<std::string> names;
  RatMat m(0, vars);
  auto push = [&](std::string name, const DualRat& f) {
    std::vector<Rat> r(vars);
    for (std::size_t j = 0; j < vars; ++j) r[j] = f.partial(j);
    m.append_row(r);
    names.push_back(std::move(name));
  };
  const DualRat one(Rat(1));
  for (int k = n - 1; k >= 2; --k) {
    push("V_" + std::to_string(k) + " + 1 - U_" + std::to_string(k) + "/V_" + std::to_string(k - 1),
         q.v(k) + one - checked_div(q.u(k), q.v(k - 1), "V_" + std::to_string(k - 1)));
  }
  for (int k = n; k >= 2; --k) push("U_" + std::to_string(k), q.u(k));

  Certificate c = certificate_from_matrix("specialization", p, "C=1", std::move(names), std::move(m), vars);
  c.column_names.clear();
  for (int k = 3; k <= n; ++k) c.column_names.push_back("A_" + std::to_string(k));
  for (int k = 2; k <= n; ++k) c.column_names.push_back("B_" + std::to_string(k));
  return c;
}

}  // namespace dexp
