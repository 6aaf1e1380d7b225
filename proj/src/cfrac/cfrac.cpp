#include "dexp/cfrac/cfrac.hpp"

#include <set>

namespace dexp {

namespace {

std::string sym(const char* s, long k) { return std::string(s) + "_" + std::to_string(k); }

CheckRow row(std::string name, const std::string& lhs, const std::string& rhs, bool pass) {
  return {std::move(name), lhs, rhs, pass};
}

CheckRow rat_row(std::string name, const Rat& lhs, const Rat& rhs) {
  return row(std::move(name), lhs.str(), rhs.str(), lhs == rhs);
}

CheckRow poly_row(std::string name, const Poly& lhs, const Poly& rhs) {
  return row(std::move(name), lhs.str(), rhs.str(), lhs == rhs);
}

}  // namespace

Rat convergent_ratio(const ConvergentSeq<Rat>& s) {
  const Rat& den = s.den(s.last());
  if (den.is_zero()) throw DivisionByZero("convergent denominator F_" + std::to_string(s.last()) + " vanishes");
  return s.num(s.last()) / den;
}

Rat nested_value(const CFData<Rat>& d) {
  Rat tail = d.f.back();
  for (std::size_t k = d.depth(); k >= 1; --k) tail = d.f[k - 1] + d.ee(k) / tail;
  return tail;
}

CFData<Rat> cf_inputs(const Params& p, bool specialize_c) {
  const int n = p.n;
  Params at = p;
  if (specialize_c) at.C = Rat(1);
  const auto table = closed_forms_paper(p);
  const auto ordinary = closed_forms_paper(at).ordinary;
  CFData<Rat> d;
  for (int k = 1; k <= n - 2; ++k) d.e.push_back(ordinary[static_cast<std::size_t>(k)]);
  for (int k = 0; k <= n - 3; ++k) d.f.push_back(table.uniform[static_cast<std::size_t>(k + 1)] - 1);
  d.f.push_back(mnuv(p).v(1));
  return d;
}

CFData<Poly> cf_symbols(std::size_t depth) {
  CFData<Poly> d;
  for (std::size_t k = 1; k <= depth; ++k) d.e.push_back(Poly::var(sym("e", static_cast<long>(k))));
  for (std::size_t k = 0; k <= depth; ++k) d.f.push_back(Poly::var(sym("f", static_cast<long>(k))));
  return d;
}

CFData<Poly> cf_exponent_symbols(int n) {
  CFData<Poly> d;
  for (int k = 1; k <= n - 2; ++k) d.e.push_back(Poly::var(sym("W", k)));
  for (int k = 0; k <= n - 3; ++k) d.f.push_back(Poly::var(sym("What", k + 1)) - Poly(1));
  d.f.push_back(Poly::var("V_1"));
  return d;
}

CheckReport cf_identity_check(const Params& p, bool specialize_c) {
  const int n = p.n;
  CheckReport rep;
  const auto d = cf_inputs(p, specialize_c);
  const auto seq = convergents(d);
  const Rat ratio = convergent_ratio(seq);
  const auto q = mnuv(p);
  const auto table = closed_forms_paper(p);

  rep.rows.push_back(rat_row("E/F = V_" + std::to_string(n - 1), ratio, q.v(n - 1)));
  rep.rows.push_back(rat_row("V_" + std::to_string(n - 1) + " = What_0 (table)", q.v(n - 1), table.uniform[0]));
  rep.rows.push_back(rat_row("E/F = nested value", ratio, nested_value(d)));
  for (int k = 2; k <= n - 1; ++k) {
    const Rat rhs = table.uniform[static_cast<std::size_t>(n - k)] - 1 + q.u(k) / q.v(k - 1);
    rep.rows.push_back(rat_row("V_" + std::to_string(k) + " = What_" + std::to_string(n - k) + " - 1 + U_" +
                                   std::to_string(k) + "/V_" + std::to_string(k - 1),
                               q.v(k), rhs));
  }
  return rep;
}

CheckReport constant_term_check(int n) {
  if (n < 3) throw UnsupportedDimension(n);
  const auto m = static_cast<std::size_t>(n - 2);
  const auto last = static_cast<long>(m);
  CheckReport rep;

  // Generic symbols.
  const auto d = cf_symbols(m);
  std::set<std::string> evars;
  for (std::size_t k = 1; k <= m; ++k) evars.insert(sym("e", static_cast<long>(k)));
  Poly prod_all(1), prod_tail(1);
  for (std::size_t k = 0; k <= m; ++k) {
    prod_all *= d.f[k];
    if (k >= 1) prod_tail *= d.f[k];
  }
  const auto seq = convergents(d);
  rep.rows.push_back(poly_row("const_e(E_" + std::to_string(last) + ") = prod f_0..f_" + std::to_string(last),
                              constant_term(seq.num(last), evars), prod_all));
  rep.rows.push_back(poly_row("const_e(F_" + std::to_string(last) + ") = prod f_1..f_" + std::to_string(last),
                              constant_term(seq.den(last), evars), prod_tail));
  {
    std::map<std::string, Rat> zero;
    for (const auto& v : evars) zero[v] = Rat(0);
    rep.rows.push_back(poly_row("const_e(E) = E at e=0", constant_term(seq.num(last), evars),
                                seq.num(last).specialize(zero)));
  }

  // Printed recurrence: the same constant-term claim must fail.
  const auto printed = convergents(d, Recurrence::printed);
  const bool printed_holds = constant_term(printed.num(last), evars) == prod_all &&
                             constant_term(printed.den(last), evars) == prod_tail;
  rep.rows.push_back(row("printed recurrence breaks the constant-term identity",
                         constant_term(printed.num(last), evars).str(), prod_all.str(), !printed_holds));

  // E_k F_{k-1} - E_{k-1} F_k = (-1)^{k-1} e_1 ... e_k.
  Poly eprod(1);
  for (long k = 1; k <= last; ++k) {
    eprod *= d.e[static_cast<std::size_t>(k - 1)];
    const Poly lhs = seq.num(k) * seq.den(k - 1) - seq.num(k - 1) * seq.den(k);
    const Poly rhs = (k % 2 == 1) ? eprod : -eprod;
    rep.rows.push_back(poly_row("determinant identity k=" + std::to_string(k), lhs, rhs));
  }

  // Exponent-variable instance.
  const auto x = cf_exponent_symbols(n);
  const auto xs = convergents(x);
  const Poly& E = xs.num(last);
  const Poly& F = xs.den(last);
  rep.rows.push_back(row("E, F free of What_0", E.str(), F.str(), !E.contains("What_0") && !F.contains("What_0")));
  std::set<std::string> wvars;
  for (int k = 0; k <= n - 2; ++k) wvars.insert(sym("W", k));
  const Poly what0 = Poly::var("What_0");
  const Poly lhs = constant_term(F * what0 - E, wvars);
  Poly rhs = (what0 - Poly::var("What_1") + Poly(1)) * Poly::var("V_1");
  for (int k = 1; k <= n - 3; ++k) rhs *= Poly::var(sym("What", k + 1)) - Poly(1);
  rep.rows.push_back(poly_row("const_W(F What_0 - E) = (What_0 - What_1 + 1) V_1 prod (What_{k+1} - 1)", lhs, rhs));
  return rep;
}

}  // namespace dexp
