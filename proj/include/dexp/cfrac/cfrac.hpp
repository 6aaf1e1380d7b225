#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "dexp/exponents/exponents.hpp"
#include "dexp/polyring/poly.hpp"

namespace dexp {

/// Finite generalized continued fraction f_0 + e_1/(f_1 + e_2/(f_2 + ... + e_m/f_m)).
template <class T>
struct CFData {
  std::vector<T> e;  // e_1 .. e_m (e[0] is e_1)
  std::vector<T> f;  // f_0 .. f_m

  std::size_t depth() const { return e.size(); }
  const T& ee(std::size_t k) const { return e.at(k - 1); }
};

/// Which three-term recurrence to run.
///   standard: E_k = f_k E_{k-1} + e_k E_{k-2}
///   printed:  E_k = e_k E_{k-1} + f_k E_{k-2}   (coefficients swapped)
enum class Recurrence { standard, printed };

/// Convergent numerators/denominators E_k, F_k for k = -1..m, with
/// E_{-1} = 1, F_{-1} = 0, E_0 = f_0, F_0 = 1.
template <class T>
struct ConvergentSeq {
  std::vector<T> E;  // E[k+1] holds E_k
  std::vector<T> F;

  const T& num(long k) const { return E.at(static_cast<std::size_t>(k + 1)); }
  const T& den(long k) const { return F.at(static_cast<std::size_t>(k + 1)); }
  long last() const { return static_cast<long>(E.size()) - 2; }
};

template <class T>
ConvergentSeq<T> convergents(const CFData<T>& d, Recurrence rule = Recurrence::standard) {
  if (d.f.size() != d.e.size() + 1) throw std::invalid_argument("continued fraction needs one more f than e");
  ConvergentSeq<T> s;
  s.E = {T(Rat(1)), d.f[0]};
  s.F = {T(Rat(0)), T(Rat(1))};
  for (std::size_t k = 1; k <= d.depth(); ++k) {
    const T& ek = d.e[k - 1];
    const T& fk = d.f[k];
    const T& e1 = s.E[k];
    const T& e2 = s.E[k - 1];
    const T& f1 = s.F[k];
    const T& f2 = s.F[k - 1];
    if (rule == Recurrence::standard) {
      T en = fk * e1 + ek * e2;
      T fn = fk * f1 + ek * f2;
      s.E.push_back(std::move(en));
      s.F.push_back(std::move(fn));
    } else {
      T en = ek * e1 + fk * e2;
      T fn = ek * f1 + fk * f2;
      s.E.push_back(std::move(en));
      s.F.push_back(std::move(fn));
    }
  }
  return s;
}

/// E_m / F_m; throws DivisionByZero when F_m vanishes.
Rat convergent_ratio(const ConvergentSeq<Rat>& s);

/// Bottom-up nested evaluation; throws DivisionByZero on a vanishing tail.
Rat nested_value(const CFData<Rat>& d);

/// The instance behind What_0: e_k = W_k (with C set to 1 unless
/// `specialize_c` is false), f_k = What_{k+1} - 1 for 0 <= k <= n-3 and
/// f_{n-2} = V_1 = (1 - 2A_2)/A_2, all from the closed-form table.
CFData<Rat> cf_inputs(const Params& p, bool specialize_c = true);

/// Symbolic instance with indeterminates e_1.., f_0.. .
CFData<Poly> cf_symbols(std::size_t depth);

/// Symbolic instance in the exponent variables: e_k = W_k,
/// f_k = What_{k+1} - 1 and f_{n-2} = V_1.
CFData<Poly> cf_exponent_symbols(int n);

struct CheckRow {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

struct CheckReport {
  std::vector<CheckRow> rows;
  bool pass() const {
    for (const auto& r : rows)
      if (!r.pass) return false;
    return true;
  }
};

/// Checks the final convergent ratio against the closed-form What_0 = V_{n-1},
/// the nested evaluation, and every link V_k = What_{n-k} - 1 + U_k / V_{k-1}.
CheckReport cf_identity_check(const Params& p, bool specialize_c = true);

/// Symbolic checks for dimension n: constant terms of E_{n-2}, F_{n-2} in the
/// e-variables are the products of the f's; the printed recurrence breaks
/// this (reported as an expected failure); the convergent determinant
/// identity; E, F free of What_0; and the constant monomial of
/// F_{n-2} What_0 - E_{n-2} in the W variables.
CheckReport constant_term_check(int n);

}  // namespace dexp
