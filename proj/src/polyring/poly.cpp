#include "dexp/polyring/poly.hpp"

#include <stdexcept>

namespace dexp {

Monomial::Monomial(const std::string& var, unsigned exp) {
  if (exp != 0) powers_[var] = exp;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& [v, e] : powers_) d += e;
  return d;
}

unsigned Monomial::exponent(const std::string& var) const {
  auto it = powers_.find(var);
  return it == powers_.end() ? 0U : it->second;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (const auto& [v, e] : o.powers_) r.powers_[v] += e;
  return r;
}

Monomial Monomial::without(const std::string& var) const {
  Monomial r = *this;
  r.powers_.erase(var);
  return r;
}

std::string Monomial::str() const {
  std::string s;
  for (const auto& [v, e] : powers_) {
    if (!s.empty()) s += "*";
    s += v;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  // Among equal degrees, a monomial with a higher power of an earlier variable ranks higher.
  auto ia = a.powers_.begin();
  auto ib = b.powers_.begin();
  for (; ia != a.powers_.end() && ib != b.powers_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? std::strong_ordering::greater : std::strong_ordering::less;
    if (auto c = ia->second <=> ib->second; c != 0) return c;
  }
  if (ia == a.powers_.end() && ib == b.powers_.end()) return std::strong_ordering::equal;
  return ia == a.powers_.end() ? std::strong_ordering::less : std::strong_ordering::greater;
}

Poly::Poly(const Rat& c) {
  if (!c.is_zero()) terms_[Monomial()] = c;
}

Poly Poly::var(const std::string& name) { return term(Rat(1), Monomial(name)); }

Poly Poly::term(const Rat& coeff, const Monomial& m) {
  Poly p;
  p.add_term(m, coeff);
  return p;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Rat Poly::constant() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? Rat(0) : it->second;
}

std::set<std::string> Poly::variables() const {
  std::set<std::string> vs;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.powers()) vs.insert(v);
  return vs;
}

bool Poly::contains(const std::string& var) const {
  for (const auto& [m, c] : terms_)
    if (m.exponent(var) != 0) return true;
  return false;
}

unsigned Poly::degree_in(const std::string& var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
  return d;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  Poly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  *this = std::move(r);
  return *this;
}

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1);
  Poly base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

Poly Poly::derivative(const std::string& var) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    const unsigned e = m.exponent(var);
    if (e == 0) continue;
    Monomial lowered = m.without(var) * Monomial(var, e - 1);
    r.add_term(lowered, c * Rat(static_cast<long>(e)));
  }
  return r;
}

Poly Poly::specialize(const std::map<std::string, Rat>& bindings) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    Rat coeff = c;
    Monomial rest;
    for (const auto& [v, e] : m.powers()) {
      auto it = bindings.find(v);
      if (it == bindings.end()) {
        rest = rest * Monomial(v, e);
      } else {
        coeff *= it->second.pow(static_cast<long>(e));
      }
    }
    r.add_term(rest, coeff);
  }
  return r;
}

Rat Poly::evaluate(const std::map<std::string, Rat>& bindings) const {
  const Poly r = specialize(bindings);
  if (!r.is_constant()) {
    throw std::invalid_argument("evaluate: unbound variable " + *r.variables().begin());
  }
  return r.constant();
}

Poly Poly::constant_term(const std::set<std::string>& wrt) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    bool free = true;
    for (const auto& v : wrt) free = free && m.exponent(v) == 0;
    if (free) r.add_term(m, c);
  }
  return r;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool neg = c < 0;
    const Rat mag = c.abs();
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    const bool unit = m.degree() == 0;
    if (unit) {
      s += mag.str();
    } else if (mag == 1) {
      s += m.str();
    } else {
      s += (mag.denominator() == 1 ? mag.str() : "(" + mag.str() + ")") + "*" + m.str();
    }
  }
  return s;
}

Poly poly_arith(const Poly& a, const Poly& b, PolyOp op) {
  switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
  }
  throw std::invalid_argument("unknown polynomial operation");
}

}  // namespace dexp
