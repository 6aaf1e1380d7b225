#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>

#include "dexp/exactnum/rat.hpp"

namespace dexp {

/// Power product of named indeterminates. Zero exponents are never stored.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const std::string& var, unsigned exp = 1);

  unsigned degree() const;
  unsigned exponent(const std::string& var) const;
  const std::map<std::string, unsigned>& powers() const { return powers_; }

  Monomial operator*(const Monomial& o) const;
  /// Monomial with `var` removed.
  Monomial without(const std::string& var) const;

  std::string str() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Graded lexicographic: total degree first, then variable powers.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::map<std::string, unsigned> powers_;
};

/// Sparse multivariate polynomial over Rat. No zero coefficient is stored.
class Poly {
 public:
  Poly() = default;
  Poly(const Rat& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rat(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly var(const std::string& name);
  static Poly term(const Rat& coeff, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the unit monomial.
  Rat constant() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rat>& terms() const { return terms_; }

  std::set<std::string> variables() const;
  bool contains(const std::string& var) const;
  unsigned degree_in(const std::string& var) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator-(const Poly& a);
  friend bool operator==(const Poly&, const Poly&) = default;

  Poly pow(unsigned e) const;
  Poly derivative(const std::string& var) const;

  /// Substitutes the bound variables; the rest stay symbolic.
  Poly specialize(const std::map<std::string, Rat>& bindings) const;
  /// Full evaluation; throws std::invalid_argument on an unbound variable.
  Rat evaluate(const std::map<std::string, Rat>& bindings) const;
  /// Sum of the terms free of every variable in `wrt`.
  Poly constant_term(const std::set<std::string>& wrt) const;

  /// Canonical text, highest graded-lex term first, e.g. "x^2 - y^2".
  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rat& c);
  std::map<Monomial, Rat> terms_;
};

/// Standard arithmetic on the polynomial ring, op in {add, sub, mul}.
enum class PolyOp { add, sub, mul };
Poly poly_arith(const Poly& a, const Poly& b, PolyOp op);

/// Free function form of Poly::constant_term.
inline Poly constant_term(const Poly& f, const std::set<std::string>& wrt) { return f.constant_term(wrt); }

}  // namespace dexp
