#pragma once

#include <map>
#include <string>

#include "dexp/polyring/poly.hpp"

namespace dexp {

/// Quotient of polynomials. Not reduced to lowest terms; equality is decided
/// by cross-multiplication.
class RatFunc {
 public:
  RatFunc() : num_(0), den_(1) {}
  RatFunc(const Rat& c) : num_(c), den_(1) {}    // NOLINT(google-explicit-constructor)
  RatFunc(long c) : num_(Rat(c)), den_(1) {}     // NOLINT(google-explicit-constructor)
  RatFunc(const Poly& p) : num_(p), den_(1) {}   // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZero if `den` is the zero polynomial.
  RatFunc(Poly num, Poly den);

  static RatFunc var(const std::string& name) { return RatFunc(Poly::var(name)); }

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

  RatFunc derivative(const std::string& var) const;
  /// Substitutes the bound variables. Throws SpecializationPole when the
  /// denominator vanishes identically under the bindings.
  RatFunc specialize(const std::map<std::string, Rat>& bindings) const;
  Rat evaluate(const std::map<std::string, Rat>& bindings) const;

  std::string str() const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

class SpecializationPole : public DivisionByZero {
 public:
  SpecializationPole() : DivisionByZero("pole under specialization") {}
};

inline bool scalar_is_zero(const RatFunc& f) { return f.is_zero(); }

/// Free-function form of RatFunc::specialize.
inline RatFunc specialize(const RatFunc& f, const std::map<std::string, Rat>& bindings) {
  return f.specialize(bindings);
}

}  // namespace dexp
