#include "dexp/polyring/ratfunc.hpp"

namespace dexp {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

// Folds constant denominators into the numerator and makes 0 = 0/1.
void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.is_constant()) {
    num_ *= Poly(den_.constant().inverse());
    den_ = Poly(1);
  }
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.num_.is_zero()) throw DivisionByZero();
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

RatFunc RatFunc::derivative(const std::string& var) const {
  return RatFunc(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

RatFunc RatFunc::specialize(const std::map<std::string, Rat>& bindings) const {
  Poly d = den_.specialize(bindings);
  if (d.is_zero()) throw SpecializationPole();
  return RatFunc(num_.specialize(bindings), std::move(d));
}

Rat RatFunc::evaluate(const std::map<std::string, Rat>& bindings) const {
  const Rat d = den_.evaluate(bindings);
  if (d.is_zero()) throw DivisionByZero("pole under evaluation");
  return num_.evaluate(bindings) / d;
}

std::string RatFunc::str() const {
  if (den_ == Poly(1)) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace dexp
