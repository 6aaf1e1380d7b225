#include "dexp/exactnum/dual.hpp"

#include <algorithm>

namespace dexp {

namespace {

void widen(std::vector<Rat>& g, std::size_t size) {
  if (g.size() < size) g.resize(size, Rat(0));
}

}  // namespace

DualRat DualRat::variable(const Rat& value, std::size_t index, std::size_t slots) {
  std::vector<Rat> g(std::max(slots, index + 1), Rat(0));
  g[index] = Rat(1);
  return {value, std::move(g)};
}

DualRat& DualRat::operator+=(const DualRat& o) {
  value_ += o.value_;
  widen(grad_, o.grad_.size());
  for (std::size_t i = 0; i < o.grad_.size(); ++i) grad_[i] += o.grad_[i];
  return *this;
}

DualRat& DualRat::operator-=(const DualRat& o) {
  value_ -= o.value_;
  widen(grad_, o.grad_.size());
  for (std::size_t i = 0; i < o.grad_.size(); ++i) grad_[i] -= o.grad_[i];
  return *this;
}

// d(xy) = x dy + y dx
DualRat& DualRat::operator*=(const DualRat& o) {
  for (auto& g : grad_) g *= o.value_;
  widen(grad_, o.grad_.size());
  for (std::size_t i = 0; i < o.grad_.size(); ++i) grad_[i] += value_ * o.grad_[i];
  value_ *= o.value_;
  return *this;
}

// d(x/y) = (dx - (x/y) dy) / y
DualRat& DualRat::operator/=(const DualRat& o) {
  if (o.value_.is_zero()) throw DivisionByZero();
  const Rat inv = o.value_.inverse();
  const Rat quotient = value_ * inv;
  widen(grad_, o.grad_.size());
  for (std::size_t i = 0; i < grad_.size(); ++i) {
    Rat dy = i < o.grad_.size() ? o.grad_[i] : Rat(0);
    grad_[i] = (grad_[i] - quotient * dy) * inv;
  }
  value_ = quotient;
  return *this;
}

DualRat operator-(const DualRat& a) {
  DualRat r = a;
  r.value_ = -r.value_;
  for (auto& g : r.grad_) g = -g;
  return r;
}

}  // namespace dexp
