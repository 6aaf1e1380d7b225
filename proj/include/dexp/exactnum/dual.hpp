#pragma once

#include <cstddef>
#include <vector>

#include "dexp/exactnum/rat.hpp"

namespace dexp {

/// Exact forward-mode dual number: a rational value together with its
/// gradient with respect to a fixed vector of parameter slots.
///
/// An empty gradient stands for the zero gradient of any length, so lifted
/// constants combine freely with seeded variables.
class DualRat {
 public:
  DualRat() = default;
  DualRat(const Rat& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  DualRat(long value) : value_(value) {}        // NOLINT(google-explicit-constructor)
  DualRat(Rat value, std::vector<Rat> gradient)
      : value_(std::move(value)), grad_(std::move(gradient)) {}

  /// The independent variable for slot `index` out of `slots`.
  static DualRat variable(const Rat& value, std::size_t index, std::size_t slots);

  const Rat& value() const { return value_; }
  const std::vector<Rat>& gradient() const { return grad_; }
  /// Partial derivative along slot `i`; zero for slots beyond the stored gradient.
  Rat partial(std::size_t i) const { return i < grad_.size() ? grad_[i] : Rat(0); }

  DualRat& operator+=(const DualRat& o);
  DualRat& operator-=(const DualRat& o);
  DualRat& operator*=(const DualRat& o);
  DualRat& operator/=(const DualRat& o);

  friend DualRat operator+(DualRat a, const DualRat& b) { return a += b; }
  friend DualRat operator-(DualRat a, const DualRat& b) { return a -= b; }
  friend DualRat operator*(DualRat a, const DualRat& b) { return a *= b; }
  friend DualRat operator/(DualRat a, const DualRat& b) { return a /= b; }
  friend DualRat operator-(const DualRat& a);

  // Ordering looks at values only; gradients ride along.
  friend bool operator==(const DualRat& a, const DualRat& b) { return a.value_ == b.value_; }
  friend auto operator<=>(const DualRat& a, const DualRat& b) { return a.value_ <=> b.value_; }

 private:
  Rat value_;
  std::vector<Rat> grad_;
};

inline const Rat& value_of(const Rat& r) { return r; }
inline const Rat& value_of(const DualRat& d) { return d.value(); }
inline bool scalar_is_zero(const Rat& r) { return r.is_zero(); }
inline bool scalar_is_zero(const DualRat& d) { return d.value().is_zero(); }

}  // namespace dexp
