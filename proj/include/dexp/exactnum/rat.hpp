#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dexp {

/// Error raised when a denominator vanishes during exact arithmetic.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// Arbitrary-precision integer used for numerators and denominators.
using BigInt = mpz_class;

/// Exact rational number, always held in canonical form: the denominator is
/// positive and coprime to the numerator.
class Rat {
 public:
  Rat() = default;
  Rat(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  Rat(const BigInt& num, const BigInt& den);
  explicit Rat(const BigInt& value) : v_(value) {}

  /// Parses "p/q" or "p" (optionally signed). Throws std::invalid_argument on
  /// malformed text and DivisionByZero on a zero denominator.
  static Rat parse(std::string_view text);

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  /// Serialized form: "p/q", or "p" when q = 1.
  std::string str() const;

  Rat& operator+=(const Rat& o) {
    v_ += o.v_;
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    v_ -= o.v_;
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    v_ *= o.v_;
    return *this;
  }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) {
    Rat r;
    r.v_ = -a.v_;
    return r;
  }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rat inverse() const;
  Rat abs() const;
  /// Integer power; negative exponents invert.
  Rat pow(long e) const;

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

/// Builds p/q in canonical form.
Rat rat_make(const BigInt& p, const BigInt& q);
inline Rat rat_make(long p, long q) { return Rat(p, q); }

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace dexp

template <>
struct std::hash<dexp::Rat> {
  std::size_t operator()(const dexp::Rat& r) const noexcept {
    return std::hash<std::string>{}(r.str());
  }
};
