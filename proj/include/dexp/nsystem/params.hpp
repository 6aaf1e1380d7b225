#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "dexp/exactnum/dual.hpp"
#include "dexp/exactnum/rat.hpp"

namespace dexp {

/// Raised for dimensions outside the supported range n >= 3.
class UnsupportedDimension : public std::invalid_argument {
 public:
  explicit UnsupportedDimension(int n)
      : std::invalid_argument("unsupported dimension n=" + std::to_string(n) + " (need n >= 3)") {}
};

/// Raised when a denominator vanishes while evaluating a named quantity.
class PoleError : public DivisionByZero {
 public:
  explicit PoleError(const std::string& what) : DivisionByZero("pole at " + what) {}
};

/// Parameters of the (n+1)-system family over a scalar type (Rat for values,
/// DualRat for derivatives, RatFunc for symbolic work).
///
/// Indices follow the mathematical convention: a(k) for 1 <= k <= n+1 and
/// b(k) for 2 <= k <= n.
template <class T>
struct ParamSet {
  int n = 0;
  std::vector<T> A;  // A_1 .. A_{n+1}
  std::vector<T> B;  // B_2 .. B_n
  T C{};
  T D{};

  const T& a(int k) const { return A.at(static_cast<std::size_t>(k - 1)); }
  T& a(int k) { return A.at(static_cast<std::size_t>(k - 1)); }
  const T& b(int k) const { return B.at(static_cast<std::size_t>(k - 2)); }
  T& b(int k) { return B.at(static_cast<std::size_t>(k - 2)); }
};

using Params = ParamSet<Rat>;

/// Number of free parameters: A_2..A_n, B_2..B_n, C, D.
inline std::size_t free_count(int n) { return static_cast<std::size_t>(2 * n); }

/// Slot positions of the free parameter vector (A_2..A_n, B_2..B_n, C, D).
inline std::size_t slot_a(int n, int k) { (void)n; return static_cast<std::size_t>(k - 2); }
inline std::size_t slot_b(int n, int k) { return static_cast<std::size_t>(n - 1 + k - 2); }
inline std::size_t slot_c(int n) { return static_cast<std::size_t>(2 * n - 2); }
inline std::size_t slot_d(int n) { return static_cast<std::size_t>(2 * n - 1); }

/// Names of the free slots, in slot order ("A_2", ..., "B_n", "C", "D").
std::vector<std::string> free_names(int n);

/// Extracts the free vector (A_2..A_n, B_2..B_n, C, D).
template <class T>
std::vector<T> free_vector(const ParamSet<T>& p) {
  std::vector<T> out;
  out.reserve(free_count(p.n));
  for (int k = 2; k <= p.n; ++k) out.push_back(p.a(k));
  for (int k = 2; k <= p.n; ++k) out.push_back(p.b(k));
  out.push_back(p.C);
  out.push_back(p.D);
  return out;
}

/// Rebuilds a full parameter set from its free vector, deriving A_1 = A_2 and
/// A_{n+1} = 1 - (A_1 + ... + A_n).
template <class T>
ParamSet<T> from_free(int n, const std::vector<T>& free) {
  if (n < 3) throw UnsupportedDimension(n);
  if (free.size() != free_count(n)) throw std::invalid_argument("free vector has wrong length");
  ParamSet<T> p;
  p.n = n;
  p.A.resize(static_cast<std::size_t>(n + 1));
  p.B.resize(static_cast<std::size_t>(n - 1));
  for (int k = 2; k <= n; ++k) p.a(k) = free[slot_a(n, k)];
  for (int k = 2; k <= n; ++k) p.b(k) = free[slot_b(n, k)];
  p.C = free[slot_c(n)];
  p.D = free[slot_d(n)];
  p.a(1) = p.a(2);
  T rest = T(Rat(1));
  for (int k = 1; k <= n; ++k) rest = rest - p.a(k);
  p.a(n + 1) = rest;
  return p;
}

/// Lifts a rational parameter set to dual numbers seeded on the free slots.
ParamSet<DualRat> seed_duals(const Params& p);

/// Evaluates `f` on the seeded duals of `at`: the value is the plain result
/// and gradient component i is the exact partial along free slot i.
template <class F>
DualRat dual_eval(F&& f, const Params& at) {
  return f(seed_duals(at));
}

/// Division that names the denominator when it vanishes.
template <class T>
T checked_div(const T& num, const T& den, const std::string& what) {
  if (scalar_is_zero(den)) throw PoleError(what);
  return num / den;
}

/// Canonical parameter point: C = 3, A_1 = A_2 = 2^-n, A_k = 2^(k-n-2),
/// D = (11/8) 2^(1-n), B_k = (5/4) 2^(k-n-1).
Params canonical_params(int n);

}  // namespace dexp
