#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "dexp/nsystem/params.hpp"
#include "dexp/nsystem/validate.hpp"

namespace dexp {

enum class PointKind { start, delta, mu, end };

/// Name of a division point: start (q = 1), delta(k,1), delta(k,2), mu(l), end (q = C).
struct PointLabel {
  PointKind kind = PointKind::start;
  int i = 0;
  int j = 0;

  static PointLabel start() { return {PointKind::start, 0, 0}; }
  static PointLabel delta(int k, int which) { return {PointKind::delta, k, which}; }
  static PointLabel mu(int l) { return {PointKind::mu, l, 0}; }
  static PointLabel end() { return {PointKind::end, 0, 0}; }

  std::string str() const;
  /// Inverse of str(); throws std::invalid_argument on unknown text.
  static PointLabel parse(const std::string& text);

  friend bool operator==(const PointLabel&, const PointLabel&) = default;
};

template <class T>
struct Breakpoint {
  T q;
  std::vector<T> values;  // P_1(q) <= ... <= P_{n+1}(q)
  std::vector<PointLabel> labels;
  bool switch_point = false;

  bool has_label(const PointLabel& l) const {
    for (const auto& x : labels)
      if (x == l) return true;
    return false;
  }
};

/// Rising unit on one interval between consecutive breakpoints: a single
/// rank with slope 1, or two coinciding ranks with slope 1/2 each.
struct RisingUnit {
  std::vector<int> ranks;  // 1-based component ranks
  Rat slope;

  friend bool operator==(const RisingUnit&, const RisingUnit&) = default;
};

/// Combined graph on the fundamental interval [1, C].
template <class T>
struct BasicGeometry {
  ParamSet<T> params;
  std::vector<Breakpoint<T>> points;
  std::vector<RisingUnit> intervals;  // intervals[i] spans points[i]..points[i+1]

  int n() const { return params.n; }

  /// Index of the breakpoint carrying `label`; throws std::out_of_range if absent.
  std::size_t index_of(const PointLabel& label) const {
    for (std::size_t i = 0; i < points.size(); ++i)
      if (points[i].has_label(label)) return i;
    throw std::out_of_range("no division point " + label.str());
  }
};

using SystemGeometry = BasicGeometry<Rat>;

/// Raised when construction lands off C or the result breaks a system axiom.
class GeometryError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Builds the combined graph by walking the rising units in order; each
/// interval's length equals its total rise. No validation beyond the closure
/// identity (final q equals C) is performed.
template <class T>
BasicGeometry<T> build_geometry_unchecked(const ParamSet<T>& p) {
  const int n = p.n;
  BasicGeometry<T> g;
  g.params = p;

  Breakpoint<T> cur{T(Rat(1)), p.A, {PointLabel::start()}, false};
  g.points.push_back(cur);

  auto raise = [&](std::vector<int> ranks, const T& target, std::vector<PointLabel> labels) {
    const T current = cur.values[static_cast<std::size_t>(ranks.front() - 1)];
    const T rise = target - current;
    const bool pair = ranks.size() == 2;
    cur.q = cur.q + (pair ? rise + rise : rise);
    for (int r : ranks) cur.values[static_cast<std::size_t>(r - 1)] = target;
    cur.labels = std::move(labels);
    cur.switch_point = false;
    for (const auto& l : cur.labels)
      if (l.kind == PointKind::mu && l.i >= 1 && l.i <= n) cur.switch_point = true;
    g.intervals.push_back({std::move(ranks), pair ? Rat(1, 2) : Rat(1)});
    g.points.push_back(cur);
  };

  // Ascent from q = 1 up to delta(n,2): each level k first lifts rank k to
  // A_{k+1}, then ranks k and k+1 rise together to B_k.
  raise({2}, p.a(3), {PointLabel::delta(2, 1)});
  for (int k = 2; k <= n; ++k) {
    if (k >= 3) raise({k}, p.a(k + 1), {PointLabel::delta(k, 1)});
    std::vector<PointLabel> labels{PointLabel::delta(k, 2)};
    if (k == n) labels.push_back(PointLabel::mu(n + 1));
    raise({k, k + 1}, p.b(k), std::move(labels));
  }
  // Descent of the switch points: ranks n+1, n, ..., 3 climb to C·A_k.
  raise({n + 1}, p.C * p.a(n + 1), {PointLabel::mu(n)});
  for (int k = n; k >= 3; --k) raise({k}, p.C * p.a(k), {PointLabel::mu(k - 1)});
  raise({2}, p.D, {PointLabel::mu(1)});
  raise({1}, p.D, {PointLabel::mu(0)});
  raise({1, 2}, p.C * p.a(2), {PointLabel::end()});

  if (!(cur.q == p.C)) throw GeometryError("closure identity fails: construction ends off C");
  return g;
}

struct AxiomReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Verifies ordering, the sum identity, boundary values, the rising-unit
/// structure of every interval, the division-point count 3n+1, and the
/// switch/ordinary marks.
AxiomReport check_axioms(const SystemGeometry& g);

/// Validates `p`, builds its geometry and checks all axioms. Throws
/// InvalidParams for an invalid set and GeometryError carrying the first
/// violated invariant otherwise.
SystemGeometry build_geometry(const Params& p);

/// Geometry made of the same points scaled by C^m (a self-similar copy).
SystemGeometry shifted_geometry(const SystemGeometry& g, long m);

/// The self-similar extension P(q) = C^m P(C^-m q) on [1, infinity).
class NSystem {
 public:
  explicit NSystem(SystemGeometry geometry);

  const SystemGeometry& geometry() const { return geometry_; }
  const Params& params() const { return geometry_.params; }

  /// Throws std::domain_error("outside domain") for q < 1.
  std::vector<Rat> operator()(const Rat& q) const;

 private:
  SystemGeometry geometry_;
};

std::vector<Rat> eval_system(const NSystem& s, const Rat& q);

}  // namespace dexp
