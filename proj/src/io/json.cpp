#include "dexp/io/json.hpp"

#include <stdexcept>

namespace dexp::io {

json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw std::invalid_argument("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

namespace {

json rats(const std::vector<Rat>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json attainment(const std::optional<Attainment>& a) {
  if (!a) return nullptr;
  return {{"label", a->label}, {"q", to_json(a->q)}, {"strict", a->strict}};
}

std::string side(char c) { return std::string(1, c); }

}  // namespace

json to_json(const Params& p) {
  return {{"n", p.n}, {"C", to_json(p.C)}, {"A", rats(p.A)}, {"B", rats(p.B)}, {"D", to_json(p.D)}};
}

Params params_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("parameters must be a JSON object");
  for (const char* key : {"n", "C", "A", "B", "D"}) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("parameters missing key '") + key + "'");
  }
  const int n = j.at("n").get<int>();
  if (n < 3) throw UnsupportedDimension(n);
  std::vector<Rat> a;
  for (const auto& x : j.at("A")) a.push_back(rat_from_json(x));
  std::vector<Rat> b;
  for (const auto& x : j.at("B")) b.push_back(rat_from_json(x));
  if (b.size() != static_cast<std::size_t>(n - 1)) {
    throw std::invalid_argument("B must list B_2..B_n (" + std::to_string(n - 1) + " values)");
  }
  Params p;
  p.n = n;
  p.C = rat_from_json(j.at("C"));
  p.D = rat_from_json(j.at("D"));
  p.B = std::move(b);
  if (a.size() == static_cast<std::size_t>(n + 1)) {
    p.A = std::move(a);
  } else if (a.size() == static_cast<std::size_t>(n - 1)) {
    std::vector<Rat> free = a;
    free.insert(free.end(), p.B.begin(), p.B.end());
    free.push_back(p.C);
    free.push_back(p.D);
    p = from_free(n, free);
  } else {
    throw std::invalid_argument("A must list A_1..A_{n+1} or A_2..A_n");
  }
  return p;
}

json to_json(const ValidationReport& r) { return {{"valid", r.valid()}, {"violations", r.violations}}; }

json to_json(const AxiomReport& r) { return {{"ok", r.ok()}, {"violations", r.violations}}; }

json to_json(const GraphData& g) {
  json segs = json::array();
  for (const auto& s : g.segments) {
    segs.push_back({{"component", s.component},
                    {"q0", to_json(s.q0)},
                    {"q1", to_json(s.q1)},
                    {"v0", to_json(s.v0)},
                    {"v1", to_json(s.v1)},
                    {"slope", to_json(s.slope)}});
  }
  json pts = json::array();
  for (const auto& d : g.division_points) {
    json o = {{"q", to_json(d.q)}, {"kind", d.kind}, {"label", d.label}};
    if (!d.aliases.empty()) o["aliases"] = d.aliases;
    pts.push_back(std::move(o));
  }
  return {{"n", g.n}, {"segments", std::move(segs)}, {"division_points", std::move(pts)}};
}

GraphData graph_from_json(const json& j) {
  GraphData g;
  g.n = j.at("n").get<int>();
  for (const auto& s : j.at("segments")) {
    g.segments.push_back({s.at("component").get<int>(), rat_from_json(s.at("q0")), rat_from_json(s.at("q1")),
                          rat_from_json(s.at("v0")), rat_from_json(s.at("v1")), rat_from_json(s.at("slope"))});
  }
  for (const auto& d : j.at("division_points")) {
    GraphData::DivisionPoint p;
    p.q = rat_from_json(d.at("q"));
    p.kind = d.at("kind").get<std::string>();
    p.label = d.at("label").get<std::string>();
    if (d.contains("aliases")) p.aliases = d.at("aliases").get<std::vector<std::string>>();
    g.division_points.push_back(std::move(p));
  }
  return g;
}

json to_json(const ExponentTuple& t) {
  json o = {{"n", t.n}, {"uniform", rats(t.uniform)}, {"ordinary", rats(t.ordinary)}};
  bool any = false;
  for (const auto& a : t.uniform_at) any = any || a.has_value();
  if (any) {
    json ua = json::array();
    json oa = json::array();
    for (const auto& a : t.uniform_at) ua.push_back(attainment(a));
    for (const auto& a : t.ordinary_at) oa.push_back(attainment(a));
    o["uniform_attainment"] = std::move(ua);
    o["ordinary_attainment"] = std::move(oa);
  }
  return o;
}

json to_json(const DerivedQuantities& q) {
  return {{"M", rats(q.M)}, {"N", rats(q.N)}, {"U", rats(q.U)}, {"V", rats(q.V)},
          {"index_start", {{"M", 2}, {"N", 1}, {"U", 2}, {"V", 1}}}};
}

json to_json(const std::vector<CriterionRow>& rows) {
  json a = json::array();
  for (const auto& r : rows) {
    a.push_back({{"k", r.k},
                 {"lhs", to_json(r.lhs)},
                 {"observed", side(r.observed)},
                 {"claimed", side(r.claimed)},
                 {"matches_claim", r.matches_claim()}});
  }
  return a;
}

json to_json(const DiffReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back(
        {{"name", e.name}, {"trajectory", to_json(e.trajectory)}, {"table", to_json(e.table)}, {"equal", e.equal}});
  }
  return {{"n", r.n},
          {"entries", std::move(entries)},
          {"equal", r.equal_count()},
          {"mismatched", r.mismatches()},
          {"criterion", to_json(r.criteria)}};
}

json to_json(const CheckReport& r) {
  json rows = json::array();
  for (const auto& x : r.rows) rows.push_back({{"name", x.name}, {"lhs", x.lhs}, {"rhs", x.rhs}, {"pass", x.pass}});
  return {{"pass", r.pass()}, {"checks", std::move(rows)}};
}

json to_json(const Certificate& c) {
  json matrix = json::array();
  for (std::size_t r = 0; r < c.matrix.rows(); ++r) matrix.push_back(rats(c.matrix.row(r)));
  json o = {{"kind", c.kind},
            {"n", c.n},
            {"basepoint", to_json(c.basepoint)},
            {"set", c.function_set},
            {"rows", c.row_names},
            {"columns", c.column_names},
            {"matrix", std::move(matrix)},
            {"determinant", c.determinant ? to_json(*c.determinant) : json(nullptr)},
            {"rank", c.rank},
            {"expected_rank", c.expected_rank},
            {"verdict", c.verdict()}};
  if (!c.stability.empty()) o["stability"] = c.stability;
  return o;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace dexp::io
