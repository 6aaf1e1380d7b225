#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "dexp/certify/certify.hpp"
#include "dexp/cfrac/cfrac.hpp"
#include "dexp/exponents/exponents.hpp"
#include "dexp/nsystem/graph.hpp"

namespace dexp::io {

using nlohmann::json;

/// Rationals travel as "p/q" (or "p"). Parsing also accepts JSON integers.
json to_json(const Rat& r);
Rat rat_from_json(const json& j);

/// {"n", "C", "A": [A_1..A_{n+1}], "B": [B_2..B_n], "D"}.
json to_json(const Params& p);
/// Accepts A with n+1 entries, or n-1 entries (A_2..A_n) in which case
/// A_1 = A_2 and A_{n+1} = 1 - (A_1 + ... + A_n) are reconstructed.
Params params_from_json(const json& j);

json to_json(const ValidationReport& r);
json to_json(const AxiomReport& r);
json to_json(const GraphData& g);
GraphData graph_from_json(const json& j);
json to_json(const ExponentTuple& t);
json to_json(const DerivedQuantities& q);
json to_json(const std::vector<CriterionRow>& rows);
json to_json(const DiffReport& r);
json to_json(const CheckReport& r);
json to_json(const Certificate& c);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);

}  // namespace dexp::io
