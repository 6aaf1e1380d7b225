#pragma once

#include <string>
#include <vector>

#include "dexp/nsystem/params.hpp"

namespace dexp {

struct ValidationReport {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
};

/// Checks every defining inequality of the parameter family. All inequalities
/// are strict. Violations are named after the inequality that fails, e.g.
/// "B_2 < C·A_2". Throws UnsupportedDimension for n < 3.
ValidationReport validate_params(const Params& p);

/// Raised by constructors that require a valid parameter set.
class InvalidParams : public std::invalid_argument {
 public:
  explicit InvalidParams(const ValidationReport& report);
  ValidationReport report;
};

}  // namespace dexp
