#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dexp/exactnum/matrix.hpp"
#include "dexp/exponents/exponents.hpp"

namespace dexp {

/// Which exponent functions the Jacobian is taken of: the ones read off the
/// combined graph (locally a single rational branch) or the closed-form table.
enum class FunctionSet { trajectory, paper_table };

std::string to_string(FunctionSet s);
/// Accepts "trajectory" and "paper" / "paper_table".
FunctionSet parse_function_set(const std::string& text);

class BranchNotStable : public std::runtime_error {
 public:
  explicit BranchNotStable(const std::string& detail) : std::runtime_error("branch not stable: " + detail) {}
};

/// Row labels of the full Jacobian: What_0..What_{n-1}, W_0..W_{n-1}.
std::vector<std::string> exponent_names(int n);

/// Exact 2n x 2n Jacobian of the exponent functions with respect to the free
/// parameters (A_2..A_n, B_2..B_n, C, D). For the trajectory set every
/// extremum must be strictly attained at `p`, otherwise BranchNotStable.
RatMat jacobian(FunctionSet set, const Params& p);

struct Certificate {
  std::string kind;  // "independence" | "uniform_block" | "specialization"
  int n = 0;
  Params basepoint;
  std::string function_set;
  std::vector<std::string> row_names;
  std::vector<std::string> column_names;
  RatMat matrix;
  std::optional<Rat> determinant;  // square matrices only
  std::size_t rank = 0;
  std::size_t expected_rank = 0;
  std::vector<bool> stability;  // per row; trajectory set only

  bool full_rank() const { return rank == expected_rank; }
  std::string verdict() const { return full_rank() ? "independent" : "dependent"; }
};

/// Rank and determinant of an arbitrary function matrix, with the verdict
/// "independent" iff the rank reaches `expected_rank`.
Certificate certificate_from_matrix(std::string kind, const Params& p, std::string set_name,
                                    std::vector<std::string> rows, RatMat m, std::size_t expected_rank);

/// All 2n exponents; independent iff det J != 0.
Certificate independence_certificate(int n, const Params& p, FunctionSet set);

/// The n x 2n block of the uniform exponents What_0..What_{n-1}; independent iff rank n.
Certificate uniform_block_certificate(int n, const Params& p, FunctionSet set = FunctionSet::trajectory);

/// With C = 1 and A_2 held fixed: the 2n-3 functions V_k + 1 - U_k/V_{k-1}
/// (2 <= k <= n-1) and U_2..U_n of A_3..A_n, B_2..B_n. Full rank 2n-3 means
/// they are algebraically independent over Q(A_2).
Certificate specialization_rank_check(int n, const Params& p);

}  // namespace dexp
