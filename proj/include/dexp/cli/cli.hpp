#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dexp/exponents/exponents.hpp"

namespace dexp::cli {

/// Process exit codes.
enum Exit : int { ok = 0, failure = 1, usage = 2 };

/// Runs one command line (args excludes the program name). Reports go to
/// `out` unless -o names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// CSV rows for sampled points: n, seed, index, C, A_2..A_n, D, B_2..B_n,
/// What_0..What_{n-1}, W_0..W_{n-1}. Header only when `samples` is empty.
std::string samples_csv(int n, std::uint64_t seed, const std::vector<Sample>& samples);

}  // namespace dexp::cli
