#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "torus/canonical_filter.hpp"
#include "torus/matrix_codec.hpp"

namespace torus::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitMismatch = 1,  // verification mismatch or I/O failure
    kExitUsage = 2,
    kExitCapacity = 3,
};

/// Diagonal class counts n = 1..12 for n x n matrices (OEIS A179043).
const std::vector<std::string>& a179043_terms();

/// Describes the first difference between two representative sequences,
/// or nullopt when they are identical.
std::optional<std::string> diff_representatives(std::span<const TupleCode> sieve,
                                                std::span<const TupleCode> filter);

/// Runs the command line `args` (without the program name). Normal output
/// goes to `out`, summaries and diagnostics to `err`. Returns the exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace torus::cli
