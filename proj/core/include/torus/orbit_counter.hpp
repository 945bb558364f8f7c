#pragma once

// Exact number of m x n binary matrices up to cyclic row/column rotation.
//
// By the orbit-counting lemma the count is the average, over the m*n
// translations (i, j) of the m x n torus, of 2^c(i,j), where c(i,j) is the
// number of cell cycles of the translation:
//
//   c(i,j) = m*n / lcm(m / gcd(i,m), n / gcd(j,n)).

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "torus/matrix_codec.hpp"

namespace torus {

using BigInt = boost::multiprecision::cpp_int;

struct OrbitCount {
    BigInt value;
    MatrixShape shape;
};

/// Number of cycles translation (i, j) induces on the cells of the torus.
std::uint64_t translation_cycles(const MatrixShape& shape, std::uint64_t i, std::uint64_t j);

/// Sum over all translations of 2^cycles; divisible by m*n.
BigInt burnside_sum(const MatrixShape& shape);

/// Throws InternalError if burnside_sum is not divisible by m*n.
OrbitCount count_burnside(const MatrixShape& shape);

/// Largest m*n accepted by count_bruteforce.
inline constexpr std::uint64_t kBruteforceMaxCells = 20;

/// Partitions all 2^(m*n) tuples into orbits by closure under rotate_rows
/// and rotate_cols. Throws CapacityError when m*n > 20.
OrbitCount count_bruteforce(const MatrixShape& shape);

} // namespace torus
