#include "torus/orbit_counter.hpp"

#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace torus {

std::uint64_t translation_cycles(const MatrixShape& shape, std::uint64_t i, std::uint64_t j) {
    const std::uint64_t m = shape.rows();
    const std::uint64_t n = shape.cols();
    // Order of the translation along each axis; gcd(0, m) == m gives order 1.
    const std::uint64_t row_order = m / std::gcd(i % m, m);
    const std::uint64_t col_order = n / std::gcd(j % n, n);
    return shape.cells() / std::lcm(row_order, col_order);
}

BigInt burnside_sum(const MatrixShape& shape) {
    // Few distinct cycle counts occur, so tally them before touching big integers.
    std::map<std::uint64_t, std::uint64_t> multiplicity;
    for (std::uint64_t i = 0; i < shape.rows(); ++i) {
        for (std::uint64_t j = 0; j < shape.cols(); ++j) {
            ++multiplicity[translation_cycles(shape, i, j)];
        }
    }
    BigInt sum = 0;
    for (const auto& [cycles, times] : multiplicity) {
        BigInt term = times;
        term <<= cycles;
        sum += term;
    }
    return sum;
}

OrbitCount count_burnside(const MatrixShape& shape) {
    const BigInt sum = burnside_sum(shape);
    const BigInt group_order = shape.cells();
    BigInt quotient;
    BigInt remainder;
    boost::multiprecision::divide_qr(sum, group_order, quotient, remainder);
    if (remainder != 0) {
        throw InternalError("orbit-counting sum for shape " + shape.to_string() + " is not divisible by " +
                            group_order.str());
    }
    return {quotient, shape};
}

OrbitCount count_bruteforce(const MatrixShape& shape) {
    if (shape.cells() > kBruteforceMaxCells) {
        throw CapacityError("brute-force orbit partition supports m*n <= " + std::to_string(kBruteforceMaxCells) +
                            ", got shape " + shape.to_string());
    }
    const std::uint32_t n = shape.cols();
    const auto rank = [n](const TupleCode& code) {
        std::uint64_t r = 0;
        for (std::uint64_t p : code.rows()) {
            r = r * (std::uint64_t{1} << n) + p;
        }
        return r;
    };
    const auto unrank = [&shape, n](std::uint64_t r) {
        std::vector<std::uint64_t> rows(shape.rows());
        for (std::size_t k = rows.size(); k-- > 0;) {
            rows[k] = r % (std::uint64_t{1} << n);
            r /= std::uint64_t{1} << n;
        }
        return TupleCode(shape, std::move(rows));
    };

    const std::uint64_t total = std::uint64_t{1} << shape.cells();
    std::vector<bool> seen(total, false);
    std::vector<TupleCode> frontier;
    std::uint64_t orbits = 0;
    for (std::uint64_t start = 0; start < total; ++start) {
        if (seen[start]) {
            continue;
        }
        ++orbits;
        seen[start] = true;
        frontier.assign(1, unrank(start));
        while (!frontier.empty()) {
            const TupleCode current = frontier.back();
            frontier.pop_back();
            for (TupleCode next : {rotate_rows(current), rotate_cols(current)}) {
                const std::uint64_t r = rank(next);
                if (!seen[r]) {
                    seen[r] = true;
                    frontier.push_back(std::move(next));
                }
            }
        }
    }
    return {BigInt(orbits), shape};
}

} // namespace torus
