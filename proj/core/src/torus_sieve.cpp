#include "torus/torus_sieve.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace torus {

namespace {

std::uint64_t linearize(std::span<const std::uint64_t> rows, std::uint32_t n) noexcept {
    std::uint64_t index = 0;
    for (std::uint64_t p : rows) {
        index = (index << n) | p;
    }
    return index;
}

void delinearize(std::uint64_t index, std::uint32_t n, std::span<std::uint64_t> rows) noexcept {
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;  // n < 64 on this path
    for (std::size_t k = rows.size(); k-- > 0;) {
        rows[k] = index & mask;
        index >>= n;
    }
}

} // namespace

std::uint64_t tuple_index(const TupleCode& code) {
    code.shape().require_linearizable();
    return linearize(code.rows(), code.shape().cols());
}

TupleCode tuple_from_index(const MatrixShape& shape, std::uint64_t index) {
    shape.require_linearizable();
    if (index >> shape.cells() != 0) {
        throw RangeError("index " + std::to_string(index) + " outside [0, 2^" + std::to_string(shape.cells()) +
                         ") for shape " + shape.to_string());
    }
    std::vector<std::uint64_t> rows(shape.rows());
    delinearize(index, shape.cols(), rows);
    return TupleCode(shape, std::move(rows));
}

VisitedStore::VisitedStore(MatrixShape shape, std::uint64_t chunk_bits)
    : shape_(shape),
      bits_((shape.require_linearizable(), std::uint64_t{1} << shape.cells()), chunk_bits) {}

void VisitedStore::mark_orbit(std::span<const std::uint64_t> rows) {
    const std::uint32_t m = shape_.rows();
    const std::uint32_t n = shape_.cols();
    for (std::uint32_t i = 0; i < m; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
            // Row k of f_c^j(f_r^i(rows)) is row (k - i) mod m rotated right j bits.
            std::uint64_t index = 0;
            for (std::uint32_t k = 0; k < m; ++k) {
                const std::uint64_t p = rows[(k + m - i) % m];
                index = (index << n) | rotate_bits_right(p, j, n);
            }
            bits_.set(index);
        }
    }
}

std::vector<TupleCode> OrbitVisitPlan::distinct() const {
    std::vector<TupleCode> out = visits;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

OrbitVisitPlan orbit_visits(const TupleCode& base) {
    const MatrixShape& shape = base.shape();
    OrbitVisitPlan plan{base, {}};
    plan.visits.reserve(shape.rows() * std::size_t{shape.cols()});
    for (std::uint32_t i = 0; i < shape.rows(); ++i) {
        const TupleCode shifted = rotate_rows_pow(base, i);
        for (std::uint32_t j = 0; j < shape.cols(); ++j) {
            plan.visits.push_back(rotate_cols_pow(shifted, j));
        }
    }
    return plan;
}

bool TorusSieveReport::is_representative(const TupleCode& code) const {
    if (!representatives) {
        throw std::logic_error("representative membership was not tracked for this run");
    }
    return representatives->test(tuple_index(code));
}

void require_sieve_capacity(const MatrixShape& shape, std::uint64_t memory_budget_bits) {
    shape.require_linearizable();
    const std::uint64_t needed = std::uint64_t{1} << shape.cells();
    if (needed > memory_budget_bits) {
        throw CapacityError("sieving shape " + shape.to_string() + " needs 2^" + std::to_string(shape.cells()) +
                            " visited bits, over the budget of " + std::to_string(memory_budget_bits) +
                            " bits; use the canonical filter or the orbit counter instead");
    }
}

TorusSieveReport enumerate_torus(const MatrixShape& shape, const RepresentativeSink& sink,
                                 const TorusSieveOptions& options) {
    require_sieve_capacity(shape, options.memory_budget_bits);
    if (options.track_representatives) {
        // The membership bitset doubles the footprint.
        require_sieve_capacity(shape, options.memory_budget_bits / 2);
    }

    VisitedStore visited(shape, options.chunk_bits);
    TorusSieveReport report;
    report.visited_store_bytes = visited.bits().allocated_bytes();
    if (options.track_representatives) {
        report.representatives.emplace(visited.bits().size(), options.chunk_bits);
    }

    const std::uint64_t total = visited.bits().size();
    std::vector<std::uint64_t> rows(shape.rows());
    // Selected minima never decrease, so the scan cursor only moves forward.
    for (std::uint64_t cursor = visited.next_unvisited(0); cursor < total;
         cursor = visited.next_unvisited(cursor + 1)) {
        delinearize(cursor, shape.cols(), rows);
        visited.mark_orbit(rows);
        if (report.representatives) {
            report.representatives->set(cursor);
        }
        ++report.class_count;
        if (!sink(tuple_from_index(shape, cursor))) {
            return report;
        }
    }
    report.completed = true;
    return report;
}

SieveResult<TupleCode> enumerate_torus(const MatrixShape& shape, const TorusSieveOptions& options) {
    SieveResult<TupleCode> result;
    const TorusSieveReport report = enumerate_torus(
        shape,
        [&](const TupleCode& code) {
            result.representatives.push_back(code);
            return true;
        },
        options);
    result.class_count = report.class_count;
    return result;
}

} // namespace torus
