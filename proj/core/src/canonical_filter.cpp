#include "torus/canonical_filter.hpp"

#include <algorithm>
#include <future>
#include <string>
#include <thread>

namespace torus {

namespace {

void check_range(const MatrixShape& shape, IndexRange range) {
    const IndexRange full = full_range(shape);
    if (range.begin > range.end || range.end > full.end) {
        throw RangeError("index range [" + std::to_string(range.begin) + ", " + std::to_string(range.end) +
                         ") invalid for shape " + shape.to_string());
    }
}

void unpack(std::uint64_t index, std::uint32_t n, std::span<std::uint64_t> rows) noexcept {
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    for (std::size_t k = rows.size(); k-- > 0;) {
        rows[k] = index & mask;
        index >>= n;
    }
}

std::uint64_t count_sequential(const MatrixShape& shape, IndexRange range) {
    std::vector<std::uint64_t> rows(shape.rows());
    std::uint64_t count = 0;
    for (std::uint64_t index = range.begin; index < range.end; ++index) {
        unpack(index, shape.cols(), rows);
        if (is_canonical(rows, shape.cols())) {
            ++count;
        }
    }
    return count;
}

} // namespace

IndexRange full_range(const MatrixShape& shape) {
    shape.require_linearizable();
    return {0, std::uint64_t{1} << shape.cells()};
}

bool is_canonical(std::span<const std::uint64_t> rows, std::uint32_t n) noexcept {
    const std::size_t m = rows.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
            if (i == 0 && j == 0) {
                continue;
            }
            // Compare candidate f_c^j(f_r^i(rows)) against rows, coordinate by
            // coordinate, stopping at the first difference.
            for (std::size_t k = 0; k < m; ++k) {
                const std::uint64_t candidate = rotate_bits_right(rows[(k + m - i) % m], j, n);
                if (candidate < rows[k]) {
                    return false;
                }
                if (candidate > rows[k]) {
                    break;
                }
            }
        }
    }
    return true;
}

bool is_canonical(const TupleCode& code) { return is_canonical(code.rows(), code.shape().cols()); }

std::uint64_t stream_canonical(const MatrixShape& shape, IndexRange range, const CanonicalSink& sink) {
    check_range(shape, range);
    std::vector<std::uint64_t> rows(shape.rows());
    std::uint64_t emitted = 0;
    for (std::uint64_t index = range.begin; index < range.end; ++index) {
        unpack(index, shape.cols(), rows);
        if (is_canonical(rows, shape.cols())) {
            ++emitted;
            if (!sink(TupleCode(shape, rows))) {
                break;
            }
        }
    }
    return emitted;
}

std::vector<TupleCode> collect_canonical(const MatrixShape& shape, std::optional<IndexRange> range) {
    std::vector<TupleCode> out;
    stream_canonical(shape, range.value_or(full_range(shape)), [&](const TupleCode& code) {
        out.push_back(code);
        return true;
    });
    return out;
}

std::uint64_t count_canonical(const MatrixShape& shape, std::optional<IndexRange> range, unsigned threads) {
    const IndexRange r = range.value_or(full_range(shape));
    check_range(shape, r);
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    const std::uint64_t span = r.size();
    if (threads == 1 || span < 4096) {
        return count_sequential(shape, r);
    }
    const std::uint64_t step = (span + threads - 1) / threads;
    std::vector<std::future<std::uint64_t>> parts;
    for (std::uint64_t begin = r.begin; begin < r.end; begin += std::min(step, r.end - begin)) {
        const IndexRange part{begin, begin + std::min(step, r.end - begin)};
        parts.push_back(std::async(std::launch::async, count_sequential, shape, part));
    }
    std::uint64_t total = 0;
    for (auto& part : parts) {
        total += part.get();
    }
    return total;
}

} // namespace torus
