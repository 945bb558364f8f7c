#pragma once

// Memory-free enumeration: a tuple is emitted iff it is the lexicographic
// minimum of its m*n rotations f_c^j(f_r^i(code)).

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "torus/matrix_codec.hpp"

namespace torus {

/// Half-open interval of tuple indices [begin, end).
struct IndexRange {
    std::uint64_t begin = 0;
    std::uint64_t end = 0;

    std::uint64_t size() const noexcept { return end > begin ? end - begin : 0; }
};

/// [0, 2^(m*n)); throws CapacityError if the shape is not linearizable.
IndexRange full_range(const MatrixShape& shape);

bool is_canonical(const TupleCode& code);

/// Raw form for inner loops: `rows` are the m row codes of an n-column matrix.
bool is_canonical(std::span<const std::uint64_t> rows, std::uint32_t n) noexcept;

/// Return false to stop the stream.
using CanonicalSink = std::function<bool(const TupleCode&)>;

/// Visits tuple indices in `range` ascending and passes canonical codes to
/// `sink`. Throws RangeError if the range is inverted or exceeds 2^(m*n).
/// Returns the number of codes passed to the sink.
std::uint64_t stream_canonical(const MatrixShape& shape, IndexRange range, const CanonicalSink& sink);

/// Full range when `range` is empty-optional.
std::vector<TupleCode> collect_canonical(const MatrixShape& shape, std::optional<IndexRange> range = std::nullopt);

/// Counts canonical codes in `range`, splitting it across `threads` workers.
/// threads == 0 picks the hardware concurrency.
std::uint64_t count_canonical(const MatrixShape& shape, std::optional<IndexRange> range = std::nullopt,
                              unsigned threads = 1);

} // namespace torus
