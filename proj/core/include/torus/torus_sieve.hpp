#pragma once

// Sieve enumeration of m x n binary matrices up to cyclic row and column
// rotation.
//
// The visited store is an m-dimensional boolean array indexed by tuple
// codes. Each coordinate is a row code in [0, 2^n), so indices stay small;
// only at the storage boundary is the tuple linearized into a flat bit
// position with p_1 most significant.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "torus/chunked_bitset.hpp"
#include "torus/generic_sieve.hpp"
#include "torus/matrix_codec.hpp"

namespace torus {

/// Mixed-radix position of a tuple: sum of p_i * 2^(n*(m-i)), p_1 most
/// significant. Strictly increasing in lexicographic tuple order.
/// Throws CapacityError when m*n > 63.
std::uint64_t tuple_index(const TupleCode& code);

/// Inverse of tuple_index. Throws RangeError if index >= 2^(m*n).
TupleCode tuple_from_index(const MatrixShape& shape, std::uint64_t index);

/// Visited bits for every tuple of one shape.
class VisitedStore {
public:
    /// Throws CapacityError if the shape is not linearizable.
    explicit VisitedStore(MatrixShape shape, std::uint64_t chunk_bits = kDefaultChunkBits);

    const MatrixShape& shape() const noexcept { return shape_; }
    const ChunkedBitset& bits() const noexcept { return bits_; }

    bool visited(const TupleCode& code) const { return bits_.test(tuple_index(code)); }
    void mark(const TupleCode& code) { bits_.set(tuple_index(code)); }

    /// Marks f_c^j(f_r^i(rows)) for all i < m, j < n. `rows` must hold valid
    /// row codes of this shape.
    void mark_orbit(std::span<const std::uint64_t> rows);

    /// Smallest unvisited tuple index >= from, or 2^(m*n) if none.
    std::uint64_t next_unvisited(std::uint64_t from) const noexcept { return bits_.find_next_zero(from); }

private:
    MatrixShape shape_;
    ChunkedBitset bits_;
};

/// The m*n codes f_c^j(f_r^i(base)), i in [0,m), j in [0,n), in row-major
/// (i, j) order. Duplicates appear when the orbit is smaller than m*n.
struct OrbitVisitPlan {
    TupleCode base;
    std::vector<TupleCode> visits;

    /// Visits with duplicates removed, ascending.
    std::vector<TupleCode> distinct() const;
};

OrbitVisitPlan orbit_visits(const TupleCode& base);

struct TorusSieveOptions {
    std::uint64_t memory_budget_bits = kDefaultMemoryBudgetBits;
    std::uint64_t chunk_bits = kDefaultChunkBits;
    /// Keep a second bitset flagging the representatives themselves.
    bool track_representatives = false;
};

struct TorusSieveReport {
    std::uint64_t class_count = 0;
    /// False when the sink asked to stop early.
    bool completed = false;
    std::uint64_t visited_store_bytes = 0;
    /// Present iff track_representatives was set.
    std::optional<ChunkedBitset> representatives;

    /// Requires track_representatives; throws std::logic_error otherwise.
    bool is_representative(const TupleCode& code) const;
};

/// Called once per representative in ascending order; return false to stop.
using RepresentativeSink = std::function<bool(const TupleCode&)>;

/// Throws CapacityError if 2^(m*n) bits exceed the memory budget or m*n > 63.
void require_sieve_capacity(const MatrixShape& shape, std::uint64_t memory_budget_bits);

/// Streams the lexicographically minimal code of every orbit, ascending.
TorusSieveReport enumerate_torus(const MatrixShape& shape, const RepresentativeSink& sink,
                                 const TorusSieveOptions& options = {});

/// Materializing form of the above.
SieveResult<TupleCode> enumerate_torus(const MatrixShape& shape, const TorusSieveOptions& options = {});

} // namespace torus
