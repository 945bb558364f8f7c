#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace torus {

/// Default allocation granule: 2^26 bits (8 MiB) per chunk.
inline constexpr std::uint64_t kDefaultChunkBits = std::uint64_t{1} << 26;

/// Default ceiling on visited-store size: 2^33 bits (1 GiB).
inline constexpr std::uint64_t kDefaultMemoryBudgetBits = std::uint64_t{1} << 33;

/// Fixed-size bitset split into power-of-two chunks so that no single
/// allocation exceeds chunk_bits / 8 bytes. All bits start cleared.
class ChunkedBitset {
public:
    /// chunk_bits must be a power of two >= 64; throws std::invalid_argument otherwise.
    explicit ChunkedBitset(std::uint64_t size_bits, std::uint64_t chunk_bits = kDefaultChunkBits);

    std::uint64_t size() const noexcept { return size_; }
    std::uint64_t chunk_bits() const noexcept { return std::uint64_t{1} << chunk_shift_; }
    std::size_t chunk_count() const noexcept { return chunks_.size(); }

    /// Bytes actually held by the chunks.
    std::uint64_t allocated_bytes() const noexcept;

    bool test(std::uint64_t i) const noexcept {
        return (word(i) >> (i & 63)) & 1u;
    }
    void set(std::uint64_t i) noexcept { word(i) |= std::uint64_t{1} << (i & 63); }

    /// First cleared bit at index >= from, or size() if none.
    std::uint64_t find_next_zero(std::uint64_t from) const noexcept;

    /// Number of set bits.
    std::uint64_t count() const noexcept;

private:
    std::uint64_t& word(std::uint64_t i) noexcept {
        return chunks_[i >> chunk_shift_][(i & chunk_mask_) >> 6];
    }
    const std::uint64_t& word(std::uint64_t i) const noexcept {
        return chunks_[i >> chunk_shift_][(i & chunk_mask_) >> 6];
    }

    std::uint64_t size_;
    unsigned chunk_shift_;
    std::uint64_t chunk_mask_;
    std::vector<std::uint64_t> chunk_words_;  // words per chunk, last may be short
    std::vector<std::unique_ptr<std::uint64_t[]>> chunks_;
};

} // namespace torus
