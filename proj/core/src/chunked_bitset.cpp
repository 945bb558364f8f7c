#include "torus/chunked_bitset.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace torus {

ChunkedBitset::ChunkedBitset(std::uint64_t size_bits, std::uint64_t chunk_bits) : size_(size_bits) {
    if (chunk_bits < 64 || !std::has_single_bit(chunk_bits)) {
        throw std::invalid_argument("chunk size must be a power of two >= 64 bits, got " +
                                    std::to_string(chunk_bits));
    }
    chunk_shift_ = static_cast<unsigned>(std::countr_zero(chunk_bits));
    chunk_mask_ = chunk_bits - 1;

    std::uint64_t remaining = size_bits;
    while (remaining > 0) {
        const std::uint64_t bits = remaining < chunk_bits ? remaining : chunk_bits;
        const std::uint64_t words = (bits + 63) / 64;
        chunks_.push_back(std::make_unique<std::uint64_t[]>(words));  // value-initialized
        chunk_words_.push_back(words);
        remaining -= bits;
    }
}

std::uint64_t ChunkedBitset::allocated_bytes() const noexcept {
    std::uint64_t words = 0;
    for (auto w : chunk_words_) {
        words += w;
    }
    return words * sizeof(std::uint64_t);
}

std::uint64_t ChunkedBitset::find_next_zero(std::uint64_t from) const noexcept {
    while (from < size_) {
        const std::uint64_t inverted = ~word(from) >> (from & 63);
        if (inverted != 0) {
            const std::uint64_t hit = from + static_cast<std::uint64_t>(std::countr_zero(inverted));
            return hit < size_ ? hit : size_;
        }
        from = (from | 63) + 1;
    }
    return size_;
}

std::uint64_t ChunkedBitset::count() const noexcept {
    std::uint64_t total = 0;
    for (std::size_t c = 0; c < chunks_.size(); ++c) {
        for (std::uint64_t w = 0; w < chunk_words_[c]; ++w) {
            total += static_cast<std::uint64_t>(std::popcount(chunks_[c][w]));
        }
    }
    return total;
}

} // namespace torus
