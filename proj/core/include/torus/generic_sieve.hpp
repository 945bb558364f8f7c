#pragma once

// One-representative-per-class sieve over an arbitrary finite set.
//
// Elements are scanned in ascending rank. An element whose bit is still
// clear is emitted as the representative of its class, and its bit plus the
// bits of everything the class generator returns for it are set. The
// generator must return the whole class (closure is not computed here).

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "torus/chunked_bitset.hpp"
#include "torus/errors.hpp"

namespace torus {

template <typename T>
struct NumberedSet {
    std::uint64_t size = 0;
    std::function<std::uint64_t(const T&)> rank;
    std::function<T(std::uint64_t)> unrank;
};

/// Returns elements equivalent to its argument; must cover the whole class
/// (the argument itself may be omitted).
template <typename T>
using ClassGenerator = std::function<std::vector<T>(const T&)>;

template <typename T>
struct SieveResult {
    std::vector<T> representatives;
    std::uint64_t class_count = 0;
};

struct GenericSieveOptions {
    std::uint64_t memory_budget_bits = kDefaultMemoryBudgetBits;
    std::uint64_t chunk_bits = kDefaultChunkBits;
};

template <typename T>
SieveResult<T> sieve(const NumberedSet<T>& set, const ClassGenerator<T>& generate,
                     const GenericSieveOptions& options = {}) {
    if (set.size > options.memory_budget_bits) {
        throw CapacityError("set of " + std::to_string(set.size) + " elements exceeds the sieve budget of " +
                            std::to_string(options.memory_budget_bits) +
                            " bits; use a specialized or streaming method");
    }
    ChunkedBitset marked(set.size, options.chunk_bits);
    SieveResult<T> result;
    for (std::uint64_t i = marked.find_next_zero(0); i < set.size; i = marked.find_next_zero(i + 1)) {
        T x = set.unrank(i);
        marked.set(i);
        for (const T& y : generate(x)) {
            const std::uint64_t r = set.rank(y);
            if (r >= set.size) {
                throw RangeError("class generator produced an element of rank " + std::to_string(r) +
                                 " outside a set of size " + std::to_string(set.size));
            }
            marked.set(r);
        }
        result.representatives.push_back(std::move(x));
    }
    result.class_count = result.representatives.size();
    return result;
}

} // namespace torus
