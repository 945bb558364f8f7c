#pragma once

// Binary matrices, their row-code tuples, and the rotation operators acting
// on those tuples.
//
// Row i of an m x n matrix is read left to right as an n-digit base-2
// numeral, most significant bit first, giving the row code p_i in
// [0, 2^n). The tuple <p_1, ..., p_m> identifies the matrix uniquely.
// Row rotation moves the last row to the top; column rotation moves the
// last column to the left, which on a row code is a right rotation of its
// n-bit string.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "torus/errors.hpp"

namespace torus {

/// Largest m*n for which a full ground set can be linearized into a uint64.
inline constexpr std::uint64_t kMaxLinearCells = 63;

/// Widest row a row code can hold.
inline constexpr std::uint32_t kMaxRowBits = 64;

class MatrixShape {
public:
    /// Throws std::invalid_argument unless m >= 1 and n >= 1.
    MatrixShape(std::uint32_t m, std::uint32_t n);

    std::uint32_t rows() const noexcept { return m_; }
    std::uint32_t cols() const noexcept { return n_; }
    std::uint64_t cells() const noexcept { return std::uint64_t{m_} * n_; }

    /// True when every tuple of this shape has a 63-bit linear index, i.e.
    /// the shape can be sieved or streamed. Counting has no such limit.
    bool linearizable() const noexcept { return cells() <= kMaxLinearCells; }

    /// True when row codes fit a machine word (n <= 64).
    bool row_codes_fit() const noexcept { return n_ <= kMaxRowBits; }

    /// 2^n - 1, the largest row code. Requires row_codes_fit().
    std::uint64_t max_row_code() const noexcept;

    /// Throws CapacityError unless linearizable().
    void require_linearizable() const;

    std::string to_string() const;

    friend bool operator==(const MatrixShape&, const MatrixShape&) = default;

private:
    std::uint32_t m_;
    std::uint32_t n_;
};

/// The tuple <p_1, ..., p_m>; ordered lexicographically with p_1 most
/// significant.
class TupleCode {
public:
    /// All-zero code.
    explicit TupleCode(MatrixShape shape);

    /// Throws RangeError if rows.size() != m or some p_i > 2^n - 1, or if n > 64.
    TupleCode(MatrixShape shape, std::vector<std::uint64_t> rows);
    TupleCode(MatrixShape shape, std::initializer_list<std::uint64_t> rows);

    const MatrixShape& shape() const noexcept { return shape_; }
    std::span<const std::uint64_t> rows() const noexcept { return rows_; }
    std::uint64_t operator[](std::size_t i) const { return rows_[i]; }
    std::size_t size() const noexcept { return rows_.size(); }

    std::string to_string() const;

    friend bool operator==(const TupleCode& a, const TupleCode& b) {
        return a.shape_ == b.shape_ && a.rows_ == b.rows_;
    }
    /// Lexicographic; only meaningful between codes of the same shape.
    friend std::strong_ordering operator<=>(const TupleCode& a, const TupleCode& b) {
        return a.rows_ <=> b.rows_;
    }

private:
    struct Unchecked {};
    TupleCode(Unchecked, MatrixShape shape, std::vector<std::uint64_t> rows)
        : shape_(shape), rows_(std::move(rows)) {}

    MatrixShape shape_;
    std::vector<std::uint64_t> rows_;

    friend TupleCode rotate_rows_pow(const TupleCode&, std::uint64_t);
    friend TupleCode rotate_cols_pow(const TupleCode&, std::uint64_t);
};

class BinaryMatrix {
public:
    /// All-zero matrix.
    explicit BinaryMatrix(MatrixShape shape);

    /// Builds from row strings of '0'/'1'. Throws std::invalid_argument on
    /// ragged input or other characters.
    static BinaryMatrix from_rows(std::span<const std::string> rows);
    static BinaryMatrix from_rows(std::initializer_list<std::string> rows);

    const MatrixShape& shape() const noexcept { return shape_; }
    bool at(std::uint32_t row, std::uint32_t col) const { return cells_[index(row, col)] != 0; }
    void set(std::uint32_t row, std::uint32_t col, bool value) { cells_[index(row, col)] = value ? 1 : 0; }

    /// Row `row` as n characters '0'/'1'.
    std::string row_string(std::uint32_t row) const;

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

private:
    std::size_t index(std::uint32_t row, std::uint32_t col) const;

    MatrixShape shape_;
    std::vector<std::uint8_t> cells_;
};

/// Matrix -> tuple. Requires n <= 64.
TupleCode encode(const BinaryMatrix& matrix);

/// Tuple -> matrix; inverse of encode.
BinaryMatrix decode(const TupleCode& code);

/// One-step right rotation of the n-bit string of `a`:
/// (a mod 2) * 2^(n-1) + floor(a / 2). Throws RangeError unless
/// 1 <= n <= 64 and a <= 2^n - 1.
std::uint64_t xi(std::uint64_t a, std::uint32_t n);

/// k-step right rotation of an n-bit value; k is reduced mod n. No range
/// checks, for inner loops that already hold valid codes.
constexpr std::uint64_t rotate_bits_right(std::uint64_t a, std::uint64_t k, std::uint32_t n) noexcept {
    k %= n;
    if (k == 0) {
        return a;
    }
    const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return ((a >> k) | (a << (n - k))) & mask;
}

/// <p_m, p_1, ..., p_{m-1}>: last row moves to the top.
TupleCode rotate_rows(const TupleCode& code);

/// <xi(p_1), ..., xi(p_m)>: last column moves to the left.
TupleCode rotate_cols(const TupleCode& code);

/// k-fold rotate_rows; k is reduced mod m.
TupleCode rotate_rows_pow(const TupleCode& code, std::uint64_t k);

/// k-fold rotate_cols; k is reduced mod n.
TupleCode rotate_cols_pow(const TupleCode& code, std::uint64_t k);

} // namespace torus
