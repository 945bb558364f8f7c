#include "torus/matrix_codec.hpp"

#include <stdexcept>

namespace torus {

namespace {

std::uint64_t row_mask(std::uint32_t n) noexcept {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void require_row_codes(const MatrixShape& shape) {
    if (!shape.row_codes_fit()) {
        throw RangeError("row codes need n <= 64, got shape " + shape.to_string());
    }
}

} // namespace

MatrixShape::MatrixShape(std::uint32_t m, std::uint32_t n) : m_(m), n_(n) {
    if (m == 0 || n == 0) {
        throw std::invalid_argument("matrix shape needs m >= 1 and n >= 1, got " +
                                    std::to_string(m) + "x" + std::to_string(n));
    }
}

std::uint64_t MatrixShape::max_row_code() const noexcept { return row_mask(n_); }

void MatrixShape::require_linearizable() const {
    if (!linearizable()) {
        throw CapacityError("shape " + to_string() + " has " + std::to_string(cells()) +
                            " cells; linear indexing supports at most " +
                            std::to_string(kMaxLinearCells));
    }
}

std::string MatrixShape::to_string() const { return std::to_string(m_) + "x" + std::to_string(n_); }

TupleCode::TupleCode(MatrixShape shape) : shape_(shape), rows_(shape.rows(), 0) {
    require_row_codes(shape_);
}

TupleCode::TupleCode(MatrixShape shape, std::vector<std::uint64_t> rows)
    : shape_(shape), rows_(std::move(rows)) {
    require_row_codes(shape_);
    if (rows_.size() != shape_.rows()) {
        throw RangeError("tuple has " + std::to_string(rows_.size()) + " rows, shape " +
                         shape_.to_string() + " needs " + std::to_string(shape_.rows()));
    }
    const std::uint64_t max = shape_.max_row_code();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] > max) {
            throw RangeError("row code " + std::to_string(rows_[i]) + " at position " +
                             std::to_string(i) + " exceeds " + std::to_string(max));
        }
    }
}

TupleCode::TupleCode(MatrixShape shape, std::initializer_list<std::uint64_t> rows)
    : TupleCode(shape, std::vector<std::uint64_t>(rows)) {}

std::string TupleCode::to_string() const {
    std::string out = "<";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += std::to_string(rows_[i]);
    }
    out += '>';
    return out;
}

BinaryMatrix::BinaryMatrix(MatrixShape shape) : shape_(shape), cells_(shape.cells(), 0) {}

BinaryMatrix BinaryMatrix::from_rows(std::span<const std::string> rows) {
    if (rows.empty() || rows.front().empty()) {
        throw std::invalid_argument("matrix needs at least one row and one column");
    }
    BinaryMatrix out(MatrixShape(static_cast<std::uint32_t>(rows.size()),
                                 static_cast<std::uint32_t>(rows.front().size())));
    for (std::uint32_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != out.shape_.cols()) {
            throw std::invalid_argument("ragged matrix rows");
        }
        for (std::uint32_t c = 0; c < rows[r].size(); ++c) {
            const char ch = rows[r][c];
            if (ch != '0' && ch != '1') {
                throw std::invalid_argument(std::string("matrix cell must be '0' or '1', got '") + ch + "'");
            }
            out.set(r, c, ch == '1');
        }
    }
    return out;
}

BinaryMatrix BinaryMatrix::from_rows(std::initializer_list<std::string> rows) {
    return from_rows(std::span<const std::string>(rows.begin(), rows.size()));
}

std::string BinaryMatrix::row_string(std::uint32_t row) const {
    std::string out(shape_.cols(), '0');
    for (std::uint32_t c = 0; c < shape_.cols(); ++c) {
        if (at(row, c)) {
            out[c] = '1';
        }
    }
    return out;
}

std::size_t BinaryMatrix::index(std::uint32_t row, std::uint32_t col) const {
    if (row >= shape_.rows() || col >= shape_.cols()) {
        throw std::out_of_range("matrix cell (" + std::to_string(row) + "," + std::to_string(col) +
                                ") outside " + shape_.to_string());
    }
    return std::size_t{row} * shape_.cols() + col;
}

TupleCode encode(const BinaryMatrix& matrix) {
    const MatrixShape& shape = matrix.shape();
    require_row_codes(shape);
    std::vector<std::uint64_t> rows(shape.rows(), 0);
    for (std::uint32_t r = 0; r < shape.rows(); ++r) {
        std::uint64_t p = 0;
        for (std::uint32_t c = 0; c < shape.cols(); ++c) {
            p = (p << 1) | (matrix.at(r, c) ? 1u : 0u);
        }
        rows[r] = p;
    }
    return TupleCode(shape, std::move(rows));
}

BinaryMatrix decode(const TupleCode& code) {
    const MatrixShape& shape = code.shape();
    const std::uint64_t max = shape.max_row_code();
    BinaryMatrix out(shape);
    for (std::uint32_t r = 0; r < shape.rows(); ++r) {
        const std::uint64_t p = code[r];
        if (p > max) {
            throw RangeError("corrupted tuple code: row " + std::to_string(r) + " holds " + std::to_string(p));
        }
        // Leftmost column carries the most significant bit.
        for (std::uint32_t c = 0; c < shape.cols(); ++c) {
            out.set(r, c, ((p >> (shape.cols() - 1 - c)) & 1u) != 0);
        }
    }
    return out;
}

std::uint64_t xi(std::uint64_t a, std::uint32_t n) {
    if (n == 0 || n > kMaxRowBits) {
        throw RangeError("xi needs 1 <= n <= 64, got n = " + std::to_string(n));
    }
    if (a > row_mask(n)) {
        throw RangeError("xi argument " + std::to_string(a) + " outside [0, 2^" + std::to_string(n) + ")");
    }
    return ((a % 2) << (n - 1)) + a / 2;
}

TupleCode rotate_rows(const TupleCode& code) { return rotate_rows_pow(code, 1); }

TupleCode rotate_cols(const TupleCode& code) { return rotate_cols_pow(code, 1); }

TupleCode rotate_rows_pow(const TupleCode& code, std::uint64_t k) {
    const std::size_t m = code.size();
    const std::size_t shift = static_cast<std::size_t>(k % m);
    std::vector<std::uint64_t> rows(m);
    for (std::size_t i = 0; i < m; ++i) {
        rows[(i + shift) % m] = code[i];
    }
    return TupleCode(TupleCode::Unchecked{}, code.shape(), std::move(rows));
}

TupleCode rotate_cols_pow(const TupleCode& code, std::uint64_t k) {
    const std::uint32_t n = code.shape().cols();
    std::vector<std::uint64_t> rows(code.rows().begin(), code.rows().end());
    for (auto& p : rows) {
        p = rotate_bits_right(p, k, n);
    }
    return TupleCode(TupleCode::Unchecked{}, code.shape(), std::move(rows));
}

} // namespace torus
