#include "formats.hpp"

#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace torus::cli {

std::optional<OutputFormat> parse_format(std::string_view name) {
    if (name == "lines") {
        return OutputFormat::Lines;
    }
    if (name == "pbm") {
        return OutputFormat::Pbm;
    }
    if (name == "jsonl") {
        return OutputFormat::Jsonl;
    }
    return std::nullopt;
}

std::string to_lines(const TupleCode& code) {
    const BinaryMatrix matrix = decode(code);
    std::string out;
    for (std::uint32_t r = 0; r < matrix.shape().rows(); ++r) {
        out += matrix.row_string(r);
        out += '\n';
    }
    return out;
}

std::string to_pbm(const TupleCode& code) {
    const BinaryMatrix matrix = decode(code);
    const MatrixShape& shape = matrix.shape();
    std::string out = "P1\n" + std::to_string(shape.cols()) + " " + std::to_string(shape.rows()) + "\n";
    for (std::uint32_t r = 0; r < shape.rows(); ++r) {
        for (std::uint32_t c = 0; c < shape.cols(); ++c) {
            if (c != 0) {
                out += ' ';
            }
            out += matrix.at(r, c) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

std::string to_jsonl(const TupleCode& code) {
    const BinaryMatrix matrix = decode(code);
    nlohmann::ordered_json record;
    record["m"] = code.shape().rows();
    record["n"] = code.shape().cols();
    record["tuple"] = std::vector<std::uint64_t>(code.rows().begin(), code.rows().end());
    auto rows = nlohmann::ordered_json::array();
    for (std::uint32_t r = 0; r < code.shape().rows(); ++r) {
        rows.push_back(matrix.row_string(r));
    }
    record["rows"] = std::move(rows);
    return record.dump() + "\n";
}

TupleCode parse_jsonl(std::string_view record) {
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(record);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed jsonl record: ") + e.what());
    }
    try {
        const MatrixShape shape(parsed.at("m").get<std::uint32_t>(), parsed.at("n").get<std::uint32_t>());
        const TupleCode tuple(shape, parsed.at("tuple").get<std::vector<std::uint64_t>>());
        const auto rows = parsed.at("rows").get<std::vector<std::string>>();
        const TupleCode from_rows = encode(BinaryMatrix::from_rows(rows));
        if (!(from_rows == tuple)) {
            throw std::invalid_argument("jsonl rows " + from_rows.to_string() + " disagree with tuple " +
                                        tuple.to_string());
        }
        return tuple;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("jsonl record missing fields: ") + e.what());
    }
}

bool RecordWriter::write(const TupleCode& code) {
    switch (format_) {
    case OutputFormat::Lines:
        if (written_ != 0) {
            out_ << '\n';
        }
        out_ << to_lines(code);
        break;
    case OutputFormat::Pbm:
        out_ << to_pbm(code);
        break;
    case OutputFormat::Jsonl:
        out_ << to_jsonl(code);
        break;
    }
    ++written_;
    return static_cast<bool>(out_);
}

} // namespace torus::cli
