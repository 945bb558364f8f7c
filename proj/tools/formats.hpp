#pragma once

// Record encodings for emitted representatives.
//
//   lines  m lines of n '0'/'1' characters; records separated by a blank line
//   pbm    plain PBM per record: "P1\n<n> <m>\n" then rows of space-separated bits
//   jsonl  {"m":..,"n":..,"tuple":[p_1,..,p_m],"rows":["..",..]} per line

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "torus/matrix_codec.hpp"

namespace torus::cli {

enum class OutputFormat { Lines, Pbm, Jsonl };

std::optional<OutputFormat> parse_format(std::string_view name);

class RecordWriter {
public:
    RecordWriter(std::ostream& out, OutputFormat format) : out_(out), format_(format) {}

    /// Returns false once the underlying stream has failed.
    bool write(const TupleCode& code);

    std::uint64_t written() const noexcept { return written_; }

private:
    std::ostream& out_;
    OutputFormat format_;
    std::uint64_t written_ = 0;
};

std::string to_lines(const TupleCode& code);
std::string to_pbm(const TupleCode& code);
std::string to_jsonl(const TupleCode& code);

/// Parses one jsonl record, checking that "rows" and "tuple" agree.
/// Throws std::invalid_argument on malformed or inconsistent records.
TupleCode parse_jsonl(std::string_view record);

} // namespace torus::cli
