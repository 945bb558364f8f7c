#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "formats.hpp"

using namespace torus::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s) {
        n += c == '\n' ? 1 : 0;
    }
    return n;
}

} // namespace

TEST_CASE("count") {
    CHECK(invoke({"count", "4", "4"}).out == "4156\n");
    CHECK(invoke({"count", "1", "1"}).out == "2\n");
    CHECK(invoke({"count", "2", "3", "--method", "sieve"}).out == "14\n");
    CHECK(invoke({"count", "2", "3", "--method", "filter"}).out == "14\n");
    CHECK(invoke({"count", "12", "12"}).out == "154866286100907105149651981766316633972736\n");
}

TEST_CASE("enumerate") {
    auto r = invoke({"enumerate", "1", "1", "--format", "lines"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "0\n\n1\n");
    CHECK(r.err == "classes=2\n");

    r = invoke({"enumerate", "2", "2", "--format", "jsonl"});
    CHECK(count_lines(r.out) == 7);
    CHECK(r.err == "classes=7\n");

    r = invoke({"enumerate", "2", "2", "--format", "jsonl", "--limit", "3"});
    CHECK(count_lines(r.out) == 3);
    CHECK(r.err == "emitted=3\n");

    r = invoke({"enumerate", "2", "2", "--format", "jsonl", "--limit", "100", "--method", "filter"});
    CHECK(count_lines(r.out) == 7);
    CHECK(r.err == "classes=7\n");

    r = invoke({"enumerate", "2", "2", "--format", "jsonl", "--limit", "2", "--method", "filter"});
    CHECK(count_lines(r.out) == 2);
    CHECK(r.err == "emitted=2\n");
}

TEST_CASE("enumerate record count equals count for every method pairing") {
    for (std::uint32_t m = 1; m <= 4; ++m) {
        for (std::uint32_t n = 1; m * n <= 16; ++n) {
            const std::string ms = std::to_string(m);
            const std::string ns = std::to_string(n);
            for (const char* counter : {"burnside", "sieve", "filter"}) {
                const std::string expected = invoke({"count", ms, ns, "--method", counter}).out;
                for (const char* lister : {"sieve", "filter"}) {
                    const auto r = invoke({"enumerate", ms, ns, "--method", lister, "--format", "jsonl"});
                    REQUIRE(std::to_string(count_lines(r.out)) + "\n" == expected);
                }
            }
        }
    }
}

TEST_CASE("enumerate to a file") {
    const auto path = std::filesystem::temp_directory_path() / "torus_cli_test.pbm";
    const auto r = invoke({"enumerate", "2", "2", "--format", "pbm", "--out", path.string()});
    CHECK(r.code == kExitOk);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str().rfind("P1\n2 2\n0 0\n0 0\nP1\n", 0) == 0);
    std::filesystem::remove(path);

    CHECK(invoke({"enumerate", "2", "2", "--out", "/nonexistent-dir/x.txt"}).code == kExitMismatch);
}

TEST_CASE("check") {
    auto r = invoke({"check", "2", "2"});
    CHECK(r.code == kExitOk);
    r = invoke({"check", "3", "3"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "burnside=64\nsieve=64\nfilter=64\nrepresentatives: identical (64)\nOK\n");
    r = invoke({"check", "1", "4"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("burnside=6\nsieve=6\nfilter=6\n") == 0);
    r = invoke({"check", "4", "5"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("representatives") == std::string::npos);
    CHECK(invoke({"check", "3", "7"}).code == kExitCapacity);
}

TEST_CASE("diff report") {
    const torus::MatrixShape s(1, 2);
    const std::vector<torus::TupleCode> a{torus::TupleCode(s, {0}), torus::TupleCode(s, {1})};
    const std::vector<torus::TupleCode> b{torus::TupleCode(s, {0}), torus::TupleCode(s, {3})};
    CHECK_FALSE(diff_representatives(a, a).has_value());
    CHECK(diff_representatives(a, b) == "representative 1: sieve <1> vs filter <3>");
    CHECK(diff_representatives(a, std::span(a).first(1)) == "sieve emitted 2 representatives, filter 1");
}

TEST_CASE("oeis") {
    auto r = invoke({"oeis", "--max-n", "4"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "n=1 expected=2 computed=2 PASS\nn=2 expected=7 computed=7 PASS\n"
                   "n=3 expected=64 computed=64 PASS\nn=4 expected=4156 computed=4156 PASS\n");
    r = invoke({"oeis"});
    CHECK(r.code == kExitOk);
    CHECK(count_lines(r.out) == 12);
    CHECK(r.out.find("n=5 expected=1342208 computed=1342208 PASS") != std::string::npos);
    CHECK(r.out.find("n=8 expected=288230376353050816 computed=288230376353050816 PASS") != std::string::npos);
    CHECK(invoke({"oeis", "--max-n", "0"}).code == kExitUsage);
    CHECK(invoke({"oeis", "--max-n", "13"}).code == kExitUsage);
}

TEST_CASE("exit code mapping") {
    CHECK(invoke({}).code == kExitUsage);
    CHECK(invoke({"frobnicate", "1", "1"}).code == kExitUsage);
    CHECK(invoke({"count", "0", "3"}).code == kExitUsage);
    CHECK(invoke({"count", "-1", "3"}).code == kExitUsage);
    CHECK(invoke({"count", "2"}).code == kExitUsage);
    CHECK(invoke({"count", "2", "2", "--method", "magic"}).code == kExitUsage);
    CHECK(invoke({"count", "2", "2", "--format", "pbm"}).code == kExitUsage);
    CHECK(invoke({"enumerate", "2", "2", "--method", "burnside"}).code == kExitUsage);
    CHECK(invoke({"enumerate", "2", "2", "--format", "png"}).code == kExitUsage);
    CHECK(invoke({"enumerate", "2", "2", "--limit", "0"}).code == kExitUsage);
    CHECK(invoke({"check", "2", "2", "--method", "sieve"}).code == kExitUsage);
    CHECK(invoke({"count", "2", "2", "--max-n", "3"}).code == kExitUsage);
    CHECK(invoke({"count", "2", "2", "--memory-budget-bits", "0"}).code == kExitUsage);
    CHECK(invoke({"--help"}).code == kExitOk);

    auto r = invoke({"enumerate", "8", "8", "--method", "sieve"});
    CHECK(r.code == kExitCapacity);
    CHECK(r.err.find("--method burnside") != std::string::npos);
    r = invoke({"count", "3", "4", "--method", "sieve", "--memory-budget-bits", "1000"});
    CHECK(r.code == kExitCapacity);
    CHECK(r.err.find("--method burnside") != std::string::npos);
    CHECK(invoke({"count", "8", "8", "--method", "filter"}).code == kExitCapacity);
    CHECK(invoke({"enumerate", "8", "8", "--method", "filter"}).code == kExitCapacity);
    CHECK(invoke({"count", "8", "8", "--method", "burnside"}).code == kExitOk);
}
