#include "cli.hpp"

#include <algorithm>
#include <fstream>

#include "CLI11.hpp"

#include "formats.hpp"
#include "torus/orbit_counter.hpp"
#include "torus/torus_sieve.hpp"

namespace torus::cli {

namespace {

struct RunConfig {
    std::string command;
    std::uint32_t m = 0;
    std::uint32_t n = 0;
    std::string method;
    std::string format = "lines";
    std::string out_path;
    std::uint64_t limit = 0;  // 0: unlimited
    std::uint64_t memory_budget_bits = kDefaultMemoryBudgetBits;
    std::uint32_t max_n = 12;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string burnside_hint(const RunConfig& config) {
    return "to count classes for this shape use `count " + std::to_string(config.m) + " " +
           std::to_string(config.n) + " --method burnside`";
}

std::uint64_t count_with(const std::string& method, const MatrixShape& shape, std::uint64_t budget) {
    if (method == "sieve") {
        TorusSieveOptions options;
        options.memory_budget_bits = budget;
        return enumerate_torus(shape, [](const TupleCode&) { return true; }, options).class_count;
    }
    return count_canonical(shape, std::nullopt, 0);
}

int cmd_count(const RunConfig& config, std::ostream& out) {
    const MatrixShape shape(config.m, config.n);
    if (config.method == "burnside") {
        out << count_burnside(shape).value.str() << '\n';
    } else {
        out << count_with(config.method, shape, config.memory_budget_bits) << '\n';
    }
    return out ? kExitOk : kExitMismatch;
}

int cmd_enumerate(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const MatrixShape shape(config.m, config.n);
    if (config.method == "sieve") {
        require_sieve_capacity(shape, config.memory_budget_bits);
    } else {
        shape.require_linearizable();
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!config.out_path.empty()) {
        file.open(config.out_path, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "error: cannot open " << config.out_path << " for writing\n";
            return kExitMismatch;
        }
        sink = &file;
    }

    RecordWriter writer(*sink, *parse_format(config.format));
    bool io_failed = false;
    const auto emit = [&](const TupleCode& code) {
        if (!writer.write(code)) {
            io_failed = true;
            return false;
        }
        return config.limit == 0 || writer.written() < config.limit;
    };

    bool completed = false;
    if (config.method == "sieve") {
        TorusSieveOptions options;
        options.memory_budget_bits = config.memory_budget_bits;
        completed = enumerate_torus(shape, emit, options).completed;
    } else {
        bool stopped = false;
        stream_canonical(shape, full_range(shape), [&](const TupleCode& code) {
            stopped = !emit(code);
            return !stopped;
        });
        completed = !stopped;
    }
    sink->flush();
    if (io_failed || !*sink) {
        err << "error: write failed\n";
        return kExitMismatch;
    }
    if (completed) {
        err << "classes=" << writer.written() << '\n';
    } else {
        err << "emitted=" << writer.written() << '\n';
    }
    return kExitOk;
}

int cmd_check(const RunConfig& config, std::ostream& out) {
    const MatrixShape shape(config.m, config.n);
    if (shape.cells() > kBruteforceMaxCells) {
        throw CapacityError("check enumerates every matrix and supports m*n <= " +
                            std::to_string(kBruteforceMaxCells) + ", got shape " + shape.to_string());
    }
    const std::string burnside = count_burnside(shape).value.str();
    const std::string sieve = std::to_string(count_with("sieve", shape, config.memory_budget_bits));
    const std::string filter = std::to_string(count_with("filter", shape, config.memory_budget_bits));
    out << "burnside=" << burnside << '\n' << "sieve=" << sieve << '\n' << "filter=" << filter << '\n';

    bool agree = burnside == sieve && sieve == filter;
    if (!agree) {
        out << "MISMATCH: class counts differ\n";
    }
    if (shape.cells() <= 16) {
        TorusSieveOptions options;
        options.memory_budget_bits = config.memory_budget_bits;
        const auto sieved = enumerate_torus(shape, options).representatives;
        const auto filtered = collect_canonical(shape);
        if (const auto diff = diff_representatives(sieved, filtered)) {
            out << "MISMATCH: " << *diff << '\n';
            agree = false;
        } else {
            out << "representatives: identical (" << sieved.size() << ")\n";
        }
    }
    out << (agree ? "OK" : "FAIL") << '\n';
    return agree ? kExitOk : kExitMismatch;
}

int cmd_oeis(const RunConfig& config, std::ostream& out) {
    const auto& terms = a179043_terms();
    bool all_pass = true;
    for (std::uint32_t n = 1; n <= config.max_n; ++n) {
        const std::string computed = count_burnside(MatrixShape(n, n)).value.str();
        const std::string& expected = terms[n - 1];
        const bool pass = computed == expected;
        all_pass = all_pass && pass;
        out << "n=" << n << " expected=" << expected << " computed=" << computed << ' '
            << (pass ? "PASS" : "FAIL") << '\n';
    }
    return all_pass ? kExitOk : kExitMismatch;
}

void validate(const RunConfig& config, const CLI::App& sub) {
    const auto given = [&](const char* name) { return sub.get_option(name)->count() > 0; };
    const bool needs_shape = config.command != "oeis";
    if (needs_shape && (config.m == 0 || config.n == 0)) {
        throw UsageError(config.command + " needs positive <m> <n>");
    }
    if (config.command == "count") {
        if (config.method != "burnside" && config.method != "sieve" && config.method != "filter") {
            throw UsageError("count --method must be burnside, sieve or filter");
        }
    } else if (config.command == "enumerate") {
        if (config.method != "sieve" && config.method != "filter") {
            throw UsageError("enumerate --method must be sieve or filter (burnside only counts)");
        }
    } else if (given("--method")) {
        throw UsageError(config.command + " does not take --method");
    }
    if (config.command != "enumerate") {
        for (const char* name : {"--format", "--out", "--limit"}) {
            if (given(name)) {
                throw UsageError(std::string(name) + " applies to enumerate only");
            }
        }
    } else if (!parse_format(config.format)) {
        throw UsageError("--format must be lines, pbm or jsonl");
    }
    if (given("--limit") && config.limit == 0) {
        throw UsageError("--limit must be at least 1");
    }
    if (config.command == "oeis") {
        if (config.max_n < 1 || config.max_n > a179043_terms().size()) {
            throw UsageError("--max-n must be between 1 and " + std::to_string(a179043_terms().size()));
        }
    } else if (given("--max-n")) {
        throw UsageError("--max-n applies to oeis only");
    }
    if (config.memory_budget_bits == 0) {
        throw UsageError("--memory-budget-bits must be positive");
    }
}

} // namespace

const std::vector<std::string>& a179043_terms() {
    static const std::vector<std::string> terms = {
        "2",
        "7",
        "64",
        "4156",
        "1342208",
        "1908897152",
        "11488774559744",
        "288230376353050816",
        "29850020237398264483840",
        "12676506002282327791964489728",
        "21970710674130840874443091905462272",
        "154866286100907105149651981766316633972736",
    };
    return terms;
}

std::optional<std::string> diff_representatives(std::span<const TupleCode> sieve,
                                                std::span<const TupleCode> filter) {
    const std::size_t common = std::min(sieve.size(), filter.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (!(sieve[i] == filter[i])) {
            return "representative " + std::to_string(i) + ": sieve " + sieve[i].to_string() + " vs filter " +
                   filter[i].to_string();
        }
    }
    if (sieve.size() != filter.size()) {
        return "sieve emitted " + std::to_string(sieve.size()) + " representatives, filter " +
               std::to_string(filter.size());
    }
    return std::nullopt;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Enumerate and count binary matrices up to cyclic row/column rotation", "torus-orbits"};
    app.require_subcommand(1);

    RunConfig config;
    const auto add_common = [&](CLI::App* sub, bool shape_required) {
        sub->add_option("m", config.m, "row count")->required(shape_required);
        sub->add_option("n", config.n, "column count")->required(shape_required);
        sub->add_option("--method", config.method, "burnside, sieve or filter");
        sub->add_option("--format", config.format, "lines, pbm or jsonl");
        sub->add_option("--out", config.out_path, "output file (default: standard output)");
        sub->add_option("--limit", config.limit, "emit at most this many representatives");
        sub->add_option("--memory-budget-bits", config.memory_budget_bits, "sieve visited-store budget in bits");
        sub->add_option("--max-n", config.max_n, "largest diagonal term to check");
    };
    CLI::App* count = app.add_subcommand("count", "print the number of classes");
    CLI::App* enumerate = app.add_subcommand("enumerate", "stream one representative per class");
    CLI::App* check = app.add_subcommand("check", "cross-verify burnside, sieve and filter");
    CLI::App* oeis = app.add_subcommand("oeis", "compare diagonal counts with A179043");
    add_common(count, true);
    add_common(enumerate, true);
    add_common(check, true);
    add_common(oeis, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    config.command = sub->get_name();
    if (config.method.empty()) {
        config.method = config.command == "enumerate" ? "sieve" : "burnside";
    }
    try {
        validate(config, *sub);
        if (config.command == "count") {
            return cmd_count(config, out);
        }
        if (config.command == "enumerate") {
            return cmd_enumerate(config, out, err);
        }
        if (config.command == "check") {
            return cmd_check(config, out);
        }
        return cmd_oeis(config, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "; " << burnside_hint(config) << '\n';
        return kExitCapacity;
    } catch (const std::bad_alloc&) {
        err << "error: out of memory; " << burnside_hint(config) << '\n';
        return kExitCapacity;
    }
}

} // namespace torus::cli
