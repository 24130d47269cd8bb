// Command-line front end: solve, grade, count and bench over puzzle files
// (one 81-character puzzle per line, '#' comments, '.' or '0' for blanks).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "redoku/redoku.hpp"

namespace {

using namespace redoku;

BranchPolicy parse_policy(const std::string& text) {
    if (text == "mrv") return BranchPolicy::mrv();
    if (text.rfind("random:", 0) == 0) {
        const std::string seed = text.substr(7);
        try {
            std::size_t used = 0;
            const std::uint64_t value = std::stoull(seed, &used);
            if (used == seed.size()) return BranchPolicy::seeded_random(value);
        } catch (const std::exception&) {
        }
    }
    throw CLI::ValidationError("--policy", "expected 'mrv' or 'random:<seed>'");
}

// Runs fn over every puzzle line; fn returns false to flag the line as a
// puzzle error. Parse failures are reported and flagged here.
template <typename Fn>
int for_each_puzzle(std::istream& in, Fn&& fn) {
    std::string line;
    std::size_t line_number = 0;
    bool any_error = false;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        try {
            if (!fn(parse_puzzle(line))) any_error = true;
        } catch (const std::exception& e) {
            std::cerr << "line " << line_number << ": " << e.what() << '\n';
            std::cout << "ERROR\n";
            any_error = true;
        }
    }
    return any_error ? 1 : 0;
}

template <typename Fn>
int with_input(const std::string& path, Fn&& fn) {
    if (path == "-") return fn(std::cin);
    std::ifstream file(path);
    if (!file) {
        std::cerr << "cannot open " << path << '\n';
        return 1;
    }
    return fn(file);
}

int cmd_solve(std::istream& in, bool reduction_only, BranchPolicy policy) {
    const SectionTopology& topo = canonical_topology();
    return for_each_puzzle(in, [&](const std::vector<Given>& givens) {
        const Grid g = init_grid(givens);
        if (reduction_only) {
            auto [reduced, stats] = reduce(g, topo);
            std::cout << format_grid(reduced) << '\n';
            return true;  // an open grid is an expected outcome here
        }
        const SolveReport report = solve(g, topo, policy);
        if (report.status != SolveStatus::solved) {
            std::cout << "UNSAT\n";
            return false;
        }
        std::cout << format_solution(*report.solution) << '\n';
        return true;
    });
}

int cmd_grade(std::istream& in) {
    const SectionTopology& topo = canonical_topology();
    return for_each_puzzle(in, [&](const std::vector<Given>& givens) {
        const ComplexityReport report = game_complexity(givens, topo);
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f\n", report.game_complexity);
        std::cout << buf;
        return true;
    });
}

int cmd_count(std::istream& in, int cap) {
    const SectionTopology& topo = canonical_topology();
    return for_each_puzzle(in, [&](const std::vector<Given>& givens) {
        const int n = count_solutions(init_grid(givens), topo, cap);
        std::cout << n << (n == cap ? "+" : "") << '\n';
        return true;
    });
}

int cmd_bench(std::istream& in, const BatchOptions& opts, bool tsv) {
    BatchResult result = run_batch(in, opts, canonical_topology());
    if (tsv) {
        write_records_tsv(std::cout, result, opts.mode);
    } else {
        write_records_table(std::cout, result, opts.mode);
    }
    std::cout << '\n';
    write_summary_kv(std::cout, result, opts);
    for (const BatchError& err : result.errors)
        std::cerr << "line " << err.line_number << ": " << err.message << '\n';
    if (opts.reduction_only &&
        result.summary.puzzles_per_second < kReductionThroughputTarget)
        std::cerr << "WARN: reduction throughput "
                  << static_cast<long long>(result.summary.puzzles_per_second)
                  << " puzzles/s is below the " << static_cast<long long>(kReductionThroughputTarget)
                  << " puzzles/s target\n";
    return result.errors.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sudoku subset-reduction solver and entropy-based difficulty grader"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string policy_text = "mrv";
    bool reduction_only = false;
    bool tsv = false;
    int cap = 2;
    unsigned jobs = 1;

    CLI::App* sub_solve = app.add_subcommand("solve", "Print the solution line for each puzzle");
    sub_solve->add_flag("--reduction-only", reduction_only,
                        "stop after the reduction fixpoint; print partial grids");
    sub_solve->add_option("--policy", policy_text, "branch policy: mrv or random:<seed>");
    sub_solve->add_option("file", input, "puzzle file, or - for stdin");

    CLI::App* sub_grade = app.add_subcommand("grade", "Print the game complexity of each puzzle");
    sub_grade->add_option("file", input, "puzzle file, or - for stdin");

    CLI::App* sub_count = app.add_subcommand("count", "Count solutions per puzzle, capped");
    sub_count->add_option("--cap", cap, "stop counting at this many solutions")
        ->check(CLI::PositiveNumber);
    sub_count->add_option("file", input, "puzzle file, or - for stdin");

    CLI::App* sub_bench = app.add_subcommand("bench", "Per-puzzle records plus a summary block");
    sub_bench->add_flag("--tsv", tsv, "tab-separated records instead of the table");
    sub_bench->add_flag("--reduction-only", reduction_only, "benchmark the reduction fixpoint only");
    sub_bench->add_option("--policy", policy_text, "branch policy: mrv or random:<seed>");
    sub_bench->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    sub_bench->add_option("file", input, "puzzle file, or - for stdin");

    try {
        app.parse(argc, argv);
        const BranchPolicy policy = parse_policy(policy_text);
        if (sub_solve->parsed())
            return with_input(input, [&](std::istream& in) { return cmd_solve(in, reduction_only, policy); });
        if (sub_grade->parsed())
            return with_input(input, [&](std::istream& in) { return cmd_grade(in); });
        if (sub_count->parsed())
            return with_input(input, [&](std::istream& in) { return cmd_count(in, cap); });
        BatchOptions opts;
        opts.mode = BatchMode::solve;
        opts.policy = policy;
        opts.reduction_only = reduction_only;
        opts.jobs = jobs;
        return with_input(input, [&](std::istream& in) { return cmd_bench(in, opts, tsv); });
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
}
