#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "redoku/entropy.hpp"
#include "redoku/puzzle_io.hpp"
#include "redoku/solve.hpp"

namespace redoku {

enum class BatchMode { solve, grade, count };

/// Soft single-core target for reduce-only batch throughput; consumers warn
/// below it rather than fail.
inline constexpr double kReductionThroughputTarget = 1000.0;  // puzzles/second

/// One benchmark line. `game_complexity` is NaN when the initiation is
/// contradictory; `solutions` is meaningful in count mode only.
struct BenchRecord {
    std::string puzzle_id;  ///< "L<line number>" in the input file
    int given_count = 0;
    bool solved = false;
    bool solved_by_reduction = false;
    std::uint64_t inference_count = 0;
    int solutions = 0;
    double game_complexity = std::numeric_limits<double>::quiet_NaN();
    std::int64_t elapsed_micros = 0;
};

struct BatchError {
    std::size_t line_number = 0;  // 1-based
    std::string message;
};

struct BatchSummary {
    std::size_t puzzles = 0;
    std::size_t errors = 0;
    std::size_t solved = 0;
    std::size_t solved_by_reduction = 0;
    std::uint64_t inferences_total = 0;
    double inferences_mean = 0.0;
    std::size_t graded = 0;  ///< records with a defined game complexity
    double gc_min = 0.0;
    double gc_max = 0.0;
    double gc_mean = 0.0;
    std::size_t unique = 0;         // count mode: exactly one solution
    std::size_t multiple = 0;       // count mode: two or more (may be capped)
    std::size_t unsatisfiable = 0;  // count mode: none
    double elapsed_seconds = 0.0;
    double puzzles_per_second = 0.0;
};

struct BatchOptions {
    BatchMode mode = BatchMode::solve;
    BranchPolicy policy = BranchPolicy::mrv();
    bool reduction_only = false;
    int count_cap = 2;
    unsigned jobs = 1;  ///< worker threads; 0 = hardware concurrency
};

struct BatchResult {
    std::vector<BenchRecord> records;  ///< valid puzzles, in input order
    std::vector<BatchError> errors;    ///< malformed or rejected lines, in input order
    BatchSummary summary;
};

namespace detail {

struct BatchTask {
    std::size_t line_number = 0;
    std::vector<Given> givens;
};

inline void process_task(const BatchTask& task, const BatchOptions& opts,
                         const SectionTopology& topo, BenchRecord& rec,
                         std::string& rejection) {
    rec.puzzle_id = "L" + std::to_string(task.line_number);
    rec.given_count = static_cast<int>(task.givens.size());
    const Grid g = init_grid(task.givens);

    const auto t0 = std::chrono::steady_clock::now();
    switch (opts.mode) {
        case BatchMode::solve: {
            if (opts.reduction_only) {
                auto [reduced, stats] = reduce(g, topo);
                rec.solved = grid_status(reduced) == GridStatus::solved;
                rec.solved_by_reduction = rec.solved;
            } else {
                const SolveReport report = solve(g, topo, opts.policy);
                rec.solved = report.status == SolveStatus::solved;
                rec.inference_count = report.inference_count;
                rec.solved_by_reduction = rec.solved && report.inference_count == 0;
            }
            break;
        }
        case BatchMode::count: {
            rec.solutions = count_solutions(g, topo, opts.count_cap);
            break;
        }
        case BatchMode::grade:
            break;  // grading happens below, inside the timed region
    }
    try {
        rec.game_complexity = game_complexity(task.givens, topo).game_complexity;
    } catch (const std::exception& e) {
        if (opts.mode == BatchMode::grade) rejection = e.what();
    }
    rec.elapsed_micros = std::chrono::duration_cast<std::chrono::microseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
}

}  // namespace detail

/// Runs a whole puzzle file: one 81-character puzzle per line, '#' comment
/// lines and blank lines skipped. Malformed lines become error entries and
/// processing continues. Work may fan out across `jobs` threads; records are
/// emitted in input order regardless of the worker count.
inline BatchResult run_batch(std::istream& input, const BatchOptions& opts,
                             const SectionTopology& topo) {
    BatchResult result;
    std::vector<detail::BatchTask> tasks;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(input, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        try {
            tasks.push_back({line_number, parse_puzzle(line)});
        } catch (const ParseError& e) {
            result.errors.push_back({line_number, e.what()});
        }
    }

    result.records.resize(tasks.size());
    std::vector<std::string> rejections(tasks.size());

    const auto t0 = std::chrono::steady_clock::now();
    unsigned jobs = opts.jobs == 0 ? std::thread::hardware_concurrency() : opts.jobs;
    if (jobs == 0) jobs = 1;
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            detail::process_task(tasks[i], opts, topo, result.records[i], rejections[i]);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
                detail::process_task(tasks[i], opts, topo, result.records[i], rejections[i]);
        };
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    for (std::size_t i = 0; i < tasks.size(); ++i)
        if (!rejections[i].empty())
            result.errors.push_back({tasks[i].line_number, rejections[i]});
    std::sort(result.errors.begin(), result.errors.end(),
              [](const BatchError& a, const BatchError& b) { return a.line_number < b.line_number; });

    BatchSummary& s = result.summary;
    s.puzzles = result.records.size();
    s.errors = result.errors.size();
    s.elapsed_seconds = wall;
    s.puzzles_per_second = wall > 0.0 ? static_cast<double>(s.puzzles) / wall : 0.0;
    double gc_sum = 0.0;
    for (const BenchRecord& rec : result.records) {
        s.solved += rec.solved ? 1 : 0;
        s.solved_by_reduction += rec.solved_by_reduction ? 1 : 0;
        s.inferences_total += rec.inference_count;
        if (!std::isnan(rec.game_complexity)) {
            if (s.graded == 0 || rec.game_complexity < s.gc_min) s.gc_min = rec.game_complexity;
            if (s.graded == 0 || rec.game_complexity > s.gc_max) s.gc_max = rec.game_complexity;
            gc_sum += rec.game_complexity;
            ++s.graded;
        }
        if (opts.mode == BatchMode::count) {
            if (rec.solutions == 0)
                ++s.unsatisfiable;
            else if (rec.solutions == 1 && opts.count_cap > 1)
                ++s.unique;
            else
                ++s.multiple;
        }
    }
    if (s.puzzles > 0) s.inferences_mean = static_cast<double>(s.inferences_total) /
                                           static_cast<double>(s.puzzles);
    if (s.graded > 0) s.gc_mean = gc_sum / static_cast<double>(s.graded);
    return result;
}

namespace detail {

inline std::string format_gc(double gc) {
    if (std::isnan(gc)) return "-";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", gc);
    return buf;
}

inline std::string record_fields(const BenchRecord& rec, BatchMode mode, const char* sep) {
    const bool solving = mode == BatchMode::solve;
    const bool counting = mode == BatchMode::count;
    std::string out = rec.puzzle_id;
    out += sep;
    out += std::to_string(rec.given_count);
    out += sep;
    out += solving ? (rec.solved ? "1" : "0") : "-";
    out += sep;
    out += solving ? (rec.solved_by_reduction ? "1" : "0") : "-";
    out += sep;
    out += solving ? std::to_string(rec.inference_count) : "-";
    out += sep;
    out += counting ? std::to_string(rec.solutions) : "-";
    out += sep;
    out += format_gc(rec.game_complexity);
    return out;
}

}  // namespace detail

/// Tab-separated records: header line, then one row per puzzle. The elapsed
/// column comes last so timing can be stripped when diffing runs.
inline void write_records_tsv(std::ostream& os, const BatchResult& result, BatchMode mode) {
    os << "id\tgivens\tsolved\tby_reduction\tinferences\tsolutions\tgc\tmicros\n";
    for (const BenchRecord& rec : result.records)
        os << detail::record_fields(rec, mode, "\t") << '\t' << rec.elapsed_micros << '\n';
}

/// Fixed-width human-readable table of the same records.
inline void write_records_table(std::ostream& os, const BatchResult& result, BatchMode mode) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-10s %6s %6s %8s %10s %9s %8s %10s\n", "id", "givens",
                  "solved", "reduced", "inferences", "solutions", "gc", "micros");
    os << buf;
    const bool solving = mode == BatchMode::solve;
    const bool counting = mode == BatchMode::count;
    for (const BenchRecord& rec : result.records) {
        std::snprintf(buf, sizeof buf, "%-10s %6d %6s %8s %10s %9s %8s %10lld\n",
                      rec.puzzle_id.c_str(), rec.given_count,
                      solving ? (rec.solved ? "yes" : "no") : "-",
                      solving ? (rec.solved_by_reduction ? "yes" : "no") : "-",
                      solving ? std::to_string(rec.inference_count).c_str() : "-",
                      counting ? std::to_string(rec.solutions).c_str() : "-",
                      detail::format_gc(rec.game_complexity).c_str(),
                      static_cast<long long>(rec.elapsed_micros));
        os << buf;
    }
}

/// Key-value summary block. Keys are stable; timing keys are last.
inline void write_summary_kv(std::ostream& os, const BatchResult& result, const BatchOptions& opts) {
    const BatchSummary& s = result.summary;
    char buf[128];
    auto put = [&](const char* key, const std::string& value) {
        std::snprintf(buf, sizeof buf, "%-21s %s\n", key, value.c_str());
        os << buf;
    };
    auto pct = [&](std::size_t part) {
        char b[64];
        const double rate = s.puzzles ? 100.0 * static_cast<double>(part) /
                                        static_cast<double>(s.puzzles)
                                      : 0.0;
        std::snprintf(b, sizeof b, "%zu (%.2f%%)", part, rate);
        return std::string(b);
    };
    auto real = [](double v, int prec) {
        char b[64];
        std::snprintf(b, sizeof b, "%.*f", prec, v);
        return std::string(b);
    };
    put("puzzles", std::to_string(s.puzzles));
    put("errors", std::to_string(s.errors));
    if (opts.mode == BatchMode::solve) {
        put("solved", pct(s.solved));
        put("solved_by_reduction", pct(s.solved_by_reduction));
        put("inferences_total", std::to_string(s.inferences_total));
        put("inferences_mean", real(s.inferences_mean, 4));
    }
    if (opts.mode == BatchMode::count) {
        put("unique", std::to_string(s.unique));
        put("multiple", std::to_string(s.multiple));
        put("unsatisfiable", std::to_string(s.unsatisfiable));
    }
    if (s.graded > 0) {
        put("gc_min", real(s.gc_min, 4));
        put("gc_max", real(s.gc_max, 4));
        put("gc_mean", real(s.gc_mean, 4));
    }
    put("elapsed_seconds", real(s.elapsed_seconds, 3));
    put("puzzles_per_second", real(s.puzzles_per_second, 1));
}

}  // namespace redoku
