#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>

#include "redoku/grid.hpp"
#include "redoku/reduction.hpp"

namespace redoku {

/// How the solver picks a branch cell once reduction stalls.
struct BranchPolicy {
    enum class Mode { deterministic_mrv, seeded_random };

    Mode mode = Mode::deterministic_mrv;
    std::uint64_t seed = 0;

    /// Fewest remaining candidates, ties broken by smallest linear index.
    static constexpr BranchPolicy mrv() noexcept { return {}; }
    /// Uniformly random unfilled cell; reproducible for a fixed seed.
    static constexpr BranchPolicy seeded_random(std::uint64_t seed) noexcept {
        return {Mode::seeded_random, seed};
    }
};

enum class SolveStatus { solved, unsatisfiable };

struct SolveReport {
    SolveStatus status = SolveStatus::unsatisfiable;
    std::optional<Grid> solution;       ///< present iff status == solved
    std::uint64_t inference_count = 0;  ///< candidate assignments tried, failed ones included
    ReductionStats reduction_stats;     ///< aggregated over every reduce() call
    std::chrono::microseconds elapsed{0};
};

namespace detail {

/// Cell with the fewest candidates among the unfilled ones, smallest linear
/// index first; -1 when every cell is filled.
inline int min_remaining_cell(const Grid& g) noexcept {
    int best = -1;
    int best_size = 10;
    for (int c = 0; c < 81; ++c) {
        const int sz = g.cells[c].size();
        if (sz > 1 && sz < best_size) {
            best = c;
            best_size = sz;
            if (sz == 2) break;  // cannot do better
        }
    }
    return best;
}

struct SearchState {
    const SectionTopology& topo;
    BranchPolicy policy;
    std::mt19937_64 rng;
    std::uint64_t inferences = 0;
    ReductionStats stats;
};

inline int pick_branch_cell(const Grid& g, SearchState& st) {
    if (st.policy.mode == BranchPolicy::Mode::deterministic_mrv)
        return min_remaining_cell(g);
    std::array<int, 81> open{};
    int n = 0;
    for (int c = 0; c < 81; ++c)
        if (g.cells[c].size() > 1) open[n++] = c;
    return open[static_cast<std::size_t>(st.rng() % static_cast<std::uint64_t>(n))];
}

inline std::optional<Grid> search(const Grid& g, SearchState& st) {
    auto [reduced, sweep_stats] = reduce(g, st.topo);
    st.stats += sweep_stats;
    switch (grid_status(reduced)) {
        case GridStatus::solved: return reduced;
        case GridStatus::contradicted: return std::nullopt;
        case GridStatus::open: break;
    }
    const int cell = pick_branch_cell(reduced, st);
    for (const Symbol x : reduced.cells[cell]) {
        ++st.inferences;
        Grid child = reduced;
        child.cells[cell] = CandidateSet::of(x);
        if (auto solution = search(child, st)) return solution;
    }
    return std::nullopt;
}

inline int count_rec(const Grid& g, const SectionTopology& topo, int cap) {
    auto [reduced, stats] = reduce(g, topo);
    switch (grid_status(reduced)) {
        case GridStatus::contradicted: return 0;
        case GridStatus::solved: return 1;
        case GridStatus::open: break;
    }
    const int cell = min_remaining_cell(reduced);
    int total = 0;
    for (const Symbol x : reduced.cells[cell]) {
        Grid child = reduced;
        child.cells[cell] = CandidateSet::of(x);
        total += count_rec(child, topo, cap - total);
        if (total >= cap) return cap;
    }
    return total;
}

}  // namespace detail

/// Reduce; when the grid stays open, pick a branch cell per policy and try
/// each of its candidates on a copy of the state, depth first, re-reducing
/// below each assumption. Returns the first solution found in the policy's
/// order, or unsatisfiable once every branch is exhausted. Each branch works
/// on its own grid copy, so failed branches leave no trace.
inline SolveReport solve(const Grid& g, const SectionTopology& topo,
                         BranchPolicy policy = BranchPolicy::mrv()) {
    const auto start = std::chrono::steady_clock::now();
    detail::SearchState st{topo, policy, std::mt19937_64(policy.seed), 0, {}};
    SolveReport report;
    if (auto solution = detail::search(g, st)) {
        report.status = SolveStatus::solved;
        report.solution = *solution;
    }
    report.inference_count = st.inferences;
    report.reduction_stats = st.stats;
    report.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

/// Exhaustive backtracking count of distinct completions, early-exiting once
/// the running total reaches cap. Reduction prunes branches; eliminations are
/// sound, so the result is exact whenever it is below cap.
inline int count_solutions(const Grid& g, const SectionTopology& topo, int cap) {
    if (cap < 1) throw std::invalid_argument("cap must be >= 1");
    return detail::count_rec(g, topo, cap);
}

}  // namespace redoku
