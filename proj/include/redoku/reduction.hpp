#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "redoku/grid.hpp"
#include "redoku/topology.hpp"

namespace redoku {

/// Bookkeeping for a reduction call. `eliminations` is the total drop in
/// candidate-set cardinality over the call; `passes_by_r[r]` counts subset
/// applications of size r that removed at least one symbol. reduce() sets
/// `reached_fixpoint` to true unless the loop aborted on a contradiction;
/// the single-sweep operations leave it false.
struct ReductionStats {
    std::uint64_t eliminations = 0;
    std::array<std::uint32_t, 9> passes_by_r{};  // indexed by r; [0] unused
    bool reached_fixpoint = false;

    /// Accumulates counters; the fixpoint flag of the right-hand side wins.
    ReductionStats& operator+=(const ReductionStats& o) noexcept {
        eliminations += o.eliminations;
        for (std::size_t r = 0; r < passes_by_r.size(); ++r)
            passes_by_r[r] += o.passes_by_r[r];
        reached_fixpoint = o.reached_fixpoint;
        return *this;
    }
};

/// A single non-cascading sweep of 1-Reduction: every cell filled in the
/// *input* grid has its value removed from the candidate sets of its 20
/// peers. Singletons created by the sweep itself are not propagated. An
/// emptied set is left in the output grid for grid_status to detect.
inline std::pair<Grid, ReductionStats> one_reduction_pass(const Grid& in,
                                                          const SectionTopology& topo) {
    Grid out = in;
    ReductionStats stats;
    for (int cell = 0; cell < 81; ++cell) {
        const CandidateSet v = in.cells[cell];
        if (!v.is_singleton()) continue;
        int removed = 0;
        for (const std::uint8_t peer : topo.peers[cell])
            removed += out.cells[peer].erase_all(v);
        if (removed > 0) {
            stats.eliminations += static_cast<std::uint64_t>(removed);
            ++stats.passes_by_r[1];
        }
    }
    return {out, stats};
}

/// One sweep of r-Reduction over all 27 sections in canonical order. Within
/// a section, r-subsets of eligible cells are enumerated in lexicographic
/// order of linear cell index; a subset whose candidate union holds exactly
/// r symbols has that union removed from the section's other cells.
/// Eliminations take effect immediately within the sweep. The sweep aborts
/// as soon as some set is emptied.
///
/// Eligible cells are the filled ones for r = 1, and cells with 2..r
/// candidates for r >= 2; filled cells add nothing at higher r that r = 1
/// does not already deliver.
inline std::pair<Grid, ReductionStats> r_reduction_step(const Grid& in,
                                                        const SectionTopology& topo, int r) {
    if (r < 1 || r > 8)
        throw std::invalid_argument("subset size r must be in 1..8");
    Grid g = in;
    ReductionStats stats;
    for (const auto& section : topo.sections) {
        std::array<std::uint8_t, 9> eligible{};
        int n = 0;
        for (const std::uint8_t c : section) {
            const int sz = g.cells[c].size();
            const bool ok = (r == 1) ? (sz == 1) : (sz >= 2 && sz <= r);
            if (ok) eligible[n++] = c;  // sections ascend, so this list does too
        }
        if (n < r) continue;

        std::array<int, 8> pick{};
        for (int k = 0; k < r; ++k) pick[k] = k;
        while (true) {
            CandidateSet u;
            for (int k = 0; k < r; ++k) u = u | g.cells[eligible[pick[k]]];
            if (u.size() == r) {
                int removed = 0;
                bool emptied = false;
                for (const std::uint8_t c : section) {
                    bool in_subset = false;
                    for (int k = 0; k < r; ++k) in_subset |= (eligible[pick[k]] == c);
                    if (in_subset) continue;
                    removed += g.cells[c].erase_all(u);
                    if (g.cells[c].empty()) {
                        emptied = true;
                        break;
                    }
                }
                if (removed > 0) {
                    stats.eliminations += static_cast<std::uint64_t>(removed);
                    ++stats.passes_by_r[r];
                }
                if (emptied) return {g, stats};
            }
            // next combination, lexicographic
            int k = r - 1;
            while (k >= 0 && pick[k] == n - r + k) --k;
            if (k < 0) break;
            ++pick[k];
            for (int j = k + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return {g, stats};
}

/// The restarting fixpoint loop: sweep at r = 1, restart from r = 1 after
/// any elimination, move to r + 1 after a dry sweep; stop once r would reach
/// 9, or as soon as the grid is solved or contradicted. The result is stable:
/// re-running reduce on it eliminates nothing.
inline std::pair<Grid, ReductionStats> reduce(const Grid& in, const SectionTopology& topo) {
    Grid g = in;
    ReductionStats total;
    int r = 1;
    while (r < 9) {
        auto [next, sweep] = r_reduction_step(g, topo, r);
        g = next;
        total += sweep;
        const GridStatus status = grid_status(g);
        if (status == GridStatus::contradicted) {
            total.reached_fixpoint = false;
            return {g, total};
        }
        if (status == GridStatus::solved) break;  // a solved grid admits no elimination
        r = (sweep.eliminations > 0) ? 1 : r + 1;
    }
    total.reached_fixpoint = true;
    return {g, total};
}

}  // namespace redoku
