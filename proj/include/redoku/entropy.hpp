#pragma once

#include <array>
#include <cmath>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>

#include "redoku/grid.hpp"
#include "redoku/reduction.hpp"

namespace redoku {

/// Entropy figures, all in bits (base-2 logarithms).
struct ComplexityReport {
    double sudoku_entropy = 0.0;     ///< mean over all 81 cells of log2 |v|
    double game_complexity = 0.0;    ///< sudoku entropy of the graded state
    double structural_offset = 0.0;  ///< log2 20, see structural_offset_bits()
    std::array<double, 81> per_cell_entropy{};
};

/// The constant per-vertex term contributed by the fixed 20-peer structure.
/// It is reported alongside the entropy so callers can reconstruct the full
/// per-vertex figure log2(20 * |v|); it never enters game_complexity.
inline double structural_offset_bits() noexcept { return std::log2(20.0); }

namespace detail {

inline std::string first_empty_cell_diagnostic(const Grid& g) {
    for (int i = 0; i < 81; ++i)
        if (g.cells[i].empty())
            return "no candidates left at " + to_string(CellIndex::from_linear(i));
    return "conflicting filled cells";
}

}  // namespace detail

/// Entropy of a reasoning state: per-cell log2 of the candidate count,
/// averaged over all 81 cells. A filled cell contributes 0. Rejects
/// contradicted grids; an empty candidate set has no defined entropy.
inline ComplexityReport sudoku_entropy(const Grid& g) {
    ComplexityReport report;
    report.structural_offset = structural_offset_bits();
    double sum = 0.0;
    for (int i = 0; i < 81; ++i) {
        const int sz = g.cells[i].size();
        if (sz == 0)
            throw std::invalid_argument("entropy undefined: " +
                                        detail::first_empty_cell_diagnostic(g));
        report.per_cell_entropy[i] = std::log2(static_cast<double>(sz));
        sum += report.per_cell_entropy[i];
    }
    report.sudoku_entropy = sum / 81.0;
    report.game_complexity = report.sudoku_entropy;
    return report;
}

/// The difficulty score of a puzzle: sudoku entropy after initiation plus a
/// single non-cascading 1-reduction pass. Rejects contradictory givens and
/// initiations the pass contradicts.
inline ComplexityReport game_complexity(std::span<const Given> givens,
                                        const SectionTopology& topo) {
    const Grid initiated = init_grid(givens);
    if (grid_status(initiated) == GridStatus::contradicted)
        throw std::invalid_argument("contradictory givens");
    auto [after, stats] = one_reduction_pass(initiated, topo);
    if (grid_status(after) == GridStatus::contradicted)
        throw std::invalid_argument("contradiction after 1-reduction: " +
                                    detail::first_empty_cell_diagnostic(after));
    return sudoku_entropy(after);
}

inline ComplexityReport game_complexity(std::initializer_list<Given> givens,
                                        const SectionTopology& topo) {
    return game_complexity(std::span<const Given>(givens.begin(), givens.size()), topo);
}

/// Secondary metric: same as game_complexity, but iterating 1-reduction
/// passes to a fixpoint before measuring instead of stopping after one pass.
inline ComplexityReport game_complexity_fixpoint1(std::span<const Given> givens,
                                                  const SectionTopology& topo) {
    Grid g = init_grid(givens);
    if (grid_status(g) == GridStatus::contradicted)
        throw std::invalid_argument("contradictory givens");
    while (true) {
        auto [next, stats] = one_reduction_pass(g, topo);
        g = next;
        if (grid_status(g) == GridStatus::contradicted)
            throw std::invalid_argument("contradiction under 1-reduction: " +
                                        detail::first_empty_cell_diagnostic(g));
        if (stats.eliminations == 0) break;
    }
    return sudoku_entropy(g);
}

inline ComplexityReport game_complexity_fixpoint1(std::initializer_list<Given> givens,
                                                  const SectionTopology& topo) {
    return game_complexity_fixpoint1(std::span<const Given>(givens.begin(), givens.size()),
                                     topo);
}

}  // namespace redoku
