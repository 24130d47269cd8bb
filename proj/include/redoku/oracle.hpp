#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "redoku/grid.hpp"
#include "redoku/topology.hpp"

// Ground-truth solver used to validate the reduction and inference engines.
// Deliberately naive: fixed row-major order, symbols tried 1..9, direct
// row/column/sub-grid checks on a plain digit array. No candidate sets, no
// heuristics, no code shared with the engines it checks.

namespace redoku {
namespace detail {

// Digit view of a grid: filled cells keep their value, everything else 0.
// nullopt when some cell has no candidates at all.
inline std::optional<std::array<int, 81>> oracle_values(const Grid& g) noexcept {
    std::array<int, 81> vals{};
    for (int i = 0; i < 81; ++i) {
        const CandidateSet v = g.cells[i];
        if (v.empty()) return std::nullopt;
        vals[i] = v.is_singleton() ? v.sole().value() : 0;
    }
    return vals;
}

inline bool oracle_givens_consistent(const std::array<int, 81>& vals,
                                     const SectionTopology& topo) noexcept {
    for (int i = 0; i < 81; ++i) {
        if (vals[i] == 0) continue;
        for (const std::uint8_t p : topo.peers[i])
            if (vals[p] == vals[i]) return false;
    }
    return true;
}

inline bool oracle_legal(const std::array<int, 81>& vals, int cell, int v) noexcept {
    const int row = cell / 9;
    const int col = cell % 9;
    for (int j = row * 9; j < row * 9 + 9; ++j)
        if (vals[j] == v) return false;
    for (int j = col; j < 81; j += 9)
        if (vals[j] == v) return false;
    const int base = (row / 3) * 27 + (col / 3) * 3;
    for (int k = 0; k < 9; ++k)
        if (vals[base + (k / 3) * 9 + k % 3] == v) return false;
    return true;
}

inline bool oracle_dfs_first(std::array<int, 81>& vals, const std::vector<int>& blanks,
                             std::size_t k) noexcept {
    if (k == blanks.size()) return true;
    const int cell = blanks[k];
    for (int v = 1; v <= 9; ++v) {
        if (!oracle_legal(vals, cell, v)) continue;
        vals[cell] = v;
        if (oracle_dfs_first(vals, blanks, k + 1)) return true;
    }
    vals[cell] = 0;
    return false;
}

inline int oracle_dfs_count(std::array<int, 81>& vals, const std::vector<int>& blanks,
                            std::size_t k, int cap) noexcept {
    if (k == blanks.size()) return 1;
    const int cell = blanks[k];
    int found = 0;
    for (int v = 1; v <= 9 && found < cap; ++v) {
        if (!oracle_legal(vals, cell, v)) continue;
        vals[cell] = v;
        found += oracle_dfs_count(vals, blanks, k + 1, cap - found);
    }
    vals[cell] = 0;
    return found;
}

}  // namespace detail

/// First solution under the fixed row-major / ascending-symbol order, or
/// nullopt. Cells with several candidates are treated as blank; a cell with
/// none makes the grid unsatisfiable.
inline std::optional<Grid> oracle_solve(const Grid& g, const SectionTopology& topo) {
    auto vals = detail::oracle_values(g);
    if (!vals || !detail::oracle_givens_consistent(*vals, topo)) return std::nullopt;
    std::vector<int> blanks;
    blanks.reserve(81);
    for (int i = 0; i < 81; ++i)
        if ((*vals)[i] == 0) blanks.push_back(i);
    if (!detail::oracle_dfs_first(*vals, blanks, 0)) return std::nullopt;
    Grid out;
    for (int i = 0; i < 81; ++i) out.cells[i] = CandidateSet::of(Symbol((*vals)[i]));
    return out;
}

/// Exhaustive solution count, capped at cap.
inline int oracle_count(const Grid& g, const SectionTopology& topo, int cap) {
    if (cap < 1) throw std::invalid_argument("cap must be >= 1");
    auto vals = detail::oracle_values(g);
    if (!vals || !detail::oracle_givens_consistent(*vals, topo)) return 0;
    std::vector<int> blanks;
    blanks.reserve(81);
    for (int i = 0; i < 81; ++i)
        if ((*vals)[i] == 0) blanks.push_back(i);
    return detail::oracle_dfs_count(*vals, blanks, 0, cap);
}

}  // namespace redoku
