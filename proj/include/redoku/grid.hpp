#pragma once

#include <array>
#include <initializer_list>
#include <span>
#include <stdexcept>

#include "redoku/candidate_set.hpp"
#include "redoku/cell.hpp"
#include "redoku/topology.hpp"

namespace redoku {

/// An initially filled cell of a puzzle.
struct Given {
    CellIndex cell;
    Symbol symbol;
};

enum class GridStatus {
    solved,        ///< all cells filled, every section a permutation of 1..9
    contradicted,  ///< an emptied candidate set or two filled peers sharing a symbol
    open,          ///< anything else
};

/// Full reasoning state: one candidate set per cell, row-major. A
/// default-constructed grid carries no information (every cell may take any
/// symbol). Value type; copying is cheap.
struct Grid {
    std::array<CandidateSet, 81> cells = unconstrained_cells();

    constexpr CandidateSet& cell(CellIndex i) noexcept { return cells[i.linear()]; }
    constexpr CandidateSet cell(CellIndex i) const noexcept { return cells[i.linear()]; }
    constexpr CandidateSet& operator[](int linear) noexcept { return cells[linear]; }
    constexpr CandidateSet operator[](int linear) const noexcept { return cells[linear]; }

    friend constexpr bool operator==(const Grid&, const Grid&) = default;

private:
    static constexpr std::array<CandidateSet, 81> unconstrained_cells() noexcept {
        std::array<CandidateSet, 81> cells{};
        cells.fill(CandidateSet::full());
        return cells;
    }
};

/// Builds the initiation state: each given becomes a singleton, every other
/// cell keeps all nine candidates. No propagation happens here.
/// Throws std::invalid_argument when two givens name the same cell.
inline Grid init_grid(std::span<const Given> givens) {
    Grid g;
    std::array<bool, 81> seen{};
    for (const Given& given : givens) {
        const int idx = given.cell.linear();
        if (seen[idx])
            throw std::invalid_argument("duplicate given at " + to_string(given.cell));
        seen[idx] = true;
        g.cells[idx] = CandidateSet::of(given.symbol);
    }
    return g;
}

inline Grid init_grid(std::initializer_list<Given> givens) {
    return init_grid(std::span<const Given>(givens.begin(), givens.size()));
}

/// Classifies a reasoning state. A contradiction takes precedence: a grid is
/// never reported solved while an empty set or a duplicated filled symbol
/// exists in some section.
inline GridStatus grid_status(const Grid& g) noexcept {
    bool all_filled = true;
    for (const CandidateSet v : g.cells) {
        if (v.empty()) return GridStatus::contradicted;
        if (!v.is_singleton()) all_filled = false;
    }
    for (const auto& section : canonical_topology().sections) {
        std::uint16_t seen = 0;
        for (const std::uint8_t c : section) {
            const CandidateSet v = g.cells[c];
            if (!v.is_singleton()) continue;
            if (seen & v.bits()) return GridStatus::contradicted;
            seen |= v.bits();
        }
    }
    return all_filled ? GridStatus::solved : GridStatus::open;
}

}  // namespace redoku
