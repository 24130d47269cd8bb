#pragma once

// Test-only helpers: corpus loading, oracle-backed random grids and
// validity-preserving board transforms. Random solutions are produced by the
// naive oracle, never by the engines under test.

#include <array>
#include <fstream>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "redoku/redoku.hpp"

namespace redoku::test {

inline Grid grid_from_line(std::string_view line) { return init_grid(parse_puzzle(line)); }

inline std::vector<std::string> load_corpus(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open corpus file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(file, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

using Board = std::array<int, 81>;  // 0 = blank

inline Board board_of(const Grid& g) {
    Board b{};
    for (int i = 0; i < 81; ++i)
        b[i] = g.cells[i].is_singleton() ? g.cells[i].sole().value() : 0;
    return b;
}

inline Grid grid_of(const Board& b) {
    Grid g;
    for (int i = 0; i < 81; ++i)
        if (b[i] != 0) g.cells[i] = CandidateSet::of(Symbol(b[i]));
    return g;
}

inline std::vector<Given> givens_of(const Board& b) {
    std::vector<Given> givens;
    for (int i = 0; i < 81; ++i)
        if (b[i] != 0) givens.push_back({CellIndex::from_linear(i), Symbol(b[i])});
    return givens;
}

// Validity-preserving transforms.

inline Board permute_symbols(const Board& b, const std::array<int, 10>& perm) {
    Board out{};
    for (int i = 0; i < 81; ++i) out[i] = b[i] == 0 ? 0 : perm[b[i]];
    return out;
}

inline Board transpose(const Board& b) {
    Board out{};
    for (int r = 0; r < 9; ++r)
        for (int c = 0; c < 9; ++c) out[c * 9 + r] = b[r * 9 + c];
    return out;
}

// rows[i] is the source row for output row i; must keep rows within bands
// and permute whole bands only.
inline Board permute_rows(const Board& b, const std::array<int, 9>& rows) {
    Board out{};
    for (int r = 0; r < 9; ++r)
        for (int c = 0; c < 9; ++c) out[r * 9 + c] = b[rows[r] * 9 + c];
    return out;
}

inline std::array<int, 9> random_band_row_order(std::mt19937_64& rng) {
    std::array<int, 3> bands = {0, 1, 2};
    std::shuffle(bands.begin(), bands.end(), rng);
    std::array<int, 9> rows{};
    int n = 0;
    for (const int band : bands) {
        std::array<int, 3> within = {0, 1, 2};
        std::shuffle(within.begin(), within.end(), rng);
        for (const int w : within) rows[n++] = band * 3 + w;
    }
    return rows;
}

/// A random complete solution: the oracle completes a random first row, then
/// random symbol/row/column/transpose transforms spread the result around.
inline Grid random_solution(std::mt19937_64& rng) {
    std::array<int, 9> first_row = {1, 2, 3, 4, 5, 6, 7, 8, 9};
    std::shuffle(first_row.begin(), first_row.end(), rng);
    Grid seed;
    for (int c = 0; c < 9; ++c) seed.cells[c] = CandidateSet::of(Symbol(first_row[c]));
    const auto solved = oracle_solve(seed, canonical_topology());
    if (!solved) throw std::runtime_error("oracle failed to complete a first row");

    Board b = board_of(*solved);
    std::array<int, 10> perm{};
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    b = permute_symbols(b, perm);
    b = permute_rows(b, random_band_row_order(rng));
    b = transpose(b);
    b = permute_rows(b, random_band_row_order(rng));
    if (rng() % 2 == 0) b = transpose(b);
    return grid_of(b);
}

/// A random puzzle consistent with `solution` by construction: keep
/// `keep_count` random cells as givens. Uniqueness is not guaranteed.
inline std::vector<Given> random_puzzle(std::mt19937_64& rng, const Grid& solution,
                                        int keep_count) {
    std::array<int, 81> order{};
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Given> givens;
    givens.reserve(static_cast<std::size_t>(keep_count));
    for (int k = 0; k < keep_count; ++k) {
        const int cell = order[k];
        givens.push_back({CellIndex::from_linear(cell), solution.cells[cell].sole()});
    }
    return givens;
}

/// True when every filled cell of `g` matches `solution` and every unfilled
/// cell still lists the solution's value as a candidate.
inline bool consistent_with(const Grid& g, const Grid& solution) {
    for (int i = 0; i < 81; ++i)
        if (!g.cells[i].contains(solution.cells[i].sole())) return false;
    return true;
}

}  // namespace redoku::test
