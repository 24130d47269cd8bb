#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "redoku/grid.hpp"

namespace redoku {

/// Malformed puzzle text; position() is the 0-based offending offset.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error("position " + std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Parses the 81-character row-major line format: '1'..'9' are givens, '.'
/// and '0' both denote a blank. Offset k maps to row k/9 + 1, col k%9 + 1.
inline std::vector<Given> parse_puzzle(std::string_view line) {
    if (line.size() != 81)
        throw ParseError(std::min<std::size_t>(line.size(), 81),
                         "expected 81 characters, got " + std::to_string(line.size()));
    std::vector<Given> givens;
    givens.reserve(81);
    for (std::size_t k = 0; k < 81; ++k) {
        const char ch = line[k];
        if (ch == '.' || ch == '0') continue;
        if (ch < '1' || ch > '9')
            throw ParseError(k, std::string("invalid character '") + ch + "'");
        givens.push_back({CellIndex::from_linear(static_cast<int>(k)), Symbol(ch - '0')});
    }
    return givens;
}

/// 81-character line for any grid: filled cells as digits, everything else
/// (including emptied sets) as '.'.
inline std::string format_grid(const Grid& g) {
    std::string line(81, '.');
    for (int i = 0; i < 81; ++i) {
        const CandidateSet v = g.cells[i];
        if (v.is_singleton()) line[static_cast<std::size_t>(i)] = static_cast<char>('0' + v.sole().value());
    }
    return line;
}

/// 81-digit line for a solved grid. Rejects anything unsolved;
/// parse_puzzle(format_solution(g)) reconstructs g exactly.
inline std::string format_solution(const Grid& g) {
    if (grid_status(g) != GridStatus::solved)
        throw std::invalid_argument("grid is not solved");
    return format_grid(g);
}

}  // namespace redoku
