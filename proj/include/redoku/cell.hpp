#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace redoku {

/// Position of a cell on the 9x9 board. Rows and columns are 1-based in the
/// public API; linear() maps row-major onto 0..80.
class CellIndex {
public:
    constexpr CellIndex(int row, int col)
        : row_(static_cast<std::int8_t>(row)), col_(static_cast<std::int8_t>(col)) {
        if (row < 1 || row > 9 || col < 1 || col > 9)
            throw std::invalid_argument("cell index out of range: (" + std::to_string(row) +
                                        "," + std::to_string(col) + ")");
    }

    static constexpr CellIndex from_linear(int index) {
        if (index < 0 || index > 80)
            throw std::invalid_argument("linear cell index out of range: " + std::to_string(index));
        return {index / 9 + 1, index % 9 + 1};
    }

    constexpr int row() const noexcept { return row_; }
    constexpr int col() const noexcept { return col_; }
    constexpr int linear() const noexcept { return (row_ - 1) * 9 + (col_ - 1); }

    friend constexpr auto operator<=>(CellIndex, CellIndex) = default;

private:
    std::int8_t row_;
    std::int8_t col_;
};

inline std::string to_string(CellIndex c) {
    return "(" + std::to_string(c.row()) + "," + std::to_string(c.col()) + ")";
}

}  // namespace redoku
