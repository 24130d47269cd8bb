#pragma once

#include <array>
#include <cstdint>

namespace redoku {

/// The 27 sections of the board (9 rows, 9 columns, 9 sub-grids) and the
/// 20-peer adjacency they induce. Cells are addressed by row-major linear
/// index 0..80. Section ids: 0..8 rows, 9..17 columns, 18..26 sub-grids in
/// row-major order; cells within a section ascend by linear index.
struct SectionTopology {
    std::array<std::array<std::uint8_t, 9>, 27> sections{};
    std::array<std::array<std::uint8_t, 20>, 81> peers{};
    std::array<std::array<std::uint8_t, 3>, 81> section_membership{};

    friend constexpr bool operator==(const SectionTopology&, const SectionTopology&) = default;
};

/// Builds the canonical topology. The result is a pure function of the board
/// geometry and identical across runs.
constexpr SectionTopology build_topology() noexcept {
    SectionTopology t{};
    for (int i = 0; i < 9; ++i) {
        for (int j = 0; j < 9; ++j) {
            const auto cell = static_cast<std::uint8_t>(i * 9 + j);
            t.sections[i][j] = cell;       // row i
            t.sections[9 + j][i] = cell;   // column j
        }
    }
    for (int b = 0; b < 9; ++b) {
        const int base = (b / 3) * 27 + (b % 3) * 3;
        for (int k = 0; k < 9; ++k)
            t.sections[18 + b][k] = static_cast<std::uint8_t>(base + (k / 3) * 9 + k % 3);
    }
    for (int cell = 0; cell < 81; ++cell) {
        const int row = cell / 9;
        const int col = cell % 9;
        const int box = (row / 3) * 3 + col / 3;
        t.section_membership[cell] = {static_cast<std::uint8_t>(row),
                                      static_cast<std::uint8_t>(9 + col),
                                      static_cast<std::uint8_t>(18 + box)};
        std::array<bool, 81> mark{};
        for (const auto sec : t.section_membership[cell])
            for (const auto other : t.sections[sec]) mark[other] = true;
        mark[cell] = false;
        int n = 0;
        for (int other = 0; other < 81; ++other)
            if (mark[other]) t.peers[cell][n++] = static_cast<std::uint8_t>(other);
    }
    return t;
}

namespace detail {
inline constexpr SectionTopology kTopology = build_topology();
}

/// Shared immutable instance of the canonical topology.
inline const SectionTopology& canonical_topology() noexcept { return detail::kTopology; }

}  // namespace redoku
