#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "redoku/redoku.hpp"
#include "support/test_util.hpp"

using namespace redoku;

namespace {

bool pointwise_subset(const Grid& smaller, const Grid& larger) {
    for (int i = 0; i < 81; ++i)
        if (!smaller.cells[i].is_subset_of(larger.cells[i])) return false;
    return true;
}

}  // namespace

TEST_CASE("one_reduction_pass removes a filled value from all 20 peers") {
    const Grid g = init_grid({{CellIndex(4, 5), Symbol(6)}});
    const auto [after, stats] = one_reduction_pass(g, canonical_topology());

    const auto& peers = canonical_topology().peers[CellIndex(4, 5).linear()];
    for (const auto p : peers) {
        CHECK(after.cells[p].size() == 8);
        CHECK_FALSE(after.cells[p].contains(Symbol(6)));
    }
    CHECK(after.cell(CellIndex(4, 5)) == CandidateSet::of(Symbol(6)));
    CHECK(stats.eliminations == 20);
    CHECK(stats.passes_by_r[1] == 1);

    int untouched = 0;
    for (int i = 0; i < 81; ++i)
        if (after.cells[i] == CandidateSet::full()) ++untouched;
    CHECK(untouched == 60);
}

TEST_CASE("one_reduction_pass does nothing without filled cells") {
    const auto [after, stats] = one_reduction_pass(init_grid({}), canonical_topology());
    CHECK(after == init_grid({}));
    CHECK(stats.eliminations == 0);
}

TEST_CASE("one_reduction_pass does not cascade within the pass") {
    Grid g = init_grid({{CellIndex(1, 1), Symbol(5)}});
    g.cell(CellIndex(1, 2)) = CandidateSet::of(Symbol(5)) | CandidateSet::of(Symbol(6));
    g.cell(CellIndex(1, 3)) = CandidateSet::of(Symbol(6)) | CandidateSet::of(Symbol(7));

    const auto [after, stats] = one_reduction_pass(g, canonical_topology());
    // (1,2) collapses to {6}, but that new singleton is not propagated to (1,3)
    CHECK(after.cell(CellIndex(1, 2)) == CandidateSet::of(Symbol(6)));
    CHECK(after.cell(CellIndex(1, 3)) ==
          (CandidateSet::of(Symbol(6)) | CandidateSet::of(Symbol(7))));
}

TEST_CASE("one_reduction_pass surfaces contradictions through grid_status") {
    const Grid g = init_grid({{CellIndex(1, 1), Symbol(5)}, {CellIndex(1, 7), Symbol(5)}});
    const auto [after, stats] = one_reduction_pass(g, canonical_topology());
    CHECK(grid_status(after) == GridStatus::contradicted);
    bool some_empty = false;
    for (int i = 0; i < 81; ++i) some_empty |= after.cells[i].empty();
    CHECK(some_empty);
}

TEST_CASE("r_reduction_step applies a naked pair to the rest of the section") {
    // (1,1) and (1,9) share the same two candidates and meet only in row 1.
    Grid g = init_grid({});
    const CandidateSet pair = CandidateSet::of(Symbol(2)) | CandidateSet::of(Symbol(3));
    g.cell(CellIndex(1, 1)) = pair;
    g.cell(CellIndex(1, 9)) = pair;

    const auto [after, stats] = r_reduction_step(g, canonical_topology(), 2);
    for (int col = 2; col <= 8; ++col) {
        const CandidateSet v = after.cell(CellIndex(1, col));
        CHECK(v.size() == 7);
        CHECK_FALSE(v.contains(Symbol(2)));
        CHECK_FALSE(v.contains(Symbol(3)));
    }
    CHECK(after.cell(CellIndex(1, 1)) == pair);
    CHECK(after.cell(CellIndex(1, 9)) == pair);
    CHECK(stats.eliminations == 14);
    CHECK(stats.passes_by_r[2] == 1);
}

TEST_CASE("r_reduction_step validates r") {
    CHECK_THROWS_AS(r_reduction_step(init_grid({}), canonical_topology(), 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(r_reduction_step(init_grid({}), canonical_topology(), 9),
                    std::invalid_argument);
}

TEST_CASE("reduction is monotone: output sets are subsets of input sets") {
    std::mt19937_64 rng(11);
    const SectionTopology& topo = canonical_topology();
    for (int iter = 0; iter < 50; ++iter) {
        const Grid solution = test::random_solution(rng);
        const Grid g = init_grid(test::random_puzzle(rng, solution, 20 + int(rng() % 40)));

        const auto [pass, s1] = one_reduction_pass(g, topo);
        CHECK(pointwise_subset(pass, g));

        const int r = 1 + int(rng() % 8);
        const auto [step, s2] = r_reduction_step(g, topo, r);
        CHECK(pointwise_subset(step, g));

        const auto [fix, s3] = reduce(g, topo);
        CHECK(pointwise_subset(fix, g));
    }
}

TEST_CASE("reduce is idempotent and reports a fixpoint") {
    std::mt19937_64 rng(12);
    const SectionTopology& topo = canonical_topology();
    for (int iter = 0; iter < 30; ++iter) {
        const Grid solution = test::random_solution(rng);
        const Grid g = init_grid(test::random_puzzle(rng, solution, 18 + int(rng() % 40)));
        const auto [once, s1] = reduce(g, topo);
        const auto [twice, s2] = reduce(once, topo);
        CHECK(twice == once);
        CHECK(s2.eliminations == 0);
        CHECK(s1.reached_fixpoint);
        CHECK(s2.reached_fixpoint);
    }
}

TEST_CASE("reduce leaves an already-solved grid unchanged") {
    std::mt19937_64 rng(13);
    const Grid solution = test::random_solution(rng);
    const auto [after, stats] = reduce(solution, canonical_topology());
    CHECK(after == solution);
    CHECK(stats.eliminations == 0);
    CHECK(stats.reached_fixpoint);
}

TEST_CASE("reduce stops on contradictions without reporting a fixpoint") {
    const Grid g = init_grid({{CellIndex(1, 1), Symbol(5)}, {CellIndex(1, 7), Symbol(5)}});
    const auto [after, stats] = reduce(g, canonical_topology());
    CHECK(grid_status(after) == GridStatus::contradicted);
    CHECK_FALSE(stats.reached_fixpoint);
}

TEST_CASE("a single 1-reduction pass never eliminates more than reduce") {
    std::mt19937_64 rng(14);
    const SectionTopology& topo = canonical_topology();
    for (int iter = 0; iter < 50; ++iter) {
        const Grid solution = test::random_solution(rng);
        const Grid g = init_grid(test::random_puzzle(rng, solution, 20 + int(rng() % 40)));
        const auto [pass, s1] = one_reduction_pass(g, topo);
        const auto [fix, s2] = reduce(g, topo);
        CHECK(pointwise_subset(fix, pass));
        CHECK(s2.eliminations >= s1.eliminations);
    }
}

TEST_CASE("reduction is deterministic for identical inputs") {
    std::mt19937_64 rng(15);
    const Grid solution = test::random_solution(rng);
    const Grid g = init_grid(test::random_puzzle(rng, solution, 26));
    const auto [a, sa] = reduce(g, canonical_topology());
    const auto [b, sb] = reduce(g, canonical_topology());
    CHECK(a == b);
    CHECK(sa.eliminations == sb.eliminations);
    CHECK(sa.passes_by_r == sb.passes_by_r);
    CHECK(sa.reached_fixpoint == sb.reached_fixpoint);
}

TEST_CASE("reduction stats count eliminations exactly") {
    std::mt19937_64 rng(16);
    const SectionTopology& topo = canonical_topology();
    for (int iter = 0; iter < 30; ++iter) {
        const Grid solution = test::random_solution(rng);
        const Grid g = init_grid(test::random_puzzle(rng, solution, 24 + int(rng() % 30)));
        const auto [after, stats] = reduce(g, topo);
        std::uint64_t drop = 0;
        for (int i = 0; i < 81; ++i)
            drop += static_cast<std::uint64_t>(g.cells[i].size() - after.cells[i].size());
        CHECK(stats.eliminations == drop);
    }
}
