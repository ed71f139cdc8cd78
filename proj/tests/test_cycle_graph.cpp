#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "hultman/cycle_graph.hpp"
#include "hultman/permutation.hpp"

using namespace hultman;

TEST_CASE("alternating cycles of the reference permutation") {
    const auto d = alternating_cycle_decomposition(Permutation::from_values({2, 3, 1, 4}));
    CHECK(d.n == 4);
    CHECK(d.k == 3);
    REQUIRE(d.cycles.size() == 3);
    CHECK(d.cycles[0] == std::vector<int>{0, 1, 3, 4, 1, 2, 0});
    CHECK(d.cycles[1] == std::vector<int>{2, 3, 2});
    CHECK(d.cycles[2] == std::vector<int>{4, 0, 4});
    CHECK(alternating_cycle_count(Permutation::from_values({2, 3, 1, 4})) == 3);
}

TEST_CASE("identity decomposes into n+1 two-edge cycles") {
    for (int n : {1, 2, 5, 9}) {
        const auto d = alternating_cycle_decomposition(Permutation::identity(n));
        CHECK(d.k == n + 1);
        for (const auto& cycle : d.cycles) CHECK(cycle.size() == 3);  // 2 edges + closure
    }
}

TEST_CASE("swap on two elements gives a single cycle") {
    const auto d = alternating_cycle_decomposition(Permutation::from_values({2, 1}));
    CHECK(d.k == 1);
    REQUIRE(d.cycles.size() == 1);
    CHECK(d.cycles[0].size() == 7);  // all 6 edges + closure
}

TEST_CASE("empty permutation has one alternating cycle") {
    const auto d = alternating_cycle_decomposition(Permutation::from_values({}));
    CHECK(d.k == 1);
}

TEST_CASE("decomposition structure invariants") {
    for (int n = 0; n <= 6; ++n) {
        enumerate_permutations(n, [&](const Permutation& p) {
            const auto d = alternating_cycle_decomposition(p);
            // parity: k = n+1 (mod 2)
            CHECK((d.k - (n + 1)) % 2 == 0);
            CHECK(d.k >= 1);
            CHECK(d.k <= n + 1);
            // every grey and black edge used exactly once: 2(n+1) edges total
            std::size_t edges = 0;
            for (const auto& cycle : d.cycles) {
                CHECK(cycle.front() == cycle.back());
                edges += cycle.size() - 1;
            }
            CHECK(edges == 2 * static_cast<std::size_t>(n + 1));
            // cycle list sorted by starting vertex
            for (std::size_t i = 1; i < d.cycles.size(); ++i)
                CHECK(d.cycles[i - 1].front() < d.cycles[i].front());
            CHECK(d.k == alternating_cycle_count(p));
        });
    }
}

TEST_CASE("grey edge coverage is exact") {
    // Each grey edge (i-1) -> i must appear in exactly one cycle; walks store
    // grey targets at odd offsets, so collect and count them.
    const auto check = [](const Permutation& p) {
        const int m = p.size() + 1;
        std::vector<int> grey_uses(m, 0);
        const auto d = alternating_cycle_decomposition(p);
        for (const auto& cycle : d.cycles)
            for (std::size_t pos = 1; pos < cycle.size(); pos += 2) ++grey_uses[cycle[pos]];
        for (int i = 0; i < m; ++i) CHECK(grey_uses[i] == 1);
    };
    check(Permutation::from_values({2, 3, 1, 4}));
    check(Permutation::from_values({5, 3, 4, 1, 2}));
    check(Permutation::identity(7));
}
