#pragma once

#include <vector>

#include "hultman/permutation.hpp"

namespace hultman {

/// The unique decomposition of the cycle graph G(pi) into alternating cycles.
///
/// G(pi) lives on vertices {0..n} with grey edges i-1 -> i and black edges
/// pi_i -> pi_{i-1}, both for i = 0..n taken mod n+1 and with pi_0 = 0.
/// Each cycle is stored as its closed vertex walk (first vertex repeated at
/// the end), starting with the grey edge whose source vertex is smallest in
/// that cycle; the list is sorted by starting vertex.
struct AltCycleDecomposition {
    int n = 0;
    std::vector<std::vector<int>> cycles;
    int k = 0;
};

namespace detail {

/// Successor on grey-edge indices: grey edge i ends at vertex i; the black
/// edge leaving i is b_j with j = pi^{-1}(i); it ends at pi_{j-1}; the grey
/// edge leaving that vertex w is g_{w+1 mod n+1}.
inline int next_grey_index(const Permutation& p, const std::vector<int>& inv, int i) {
    const int m = p.size() + 1;
    const int j = inv[i];
    const int w = p.value((j + m - 1) % m);
    return (w + 1) % m;
}

} // namespace detail

/// Count of alternating cycles only; the hot path for exhaustive tallies.
inline int alternating_cycle_count(const Permutation& p) {
    const int m = p.size() + 1;
    const std::vector<int> inv = p.inverse_with_zero();
    std::vector<char> used(m, 0);
    int k = 0;
    for (int start = 0; start < m; ++start) {
        if (used[start]) continue;
        ++k;
        int i = start;
        while (!used[i]) {
            used[i] = 1;
            i = detail::next_grey_index(p, inv, i);
        }
    }
    return k;
}

inline AltCycleDecomposition alternating_cycle_decomposition(const Permutation& p) {
    const int n = p.size();
    const int m = n + 1;
    const std::vector<int> inv = p.inverse_with_zero();

    AltCycleDecomposition result;
    result.n = n;

    // Walking grey indices in increasing order guarantees each cycle starts
    // at its smallest grey-source vertex and the list is sorted by it
    // (grey edge i has source i-1 mod m, so scanning sources in order 0..n
    // means scanning grey indices 1,2,...,n,0).
    std::vector<char> used(m, 0);
    for (int src = 0; src < m; ++src) {
        const int start = (src + 1) % m;
        if (used[start]) continue;
        std::vector<int> walk;
        walk.push_back(src);
        int i = start;
        while (!used[i]) {
            used[i] = 1;
            walk.push_back(i);  // grey edge (i-1) -> i
            const int j = inv[i];
            const int w = p.value((j + m - 1) % m);
            walk.push_back(w);  // black edge i -> w
            i = (w + 1) % m;
        }
        result.cycles.push_back(std::move(walk));
    }
    result.k = static_cast<int>(result.cycles.size());
    return result;
}

} // namespace hultman
