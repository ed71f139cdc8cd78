#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hultman/bigint.hpp"
#include "hultman/cycle_graph.hpp"
#include "hultman/parallel.hpp"
#include "hultman/permutation.hpp"

namespace hultman {

/// Outcome of gluing the 2n-gon along a permutation: the corner-vertex orbit
/// count k of the glued graph and the genus g of the resulting closed
/// orientable surface, tied together by 2 - 2g = k - n + 1.
struct GluingResult {
    int n = 0;
    int vertex_orbits = 0;
    int genus = 0;
};

namespace detail {

/// Union-find over a fixed element range, path halving + union by size.
class UnionFind {
public:
    explicit UnionFind(int count) : parent_(count), size_(count, 1) {
        for (int i = 0; i < count; ++i) parent_[i] = i;
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        ++merges_;
    }

    int classes(int universe) const { return universe - merges_; }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    int merges_ = 0;
};

} // namespace detail

/// Glues the 2n-gon whose boundary is n black sides (counterclockwise)
/// followed by n grey sides (clockwise), pairing black side i with grey side
/// pi_i, start-with-start and end-with-end.
///
/// Corners are v_0..v_{2n-1} counterclockwise. Black side b_i runs
/// v_{i-1} -> v_i (i = 1..n); grey side g_j runs v_{(2n-j+1) mod 2n} -> v_{2n-j}
/// (j = 1..n, clockwise from v_0).
inline GluingResult glue_polygon(const Permutation& p) {
    const int n = p.size();
    if (n == 0) {
        // Degenerate 0-gon: a single vertex and no sides, a sphere.
        return GluingResult{0, 1, 0};
    }

    const int two_n = 2 * n;
    detail::UnionFind uf(two_n);
    for (int i = 1; i <= n; ++i) {
        const int j = p.value(i);
        const int grey_start = (two_n - j + 1) % two_n;
        const int grey_end = two_n - j;
        uf.unite(i - 1, grey_start);
        uf.unite(i, grey_end);
    }

    const int k = uf.classes(two_n);
    const int genus_num = n + 1 - k;
    if (genus_num < 0 || genus_num % 2 != 0)
        throw InternalConsistencyError("glue_polygon: Euler formula violated, k=" +
                                       std::to_string(k) + " for n=" + std::to_string(n));
    return GluingResult{n, k, genus_num / 2};
}

/// h_g(n): exhaustive tally of gluing genera over all of S_n. Partitioned by
/// the first value of the permutation; per-partition tallies merge by
/// addition, so the thread count never changes the result.
inline std::map<int, BigInt> count_gluings_by_genus(int n, int cap = kDefaultEnumerationCap,
                                                    int threads = 1) {
    if (n < 0) throw InvalidInputError("count_gluings_by_genus: negative n");
    if (n > cap) throw EnumerationCapError(n, cap);
    if (n == 0) return {{0, 1}};

    std::vector<std::vector<BigInt>> parts(n, std::vector<BigInt>(n / 2 + 1, 0));
    run_indexed(n, threads, [&](std::size_t idx) {
        enumerate_permutations_with_first(n, static_cast<int>(idx) + 1,
                                          [&](const Permutation& p) {
                                              ++parts[idx][glue_polygon(p).genus];
                                          });
    });
    std::map<int, BigInt> tally;
    for (int g = 0; 2 * g <= n; ++g) {
        BigInt total = 0;
        for (const auto& part : parts) total += part[g];
        if (total != 0) tally[g] = total;
    }
    return tally;
}

/// Exhaustive check that the glued polygon's vertex-orbit count equals the
/// alternating-cycle count of the cycle graph, for every permutation of S_n.
struct Theorem1Report {
    int n = 0;
    BigInt permutations_checked = 0;
    bool pass = true;
    std::optional<std::vector<int>> first_counterexample;
};

inline Theorem1Report verify_theorem1(int n, int cap = kDefaultEnumerationCap,
                                      int threads = 1) {
    if (n < 0) throw InvalidInputError("verify_theorem1: negative n");
    if (n > cap) throw EnumerationCapError(n, cap);

    Theorem1Report report;
    report.n = n;
    if (n == 0) {
        const Permutation empty = Permutation::from_values({});
        report.permutations_checked = 1;
        report.pass = glue_polygon(empty).vertex_orbits == alternating_cycle_count(empty);
        return report;
    }

    std::vector<Theorem1Report> parts(n);
    run_indexed(n, threads, [&](std::size_t idx) {
        Theorem1Report& part = parts[idx];
        enumerate_permutations_with_first(n, static_cast<int>(idx) + 1,
                                          [&](const Permutation& p) {
                                              ++part.permutations_checked;
                                              if (glue_polygon(p).vertex_orbits !=
                                                  alternating_cycle_count(p)) {
                                                  if (part.pass)
                                                      part.first_counterexample = p.values();
                                                  part.pass = false;
                                              }
                                          });
    });
    // Merge in partition order, which is lexicographic order of the whole run.
    for (const Theorem1Report& part : parts) {
        report.permutations_checked += part.permutations_checked;
        if (!part.pass && report.pass) {
            report.pass = false;
            report.first_counterexample = part.first_counterexample;
        }
    }
    return report;
}

} // namespace hultman
