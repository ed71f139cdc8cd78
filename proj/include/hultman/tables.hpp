#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hultman/bigint.hpp"
#include "hultman/cycle_graph.hpp"
#include "hultman/parallel.hpp"
#include "hultman/permutation.hpp"
#include "hultman/polygon.hpp"
#include "hultman/polynomial.hpp"

namespace hultman {

/// Unsigned Stirling numbers of the first kind, S(n,k) = number of
/// permutations of n elements with k disjoint cycles. Built from
/// S(n+1,k) = S(n,k-1) + n*S(n,k) with S(0,0) = 1.
class StirlingTable {
public:
    explicit StirlingTable(int n_max) : n_max_(n_max) {
        if (n_max < 0) throw InvalidInputError("StirlingTable: negative n_max");
        rows_.resize(n_max + 1);
        rows_[0] = {1};
        for (int n = 1; n <= n_max; ++n) {
            rows_[n].assign(n + 1, 0);
            for (int k = 1; k <= n; ++k)
                rows_[n][k] = rows_[n - 1][k - 1] + BigInt(n - 1) * value(n - 1, k);
        }
    }

    int n_max() const { return n_max_; }

    const BigInt& value(int n, int k) const {
        static const BigInt kZero = 0;
        if (n < 0 || n > n_max_ || k < 0 || k > n) return kZero;
        return rows_[n][k];
    }

private:
    int n_max_;
    std::vector<std::vector<BigInt>> rows_;
};

enum class TableSource { brute, stirling, recursion };

inline const char* to_string(TableSource s) {
    switch (s) {
        case TableSource::brute: return "brute";
        case TableSource::stirling: return "stirling";
        case TableSource::recursion: return "recursion";
    }
    return "?";
}

/// H(n,k) for 0 <= n <= n_max, 1 <= k <= n+1, stored sparsely by (n, g) with
/// k = n+1-2g since every other k is zero by parity.
class HultmanTable {
public:
    HultmanTable(int n_max, std::vector<std::vector<BigInt>> by_genus, TableSource source)
        : n_max_(n_max), hg_(std::move(by_genus)), source_(source) {}

    int n_max() const { return n_max_; }
    TableSource source() const { return source_; }

    /// h_g(n) = H(n, n+1-2g); zero outside 0 <= g <= n/2.
    const BigInt& h(int n, int g) const {
        static const BigInt kZero = 0;
        if (n < 0 || n > n_max_ || g < 0 || 2 * g > n) return kZero;
        return hg_[n][g];
    }

    const BigInt& H(int n, int k) const {
        static const BigInt kZero = 0;
        if (n < 0 || n > n_max_ || k < 1 || k > n + 1) return kZero;
        if ((n - k) % 2 == 0) return kZero;  // parity: H vanishes for n-k even
        return h(n, (n + 1 - k) / 2);
    }

    BigInt row_sum(int n) const {
        BigInt s = 0;
        for (int g = 0; 2 * g <= n; ++g) s += h(n, g);
        return s;
    }

private:
    int n_max_;
    std::vector<std::vector<BigInt>> hg_;
    TableSource source_;
};

/// Exhaustive tally of alternating-cycle counts over S_n for each n <= n_max.
/// Partitioned by first value; per-partition tallies merge by addition.
inline HultmanTable hultman_table_brute(int n_max, int cap = kDefaultEnumerationCap,
                                        int threads = 1) {
    if (n_max < 0) throw InvalidInputError("hultman_table_brute: negative n_max");
    if (n_max > cap) throw EnumerationCapError(n_max, cap);

    std::vector<std::vector<BigInt>> hg(n_max + 1);
    hg[0] = {1};  // the empty permutation has one alternating cycle
    for (int n = 1; n <= n_max; ++n) {
        std::vector<std::vector<BigInt>> parts(n, std::vector<BigInt>(n / 2 + 1, 0));
        run_indexed(n, threads, [&](std::size_t idx) {
            enumerate_permutations_with_first(
                n, static_cast<int>(idx) + 1, [&](const Permutation& p) {
                    const int k = alternating_cycle_count(p);
                    if ((n + 1 - k) % 2 != 0 || k < 1 || k > n + 1)
                        throw InternalConsistencyError(
                            "brute table: impossible cycle count " + std::to_string(k) +
                            " at n=" + std::to_string(n));
                    ++parts[idx][(n + 1 - k) / 2];
                });
        });
        hg[n].assign(n / 2 + 1, 0);
        for (const auto& part : parts)
            for (int g = 0; 2 * g <= n; ++g) hg[n][g] += part[g];
    }
    return HultmanTable(n_max, std::move(hg), TableSource::brute);
}

/// H(n,k) = 2 S(n+2,k) / ((n+1)(n+2)) for n-k odd, 0 otherwise.
/// The division is asserted exact; a remainder means the table is wrong.
inline BigInt hultman_via_stirling(int n, int k, const StirlingTable& table) {
    if (table.n_max() < n + 2)
        throw InvalidInputError("hultman_via_stirling: table must cover n+2");
    if (k < 1 || k > n + 1)
        throw InvalidInputError("hultman_via_stirling: k outside 1..n+1");
    if ((n - k) % 2 == 0) return 0;
    return exact_div(2 * table.value(n + 2, k), BigInt(n + 1) * (n + 2),
                     "hultman_via_stirling");
}

inline HultmanTable hultman_table_stirling(int n_max) {
    const StirlingTable table(n_max + 2);
    std::vector<std::vector<BigInt>> hg(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        hg[n].resize(n / 2 + 1);
        for (int g = 0; 2 * g <= n; ++g)
            hg[n][g] = hultman_via_stirling(n, n + 1 - 2 * g, table);
    }
    return HultmanTable(n_max, std::move(hg), TableSource::stirling);
}

/// h_g(n) from the three-term recursion
///   (n+2) h_g(n) = (2n+1) h_g(n-1) - (n-1) h_g(n-2) + n^2 (n-1) h_{g-1}(n-2)
/// seeded by h_0(0) = 1 with h_g(m) = 0 for m < 2g, m < 0 or g < 0.
inline HultmanTable h_table_via_recursion(int n_max) {
    if (n_max < 0) throw InvalidInputError("h_table_via_recursion: negative n_max");
    std::vector<std::vector<BigInt>> hg(n_max + 1);
    auto at = [&](int n, int g) -> BigInt {
        if (n < 0 || g < 0 || 2 * g > n) return 0;
        return hg[n][g];
    };
    hg[0] = {1};
    for (int n = 1; n <= n_max; ++n) {
        hg[n].assign(n / 2 + 1, 0);
        for (int g = 0; 2 * g <= n; ++g) {
            BigInt acc = BigInt(2 * n + 1) * at(n - 1, g);
            acc -= BigInt(n - 1) * at(n - 2, g);
            acc += BigInt(n) * n * (n - 1) * at(n - 2, g - 1);
            hg[n][g] = exact_div(acc, n + 2, "h_table_via_recursion");
        }
    }
    return HultmanTable(n_max, std::move(hg), TableSource::recursion);
}

/// The moment polynomials p_n(N) = sum_g H(n, n+1-2g) N^{n+1-2g}.
class PnFamily {
public:
    PnFamily(std::vector<IntPolynomial> polys, std::string source)
        : polys_(std::move(polys)), source_(std::move(source)) {}

    int n_max() const { return static_cast<int>(polys_.size()) - 1; }
    const std::string& source() const { return source_; }

    const IntPolynomial& poly(int n) const {
        if (n < 0 || n > n_max())
            throw InvalidInputError("PnFamily: index outside 0..n_max");
        return polys_[n];
    }

    const std::vector<IntPolynomial>& polys() const { return polys_; }

private:
    std::vector<IntPolynomial> polys_;
    std::string source_;
};

/// p_n by the recursion (n+2) p_n = (2n+1) N p_{n-1} + (n-1)(n^2 - N^2) p_{n-2},
/// seeded p_0 = N, p_1 = N^2; every division is exact coefficient-wise.
inline PnFamily p_family_via_recursion(int n_max) {
    if (n_max < 0) throw InvalidInputError("p_family_via_recursion: negative n_max");
    std::vector<IntPolynomial> polys;
    polys.reserve(n_max + 1);
    polys.push_back(IntPolynomial::monomial(1, 1, "N"));
    if (n_max >= 1) polys.push_back(IntPolynomial::monomial(1, 2, "N"));
    for (int n = 2; n <= n_max; ++n) {
        IntPolynomial acc = BigInt(2 * n + 1) * polys[n - 1].shifted_up(1);
        const IntPolynomial n2_minus_N2 =
            IntPolynomial({BigInt(n) * n, 0, -1}, "N");
        acc = acc + BigInt(n - 1) * (n2_minus_N2 * polys[n - 2]);
        polys.push_back(acc.divided_exact(n + 2, "p_family_via_recursion"));
    }
    return PnFamily(std::move(polys), "recursion");
}

/// Assembles each p_n directly from a Hultman table.
inline PnFamily p_family_from_table(const HultmanTable& t) {
    std::vector<IntPolynomial> polys;
    polys.reserve(t.n_max() + 1);
    for (int n = 0; n <= t.n_max(); ++n) {
        std::vector<BigInt> coeffs(n + 2);
        for (int g = 0; 2 * g <= n; ++g) coeffs[n + 1 - 2 * g] = t.h(n, g);
        polys.emplace_back(std::move(coeffs), "N");
    }
    return PnFamily(std::move(polys), std::string("table-") + to_string(t.source()));
}

/// The Wick-pairing value of the Ginibre trace moment as an exact polynomial:
/// sum over S_n of N^{k(pi)} where k comes from the polygon-gluing genus.
/// Must coincide with p_n(N).
inline IntPolynomial wick_polynomial(int n, int cap = kDefaultEnumerationCap,
                                     int threads = 1) {
    if (n < 0) throw InvalidInputError("wick_polynomial: negative n");
    if (n > cap) throw EnumerationCapError(n, cap);
    if (n == 0) return IntPolynomial::monomial(1, 1, "N");

    std::vector<std::vector<BigInt>> parts(n, std::vector<BigInt>(n + 2, 0));
    run_indexed(n, threads, [&](std::size_t idx) {
        enumerate_permutations_with_first(n, static_cast<int>(idx) + 1,
                                          [&](const Permutation& p) {
                                              ++parts[idx][glue_polygon(p).vertex_orbits];
                                          });
    });
    std::vector<BigInt> coeffs(n + 2);
    for (const auto& part : parts)
        for (int k = 0; k <= n + 1; ++k) coeffs[k] += part[k];
    return IntPolynomial(std::move(coeffs), "N");
}

} // namespace hultman
