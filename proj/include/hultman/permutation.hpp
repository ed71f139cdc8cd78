#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "hultman/errors.hpp"

namespace hultman {

/// Refuse to walk S_n past this by default; 11! is ~40M visits.
inline constexpr int kDefaultEnumerationCap = 11;

class Permutation;

template <class Visitor>
void enumerate_permutations(int n, Visitor&& visit, int cap = kDefaultEnumerationCap);

template <class Visitor>
void enumerate_permutations_with_first(int n, int first, Visitor&& visit);

/// A permutation of {1..n} in one-line notation. The convention pi_0 = 0 is
/// applied by every consumer (cycle graph, gluing).
class Permutation {
public:
    /// Validates that seq is a bijection of {1..n}; reports the position
    /// (1-based) of the first offending entry otherwise.
    static Permutation from_values(std::vector<int> seq) {
        const int n = static_cast<int>(seq.size());
        std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
        for (int i = 0; i < n; ++i) {
            const int v = seq[i];
            if (v < 1 || v > n)
                throw InvalidInputError("permutation: value " + std::to_string(v) +
                                        " at position " + std::to_string(i + 1) +
                                        " outside 1.." + std::to_string(n));
            if (seen[v])
                throw InvalidInputError("permutation: duplicate value " + std::to_string(v) +
                                        " at position " + std::to_string(i + 1));
            seen[v] = 1;
        }
        return Permutation(std::move(seq));
    }

    static Permutation identity(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    int size() const { return static_cast<int>(values_.size()); }

    /// pi_i for i in 0..n, with pi_0 = 0.
    int value(int i) const { return i == 0 ? 0 : values_[i - 1]; }

    const std::vector<int>& values() const { return values_; }

    /// inverse over 0..n: inv[v] = i with pi_i = v (inv[0] = 0).
    std::vector<int> inverse_with_zero() const {
        std::vector<int> inv(values_.size() + 1);
        for (int i = 1; i <= size(); ++i) inv[values_[i - 1]] = i;
        return inv;
    }

    /// Number of cycles of the ordinary disjoint-cycle decomposition on {1..n}.
    int disjoint_cycle_count() const {
        const int n = size();
        std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
        int count = 0;
        for (int start = 1; start <= n; ++start) {
            if (visited[start]) continue;
            ++count;
            int v = start;
            while (!visited[v]) {
                visited[v] = 1;
                v = values_[v - 1];
            }
        }
        return count;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.values_ == b.values_;
    }

private:
    explicit Permutation(std::vector<int> v) : values_(std::move(v)) {}
    std::vector<int> values_;

    template <class Visitor>
    friend void enumerate_permutations(int, Visitor&&, int);
    template <class Visitor>
    friend void enumerate_permutations_with_first(int, int, Visitor&&);
};

/// Visits every permutation of S_n whose first value is `first`, in
/// lexicographic order of one-line notation. Building block for the
/// deterministic n-way partitioning of exhaustive runs.
template <class Visitor>
void enumerate_permutations_with_first(int n, int first, Visitor&& visit) {
    std::vector<int> v;
    v.reserve(n);
    v.push_back(first);
    for (int x = 1; x <= n; ++x)
        if (x != first) v.push_back(x);
    Permutation p(std::move(v));
    do {
        visit(static_cast<const Permutation&>(p));
    } while (std::next_permutation(p.values_.begin() + 1, p.values_.end()));
}

/// Visits all n! elements of S_n exactly once, lexicographically (S_0 is the
/// single empty permutation). Capped to keep accidental big-n runs out of CI.
template <class Visitor>
void enumerate_permutations(int n, Visitor&& visit, int cap) {
    if (n < 0) throw InvalidInputError("enumerate_permutations: negative n");
    if (n > cap) throw EnumerationCapError(n, cap);
    if (n == 0) {
        Permutation empty({});
        visit(static_cast<const Permutation&>(empty));
        return;
    }
    for (int first = 1; first <= n; ++first)
        enumerate_permutations_with_first(n, first, visit);
}

} // namespace hultman
