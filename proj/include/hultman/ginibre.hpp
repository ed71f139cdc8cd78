#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "hultman/bigint.hpp"
#include "hultman/parallel.hpp"
#include "hultman/tables.hpp"

namespace hultman {

inline constexpr std::uint64_t kDefaultSeed = 123456789ull;

/// Monte Carlo configuration for one trace-moment estimate. Every field,
/// including the seed, is part of the reproducibility contract: identical
/// configs give bit-identical estimates no matter how many threads run.
struct MCConfig {
    int N = 1;                          // matrix dimension
    int n = 0;                          // moment order
    std::uint64_t samples = 0;          // >= 2 so the sample variance exists
    std::uint64_t seed = kDefaultSeed;
};

struct MCEstimate {
    double mean = 0.0;
    double std_error = 0.0;  // sample std dev / sqrt(samples)
    std::uint64_t samples = 0;
    BigInt exact_value;      // p_n(N)
    double z_score = 0.0;    // (mean - exact)/std_error; 0 or +inf when std_error = 0
};

namespace detail {

inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

/// splitmix64 stream whose starting state is derived from (seed, sample
/// index), so sample substreams are independent of iteration order and the
/// serial/parallel split.
class SampleRng {
public:
    SampleRng(std::uint64_t seed, std::uint64_t sample_index)
        : state_(mix64(seed ^ mix64(sample_index * 0x9E3779B97F4A7C15ull +
                                    0xD1B54A32D192ED03ull))) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    double uniform_open01() {  // (0, 1]
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    double uniform_halfopen01() {  // [0, 1)
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Box-Muller pair of independent standard normals.
    std::pair<double, double> normal_pair() {
        constexpr double two_pi = 6.283185307179586476925286766559;
        const double radius = std::sqrt(-2.0 * std::log(uniform_open01()));
        const double angle = two_pi * uniform_halfopen01();
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

private:
    std::uint64_t state_;
};

/// One draw of Tr(X^n X*^n) = ||X^n||_F^2 for an N x N complex Ginibre
/// matrix with E[x conj(x)] = 1 (real and imaginary parts N(0, 1/2)).
inline double trace_moment_draw(int N, int n, SampleRng& rng,
                                std::vector<std::complex<double>>& x,
                                std::vector<std::complex<double>>& power,
                                std::vector<std::complex<double>>& scratch) {
    if (n == 0) return static_cast<double>(N);

    const double inv_sqrt2 = 0.7071067811865475244;  // 1/sqrt(2)
    x.resize(static_cast<std::size_t>(N) * N);
    for (auto& entry : x) {
        const auto [re, im] = rng.normal_pair();
        entry = {re * inv_sqrt2, im * inv_sqrt2};
    }

    power = x;
    scratch.resize(x.size());
    for (int step = 2; step <= n; ++step) {
        for (int i = 0; i < N; ++i) {
            for (int j = 0; j < N; ++j) {
                std::complex<double> acc = 0.0;
                for (int l = 0; l < N; ++l)
                    acc += x[static_cast<std::size_t>(i) * N + l] *
                           power[static_cast<std::size_t>(l) * N + j];
                scratch[static_cast<std::size_t>(i) * N + j] = acc;
            }
        }
        power.swap(scratch);
    }

    // Kahan-compensated sum of |entries|^2.
    double sum = 0.0, comp = 0.0;
    for (const auto& entry : power) {
        const double term = std::norm(entry) - comp;
        const double t = sum + term;
        comp = (t - sum) - term;
        sum = t;
    }
    return sum;
}

/// Streaming (count, mean, M2) accumulator; chunks combine associatively in
/// a fixed order so the final moments do not depend on the thread count.
struct MomentAccumulator {
    std::uint64_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double value) {
        ++count;
        const double delta = value - mean;
        mean += delta / static_cast<double>(count);
        m2 += delta * (value - mean);
    }

    void merge(const MomentAccumulator& other) {
        if (other.count == 0) return;
        if (count == 0) {
            *this = other;
            return;
        }
        const double total = static_cast<double>(count + other.count);
        const double delta = other.mean - mean;
        mean += delta * static_cast<double>(other.count) / total;
        m2 += other.m2 + delta * delta * static_cast<double>(count) *
                             static_cast<double>(other.count) / total;
        count += other.count;
    }
};

} // namespace detail

/// Estimates p_n(N) = E[Tr(X^n X*^n)] by plain Monte Carlo and attaches the
/// exact value and z-score. Samples are split into fixed-size chunks with
/// per-sample RNG substreams and merged in chunk order, so the result is a
/// pure function of the config.
inline MCEstimate sample_trace_moment(const MCConfig& cfg, const PnFamily& pn,
                                      int threads = 1) {
    if (cfg.N < 1) throw InvalidInputError("sample_trace_moment: N must be positive");
    if (cfg.n < 0) throw InvalidInputError("sample_trace_moment: negative moment order");
    if (cfg.samples < 2)
        throw InvalidInputError("sample_trace_moment: need at least 2 samples");
    if (pn.n_max() < cfg.n)
        throw InvalidInputError("sample_trace_moment: PnFamily does not cover n");

    constexpr std::uint64_t kChunk = 1 << 14;
    const std::uint64_t chunk_count = (cfg.samples + kChunk - 1) / kChunk;
    std::vector<detail::MomentAccumulator> chunks(chunk_count);

    run_indexed(chunk_count, threads, [&](std::size_t chunk) {
        std::vector<std::complex<double>> x, power, scratch;
        const std::uint64_t begin = chunk * kChunk;
        const std::uint64_t end = std::min(begin + kChunk, cfg.samples);
        detail::MomentAccumulator acc;
        for (std::uint64_t s = begin; s < end; ++s) {
            detail::SampleRng rng(cfg.seed, s);
            const double value = detail::trace_moment_draw(cfg.N, cfg.n, rng, x, power, scratch);
            if (!std::isfinite(value))
                throw InternalConsistencyError(
                    "sample_trace_moment: non-finite trace moment at sample " +
                    std::to_string(s));
            acc.add(value);
        }
        chunks[chunk] = acc;
    });

    detail::MomentAccumulator total;
    for (const auto& chunk : chunks) total.merge(chunk);

    MCEstimate est;
    est.samples = cfg.samples;
    est.mean = total.mean;
    const double variance =
        total.count > 1 ? total.m2 / static_cast<double>(total.count - 1) : 0.0;
    est.std_error = std::sqrt(std::max(variance, 0.0) /
                              static_cast<double>(total.count));
    est.exact_value = pn.poly(cfg.n).eval(cfg.N);
    const double exact = est.exact_value.convert_to<double>();
    if (est.std_error > 0.0) {
        est.z_score = (est.mean - exact) / est.std_error;
    } else {
        est.z_score = est.mean == exact ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return est;
}

struct MCReport {
    MCEstimate estimate;
    double z_threshold = 4.0;
    bool pass = false;
};

inline MCReport mc_verify(const MCConfig& cfg, const PnFamily& pn,
                          double z_threshold = 4.0, int threads = 1) {
    MCReport report;
    report.estimate = sample_trace_moment(cfg, pn, threads);
    report.z_threshold = z_threshold;
    report.pass = std::abs(report.estimate.z_score) <= z_threshold;
    return report;
}

} // namespace hultman
