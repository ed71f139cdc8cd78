#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "hultman/ginibre.hpp"

using namespace hultman;

TEST_CASE("identical configs give bit-identical estimates") {
    const PnFamily family = p_family_via_recursion(4);
    const MCConfig cfg{2, 3, 50000, 42};
    const MCEstimate a = sample_trace_moment(cfg, family);
    const MCEstimate b = sample_trace_moment(cfg, family);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);
    CHECK(a.z_score == b.z_score);
    CHECK(a.exact_value == b.exact_value);
}

TEST_CASE("thread count does not change the estimate") {
    const PnFamily family = p_family_via_recursion(4);
    const MCConfig cfg{2, 2, 40000, 7};  // > one chunk
    const MCEstimate serial = sample_trace_moment(cfg, family, 1);
    const MCEstimate parallel = sample_trace_moment(cfg, family, 4);
    CHECK(serial.mean == parallel.mean);
    CHECK(serial.std_error == parallel.std_error);
    CHECK(serial.z_score == parallel.z_score);
}

TEST_CASE("zero moment order is exact") {
    const PnFamily family = p_family_via_recursion(1);
    const MCEstimate est = sample_trace_moment({1, 0, 100, 5}, family);
    CHECK(est.mean == 1.0);
    CHECK(est.std_error == 0.0);
    CHECK(est.z_score == 0.0);
    CHECK(est.exact_value == 1);

    const MCEstimate est3 = sample_trace_moment({3, 0, 100, 5}, family);
    CHECK(est3.mean == 3.0);
    CHECK(est3.z_score == 0.0);
}

TEST_CASE("scalar moments match the exact values") {
    const PnFamily family = p_family_via_recursion(4);

    // E|x|^2 = 1 = p_1(1)
    const MCReport first = mc_verify({1, 1, 10000, 11}, family);
    CHECK(first.estimate.exact_value == 1);
    CHECK(first.pass);

    // E|x|^4 = 2 = p_2(1)
    const MCReport second = mc_verify({1, 2, 100000, 11}, family);
    CHECK(second.estimate.exact_value == 2);
    CHECK(second.pass);
}

TEST_CASE("matrix moment targets come from the exact polynomials") {
    const PnFamily family = p_family_via_recursion(4);
    const MCEstimate est = sample_trace_moment({2, 3, 1000, 3}, family);
    CHECK(est.exact_value == 36);  // p_3(2) = 16 + 20
    const MCEstimate est2 = sample_trace_moment({3, 4, 1000, 3}, family);
    CHECK(est2.exact_value == 672);  // p_4(3) = 243 + 405 + 24
}

TEST_CASE("Frobenius route equals the direct product trace") {
    // Draw one matrix through the sampler, then recompute Tr(X^n X*^n) by
    // forming the full product; both routes must agree to rounding.
    const int N = 3;
    const int n = 4;
    std::vector<std::complex<double>> x, power, scratch;
    detail::SampleRng rng(99, 0);
    const double frobenius = detail::trace_moment_draw(N, n, rng, x, power, scratch);

    // Rebuild the same matrix from the same substream.
    detail::SampleRng rng2(99, 0);
    std::vector<std::complex<double>> m(N * N);
    const double inv_sqrt2 = 0.7071067811865475244;
    for (auto& entry : m) {
        const auto [re, im] = rng2.normal_pair();
        entry = {re * inv_sqrt2, im * inv_sqrt2};
    }
    auto matmul = [&](const std::vector<std::complex<double>>& a,
                      const std::vector<std::complex<double>>& b) {
        std::vector<std::complex<double>> c(N * N);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                std::complex<double> acc = 0.0;
                for (int l = 0; l < N; ++l) acc += a[i * N + l] * b[l * N + j];
                c[i * N + j] = acc;
            }
        return c;
    };
    std::vector<std::complex<double>> xn = m;
    for (int t = 2; t <= n; ++t) xn = matmul(m, xn);
    std::vector<std::complex<double>> xn_star(N * N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) xn_star[i * N + j] = std::conj(xn[j * N + i]);
    const auto product = matmul(xn, xn_star);
    std::complex<double> trace = 0.0;
    for (int i = 0; i < N; ++i) trace += product[i * N + i];

    CHECK(std::abs(trace.imag()) < 1e-12 * std::abs(trace.real()));
    CHECK(frobenius == Catch::Approx(trace.real()).epsilon(1e-12));
}

TEST_CASE("z-scores stay in band across seeds") {
    const PnFamily family = p_family_via_recursion(4);
    int in_band = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const MCEstimate est = sample_trace_moment({2, 3, 100000, seed}, family);
        if (std::abs(est.z_score) <= 3.0) ++in_band;
    }
    CHECK(in_band >= 17);
}

TEST_CASE("invalid configurations are rejected") {
    const PnFamily family = p_family_via_recursion(4);
    CHECK_THROWS_AS(sample_trace_moment({2, 3, 1, 0}, family), InvalidInputError);
    CHECK_THROWS_AS(sample_trace_moment({0, 3, 100, 0}, family), InvalidInputError);
    CHECK_THROWS_AS(sample_trace_moment({2, 9, 100, 0}, family), InvalidInputError);
}
