#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hultman/bigint.hpp"
#include "hultman/polynomial.hpp"
#include "hultman/series.hpp"
#include "hultman/tables.hpp"

namespace hultman {

/// Exponential generating function of the moment polynomials at a fixed
/// integer N: F(x,N) = (1/x^2) ((1-x)^{-N} - (1+x)^N), truncated at `order`.
/// The x^0 and x^1 coefficients of the difference must vanish before the
/// shift; n! [x^n] F equals p_n(N).
inline RationalSeries F_series(int N, std::size_t order) {
    if (N < 1) throw InvalidInputError("F_series: N must be a positive integer");
    const RationalSeries neg = binom_series(-1, -static_cast<long long>(N), order + 2);
    const RationalSeries pos = binom_series(+1, static_cast<long long>(N), order + 2);
    return (neg - pos).shifted_down(2, "F_series");
}

struct FCheckViolation {
    int n = 0;
    int N = 0;
    BigInt lhs;  // n! [x^n] F(x, N)
    BigInt rhs;  // p_n(N)
};

/// Checks n! [x^n] F(x,N) == p_n(N) for every n <= order and every N given.
/// Since both sides are polynomials in N of degree at most n+1, agreement at
/// n+2 distinct N values certifies the identity at that n; `certified_n`
/// lists the n for which that many points were supplied.
struct FVerifyReport {
    bool pass = true;
    std::vector<int> certified_n;
    std::vector<FCheckViolation> violations;
};

inline FVerifyReport verify_F_against_pn(const std::vector<int>& N_values,
                                         std::size_t order, const PnFamily& pn) {
    if (pn.n_max() < static_cast<int>(order))
        throw InvalidInputError("verify_F_against_pn: PnFamily must cover the order");
    FVerifyReport report;
    const std::set<int> distinct(N_values.begin(), N_values.end());
    for (int N : distinct) {
        const RationalSeries f = F_series(N, order);
        BigInt nfact = 1;
        for (std::size_t n = 0; n <= order; ++n) {
            if (n > 0) nfact *= static_cast<int>(n);
            const BigInt lhs = to_integer(BigRational(nfact) * f.coeff(n), "verify_F_against_pn");
            const BigInt rhs = pn.poly(static_cast<int>(n)).eval(N);
            if (lhs != rhs) {
                report.pass = false;
                report.violations.push_back({static_cast<int>(n), N, lhs, rhs});
            }
        }
    }
    for (std::size_t n = 0; n <= order; ++n)
        if (distinct.size() >= n + 2) report.certified_n.push_back(static_cast<int>(n));
    return report;
}

/// Ordinary generating function of a fixed genus column:
/// H_g(x) = sum_{n >= 2g} h_g(n) x^n, truncated at `order`.
inline RationalSeries Hg_series(int g, std::size_t order, const HultmanTable& h) {
    if (g < 0) throw InvalidInputError("Hg_series: negative genus");
    if (h.n_max() < static_cast<int>(order))
        throw InvalidInputError("Hg_series: table must cover the order");
    RationalSeries s(order);
    for (std::size_t n = 0; n <= order; ++n)
        s.set_coeff(n, BigRational(h.h(static_cast<int>(n), g)));
    return s;
}

struct PgPolynomial {
    enum class Provenance { series_truncation, ode_step };
    int g = 0;
    IntPolynomial poly;  // in x, valuation 2g, degree 4g-2 (P_0 = 1)
    Provenance provenance = Provenance::series_truncation;
};

inline const char* to_string(PgPolynomial::Provenance p) {
    return p == PgPolynomial::Provenance::series_truncation ? "series-truncation"
                                                            : "ode-step";
}

namespace detail {

inline int expected_pg_degree(int g) { return g == 0 ? 0 : 4 * g - 2; }

inline void check_pg_shape(const IntPolynomial& poly, int g, const char* context) {
    if (poly.valuation() != 2 * g || poly.degree() != expected_pg_degree(g))
        throw InternalConsistencyError(std::string(context) + ": numerator for g=" +
                                       std::to_string(g) + " has valuation " +
                                       std::to_string(poly.valuation()) + " and degree " +
                                       std::to_string(poly.degree()));
}

} // namespace detail

/// Recovers P_g as the polynomial part of H_g(x) * (1-x)^{4g+1}. Everything
/// above the expected degree must vanish inside an 8-coefficient guard
/// window; a nonzero guard coefficient aborts.
inline PgPolynomial Pg_via_truncation(int g, const HultmanTable& h) {
    if (g < 0) throw InvalidInputError("Pg_via_truncation: negative genus");
    constexpr int kGuard = 8;
    const int expected_degree = detail::expected_pg_degree(g);
    const std::size_t order = static_cast<std::size_t>(expected_degree + kGuard);
    if (h.n_max() < static_cast<int>(order))
        throw InvalidInputError("Pg_via_truncation: table must cover n = " +
                                std::to_string(order));

    const RationalSeries prod = one_minus_x_pow(4 * g + 1) * Hg_series(g, order, h);
    std::vector<BigInt> coeffs(expected_degree + 1);
    for (std::size_t i = 0; i <= order; ++i) {
        if (static_cast<int>(i) <= expected_degree) {
            coeffs[i] = to_integer(prod.coeff(i), "Pg_via_truncation");
        } else if (prod.coeff(i) != 0) {
            throw InternalConsistencyError(
                "Pg_via_truncation: guard coefficient x^" + std::to_string(i) +
                " = " + prod.coeff(i).str() + " for g=" + std::to_string(g));
        }
    }
    IntPolynomial poly(std::move(coeffs), "x");
    detail::check_pg_shape(poly, g, "Pg_via_truncation");
    return PgPolynomial{g, std::move(poly), PgPolynomial::Provenance::series_truncation};
}

/// Intermediates of one induction step from P_{g-1} to P_g, exposed so the
/// identities they satisfy can be tested directly.
struct OdeStepDetail {
    int g = 0;
    IntPolynomial h1;       // numerator of H~'_{g-1}  over (1-x)^{4g-2}
    IntPolynomial h2;       // numerator of H~''_{g-1} over (1-x)^{4g-1}
    IntPolynomial h3;       // numerator of H~'''_{g-1} over (1-x)^{4g}
    IntPolynomial q;        // numerator of (x^4 H~''' + 2x^3 H~'')/(1-x)^3 over (1-x)^{4g+3}
    std::vector<BigInt> r;  // partial-fraction residues, r[i] for 1/(1-x)^i, i = 0..4g+3
    IntPolynomial p_tilde;  // x^2 P_g
    PgPolynomial result;
};

/// One induction step: represent H~_{g-1} = x^2 P_{g-1} / (1-x)^{4g-3}
/// exactly, differentiate three times via (A/(1-x)^b)' = ((1-x)A' + bA)/(1-x)^{b+1},
/// expand the resulting numerator in powers of (1-x) to read off the
/// partial-fraction residues, antidifferentiate term by term with the
/// constant fixed by H~_g(0) = 0, and assemble x^2 P_g. Final coefficients
/// must come out integral with the constant term zero.
inline OdeStepDetail Pg_ode_step_detail(const PgPolynomial& prev) {
    const int g = prev.g + 1;
    OdeStepDetail d;
    d.g = g;

    const IntPolynomial one_minus_x({1, -1}, "x");
    const IntPolynomial prev_tilde = prev.poly.shifted_up(2);

    auto numerator_derivative = [&](const IntPolynomial& num, int denom_exp) {
        return one_minus_x * num.derivative() + BigInt(denom_exp) * num;
    };
    d.h1 = numerator_derivative(prev_tilde, 4 * g - 3);
    d.h2 = numerator_derivative(d.h1, 4 * g - 2);
    d.h3 = numerator_derivative(d.h2, 4 * g - 1);

    d.q = d.h3.shifted_up(4) + BigInt(2) * (one_minus_x * d.h2.shifted_up(3));
    if (d.q.valuation() != 2 * g + 1 || d.q.degree() != 4 * g)
        throw InternalConsistencyError("Pg_ode_step: numerator for g=" + std::to_string(g) +
                                       " has valuation " + std::to_string(d.q.valuation()) +
                                       " and degree " + std::to_string(d.q.degree()));

    // q / (1-x)^{4g+3} = sum_i r[i] / (1-x)^i with r[i] = c[4g+3-i], where the
    // c[j] expand q in powers of (1-x).
    const std::vector<BigInt> c = d.q.in_one_minus_x();
    const int beta = 4 * g + 3;
    d.r.assign(beta + 1, 0);
    for (std::size_t j = 0; j < c.size(); ++j) d.r[beta - static_cast<int>(j)] = c[j];

    // x^2 P_g = sum_{i=2}^{4g+2} (r[i+1]/i) ((1-x)^{4g+2-i} - (1-x)^{4g+2}).
    std::vector<BigRational> acc(4 * g + 3);
    const IntPolynomial top = one_minus_x_pow(4 * g + 2);
    for (int i = 2; i <= 4 * g + 2; ++i) {
        if (d.r[i + 1] == 0) continue;
        const BigRational weight(d.r[i + 1], i);
        const IntPolynomial low = one_minus_x_pow(4 * g + 2 - i);
        for (int j = 0; j <= 4 * g + 2; ++j) {
            const BigInt term = low.coeff(j) - top.coeff(j);
            if (term != 0) acc[j] += weight * term;
        }
    }

    std::vector<BigInt> tilde_coeffs(acc.size());
    for (std::size_t j = 0; j < acc.size(); ++j)
        tilde_coeffs[j] = to_integer(acc[j], "Pg_ode_step");
    if (tilde_coeffs[0] != 0)
        throw InternalConsistencyError("Pg_ode_step: constant term " + tilde_coeffs[0].str() +
                                       " for g=" + std::to_string(g) + ", expected 0");
    d.p_tilde = IntPolynomial(std::move(tilde_coeffs), "x");

    IntPolynomial poly = d.p_tilde.shifted_down(2);
    detail::check_pg_shape(poly, g, "Pg_ode_step");
    d.result = PgPolynomial{g, std::move(poly), PgPolynomial::Provenance::ode_step};
    return d;
}

inline PgPolynomial Pg_via_ode_step(const PgPolynomial& prev) {
    return Pg_ode_step_detail(prev).result;
}

inline PgPolynomial P0() {
    return PgPolynomial{0, IntPolynomial::constant(1, "x"),
                        PgPolynomial::Provenance::ode_step};
}

/// The whole chain P_0..P_{g_max} by repeated induction steps.
inline std::vector<PgPolynomial> Pg_chain_via_ode(int g_max) {
    std::vector<PgPolynomial> chain;
    chain.push_back(P0());
    for (int g = 1; g <= g_max; ++g) chain.push_back(Pg_via_ode_step(chain.back()));
    return chain;
}

/// The three exact identities P_g must satisfy, plus shape bounds. Positivity
/// of the coefficients is recorded as an observation only; it never fails the
/// report.
struct PgPropertyReport {
    int g = 0;
    bool lowest_coeff_ok = false;   // a_{g,2g} = (2g)!/(g+1)
    bool leading_coeff_ok = false;  // a_{g,4g-2} = 1
    bool value_at_one_ok = false;   // P_g(1) = (4g-1)!!/(2g+1)
    bool valuation_ok = false;
    bool degree_ok = false;
    bool all_coeffs_positive = false;  // observed, not required
    bool pass = false;
};

inline PgPropertyReport verify_Pg_properties(const PgPolynomial& p) {
    if (p.g < 1) throw InvalidInputError("verify_Pg_properties: needs g >= 1");
    const int g = p.g;
    PgPropertyReport r;
    r.g = g;
    r.lowest_coeff_ok =
        p.poly.coeff(2 * g) == exact_div(factorial(2 * g), g + 1, "verify_Pg_properties");
    r.leading_coeff_ok = p.poly.coeff(4 * g - 2) == 1;
    r.value_at_one_ok =
        p.poly.eval(1) ==
        exact_div(double_factorial(4 * g - 1), 2 * g + 1, "verify_Pg_properties");
    r.valuation_ok = p.poly.valuation() == 2 * g;
    r.degree_ok = p.poly.degree() == 4 * g - 2;
    r.all_coeffs_positive = true;
    for (int i = 2 * g; i <= 4 * g - 2; ++i)
        if (p.poly.coeff(i) <= 0) r.all_coeffs_positive = false;
    r.pass = r.lowest_coeff_ok && r.leading_coeff_ok && r.value_at_one_ok &&
             r.valuation_ok && r.degree_ok;
    return r;
}

/// P_g(1) grows by the exact ratio (4g-1)(4g-3)(2g-1)/(2g+1) from P_{g-1}(1).
struct PgOneRecursionReport {
    int g_max = 0;
    bool pass = true;
    std::vector<int> failing_g;
};

inline PgOneRecursionReport verify_Pg_one_recursion(int g_max) {
    if (g_max < 1) throw InvalidInputError("verify_Pg_one_recursion: needs g_max >= 1");
    PgOneRecursionReport report;
    report.g_max = g_max;
    const std::vector<PgPolynomial> chain = Pg_chain_via_ode(g_max);
    for (int g = 1; g <= g_max; ++g) {
        const BigInt lhs = BigInt(2 * g + 1) * chain[g].poly.eval(1);
        const BigInt rhs = BigInt(4 * g - 1) * (4 * g - 3) * (2 * g - 1) *
                           chain[g - 1].poly.eval(1);
        if (lhs != rhs) {
            report.pass = false;
            report.failing_g.push_back(g);
        }
    }
    return report;
}

} // namespace hultman
