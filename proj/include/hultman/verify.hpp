#pragma once

#include <chrono>
#include <sstream>
#include <string>
#include <vector>

#include "hultman/genfunc.hpp"
#include "hultman/ginibre.hpp"
#include "hultman/polygon.hpp"
#include "hultman/tables.hpp"

namespace hultman {

// ---------------------------------------------------------------------------
// Pinned reference tables the suites verify against.

inline const std::vector<IntPolynomial>& reference_moment_polynomials() {
    static const std::vector<IntPolynomial> table = [] {
        const std::vector<std::vector<BigInt>> coeffs = {
            {0, 1},
            {0, 0, 1},
            {0, 1, 0, 1},
            {0, 0, 5, 0, 1},
            {0, 8, 0, 15, 0, 1},
            {0, 0, 84, 0, 35, 0, 1},
            {0, 180, 0, 469, 0, 70, 0, 1},
            {0, 0, 3044, 0, 1869, 0, 126, 0, 1},
            {0, 8064, 0, 26060, 0, 5985, 0, 210, 0, 1},
            {0, 0, 193248, 0, 152900, 0, 16401, 0, 330, 0, 1},
        };
        std::vector<IntPolynomial> polys;
        for (const auto& c : coeffs) polys.emplace_back(c, "N");
        return polys;
    }();
    return table;
}

inline const std::vector<IntPolynomial>& reference_numerator_polynomials() {
    static const std::vector<IntPolynomial> table = [] {
        const std::vector<std::vector<BigInt>> coeffs = {
            {1},
            {0, 0, 1},
            {0, 0, 0, 0, 8, 12, 1},
            {0, 0, 0, 0, 0, 0, 180, 704, 528, 72, 1},
            {0, 0, 0, 0, 0, 0, 0, 0, 8064, 56160, 98124, 53792, 8760, 324, 1},
            {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 604800, 6356160, 19083456, 21676144,
             9936360, 1759520, 103040, 1344, 1},
        };
        std::vector<IntPolynomial> polys;
        for (const auto& c : coeffs) polys.emplace_back(c, "x");
        return polys;
    }();
    return table;
}

// ---------------------------------------------------------------------------

enum class Tier { fast, slow };

inline const char* to_string(Tier t) { return t == Tier::fast ? "fast" : "slow"; }

struct VerifyOptions {
    Tier tier = Tier::fast;
    int threads = 1;
    std::uint64_t seed = kDefaultSeed;
    int enum_cap = kDefaultEnumerationCap;
};

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    bool pass = true;
    std::vector<VerifyCheck> checks;
    double elapsed_ms = 0.0;

    void add(std::string name, bool ok, std::string detail = "") {
        pass = pass && ok;
        checks.push_back({std::move(name), ok, std::move(detail)});
    }
};

namespace detail {

class SuiteTimer {
public:
    explicit SuiteTimer(SuiteResult& result) : result_(result) {}
    ~SuiteTimer() {
        result_.elapsed_ms =
            std::chrono::duration<double, std::milli>(clock::now() - start_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    SuiteResult& result_;
    clock::time_point start_ = clock::now();
};

} // namespace detail

/// Brute-force H(n,k) over all of S_n against 2 S(n+2,k)/((n+1)(n+2)),
/// exact equality for all n <= 9.
inline SuiteResult run_suite_eq1(const VerifyOptions& opts) {
    SuiteResult result;
    result.suite = "eq1";
    detail::SuiteTimer timer(result);
    const int n_max = 9;
    const HultmanTable brute = hultman_table_brute(n_max, opts.enum_cap, opts.threads);
    const StirlingTable st(n_max + 2);
    for (int n = 0; n <= n_max; ++n) {
        bool ok = true;
        for (int k = 1; k <= n + 1; ++k)
            ok = ok && brute.H(n, k) == hultman_via_stirling(n, k, st);
        result.add("H(" + std::to_string(n) + ",k) brute == stirling formula", ok);
    }
    return result;
}

/// Vertex orbits of the glued 2n-gon equal alternating cycle counts for
/// every permutation, n <= 7 (fast) or n <= 9 (slow).
inline SuiteResult run_suite_theorem1(const VerifyOptions& opts) {
    SuiteResult result;
    result.suite = "theorem1";
    detail::SuiteTimer timer(result);
    const int n_max = opts.tier == Tier::fast ? 7 : 9;
    for (int n = 0; n <= n_max; ++n) {
        const Theorem1Report report = verify_theorem1(n, opts.enum_cap, opts.threads);
        std::ostringstream detail;
        detail << report.permutations_checked << " permutations";
        if (report.first_counterexample) {
            detail << "; first counterexample:";
            for (int v : *report.first_counterexample) detail << " " << v;
        }
        result.add("gluing orbits == alternating cycles, n=" + std::to_string(n),
                   report.pass, detail.str());
    }
    return result;
}

/// The moment-polynomial battery: recursion vs brute force, the pinned
/// p_0..p_9 table, the pairing-sum route, and big-n structural invariants.
inline SuiteResult run_suite_pn(const VerifyOptions& opts) {
    SuiteResult result;
    result.suite = "pn";
    detail::SuiteTimer timer(result);

    const HultmanTable brute = hultman_table_brute(9, opts.enum_cap, opts.threads);
    const HultmanTable recursion_small = h_table_via_recursion(9);
    bool equal = true;
    for (int n = 0; n <= 9; ++n)
        for (int k = 1; k <= n + 1; ++k)
            equal = equal && brute.H(n, k) == recursion_small.H(n, k);
    result.add("recursion table == brute table, n<=9", equal);

    {
        bool ok = true;
        std::string detail;
        try {
            const HultmanTable big = h_table_via_recursion(200);
            ok = big.row_sum(200) == factorial(200);
            detail = "all divisions exact through n=200";
        } catch (const InternalConsistencyError& e) {
            ok = false;
            detail = e.what();
        }
        result.add("recursion extends exactly to n=200", ok, detail);
    }

    const PnFamily family = p_family_via_recursion(30);
    {
        const auto& expected = reference_moment_polynomials();
        bool ok = true;
        for (int n = 0; n <= 9; ++n) ok = ok && family.poly(n) == expected[n];
        result.add("recursion reproduces the pinned p_0..p_9", ok);
    }

    {
        const int wick_max = opts.tier == Tier::fast ? 8 : 9;
        bool ok = true;
        for (int n = 0; n <= wick_max; ++n)
            ok = ok && wick_polynomial(n, opts.enum_cap, opts.threads) == family.poly(n);
        result.add("pairing-sum polynomial == p_n, n<=" + std::to_string(wick_max), ok);
    }

    {
        const HultmanTable stirling = hultman_table_stirling(30);
        const HultmanTable recursion = h_table_via_recursion(30);
        bool ok = true;
        for (int n = 0; n <= 30; ++n) {
            ok = ok && stirling.row_sum(n) == factorial(n);
            ok = ok && recursion.row_sum(n) == factorial(n);
            ok = ok && family.poly(n).eval(1) == factorial(n);
            for (int k = 1; k <= n + 1; ++k) {
                if ((n - k) % 2 == 0) {
                    ok = ok && stirling.H(n, k) == 0 && recursion.H(n, k) == 0;
                } else {
                    ok = ok && stirling.H(n, k) == recursion.H(n, k);
                }
            }
        }
        result.add("row sums n! and parity zeros, all sources, n<=30", ok);
    }
    return result;
}

/// The numerator-polynomial battery: the pinned P_0..P_5 table, agreement of
/// the two independent algorithms, and the exact identities through g = 8.
inline SuiteResult run_suite_pg(const VerifyOptions& opts) {
    SuiteResult result;
    result.suite = "pg";
    detail::SuiteTimer timer(result);

    const int chain_max = opts.tier == Tier::fast ? 6 : 8;
    const int g_props = 8;
    const HultmanTable table = h_table_via_recursion(4 * g_props + 6);

    {
        const auto& expected = reference_numerator_polynomials();
        bool ok = true;
        for (int g = 0; g <= 5; ++g) ok = ok && Pg_via_truncation(g, table).poly == expected[g];
        result.add("series truncation reproduces the pinned P_0..P_5", ok);
    }

    {
        bool ok = true;
        std::string detail;
        try {
            const auto chain = Pg_chain_via_ode(chain_max);
            for (int g = 0; g <= chain_max; ++g)
                ok = ok && chain[g].poly == Pg_via_truncation(g, table).poly;
        } catch (const InternalConsistencyError& e) {
            ok = false;
            detail = e.what();
        }
        result.add("induction chain == series truncation, g<=" + std::to_string(chain_max),
                   ok, detail);
    }

    {
        bool ok = true;
        BigInt expected_at_one = 1;  // value at g=1
        for (int g = 1; g <= g_props; ++g) {
            const PgPolynomial p = Pg_via_truncation(g, table);
            const PgPropertyReport report = verify_Pg_properties(p);
            ok = ok && report.pass;
            if (g >= 2)
                expected_at_one = exact_div(
                    expected_at_one * BigInt(4 * g - 1) * (4 * g - 2) * (4 * g - 3),
                    4 * g + 2, "run_suite_pg");
            ok = ok && p.poly.eval(1) == expected_at_one;
            ok = ok && expected_at_one ==
                           exact_div(double_factorial(4 * g - 1), 2 * g + 1, "run_suite_pg");
        }
        result.add("coefficient and value-at-one identities, 1<=g<=8", ok);
    }
    return result;
}

/// n! [x^n] F(x,N) == p_n(N) for N in 1..12 and n <= 20; the identity is
/// fully certified for each n <= 10 by degree counting.
inline SuiteResult run_suite_F(const VerifyOptions& opts) {
    (void)opts;
    SuiteResult result;
    result.suite = "F";
    detail::SuiteTimer timer(result);
    const std::size_t order = 20;
    const PnFamily family = p_family_via_recursion(static_cast<int>(order));
    std::vector<int> Ns;
    for (int N = 1; N <= 12; ++N) Ns.push_back(N);
    const FVerifyReport report = verify_F_against_pn(Ns, order, family);

    std::ostringstream detail;
    detail << report.violations.size() << " mismatches; certified n <= "
           << (report.certified_n.empty() ? -1 : report.certified_n.back());
    result.add("closed form matches p_n(N), N in 1..12, n<=20", report.pass, detail.str());
    result.add("polynomial identity certified for n<=10",
               !report.certified_n.empty() && report.certified_n.back() >= 10);
    return result;
}

/// Monte Carlo estimates of the trace moments against the exact values,
/// reproducibility-pinned by the seed.
inline SuiteResult run_suite_mc(const VerifyOptions& opts) {
    SuiteResult result;
    result.suite = "mc";
    detail::SuiteTimer timer(result);
    const PnFamily family = p_family_via_recursion(4);

    const auto run = [&](int N, int n, const BigInt& expected_exact) {
        const MCConfig cfg{N, n, 1000000, opts.seed};
        const MCReport report = mc_verify(cfg, family, 4.0, opts.threads);
        std::ostringstream detail;
        detail << "mean=" << report.estimate.mean << " std_error=" << report.estimate.std_error
               << " z=" << report.estimate.z_score << " seed=" << opts.seed;
        result.add("trace moment N=" + std::to_string(N) + " n=" + std::to_string(n) +
                       " within 4 sigma of " + expected_exact.str(),
                   report.pass && report.estimate.exact_value == expected_exact,
                   detail.str());
    };
    run(2, 3, 36);
    run(3, 4, 672);
    return result;
}

inline const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {"eq1", "theorem1", "pn", "pg", "F", "mc"};
    return names;
}

inline SuiteResult run_verify_suite(const std::string& name, const VerifyOptions& opts) {
    if (name == "eq1") return run_suite_eq1(opts);
    if (name == "theorem1") return run_suite_theorem1(opts);
    if (name == "pn") return run_suite_pn(opts);
    if (name == "pg") return run_suite_pg(opts);
    if (name == "F") return run_suite_F(opts);
    if (name == "mc") return run_suite_mc(opts);
    throw InvalidInputError("unknown verify suite: " + name);
}

inline std::vector<SuiteResult> run_verify(const std::string& suite, const VerifyOptions& opts) {
    std::vector<SuiteResult> results;
    if (suite == "all") {
        for (const std::string& name : verify_suite_names())
            results.push_back(run_verify_suite(name, opts));
    } else {
        results.push_back(run_verify_suite(suite, opts));
    }
    return results;
}

} // namespace hultman
