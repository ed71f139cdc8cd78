#include <catch2/catch_amalgamated.hpp>

#include "hultman/genfunc.hpp"
#include "reference_values.hpp"

using namespace hultman;

TEST_CASE("F series at N=1 is the geometric series") {
    const RationalSeries f = F_series(1, 15);
    for (std::size_t n = 0; n <= 15; ++n) CHECK(f.coeff(n) == 1);
}

TEST_CASE("F series coefficients recover p_n(N)") {
    // 2! [x^2] F(x,2) = p_2(2) = 8 + 2
    CHECK(BigRational(2) * F_series(2, 4).coeff(2) == 10);
    // [x^0] F(x,3) = p_0(3) = 3
    CHECK(F_series(3, 4).coeff(0) == 3);
    CHECK_THROWS_AS(F_series(0, 4), InvalidInputError);
}

TEST_CASE("F series agrees with the moment polynomials") {
    const PnFamily family = p_family_via_recursion(10);
    std::vector<int> Ns;
    for (int N = 1; N <= 12; ++N) Ns.push_back(N);

    const FVerifyReport report = verify_F_against_pn(Ns, 10, family);
    CHECK(report.pass);
    CHECK(report.violations.empty());
    // 12 evaluation points certify the identity for every n with n+2 <= 12.
    REQUIRE(report.certified_n.size() == 11);
    CHECK(report.certified_n.front() == 0);
    CHECK(report.certified_n.back() == 10);
}

TEST_CASE("a single evaluation point checks but certifies nothing") {
    const PnFamily family = p_family_via_recursion(4);
    const FVerifyReport report = verify_F_against_pn({1}, 4, family);
    CHECK(report.pass);
    CHECK(report.certified_n.empty());
}

TEST_CASE("genus column series") {
    const HultmanTable t = h_table_via_recursion(12);

    const RationalSeries h0 = Hg_series(0, 8, t);
    for (std::size_t n = 0; n <= 8; ++n) CHECK(h0.coeff(n) == 1);

    const RationalSeries h1 = Hg_series(1, 4, t);
    CHECK(h1.coeff(0) == 0);
    CHECK(h1.coeff(1) == 0);
    CHECK(h1.coeff(2) == 1);
    CHECK(h1.coeff(3) == 5);
    CHECK(h1.coeff(4) == 15);

    const RationalSeries h2 = Hg_series(2, 3, t);
    for (std::size_t n = 0; n <= 3; ++n) CHECK(h2.coeff(n) == 0);
}

TEST_CASE("numerator polynomials by series truncation") {
    const HultmanTable t = h_table_via_recursion(30);
    const auto expected = reference::numerator_polynomials();
    for (int g = 0; g <= 5; ++g) {
        INFO("g=" << g);
        const PgPolynomial p = Pg_via_truncation(g, t);
        CHECK(p.poly == expected[g]);
        CHECK(p.provenance == PgPolynomial::Provenance::series_truncation);
    }
    CHECK_THROWS_AS(Pg_via_truncation(7, t), InvalidInputError);  // table too small
}

TEST_CASE("numerator polynomials by the induction step") {
    const PgPolynomial p1 = Pg_via_ode_step(P0());
    CHECK(p1.poly == IntPolynomial({0, 0, 1}));

    const PgPolynomial p2 = Pg_via_ode_step(p1);
    CHECK(p2.poly == reference::numerator_polynomials()[2]);
    CHECK(p2.provenance == PgPolynomial::Provenance::ode_step);
}

TEST_CASE("both numerator algorithms agree through g = 6") {
    const HultmanTable t = h_table_via_recursion(4 * 6 + 6);
    const auto chain = Pg_chain_via_ode(6);
    for (int g = 0; g <= 6; ++g) {
        INFO("g=" << g);
        CHECK(chain[g].poly == Pg_via_truncation(g, t).poly);
    }
}

TEST_CASE("induction-step intermediates satisfy the exact identities") {
    auto chain = Pg_chain_via_ode(5);
    for (int g = 1; g <= 5; ++g) {
        const OdeStepDetail d = Pg_ode_step_detail(chain[g - 1]);
        const BigInt prev_at_one = chain[g - 1].poly.eval(1);
        INFO("g=" << g);
        CHECK(d.h1.eval(1) == BigInt(4 * g - 3) * prev_at_one);
        CHECK(d.h2.eval(1) == BigInt(4 * g - 2) * (4 * g - 3) * prev_at_one);
        // leading data of the third-derivative numerator combination
        CHECK(d.q.coeff(2 * g + 1) == 2 * factorial(2 * g));
        CHECK(d.q.coeff(4 * g) == 2);
        // the top partial-fraction residue carries the value at 1
        CHECK(d.r[4 * g + 3] == BigInt(4 * g - 1) * d.h2.eval(1));
        CHECK(BigInt(4 * g + 2) * d.result.poly.eval(1) == d.r[4 * g + 3]);
    }
}

TEST_CASE("numerator polynomial properties") {
    const PgPolynomial p2{2, reference::numerator_polynomials()[2],
                          PgPolynomial::Provenance::series_truncation};
    const PgPropertyReport r2 = verify_Pg_properties(p2);
    CHECK(r2.pass);
    CHECK(r2.all_coeffs_positive);
    CHECK(p2.poly.coeff(4) == 8);
    CHECK(p2.poly.coeff(6) == 1);
    CHECK(p2.poly.eval(1) == 21);

    const PgPropertyReport r1 = verify_Pg_properties(
        PgPolynomial{1, IntPolynomial({0, 0, 1}), PgPolynomial::Provenance::ode_step});
    CHECK(r1.pass);

    const HultmanTable t = h_table_via_recursion(4 * 7 + 6);
    const PgPropertyReport r7 = verify_Pg_properties(Pg_via_truncation(7, t));
    CHECK(r7.pass);
    CHECK(r7.all_coeffs_positive);

    CHECK_THROWS_AS(verify_Pg_properties(P0()), InvalidInputError);

    // a wrong polynomial is reported, not thrown
    const PgPropertyReport bad = verify_Pg_properties(
        PgPolynomial{1, IntPolynomial({0, 0, 2}), PgPolynomial::Provenance::ode_step});
    CHECK(!bad.pass);
    CHECK(!bad.leading_coeff_ok);
}

TEST_CASE("value-at-one recursion") {
    const PgOneRecursionReport report = verify_Pg_one_recursion(5);
    CHECK(report.pass);
    CHECK(report.failing_g.empty());

    // explicit g=2 instance: 5 * 21 = 7*5*3 * 1
    CHECK(BigInt(5) * 21 == BigInt(7) * 5 * 3 * 1);
}

TEST_CASE("numerator over (1-x)^{4g+1} expands back to the genus column") {
    const int order = 24;
    const HultmanTable t = h_table_via_recursion(order);
    for (int g = 1; g <= 3; ++g) {
        const PgPolynomial p = Pg_via_truncation(g, h_table_via_recursion(4 * g + 6));
        const RationalSeries expanded =
            p.poly * binom_series(-1, -(4 * g + 1), order);
        const RationalSeries column = Hg_series(g, order, t);
        INFO("g=" << g);
        CHECK(expanded == column);
    }
}
