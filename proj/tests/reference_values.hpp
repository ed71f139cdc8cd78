#pragma once

// Known-good reference tables used as golden values across the test suites:
// the first ten moment polynomials p_n(N) and the first six numerator
// polynomials P_g(x) of the genus generating functions H_g(x).

#include <vector>

#include "hultman/polynomial.hpp"

namespace reference {

inline std::vector<hultman::IntPolynomial> moment_polynomials() {
    using hultman::BigInt;
    using hultman::IntPolynomial;
    const std::vector<std::vector<BigInt>> coeffs = {
        {0, 1},                                            // N
        {0, 0, 1},                                         // N^2
        {0, 1, 0, 1},                                      // N^3 + N
        {0, 0, 5, 0, 1},                                   // N^4 + 5N^2
        {0, 8, 0, 15, 0, 1},                               // N^5 + 15N^3 + 8N
        {0, 0, 84, 0, 35, 0, 1},                           // N^6 + 35N^4 + 84N^2
        {0, 180, 0, 469, 0, 70, 0, 1},                     // N^7 + 70N^5 + 469N^3 + 180N
        {0, 0, 3044, 0, 1869, 0, 126, 0, 1},               // N^8 + 126N^6 + 1869N^4 + 3044N^2
        {0, 8064, 0, 26060, 0, 5985, 0, 210, 0, 1},        // N^9 + 210N^7 + 5985N^5 + 26060N^3 + 8064N
        {0, 0, 193248, 0, 152900, 0, 16401, 0, 330, 0, 1}, // N^10 + 330N^8 + 16401N^6 + 152900N^4 + 193248N^2
    };
    std::vector<IntPolynomial> polys;
    for (const auto& c : coeffs) polys.emplace_back(c, "N");
    return polys;
}

inline std::vector<hultman::IntPolynomial> numerator_polynomials() {
    using hultman::BigInt;
    using hultman::IntPolynomial;
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
}

} // namespace reference
