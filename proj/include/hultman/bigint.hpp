#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "hultman/errors.hpp"

namespace hultman {

// All counting is exact. cpp_rational keeps gcd-reduced form with a
// positive denominator, which is exactly the canonical form we rely on.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
    if (n < 0) throw InvalidInputError("factorial: negative argument");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

/// m!! = m(m-2)...3*1 for odd positive m.
inline BigInt double_factorial(int m) {
    if (m < 1 || m % 2 == 0)
        throw InvalidInputError("double_factorial: argument must be odd and positive, got " +
                                std::to_string(m));
    BigInt r = 1;
    for (int i = 3; i <= m; i += 2) r *= i;
    return r;
}

/// Generalized binomial coefficient binom(e, k) = e(e-1)...(e-k+1)/k!
/// for any integer e (negative exponents included). Always an integer.
inline BigInt binomial(long long e, int k) {
    if (k < 0) return 0;
    BigInt num = 1;
    for (int i = 0; i < k; ++i) num *= BigInt(e) - i;
    BigInt den = factorial(k);
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0)
        throw InternalConsistencyError("binomial: inexact division");
    return q;
}

/// Exact quotient a/b; throws if b does not divide a.
inline BigInt exact_div(const BigInt& a, const BigInt& b, const char* context) {
    BigInt q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0)
        throw InternalConsistencyError(std::string(context) + ": division " + a.str() +
                                       " / " + b.str() + " is not exact");
    return q;
}

inline bool is_integer(const BigRational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

inline BigInt to_integer(const BigRational& q, const char* context) {
    if (!is_integer(q))
        throw InternalConsistencyError(std::string(context) + ": value " +
                                       q.str() + " is not an integer");
    return boost::multiprecision::numerator(q);
}

} // namespace hultman
