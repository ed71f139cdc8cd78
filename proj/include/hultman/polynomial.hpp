#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hultman/bigint.hpp"

namespace hultman {

/// Dense univariate polynomial with exact integer coefficients.
///
/// Canonical form: no trailing zero coefficients; the zero polynomial is the
/// empty coefficient vector and has degree -1. The variable name is a display
/// label only and does not participate in arithmetic or comparison.
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<BigInt> coeffs, std::string var = "x")
        : coeffs_(std::move(coeffs)), var_(std::move(var)) {
        trim();
    }

    static IntPolynomial zero(std::string var = "x") {
        return IntPolynomial({}, std::move(var));
    }

    static IntPolynomial constant(BigInt c, std::string var = "x") {
        return IntPolynomial({std::move(c)}, std::move(var));
    }

    static IntPolynomial monomial(BigInt c, std::size_t power, std::string var = "x") {
        std::vector<BigInt> v(power + 1);
        v[power] = std::move(c);
        return IntPolynomial(std::move(v), std::move(var));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Lowest nonzero power; -1 for the zero polynomial.
    int valuation() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return static_cast<int>(i);
        return -1;
    }

    const BigInt& coeff(std::size_t i) const {
        static const BigInt kZero = 0;
        return i < coeffs_.size() ? coeffs_[i] : kZero;
    }

    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    const std::string& variable() const { return var_; }

    IntPolynomial with_variable(std::string var) const {
        IntPolynomial p = *this;
        p.var_ = std::move(var);
        return p;
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return IntPolynomial(std::move(c), a.var_);
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
        return IntPolynomial(std::move(c), a.var_);
    }

    friend IntPolynomial operator-(const IntPolynomial& a) {
        std::vector<BigInt> c(a.coeffs_);
        for (auto& x : c) x = -x;
        return IntPolynomial(std::move(c), a.var_);
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return IntPolynomial({}, a.var_);
        std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return IntPolynomial(std::move(c), a.var_);
    }

    friend IntPolynomial operator*(const BigInt& s, const IntPolynomial& a) {
        std::vector<BigInt> c(a.coeffs_);
        for (auto& x : c) x *= s;
        return IntPolynomial(std::move(c), a.var_);
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Multiply by x^k.
    IntPolynomial shifted_up(std::size_t k) const {
        if (is_zero()) return *this;
        std::vector<BigInt> c(coeffs_.size() + k);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + k] = coeffs_[i];
        return IntPolynomial(std::move(c), var_);
    }

    /// Exact division by x^k; throws if any of the low k coefficients is nonzero.
    IntPolynomial shifted_down(std::size_t k) const {
        for (std::size_t i = 0; i < k && i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0)
                throw InternalConsistencyError(
                    "shifted_down: coefficient of " + var_ + "^" + std::to_string(i) +
                    " is " + coeffs_[i].str() + ", expected 0");
        std::vector<BigInt> c;
        if (coeffs_.size() > k) c.assign(coeffs_.begin() + static_cast<long>(k), coeffs_.end());
        return IntPolynomial(std::move(c), var_);
    }

    IntPolynomial derivative() const {
        if (coeffs_.size() <= 1) return IntPolynomial({}, var_);
        std::vector<BigInt> c(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * i;
        return IntPolynomial(std::move(c), var_);
    }

    /// Coefficient-wise exact division by an integer; inexactness throws.
    IntPolynomial divided_exact(const BigInt& d, const char* context) const {
        std::vector<BigInt> c(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            c[i] = exact_div(coeffs_[i], d, context);
        return IntPolynomial(std::move(c), var_);
    }

    /// Horner evaluation at an exact integer point.
    BigInt eval(const BigInt& x) const {
        BigInt r = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
        return r;
    }

    /// Re-expands p in powers of (1-x): returns c with p(x) = sum_j c[j]*(1-x)^j.
    /// Computed by Horner in the substituted variable, so it is exact.
    std::vector<BigInt> in_one_minus_x() const {
        // q(u) = p(1-u); the c_j are the coefficients of q.
        std::vector<BigInt> q;  // ascending in u
        const std::vector<BigInt> one_minus_u = {1, -1};
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            // q = q*(1-u) + a_i
            std::vector<BigInt> next(q.empty() ? 1 : q.size() + 1);
            for (std::size_t j = 0; j < q.size(); ++j) {
                next[j] += q[j];
                next[j + 1] -= q[j];
            }
            next[0] += coeffs_[i];
            q = std::move(next);
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        return q;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const BigInt& c = coeffs_[i];
            if (c == 0) continue;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            BigInt a = boost::multiprecision::abs(c);
            if (i == 0) {
                os << a.str();
            } else {
                if (a != 1) os << a.str() << "*";
                os << var_;
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        return os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
    std::string var_ = "x";
};

/// (1 - x)^m as a polynomial, m >= 0.
inline IntPolynomial one_minus_x_pow(std::size_t m, std::string var = "x") {
    std::vector<BigInt> c(m + 1);
    for (std::size_t j = 0; j <= m; ++j) {
        c[j] = binomial(static_cast<long long>(m), static_cast<int>(j));
        if (j % 2 == 1) c[j] = -c[j];
    }
    return IntPolynomial(std::move(c), std::move(var));
}

} // namespace hultman
