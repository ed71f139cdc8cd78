#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hultman/bigint.hpp"
#include "hultman/polynomial.hpp"

namespace hultman {

/// Power series with exact rational coefficients, truncated at an explicit
/// inclusive order fixed at construction. Mixing orders is an error, never a
/// silent truncation.
class RationalSeries {
public:
    explicit RationalSeries(std::size_t order)
        : order_(order), coeffs_(order + 1) {}

    RationalSeries(std::size_t order, std::vector<BigRational> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != order_ + 1)
            throw InvalidInputError("RationalSeries: need exactly order+1 coefficients");
    }

    static RationalSeries one(std::size_t order) {
        RationalSeries s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    std::size_t order() const { return order_; }

    const BigRational& coeff(std::size_t i) const {
        if (i > order_) throw InvalidInputError("RationalSeries: coefficient index beyond order");
        return coeffs_[i];
    }

    void set_coeff(std::size_t i, BigRational v) {
        if (i > order_) throw InvalidInputError("RationalSeries: coefficient index beyond order");
        coeffs_[i] = std::move(v);
    }

    friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
        a.require_same_order(b, "add");
        RationalSeries r(a.order_);
        for (std::size_t i = 0; i <= a.order_; ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return r;
    }

    friend RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
        a.require_same_order(b, "subtract");
        RationalSeries r(a.order_);
        for (std::size_t i = 0; i <= a.order_; ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        return r;
    }

    /// Truncated convolution at the common order.
    friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
        a.require_same_order(b, "multiply");
        RationalSeries r(a.order_);
        for (std::size_t i = 0; i <= a.order_; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; i + j <= a.order_; ++j) {
                if (b.coeffs_[j] == 0) continue;
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    /// Multiply by an exact polynomial; coefficients up to the order stay exact.
    friend RationalSeries operator*(const IntPolynomial& p, const RationalSeries& a) {
        RationalSeries r(a.order_);
        for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
            if (p.coeffs()[i] == 0) continue;
            for (std::size_t j = 0; i + j <= a.order_; ++j)
                r.coeffs_[i + j] += BigRational(p.coeffs()[i]) * a.coeffs_[j];
        }
        return r;
    }

    friend bool operator==(const RationalSeries& a, const RationalSeries& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

    /// Drop the lowest k coefficients (divide by x^k); they must vanish.
    RationalSeries shifted_down(std::size_t k, const char* context) const {
        if (k > order_) throw InvalidInputError("RationalSeries: shift beyond order");
        for (std::size_t i = 0; i < k; ++i)
            if (coeffs_[i] != 0)
                throw InternalConsistencyError(std::string(context) +
                                               ": low-order coefficient x^" + std::to_string(i) +
                                               " = " + coeffs_[i].str() + ", expected 0");
        RationalSeries r(order_ - k);
        for (std::size_t i = k; i <= order_; ++i) r.coeffs_[i - k] = coeffs_[i];
        return r;
    }

private:
    void require_same_order(const RationalSeries& other, const char* op) const {
        if (order_ != other.order_)
            throw InvalidInputError(std::string("RationalSeries: ") + op +
                                    " with mismatched orders " + std::to_string(order_) +
                                    " and " + std::to_string(other.order_));
    }

    std::size_t order_;
    std::vector<BigRational> coeffs_;
};

/// Series of (1 + base_sign*x)^exponent up to the given order:
/// coefficient of x^k is binom(exponent, k) * base_sign^k.
/// Covers both (1-x)^{-N} (base_sign=-1, exponent=-N) and (1+x)^N.
inline RationalSeries binom_series(int base_sign, long long exponent, std::size_t order) {
    if (base_sign != 1 && base_sign != -1)
        throw InvalidInputError("binom_series: base_sign must be +1 or -1");
    RationalSeries s(order);
    for (std::size_t k = 0; k <= order; ++k) {
        BigInt c = binomial(exponent, static_cast<int>(k));
        if (base_sign == -1 && k % 2 == 1) c = -c;
        s.set_coeff(k, BigRational(std::move(c)));
    }
    return s;
}

} // namespace hultman
