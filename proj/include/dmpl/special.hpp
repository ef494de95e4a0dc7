// Copyright 2026 The dmpl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <type_traits>
#include <vector>

#include "dmpl/scalar.hpp"

namespace dmpl {

namespace detail {

template <ExactField F>
void require_invertible_factorial(const F& x, long long n)
{
    if constexpr (std::is_same_v<F, Residue>) {
        if (n >= static_cast<long long>(x.modulus())) {
            throw DomainError(std::to_string(n) + "! is not invertible modulo " +
                              std::to_string(x.modulus()));
        }
    }
}

}  // namespace detail

/// x (x-1) ... (x-n+1) / n!
template <ExactField F>
F gen_binomial(const F& x, long long n)
{
    if (n < 0) throw DomainError("negative binomial order");
    detail::require_invertible_factorial(x, n);
    F num = F::from_int(1, x);
    F den = F::from_int(1, x);
    for (long long j = 0; j < n; ++j) {
        num = num * (x - F::from_int(j, x));
        den = den * F::from_int(j + 1, x);
    }
    return num / den;
}

/// x (x+1) ... (x+n-1)
template <ExactField F>
F rising_factorial(const F& x, long long n)
{
    if (n < 0) throw DomainError("negative rising factorial order");
    F acc = F::from_int(1, x);
    for (long long j = 0; j < n; ++j) acc = acc * (x + F::from_int(j, x));
    return acc;
}

/// binom(x, 0), binom(x, 1), ... produced by the ratio step
/// binom(x, n) = binom(x, n-1) (x - n + 1) / n.
template <ExactField F>
class BinomialSequence {
public:
    explicit BinomialSequence(F x) : x_(std::move(x)), value_(F::from_int(1, x_)) {}

    const F& value() const noexcept { return value_; }
    long long order() const noexcept { return n_; }

    const F& next()
    {
        ++n_;
        detail::require_invertible_factorial(x_, n_);
        value_ = value_ * (x_ - F::from_int(n_ - 1, x_)) / F::from_int(n_, x_);
        return value_;
    }

private:
    F x_;
    F value_;
    long long n_ = 0;
};

Scalar gen_binomial(const Scalar& x, long long n);
Scalar rising_factorial(const Scalar& x, long long n);

/// Unsigned Stirling number of the first kind; zero when j > n.
mpz_class stirling_first(int n, int j);

/// Rows 0..n of the unsigned Stirling triangle.
std::vector<std::vector<mpz_class>> stirling_table(int n);

}  // namespace dmpl
