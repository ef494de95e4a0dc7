// Copyright 2026 The dmpl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

#include "dmpl/index.hpp"
#include "dmpl/scalar.hpp"

namespace dmpl {

using Point = std::vector<Scalar>;

// Every sum below ranges over 0 < n_1 < ... < n_r < N unless stated otherwise,
// uses x_{r+1} = 1, and returns `unit` (the field's 1) for the empty index.
// Vanishing denominators raise PoleError naming the slot and summation value.

/// sum prod n_i^{-k_i} (z_{i+1}/z_i)^{n_i}
template <ExactField F>
F li_sh_truncated(const Index& k, const std::vector<F>& z, long long N, const F& unit);

/// sum prod xi_i^{n_i} / n_i^{k_i}
template <ExactField F>
F li_star_truncated(const Index& k, const std::vector<F>& xi, long long N, const F& unit);

/// sum prod n_i^{-k_i} binom(N x_{i+1} - 1, n_i) / binom(N x_i - 1, n_i)
template <ExactField F>
F li_tilde(const Index& k, const std::vector<F>& x, long long N, const F& unit);

/// As li_tilde but with n_r <= N and last factor binom(N, n_r) / binom(N x_r - 1, n_r).
template <ExactField F>
F modified_lhs(const Index& k, const std::vector<F>& x, long long N, const F& unit);

/// sum prod_j 1 / ((n_{j,1} - N x_j) n_{j,2} ... n_{j,k_j}), weak inside blocks,
/// strict between blocks, all n < N (or <= N when inclusive).
template <ExactField F>
F iterated_sum(const Index& k, const std::vector<F>& x, long long N, bool inclusive, const F& unit);

/// Connected sum Z_N(k | l) at x = (x_1, ..., x_{r+s}); the one-sided cases are
/// the two sides of the inclusive identity.
template <ExactField F>
F connected_sum(const Index& k, const Index& l, const std::vector<F>& x, long long N, const F& unit);

/// sum prod 1 / ((N - n_i)^{a_i} n_i^{b_i})
template <ExactField F>
F r_value(const std::vector<int>& a, const std::vector<int>& b, long long N, const F& unit);

/// sum prod 1 / ((n_i - N z_{i,1}) ... (n_i - N z_{i,a_i}) n_i^{b_i}); z is flat, grouped by a.
template <ExactField F>
F r_value_z(const std::vector<int>& a, const std::vector<int>& b, const std::vector<F>& z, long long N,
            const F& unit);

/// N (f(x + e_i / N) - f(x)), i 0-based.
template <ExactField F, class Fn>
F difference_quotient(Fn&& f, std::vector<F> x, std::size_t i, long long N)
{
    const F base = f(x);
    const F n = F::from_int(N, x.at(i));
    x[i] = x[i] + F::from_int(1, x[i]) / n;
    return n * (f(x) - base);
}

template <class F>
struct Sides {
    F lhs;
    F rhs;
};

/// lhs = modified_lhs, rhs = (-1)^r iterated_sum(inclusive).
template <ExactField F>
Sides<F> modified_main_sides(const Index& k, const std::vector<F>& x, long long N, const F& unit);

// Scalar front ends: points are unified to one variant first; the empty
// point evaluates over the rationals.

Scalar li_sh_truncated(const Index& k, const Point& z, long long N);
Scalar li_star_truncated(const Index& k, const Point& xi, long long N);
Scalar li_tilde(const Index& k, const Point& x, long long N);
Scalar modified_lhs(const Index& k, const Point& x, long long N);
Scalar iterated_sum(const Index& k, const Point& x, long long N, bool inclusive);
Scalar connected_sum(const Index& k, const Index& l, const Point& x, long long N);
Scalar r_value(const std::vector<int>& a, const std::vector<int>& b, long long N);
Scalar r_value_z(const std::vector<int>& a, const std::vector<int>& b, const Point& z, long long N);
Sides<Scalar> modified_main_sides(const Index& k, const Point& x, long long N);
Scalar difference_quotient(const std::function<Scalar(const Point&)>& f, const Point& x, std::size_t i,
                           long long N);

/// |z| >= 1, decided exactly for rational and Gaussian values.
bool abs_at_least_one(const Scalar& z);

}  // namespace dmpl
