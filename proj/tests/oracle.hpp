// Copyright 2026 The dmpl Authors
// SPDX-License-Identifier: Apache-2.0

// Brute-force reference evaluators: every sum is written as an explicit loop
// over its summation region with binomials expanded from their product
// definition. Nothing here shares code with the library's dynamic programs.

#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "dmpl/index.hpp"
#include "dmpl/scalar.hpp"

namespace oracle {

struct Pole : std::domain_error {
    Pole() : std::domain_error("oracle: vanishing denominator") {}
};

template <class F>
F from(long long n, const F& like)
{
    return F::from_int(n, like);
}

template <class F>
F inv(const F& d)
{
    if (d.is_zero()) throw Pole();
    return from(1, d) / d;
}

template <class F>
F power(const F& x, long long e)
{
    F acc = from(1, x);
    for (long long j = 0; j < e; ++j) acc = acc * x;
    return acc;
}

/// y (y - 1) ... (y - n + 1) / n!
template <class F>
F binom(const F& y, long long n)
{
    F num = from(1, y);
    F den = from(1, y);
    for (long long j = 0; j < n; ++j) {
        num = num * (y - from(j, y));
        den = den * from(j + 1, y);
    }
    return num / den;
}

/// Calls f on every integer chain m_1..m_len with lo <= m_1, m_len <= hi and
/// m_{p+1} > m_p when strict[p], m_{p+1} >= m_p otherwise.
inline void for_each_chain(std::size_t len, const std::vector<bool>& strict, long long lo, long long hi,
                           const std::function<void(const std::vector<long long>&)>& f)
{
    std::vector<long long> m(len);
    std::function<void(std::size_t, long long)> rec = [&](std::size_t p, long long from_value) {
        if (p == len) {
            f(m);
            return;
        }
        for (long long v = from_value; v <= hi; ++v) {
            m[p] = v;
            rec(p + 1, p + 1 < len ? v + (strict[p] ? 1 : 0) : 0);
        }
    };
    rec(0, lo);
}

inline std::vector<bool> all_strict(std::size_t len) { return std::vector<bool>(len, true); }

/// Weak inside each block of k, strict between blocks.
inline std::vector<bool> block_flags(const dmpl::Index& k)
{
    std::vector<bool> flags;
    for (int part : k) {
        for (int j = 1; j < part; ++j) flags.push_back(false);
        flags.push_back(true);
    }
    return flags;
}

template <class F>
F li_sh(const dmpl::Index& k, const std::vector<F>& z, long long N, const F& one)
{
    F total = from(0, one);
    const std::size_t r = k.parts().size();
    for_each_chain(r, all_strict(r), 1, N - 1, [&](const std::vector<long long>& n) {
        F t = one;
        for (std::size_t i = 0; i < r; ++i) {
            const F next = i + 1 < r ? z[i + 1] : one;
            t = t * inv(power(from(n[i], one), k[i])) * power(next / z[i], n[i]);
        }
        total = total + t;
    });
    return total;
}

template <class F>
F li_star(const dmpl::Index& k, const std::vector<F>& xi, long long N, const F& one)
{
    F total = from(0, one);
    const std::size_t r = k.parts().size();
    for_each_chain(r, all_strict(r), 1, N - 1, [&](const std::vector<long long>& n) {
        F t = one;
        for (std::size_t i = 0; i < r; ++i) t = t * power(xi[i], n[i]) * inv(power(from(n[i], one), k[i]));
        total = total + t;
    });
    return total;
}

/// Q_k(n) of the connected sum: n^{-k} times the inner binomial ratios.
template <class F>
F q_factor(const dmpl::Index& k, const std::vector<F>& x, const std::vector<long long>& n, long long N, const F& one)
{
    F t = one;
    const F NN = from(N, one);
    for (std::size_t i = 0; i < n.size(); ++i) {
        t = t * inv(power(from(n[i], one), k[i]));
        if (i + 1 < n.size()) t = t * binom(NN * x[i + 1] - one, n[i]) * inv(binom(NN * x[i] - one, n[i]));
    }
    return t;
}

template <class F>
F li_tilde(const dmpl::Index& k, const std::vector<F>& x, long long N, const F& one)
{
    F total = from(0, one);
    const std::size_t r = k.parts().size();
    const F NN = from(N, one);
    for_each_chain(r, all_strict(r), 1, N - 1, [&](const std::vector<long long>& n) {
        F t = oracle::q_factor(k, x, n, N, one);
        if (r > 0) t = t * binom(NN - one, n[r - 1]) * inv(binom(NN * x[r - 1] - one, n[r - 1]));
        total = total + t;
    });
    return total;
}

template <class F>
F modified_lhs(const dmpl::Index& k, const std::vector<F>& x, long long N, const F& one)
{
    F total = from(0, one);
    const std::size_t r = k.parts().size();
    const F NN = from(N, one);
    for_each_chain(r, all_strict(r), 1, N, [&](const std::vector<long long>& n) {
        F t = oracle::q_factor(k, x, n, N, one);
        if (r > 0) t = t * binom(NN, n[r - 1]) * inv(binom(NN * x[r - 1] - one, n[r - 1]));
        total = total + t;
    });
    return total;
}

/// prod_j 1 / ((m_{j,1} - N x_j) m_{j,2} ... m_{j,k_j}) over a flat chain m.
template <class F>
F block_product(const dmpl::Index& k, const std::vector<F>& x, const std::vector<long long>& m, long long N,
                const F& one)
{
    F t = one;
    std::size_t pos = 0;
    for (std::size_t j = 0; j < k.parts().size(); ++j) {
        t = t * inv(from(m[pos], one) - from(N, one) * x[j]);
        ++pos;
        for (int e = 1; e < k[j]; ++e) t = t * inv(from(m[pos++], one));
    }
    return t;
}

template <class F>
F iterated(const dmpl::Index& k, const std::vector<F>& x, long long N, bool inclusive, const F& one)
{
    F total = from(0, one);
    const auto flags = block_flags(k);
    for_each_chain(flags.size(), flags, 1, inclusive ? N : N - 1,
                   [&](const std::vector<long long>& m) { total = total + block_product(k, x, m, N, one); });
    return total;
}

/// Z_N(k | l) at x = (x_1..x_{r+s}), including both one-sided conventions.
template <class F>
F connected(const dmpl::Index& k, const dmpl::Index& l, const std::vector<F>& x, long long N, const F& one)
{
    const std::size_t r = k.parts().size();
    if (l.empty()) return oracle::modified_lhs(k, x, N, one);
    const std::vector<F> xl(x.begin() + static_cast<std::ptrdiff_t>(r), x.end());
    if (r == 0) {
        const F it = oracle::iterated(l, xl, N, true, one);
        return l.depth() % 2 == 0 ? it : from(0, one) - it;
    }
    std::vector<bool> flags = all_strict(r);
    const auto tail = block_flags(l);
    flags.insert(flags.end(), tail.begin(), tail.end());
    const F NN = from(N, one);
    F total = from(0, one);
    for_each_chain(flags.size(), flags, 1, N, [&](const std::vector<long long>& chain) {
        const std::vector<long long> n(chain.begin(), chain.begin() + static_cast<std::ptrdiff_t>(r));
        const std::vector<long long> m(chain.begin() + static_cast<std::ptrdiff_t>(r), chain.end());
        F t = oracle::q_factor(k, x, n, N, one);
        // C_N^{(x_r)}(n_r, m_{1,1} - 1)
        t = t * binom(from(m[0] - 1, one), n[r - 1]) * inv(binom(NN * x[r - 1] - one, n[r - 1]));
        // P uses (N x - m_1), the negative of the iterated-sum shift.
        const F p = oracle::block_product(l, xl, m, N, one);
        t = l.depth() % 2 == 0 ? t * p : from(0, one) - t * p;
        total = total + t;
    });
    return total;
}

/// sum over 0 < n_1 < ... < n_r < N of prod 1 / ((N - n_i)^{a_i} n_i^{b_i}).
template <class F>
F r_value(const std::vector<int>& a, const std::vector<int>& b, long long N, const F& one)
{
    F total = from(0, one);
    const std::size_t r = a.size();
    for_each_chain(r, all_strict(r), 1, N - 1, [&](const std::vector<long long>& n) {
        F t = one;
        for (std::size_t i = 0; i < r; ++i)
            t = t * inv(power(from(N - n[i], one), a[i]) * power(from(n[i], one), b[i]));
        total = total + t;
    });
    return total;
}

/// As r_value with (N - n_i)^{a_i} replaced by prod_j (n_i - N z_{i,j}); z is flat.
template <class F>
F r_value_z(const std::vector<int>& a, const std::vector<int>& b, const std::vector<F>& z, long long N, const F& one)
{
    F total = from(0, one);
    const std::size_t r = a.size();
    for_each_chain(r, all_strict(r), 1, N - 1, [&](const std::vector<long long>& n) {
        F t = one;
        std::size_t pos = 0;
        for (std::size_t i = 0; i < r; ++i) {
            for (int j = 0; j < a[i]; ++j) t = t * inv(from(n[i], one) - from(N, one) * z[pos++]);
            t = t * inv(power(from(n[i], one), b[i]));
        }
        total = total + t;
    });
    return total;
}

}  // namespace oracle
