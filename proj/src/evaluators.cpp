// Copyright 2026 The dmpl Authors
// SPDX-License-Identifier: Apache-2.0

#include "dmpl/evaluators.hpp"

#include <string>
#include <type_traits>

#include "dmpl/nested_sum.hpp"

namespace dmpl {

namespace {

void check_point(const Index& k, std::size_t len, const char* what)
{
    if (static_cast<int>(len) != k.depth()) {
        throw DomainError(std::string(what) + ": index (" + k.str() + ") has depth " + std::to_string(k.depth()) +
                          " but the point has " + std::to_string(len) + " entries");
    }
}

void check_n(long long N)
{
    if (N < 1) throw DomainError("N must be positive");
}

template <ExactField F>
F scaled(long long N, const F& x)
{
    return F::from_int(N, x) * x;
}

template <ExactField F>
Slot<F> power_slot(int power, Link link)
{
    Slot<F> s;
    s.power = power;
    s.link = link;
    return s;
}

// Binomial-ratio chain shared by li_tilde, modified_lhs and the connected sum.
template <ExactField F>
SumSignature<F> ratio_chain(const Index& k, const std::vector<F>& x, long long N, long long upper, const F& unit,
                            const F& last_top, bool last_has_ratio)
{
    SumSignature<F> sig(upper, unit);
    const int r = k.depth();
    for (int i = 0; i < r; ++i) {
        Slot<F> s = power_slot<F>(k[static_cast<std::size_t>(i)], Link::Strict);
        if (i + 1 < r) {
            s.ratio = std::pair{scaled(N, x[static_cast<std::size_t>(i) + 1]), scaled(N, x[static_cast<std::size_t>(i)])};
        } else if (last_has_ratio) {
            s.ratio = std::pair{last_top, scaled(N, x[static_cast<std::size_t>(i)])};
        }
        sig.add(std::move(s));
    }
    return sig;
}

template <ExactField F>
void add_block_slots(SumSignature<F>& sig, int part, const F& shift, bool negate)
{
    Slot<F> first;
    first.link = Link::Strict;
    first.offsets.push_back(-shift);
    first.negate = negate;
    sig.add(std::move(first));
    for (int t = 1; t < part; ++t) sig.add(power_slot<F>(1, Link::Weak));
}

template <ExactField F>
bool at_least_one(const F& z)
{
    if constexpr (std::is_same_v<F, Rational>) return z.abs() >= Rational(1);
    else if constexpr (std::is_same_v<F, Gaussian>) return z.norm() >= Rational(1);
    else return true;
}

}  // namespace

template <ExactField F>
F li_sh_truncated(const Index& k, const std::vector<F>& z, long long N, const F& unit)
{
    check_point(k, z.size(), "li_sh");
    check_n(N);
    for (const F& v : z) {
        if (v.is_zero()) throw DomainError("li_sh needs nonzero parameters");
    }
    SumSignature<F> sig(N - 1, unit);
    const int r = k.depth();
    for (int i = 0; i < r; ++i) {
        Slot<F> s = power_slot<F>(k[static_cast<std::size_t>(i)], Link::Strict);
        const F next = i + 1 < r ? z[static_cast<std::size_t>(i) + 1] : unit;
        s.geometric = next / z[static_cast<std::size_t>(i)];
        sig.add(std::move(s));
    }
    return sig.evaluate();
}

template <ExactField F>
F li_star_truncated(const Index& k, const std::vector<F>& xi, long long N, const F& unit)
{
    check_point(k, xi.size(), "li_star");
    check_n(N);
    SumSignature<F> sig(N - 1, unit);
    for (int i = 0; i < k.depth(); ++i) {
        Slot<F> s = power_slot<F>(k[static_cast<std::size_t>(i)], Link::Strict);
        s.geometric = xi[static_cast<std::size_t>(i)];
        sig.add(std::move(s));
    }
    return sig.evaluate();
}

template <ExactField F>
F li_tilde(const Index& k, const std::vector<F>& x, long long N, const F& unit)
{
    check_point(k, x.size(), "li_tilde");
    check_n(N);
    return ratio_chain(k, x, N, N - 1, unit, F::from_int(N, unit), true).evaluate();
}

template <ExactField F>
F modified_lhs(const Index& k, const std::vector<F>& x, long long N, const F& unit)
{
    check_point(k, x.size(), "modified_lhs");
    check_n(N);
    return ratio_chain(k, x, N, N, unit, F::from_int(N + 1, unit), true).evaluate();
}

template <ExactField F>
F iterated_sum(const Index& k, const std::vector<F>& x, long long N, bool inclusive, const F& unit)
{
    check_point(k, x.size(), "iterated_sum");
    check_n(N);
    SumSignature<F> sig(inclusive ? N : N - 1, unit);
    for (int j = 0; j < k.depth(); ++j) {
        add_block_slots(sig, k[static_cast<std::size_t>(j)], scaled(N, x[static_cast<std::size_t>(j)]), false);
    }
    return sig.evaluate();
}

template <ExactField F>
F connected_sum(const Index& k, const Index& l, const std::vector<F>& x, long long N, const F& unit)
{
    check_n(N);
    const int r = k.depth();
    const int s = l.depth();
    if (static_cast<int>(x.size()) != r + s) {
        throw DomainError("connected_sum: point must have dep(k) + dep(l) entries");
    }
    if (s == 0) return modified_lhs(k, x, N, unit);
    const std::vector<F> xr(x.begin() + r, x.end());
    if (r == 0) {
        const F v = iterated_sum(l, xr, N, true, unit);
        return s % 2 == 0 ? v : -v;
    }

    // A(n): sum over n_1 < ... < n_r = n of Q; B(m): P-blocks with m_{1,1} = m.
    // Ranges are clipped to the joint region so no factor outside it is touched.
    SumSignature<F> pb(N, unit);
    pb.set_lower(r + 1);
    for (int j = 0; j < s; ++j) add_block_slots(pb, l[static_cast<std::size_t>(j)], scaled(N, xr[static_cast<std::size_t>(j)]), true);
    const auto b = pb.first_profile();
    const long long m_hi = pb.range(0).second;
    if (m_hi <= r) return F::from_int(0, unit);
    const std::vector<F> xq(x.begin(), x.begin() + r);
    auto a = ratio_chain(k, xq, N, m_hi - 1, unit, unit, false).last_profile();
    a.resize(static_cast<std::size_t>(N), F::from_int(0, unit));

    // Connector C(n, m - 1) = binom(m - 1, n) / binom(N x_r - 1, n).
    const F top = scaled(N, x[static_cast<std::size_t>(r) - 1]);
    std::vector<F> a_scaled(static_cast<std::size_t>(N), F::from_int(0, unit));  // index n
    F den = unit;  // binom(N x_r - 1, n)
    for (long long n = 1; n <= N - 1; ++n) {
        den = den * (top - F::from_int(n, unit)) / F::from_int(n, unit);
        const F& an = a[static_cast<std::size_t>(n - 1)];
        if (an.is_zero()) continue;
        if (den.is_zero()) {
            throw PoleError("pole in connector at n = " + std::to_string(n), r, n);
        }
        a_scaled[static_cast<std::size_t>(n)] = an / den;
    }
    // Pascal row of binom(m - 1, n), advanced with m.
    std::vector<F> row(static_cast<std::size_t>(N) + 1, F::from_int(0, unit));
    row[0] = unit;  // m - 1 = 0
    F total = F::from_int(0, unit);
    for (long long m = 2; m <= N; ++m) {
        for (long long n = m - 1; n >= 1; --n) {
            row[static_cast<std::size_t>(n)] = row[static_cast<std::size_t>(n)] + row[static_cast<std::size_t>(n) - 1];
        }
        const F& bm = b[static_cast<std::size_t>(m - 1)];
        if (bm.is_zero()) continue;
        F inner = F::from_int(0, unit);
        for (long long n = 1; n < m; ++n) {
            const F& as = a_scaled[static_cast<std::size_t>(n)];
            if (!as.is_zero()) inner = inner + as * row[static_cast<std::size_t>(n)];
        }
        total = total + inner * bm;
    }
    return total;
}

template <ExactField F>
F r_value(const std::vector<int>& a, const std::vector<int>& b, long long N, const F& unit)
{
    check_n(N);
    if (a.size() != b.size()) throw DomainError("r_value: a and b differ in length");
    SumSignature<F> sig(N - 1, unit);
    const F shift = F::from_int(-N, unit);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0 || b[i] < 0 || a[i] + b[i] < 1) throw DomainError("r_value needs a_i, b_i >= 0, a_i + b_i >= 1");
        Slot<F> s = power_slot<F>(b[i], Link::Strict);
        s.offsets.assign(static_cast<std::size_t>(a[i]), shift);
        s.negate = a[i] % 2 == 1;
        sig.add(std::move(s));
    }
    return sig.evaluate();
}

template <ExactField F>
F r_value_z(const std::vector<int>& a, const std::vector<int>& b, const std::vector<F>& z, long long N,
            const F& unit)
{
    check_n(N);
    if (a.size() != b.size()) throw DomainError("r_value: a and b differ in length");
    SumSignature<F> sig(N - 1, unit);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0 || b[i] < 0 || a[i] + b[i] < 1) throw DomainError("r_value needs a_i, b_i >= 0, a_i + b_i >= 1");
        Slot<F> s = power_slot<F>(b[i], Link::Strict);
        for (int j = 0; j < a[i]; ++j, ++pos) {
            if (pos >= z.size()) throw DomainError("r_value: too few z parameters");
            if (!at_least_one(z[pos])) throw DomainError("r_value: |z| must be at least 1");
            s.offsets.push_back(-scaled(N, z[pos]));
        }
        sig.add(std::move(s));
    }
    if (pos != z.size()) throw DomainError("r_value: too many z parameters");
    return sig.evaluate();
}

template <ExactField F>
Sides<F> modified_main_sides(const Index& k, const std::vector<F>& x, long long N, const F& unit)
{
    F lhs = modified_lhs(k, x, N, unit);
    F rhs = iterated_sum(k, x, N, true, unit);
    if (k.depth() % 2 == 1) rhs = -rhs;
    return {std::move(lhs), std::move(rhs)};
}

#define DMPL_INSTANTIATE(F)                                                                                      \
    template F li_sh_truncated<F>(const Index&, const std::vector<F>&, long long, const F&);                    \
    template F li_star_truncated<F>(const Index&, const std::vector<F>&, long long, const F&);                  \
    template F li_tilde<F>(const Index&, const std::vector<F>&, long long, const F&);                           \
    template F modified_lhs<F>(const Index&, const std::vector<F>&, long long, const F&);                       \
    template F iterated_sum<F>(const Index&, const std::vector<F>&, long long, bool, const F&);                 \
    template F connected_sum<F>(const Index&, const Index&, const std::vector<F>&, long long, const F&);        \
    template F r_value<F>(const std::vector<int>&, const std::vector<int>&, long long, const F&);               \
    template F r_value_z<F>(const std::vector<int>&, const std::vector<int>&, const std::vector<F>&, long long, \
                            const F&);                                                                           \
    template Sides<F> modified_main_sides<F>(const Index&, const std::vector<F>&, long long, const F&);

DMPL_INSTANTIATE(Rational)
DMPL_INSTANTIATE(Gaussian)
DMPL_INSTANTIATE(Residue)

#undef DMPL_INSTANTIATE

// ---------------------------------------------------------------- Scalar front ends

namespace {

template <class T>
std::vector<T> unwrap(const Point& p)
{
    std::vector<T> out;
    out.reserve(p.size());
    for (const auto& s : p) out.push_back(s.as<T>());
    return out;
}

// Calls fn(values, unit) in the field shared by the point.
template <class Fn>
Scalar dispatch(const Point& raw, Fn&& fn)
{
    const Point p = unify(raw);
    if (p.empty()) return Scalar(fn(std::vector<Rational>{}, Rational(1)));
    switch (p.front().kind()) {
    case ScalarKind::Rational: return Scalar(fn(unwrap<Rational>(p), Rational(1)));
    case ScalarKind::Gaussian: return Scalar(fn(unwrap<Gaussian>(p), Gaussian(Rational(1))));
    case ScalarKind::Residue: {
        const Residue one(1, p.front().as<Residue>().modulus());
        return Scalar(fn(unwrap<Residue>(p), one));
    }
    }
    throw MismatchError("unknown scalar kind");
}

}  // namespace

Scalar li_sh_truncated(const Index& k, const Point& z, long long N)
{
    return dispatch(z, [&](const auto& v, const auto& u) { return li_sh_truncated(k, v, N, u); });
}

Scalar li_star_truncated(const Index& k, const Point& xi, long long N)
{
    return dispatch(xi, [&](const auto& v, const auto& u) { return li_star_truncated(k, v, N, u); });
}

Scalar li_tilde(const Index& k, const Point& x, long long N)
{
    return dispatch(x, [&](const auto& v, const auto& u) { return li_tilde(k, v, N, u); });
}

Scalar modified_lhs(const Index& k, const Point& x, long long N)
{
    return dispatch(x, [&](const auto& v, const auto& u) { return modified_lhs(k, v, N, u); });
}

Scalar iterated_sum(const Index& k, const Point& x, long long N, bool inclusive)
{
    return dispatch(x, [&](const auto& v, const auto& u) { return iterated_sum(k, v, N, inclusive, u); });
}

Scalar connected_sum(const Index& k, const Index& l, const Point& x, long long N)
{
    return dispatch(x, [&](const auto& v, const auto& u) { return connected_sum(k, l, v, N, u); });
}

Scalar r_value(const std::vector<int>& a, const std::vector<int>& b, long long N)
{
    return Scalar(r_value(a, b, N, Rational(1)));
}

Scalar r_value_z(const std::vector<int>& a, const std::vector<int>& b, const Point& z, long long N)
{
    for (const auto& v : z) {
        if (!v.is<Residue>() && !abs_at_least_one(v)) throw DomainError("r_value: |z| must be at least 1");
    }
    return dispatch(z, [&](const auto& v, const auto& u) { return r_value_z(a, b, v, N, u); });
}

Sides<Scalar> modified_main_sides(const Index& k, const Point& x, long long N)
{
    return {modified_lhs(k, x, N), [&] {
                Scalar v = iterated_sum(k, x, N, true);
                return k.depth() % 2 == 1 ? -v : v;
            }()};
}

Scalar difference_quotient(const std::function<Scalar(const Point&)>& f, const Point& x, std::size_t i,
                           long long N)
{
    check_n(N);
    Point shifted = x;
    const Scalar step = Scalar(Rational(1) / Rational(N)).promoted_to(shifted.at(i).kind(),
                                                             shifted[i].is<Residue>() ? shifted[i].as<Residue>().modulus() : 0);
    shifted[i] = shifted[i] + step;
    const Scalar n = Scalar::from_int(N, step);
    return n * (f(shifted) - f(x));
}

bool abs_at_least_one(const Scalar& z)
{
    if (z.is<Rational>()) return z.as<Rational>().abs() >= Rational(1);
    if (z.is<Gaussian>()) return z.as<Gaussian>().norm() >= Rational(1);
    throw MismatchError("absolute value of a residue");
}

}  // namespace dmpl
