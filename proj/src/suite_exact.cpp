// Copyright 2026 The dmpl Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "dmpl/special.hpp"
#include "suite_internal.hpp"

namespace dmpl {

using detail::Job;
using detail::JobOutcome;
using detail::Sampler;

namespace {

std::string nstr(long long N) { return " N=" + std::to_string(N); }

std::string kstr(const Index& k) { return " k=(" + k.str() + ")"; }

Scalar sign_power(int e, const Scalar& v) { return e % 2 == 0 ? v : -v; }

Point drop(Point p, int j0)
{
    p.erase(p.begin() + j0);
    return p;
}

/// Evaluation context of one difference equation.
struct DiffCtx {
    Index k;
    Point x;      // unified
    Point s;      // x + e_i / N
    long long N;
    int i0;       // 0-based position
    bool li;      // li_tilde side

    Scalar fit(const Scalar& v) const
    {
        return v.kind() == x[0].kind() ? v : v.promoted_to(x[0].kind());
    }
    Scalar F(const Index& t, const Point& p) const
    {
        return fit(li ? li_tilde(t, p, N) : iterated_sum(t, p, N, false));
    }
    Scalar one() const { return Scalar::from_int(1, x[0]); }
    Scalar inv_n() const { return one() / Scalar::from_int(N, x[0]); }
};

// Both families are transcribed term by term rather than derived from each
// other, so a sign slip in one is not masked by the other.

Scalar rhs_iterated(const DiffCtx& c)
{
    const Index& k = c.k;
    const int r = k.depth();
    const int i0 = c.i0;
    const Scalar& xi = c.x[i0];
    const bool has_next = i0 + 1 < r;
    const Scalar x_next = has_next ? c.x[i0 + 1] : c.one();
    const Scalar zero = Scalar::from_int(0, xi);
    const Scalar ivn = c.inv_n();

    if (i0 == 0) {
        if (k[0] > 1) return -(c.F(k.lowered(0), c.x) / xi);
        if (r == 1) return c.one() / (xi + ivn - c.one()) - c.one() / xi;
        const Index k1 = k.without(0);
        const Scalar a = c.F(k1, drop(c.x, 0));
        return -(a / xi) + (a - c.F(k1, drop(c.s, 1))) / (xi + ivn - x_next);
    }
    const Scalar& xp = c.x[i0 - 1];
    const bool prev_big = k[i0 - 1] > 1;
    const bool cur_big = k[i0] > 1;
    if (prev_big && cur_big) return (c.F(k.lowered(i0 - 1), c.s) - c.F(k.lowered(i0), c.x)) / xi;
    if (prev_big) {
        const Index ki = k.without(i0);
        const Index kd = k.lowered(i0 - 1).without(i0);
        const Scalar a = c.F(ki, drop(c.x, i0));
        const Scalar b = has_next ? c.F(ki, drop(c.s, i0 + 1)) : zero;
        const Scalar d = has_next ? c.F(kd, drop(c.s, i0 + 1)) : zero;
        const Scalar gap = xi + ivn - x_next;
        return (c.F(k.lowered(i0 - 1), c.s) - a) / xi + (a - b) / gap +
               ivn / (xi * gap) * (d - c.F(kd, drop(c.x, i0)));
    }
    if (cur_big) {
        const Index kp = k.without(i0 - 1);
        const Index kd = k.lowered(i0).without(i0 - 1);
        const Scalar a = c.F(kp, drop(c.x, i0 - 1));
        const Scalar b = c.F(kp, drop(c.x, i0));
        return (a - b) / (xi - xp) + (b - c.F(k.lowered(i0), c.x)) / xi +
               ivn / (xi * (xi - xp)) * (c.F(kd, drop(c.x, i0)) - c.F(kd, drop(c.x, i0 - 1)));
    }
    const Index kp = k.without(i0 - 1);
    const Index ki = k.without(i0);
    const Scalar a = c.F(ki, drop(c.x, i0));
    const Scalar b = has_next ? c.F(ki, drop(c.s, i0 + 1)) : zero;
    return (c.F(kp, drop(c.x, i0 - 1)) - a) / (xi - xp) + (a - b) / (xi + ivn - x_next);
}

Scalar rhs_li_tilde(const DiffCtx& c)
{
    const Index& k = c.k;
    const int r = k.depth();
    const int i0 = c.i0;
    const Scalar& xi = c.x[i0];
    const bool has_next = i0 + 1 < r;
    const Scalar x_next = has_next ? c.x[i0 + 1] : c.one();
    const Scalar zero = Scalar::from_int(0, xi);
    const Scalar ivn = c.inv_n();

    if (i0 == 0) {
        if (k[0] > 1) return -(c.F(k.lowered(0), c.x) / xi);
        if (r == 1) return c.one() / xi - c.one() / (xi + ivn - c.one());
        const Index k1 = k.without(0);
        const Scalar a = c.F(k1, drop(c.x, 0));
        return a / xi - (a - c.F(k1, drop(c.s, 1))) / (xi + ivn - x_next);
    }
    const Scalar& xp = c.x[i0 - 1];
    const bool prev_big = k[i0 - 1] > 1;
    const bool cur_big = k[i0] > 1;
    if (prev_big && cur_big) return (c.F(k.lowered(i0 - 1), c.s) - c.F(k.lowered(i0), c.x)) / xi;
    if (prev_big) {
        const Index ki = k.without(i0);
        const Index kd = k.lowered(i0 - 1).without(i0);
        const Scalar a = c.F(ki, drop(c.x, i0));
        const Scalar b = has_next ? c.F(ki, drop(c.s, i0 + 1)) : zero;
        const Scalar d = has_next ? c.F(kd, drop(c.s, i0 + 1)) : zero;
        const Scalar gap = xi + ivn - x_next;
        return (c.F(k.lowered(i0 - 1), c.s) + a) / xi - (a - b) / gap -
               ivn / (xi * gap) * (d - c.F(kd, drop(c.x, i0)));
    }
    if (cur_big) {
        const Index kp = k.without(i0 - 1);
        const Index kd = k.lowered(i0).without(i0 - 1);
        const Scalar a = c.F(kp, drop(c.x, i0 - 1));
        const Scalar b = c.F(kp, drop(c.x, i0));
        return -((a - b) / (xi - xp)) - (b + c.F(k.lowered(i0), c.x)) / xi -
               ivn / (xi * (xi - xp)) * (c.F(kd, drop(c.x, i0)) - c.F(kd, drop(c.x, i0 - 1)));
    }
    const Index kp = k.without(i0 - 1);
    const Index ki = k.without(i0);
    const Scalar a = c.F(ki, drop(c.x, i0));
    const Scalar b = has_next ? c.F(ki, drop(c.s, i0 + 1)) : zero;
    return -((c.F(kp, drop(c.x, i0 - 1)) - a) / (xi - xp)) - (a - b) / (xi + ivn - x_next);
}

}  // namespace

std::string diff_case_code(const Index& k, int i)
{
    if (i < 1 || i > k.depth()) throw DomainError("difference variable out of range");
    if (i == 1) {
        if (k[0] > 1) return "1a";
        return k.depth() == 1 ? "1b" : "1c";
    }
    const bool prev_big = k[static_cast<std::size_t>(i - 2)] > 1;
    const bool cur_big = k[static_cast<std::size_t>(i - 1)] > 1;
    if (prev_big) return cur_big ? "2a" : "2b";
    return cur_big ? "2c" : "2d";
}

Sides<Scalar> difference_equation_sides(const Index& k, int i, const Point& x, long long N, bool li_side)
{
    if (k.empty()) throw DomainError("difference equations need a nonempty index");
    if (static_cast<int>(x.size()) != k.depth()) throw DomainError("point length must equal the depth");
    if (i < 1 || i > k.depth()) throw DomainError("difference variable out of range");
    if (N < 1) throw DomainError("N must be positive");
    DiffCtx c{k, unify(x), {}, N, i - 1, li_side};
    c.s = c.x;
    c.s[static_cast<std::size_t>(c.i0)] = c.s[static_cast<std::size_t>(c.i0)] + c.inv_n();
    const auto f = [&](const Point& p) { return c.F(k, p); };
    Scalar lhs = difference_quotient(f, c.x, static_cast<std::size_t>(c.i0), N);
    Scalar rhs = li_side ? rhs_li_tilde(c) : rhs_iterated(c);
    return {std::move(lhs), std::move(rhs)};
}

std::vector<Scalar> transport_chain(const Index& k, const Point& x, long long N)
{
    std::vector<Scalar> out;
    for (int j = k.depth(); j >= 0; --j) out.push_back(connected_sum(k.prefix(j), k.suffix_from(j), x, N));
    return out;
}

SuiteReport verify_main(const Campaign& c)
{
    std::vector<Job> jobs;
    std::uint64_t case_index = 0;
    for (const Index& k : enumerate_indices(c.max_weight, c.max_depth, false)) {
        if (k.empty()) continue;
        const int r = k.depth();
        for (long long N = c.n_min; N <= c.n_max; ++N) {
            const std::string base = "main" + kstr(k) + nstr(N);
            const auto sides = [k, N, r](const Point& x) {
                return Sides<Scalar>{li_tilde(k, x, N), sign_power(r, iterated_sum(k, x, N, false))};
            };
            for (int t = 0; t < c.trials; ++t) {
                Sampler s(c.seed, case_index++, c.height);
                jobs.emplace_back([=] { return detail::sampled_case(base + " #" + std::to_string(t), s, r, sides); });
            }
            const Point ones(static_cast<std::size_t>(r), Scalar(Rational(1)));
            jobs.emplace_back([=] { return detail::fixed_case(base + " x=" + detail::point_str(ones), [&] { return sides(ones); }); });
            if (!c.gaussian) continue;
            for (int g = 0; g < 3; ++g) {
                const Point z = detail::gaussian_point(r, g);
                jobs.emplace_back([=] { return detail::fixed_case(base + " x=" + detail::point_str(z), [&] { return sides(z); }); });
            }
        }
    }
    // Depth-one specialization in its two binomial forms.
    for (int k = 1; k <= c.max_weight + 1; ++k) {
        for (long long N = c.n_min; N <= c.n_max; ++N) {
            const std::string base = "depth-one k=" + std::to_string(k) + nstr(N);
            jobs.emplace_back([=] {
                return detail::fixed_case(base + " form=alternating", [&] {
                    Rational lhs;
                    for (long long n = 1; n < N; ++n) {
                        Rational t = gen_binomial(Rational(N - 1), n) / gen_binomial(Rational(N + n), n);
                        for (int e = 0; e < k; ++e) t /= Rational(n);
                        lhs += n % 2 == 1 ? t : -t;
                    }
                    return Sides<Scalar>{Scalar(lhs), iterated_sum(Index{k}, {Scalar(Rational(-1))}, N, false)};
                });
            });
            jobs.emplace_back([=] {
                return detail::fixed_case(base + " form=negative-binomial", [&] {
                    Rational lhs;
                    for (long long n = 1; n < N; ++n) {
                        Rational t = gen_binomial(Rational(N - 1), n) / gen_binomial(Rational(-N - 1), n);
                        for (int e = 0; e < k; ++e) t /= Rational(n);
                        lhs += t;
                    }
                    return Sides<Scalar>{Scalar(lhs), -iterated_sum(Index{k}, {Scalar(Rational(-1))}, N, false)};
                });
            });
        }
    }
    return detail::run_jobs(c, jobs);
}

SuiteReport verify_modified(const Campaign& c)
{
    std::vector<Job> jobs;
    std::uint64_t case_index = 0;
    for (const Index& k : enumerate_indices(c.max_weight, c.max_depth, false)) {
        if (k.empty()) continue;
        const int r = k.depth();
        for (long long N = c.n_min; N <= c.n_max; ++N) {
            const std::string base = "modified" + kstr(k) + nstr(N);
            const auto sides = [k, N](const Point& x) { return modified_main_sides(k, x, N); };
            for (int t = 0; t < c.trials; ++t) {
                Sampler s(c.seed, case_index++, c.height);
                jobs.emplace_back([=] { return detail::sampled_case(base + " #" + std::to_string(t), s, r, sides); });
            }
            if (c.gaussian) {
                for (int g = 0; g < 3; ++g) {
                    const Point z = detail::gaussian_point(r, g);
                    jobs.emplace_back(
                        [=] { return detail::fixed_case(base + " x=" + detail::point_str(z), [&] { return sides(z); }); });
                }
            }
            if (N < 2) continue;
            // Substituting x -> x N/(N-1) at N-1 recovers the strict form.
            const auto bridge = [k, N](const Point& x) {
                Point y;
                const Rational f = Rational(N) / Rational(N - 1);
                for (const Scalar& v : x) y.push_back(v * Scalar(f).promoted_to(v.kind()));
                return Sides<Scalar>{modified_lhs(k, y, N - 1), li_tilde(k, x, N)};
            };
            Sampler s(c.seed, case_index++, c.height);
            jobs.emplace_back([=] { return detail::sampled_case("bridge" + kstr(k) + nstr(N), s, r, bridge); });
        }
    }
    return detail::run_jobs(c, jobs);
}

SuiteReport verify_difference_equations(const Campaign& c)
{
    static const std::vector<std::string> codes{"1a", "1b", "1c", "2a", "2b", "2c", "2d"};
    if (!c.diff_case.empty() && std::find(codes.begin(), codes.end(), c.diff_case) == codes.end()) {
        throw DomainError("unknown difference-equation case: " + c.diff_case);
    }
    std::vector<Job> jobs;
    std::uint64_t case_index = 0;
    for (const Index& k : enumerate_indices(c.max_weight, c.max_depth, false)) {
        if (k.empty()) continue;
        const int r = k.depth();
        for (int i = 1; i <= r; ++i) {
            const std::string code = diff_case_code(k, i);
            if (!c.diff_case.empty() && code != c.diff_case) continue;
            const std::string where = i == 1 ? "first" : (i == r ? "last" : "inner");
            for (long long N = std::max(2LL, c.n_min); N <= c.n_max; ++N) {
                for (const bool li : {false, true}) {
                    const std::string base = std::string("diff ") + code + "/" + where + (li ? " li" : " iterated") +
                                             kstr(k) + " i=" + std::to_string(i) + nstr(N);
                    const auto sides = [k, i, N, li](const Point& x) {
                        return difference_equation_sides(k, i, x, N, li);
                    };
                    for (int t = 0; t < c.trials; ++t) {
                        Sampler s(c.seed, case_index++, c.height);
                        jobs.emplace_back(
                            [=] { return detail::sampled_case(base + " #" + std::to_string(t), s, r, sides); });
                    }
                }
            }
        }
    }
    return detail::run_jobs(c, jobs);
}

namespace {

Rational connector(long long n, long long m, const Rational& nx)
{
    return gen_binomial(Rational(m), n) / gen_binomial(nx - Rational(1), n);
}

Rational binom_ratio(const Rational& top, const Rational& bottom, long long n)
{
    return gen_binomial(top, n) / gen_binomial(bottom, n);
}

}  // namespace

SuiteReport verify_transport(const Campaign& c)
{
    std::vector<Job> jobs;
    std::uint64_t case_index = 0;
    for (const Index& k : enumerate_indices(c.max_weight, c.max_depth, false)) {
        if (k.empty()) continue;
        const int r = k.depth();
        for (long long N = c.n_min; N <= c.n_max; ++N) {
            const auto chain = [k, N](const Point& x) {
                const auto v = transport_chain(k, x, N);
                for (const Scalar& w : v) {
                    if (w != v.front()) return Sides<Scalar>{v.front(), w};
                }
                return Sides<Scalar>{v.front(), v.back()};
            };
            for (int t = 0; t < c.trials; ++t) {
                Sampler s(c.seed, case_index++, c.height);
                jobs.emplace_back([=] {
                    return detail::sampled_case("transport" + kstr(k) + nstr(N) + " #" + std::to_string(t), s, r, chain);
                });
            }
        }
    }

    // Pointwise connector identities; the connector depends on N only through N x.
    for (long long m = 0; m <= c.n_max; ++m) {
        for (long long n = 0; n <= m; ++n) {
            const std::string nm = " n=" + std::to_string(n) + " m=" + std::to_string(m);
            Sampler s(c.seed, case_index++, c.height);
            const long long N = s.uniform(c.n_min, c.n_max);
            if (n > 0) {
                jobs.emplace_back([=] {
                    return detail::sampled_case("connector-sum" + nm + nstr(N), s, 1, [=](const Point& x) {
                        const Rational nx = Rational(N) * x[0].as<Rational>();
                        Rational rhs;
                        for (long long b = n; b <= m; ++b) rhs += connector(n, b, nx) / Rational(b);
                        return Sides<Scalar>{Scalar(connector(n, m, nx) / Rational(n)), Scalar(rhs)};
                    });
                });
            }
            if (n < m) {
                jobs.emplace_back([=] {
                    return detail::sampled_case("connector-telescope" + nm + nstr(N), s, 1, [=](const Point& x) {
                        const Rational nx = Rational(N) * x[0].as<Rational>();
                        Rational lhs;
                        for (long long a = n + 1; a <= m; ++a) lhs += connector(a, m, nx) / Rational(m);
                        return Sides<Scalar>{Scalar(lhs), Scalar(connector(n, m - 1, nx) / (nx - Rational(m)))};
                    });
                });
                jobs.emplace_back([=] {
                    return detail::sampled_case("connector-change" + nm + nstr(N), s, 2, [=](const Point& x) {
                        const Rational nx = Rational(N) * x[0].as<Rational>();
                        const Rational nx2 = Rational(N) * x[1].as<Rational>();
                        const Rational lhs =
                            binom_ratio(nx2 - Rational(1), nx - Rational(1), n) * connector(n, m - 1, nx2);
                        return Sides<Scalar>{Scalar(lhs), Scalar(connector(n, m - 1, nx))};
                    });
                });
            }
        }
    }
    for (long long n = 1; n <= c.n_max; ++n) {
        for (long long r0 = 0; r0 < n; ++r0) {
            const std::string id = "binomial-telescope r=" + std::to_string(r0) + " n=" + std::to_string(n);
            Sampler s(c.seed, case_index++, c.height);
            jobs.emplace_back([=] {
                return detail::sampled_case(id, s, 2, [=](const Point& x) {
                    const Rational& a = x[0].as<Rational>();
                    const Rational& b = x[1].as<Rational>();
                    Rational lhs;
                    for (long long i = r0 + 1; i <= n; ++i) lhs += binom_ratio(b + Rational(1), a, i);
                    const Rational rhs =
                        (b + Rational(1)) / (a - b) * (binom_ratio(b, a, r0) - binom_ratio(b, a, n));
                    return Sides<Scalar>{Scalar(lhs), Scalar(rhs)};
                });
            });
        }
    }
    return detail::run_jobs(c, jobs);
}

}  // namespace dmpl
