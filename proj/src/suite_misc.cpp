// Copyright 2026 The dmpl Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "dmpl/nested_sum.hpp"
#include "dmpl/special.hpp"
#include "suite_internal.hpp"

namespace dmpl {

using detail::Job;

namespace {

std::string nstr(long long N) { return " N=" + std::to_string(N); }

Rational alternating_harmonic(long long upto)
{
    Rational s;
    for (long long n = 1; n <= upto; ++n) s += n % 2 == 1 ? Rational(1) / Rational(n) : -(Rational(1) / Rational(n));
    return s;
}

Rational binom_int(long long top, long long n) { return gen_binomial(Rational(top), n); }

}  // namespace

/// Coefficient a_n^{(N)} of the arctangent discretization.
Rational arctan_coefficient(long long n, long long N)
{
    Rational prod(1);
    const Rational NN(N);
    for (long long i = 1; i <= n; ++i) prod *= (NN - Rational(i)) / (Rational(i) * Rational(i) + NN * NN);
    const auto st = stirling_table(static_cast<int>(n) + 1);
    Rational sum;
    Rational npow = NN;  // N^{2j+1}
    for (long long j = 0; 2 * j < n; ++j) {
        const Rational term(st[static_cast<std::size_t>(n + 1)][static_cast<std::size_t>(2 * j + 2)], mpz_class(1));
        sum += (n + j + 1) % 2 == 0 ? term * npow : -(term * npow);
        npow *= NN * NN;
    }
    return prod * sum;
}

/// Closed form b_{N,k} of the inclusive depth-one iterated sum.
Rational depth_one_closed_form(int k, long long N)
{
    const int r = k / 2;
    if (k % 2 == 0) {
        SumSignature<Rational> sig(N, Rational(1));
        for (int j = 0; j < r; ++j) {
            Slot<Rational> s;
            s.link = Link::Weak;
            s.power = 2;
            sig.add(std::move(s));
        }
        return sig.evaluate() / Rational(2);
    }
    if (r == 0) return alternating_harmonic(2 * N);
    SumSignature<Rational> sig(N, Rational(1));
    Slot<Rational> first;
    for (long long m = 1; m <= N; ++m) first.table.push_back(alternating_harmonic(2 * m) / Rational(m * m));
    sig.add(std::move(first));
    for (int j = 1; j < r; ++j) {
        Slot<Rational> s;
        s.link = Link::Weak;
        s.power = 2;
        sig.add(std::move(s));
    }
    return sig.evaluate();
}

SuiteReport verify_misc(const Campaign& c)
{
    std::vector<Job> jobs;
    const auto fixed = [&](std::string id, std::function<Sides<Scalar>()> f) {
        jobs.emplace_back([id = std::move(id), f = std::move(f)] { return detail::fixed_case(id, f); });
    };

    for (long long N = c.n_min; N <= c.n_max; ++N) {
        fixed("arctan-discretization" + nstr(N), [N] {
            Rational lhs;
            Rational rhs;
            for (long long n = 1; n < N; ++n) {
                lhs += arctan_coefficient(n, N) / Rational(n);
                rhs += Rational(N) / (Rational(n * n) + Rational(N * N));
            }
            return Sides<Scalar>{Scalar(lhs), Scalar(rhs)};
        });
        fixed("arctan-gaussian" + nstr(N), [N] {
            Rational rhs;
            for (long long n = 1; n < N; ++n) rhs += Rational(N) / (Rational(n * n) + Rational(N * N));
            const Gaussian i = Gaussian::i();
            const Scalar plus = li_tilde(Index{1}, {Scalar(-i)}, N).promoted_to(ScalarKind::Gaussian);
            const Scalar minus = li_tilde(Index{1}, {Scalar(i)}, N).promoted_to(ScalarKind::Gaussian);
            return Sides<Scalar>{(plus - minus) / Scalar(Gaussian(Rational(0), Rational(2))), Scalar(rhs)};
        });
    }

    // |a_n^{(N)} - lim| must shrink along a doubling ladder of N, started past
    // the pre-asymptotic hump (the deviation peaks near N = 5n..7n).
    for (long long n = 1; n <= 6; ++n) {
        jobs.emplace_back([n] {
            detail::JobOutcome o;
            o.result.id = "arctan-limit n=" + std::to_string(n) + " N=40,80,160,320";
            const Rational limit = n % 2 == 0 ? Rational(0) : Rational(((n - 1) / 2) % 2 == 0 ? 1 : -1);
            Rational prev(-1);
            for (long long N = 40; N <= 320; N *= 2) {
                const Rational d = (arctan_coefficient(n, N) - limit).abs();
                if (prev.sign() >= 0 && !(d < prev)) {
                    o.result.status = Status::Fail;
                    o.result.lhs = d.str();
                    o.result.rhs = prev.str();
                    o.result.id += " at N=" + std::to_string(N);
                    break;
                }
                prev = d;
            }
            return o;
        });
    }

    const long long n40 = std::min(c.n_max, 40LL);
    for (int k = 1; k <= c.max_weight; ++k) {
        for (long long N = c.n_min; N <= n40; ++N) {
            const std::string ks = " k=" + std::to_string(k);
            fixed("depth-one-closed-form" + ks + nstr(N), [k, N] {
                return Sides<Scalar>{iterated_sum(Index{k}, {Scalar(Rational(-1))}, N, true),
                                     Scalar(depth_one_closed_form(k, N))};
            });
            fixed("depth-one-inclusive" + ks + nstr(N), [k, N] {
                Rational lhs;
                for (long long n = 1; n <= N; ++n) {
                    Rational t = binom_int(N, n) / binom_int(N + n, n);
                    for (int e = 0; e < k; ++e) t /= Rational(n);
                    lhs += n % 2 == 0 ? t : -t;
                }
                return Sides<Scalar>{Scalar(lhs), -iterated_sum(Index{k}, {Scalar(Rational(-1))}, N, true)};
            });
        }
    }

    const long long n50 = std::min(c.n_max, 50LL);
    for (long long N = c.n_min; N <= n50; ++N) {
        fixed("log2-discretization" + nstr(N), [N] {
            Rational rhs;
            for (long long n = 0; n < N; ++n) rhs += Rational(1) / Rational(n + N);
            return Sides<Scalar>{Scalar(alternating_harmonic(2 * N - 1)), Scalar(rhs)};
        });
        fixed("log2-discretization-second" + nstr(N), [N] {
            Rational lhs;
            for (long long n = 1; n <= N; ++n) lhs += Rational(1) / Rational(n + N);
            return Sides<Scalar>{Scalar(lhs), Scalar(alternating_harmonic(2 * N))};
        });
    }

    const long long m30 = std::min(c.n_max, 30LL);
    for (long long m = 1; m <= m30; ++m) {
        const std::string ms = " m=" + std::to_string(m);
        fixed("binomial-alternating" + ms, [m] {
            Rational lhs;
            for (long long n = 1; n <= m; ++n) {
                const Rational t = binom_int(m, n) / binom_int(m + n, n);
                lhs += n % 2 == 0 ? t : -t;
            }
            return Sides<Scalar>{Scalar(lhs), Scalar(Rational(-1) / Rational(2))};
        });
        fixed("binomial-alternating-harmonic" + ms, [m] {
            Rational lhs;
            for (long long n = 1; n <= m; ++n) {
                const Rational t = binom_int(m, n) / binom_int(m + n, n) / Rational(n);
                lhs += n % 2 == 0 ? t : -t;
            }
            return Sides<Scalar>{Scalar(lhs), Scalar(-alternating_harmonic(2 * m))};
        });
        for (long long n = 1; n <= m; ++n) {
            fixed("binomial-transport n=" + std::to_string(n) + ms, [m, n] {
                const Rational lhs = binom_int(m, n) / binom_int(m + n, n) / Rational(n * n);
                Rational rhs;
                for (long long mm = n; mm <= m; ++mm) rhs += binom_int(mm, n) / binom_int(mm + n, n) / Rational(mm * mm);
                return Sides<Scalar>{Scalar(lhs), Scalar(rhs)};
            });
        }
    }
    return detail::run_jobs(c, jobs);
}

}  // namespace dmpl
