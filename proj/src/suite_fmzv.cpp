// Copyright 2026 The dmpl Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <map>

#include "dmpl/nested_sum.hpp"
#include "suite_internal.hpp"

namespace dmpl {

using detail::Job;
using detail::JobOutcome;

namespace {

using Cache = std::map<Index, Residue>;

Residue zeta_below(const Index& k, std::uint64_t p, Cache& cache)
{
    if (auto it = cache.find(k); it != cache.end()) return it->second;
    const Residue one(1, p);
    const std::vector<Residue> ones(static_cast<std::size_t>(k.depth()), one);
    Residue v = li_sh_truncated(k, ones, static_cast<long long>(p), one);
    cache.emplace(k, v);
    return v;
}

Residue zeta_below(const IndexCombo& c, std::uint64_t p, Cache& cache)
{
    Residue acc(0, p);
    for (const auto& [h, coef] : c.terms()) acc += Residue::from_rational(coef, p) * zeta_below(h, p, cache);
    return acc;
}

Residue signed_by_depth(const Index& k, Residue v) { return k.depth() % 2 == 0 ? v : -v; }

std::string tag_id(const char* name, const Index& k, long long p)
{
    return std::string(name) + " k=(" + k.str() + ") p=" + std::to_string(p);
}

/// Cleared-denominator form of the congruence with variables over all of F_p^r.
/// Returns the first disagreeing point, or an empty vector.
struct GridTables {
    std::uint64_t p;
    // rising[v][n] = (v+1)_n, tail[v][n] = prod_{a=n+1}^{p-1} (v+a), for v in F_p, 0 <= n < p.
    std::vector<std::vector<Residue>> rising;
    std::vector<std::vector<Residue>> tail;
    std::vector<Residue> factorial;
    std::vector<Residue> inverse;

    explicit GridTables(std::uint64_t prime) : p(prime)
    {
        const Residue one(1, p);
        rising.assign(p, std::vector<Residue>(p, one));
        tail.assign(p, std::vector<Residue>(p, one));
        for (std::uint64_t v = 0; v < p; ++v) {
            const Residue x(static_cast<long long>(v), p);
            for (std::uint64_t n = 1; n < p; ++n) rising[v][n] = rising[v][n - 1] * (x + Residue(static_cast<long long>(n), p));
            for (std::uint64_t n = p - 1; n-- > 0;) tail[v][n] = tail[v][n + 1] * (x + Residue(static_cast<long long>(n + 1), p));
        }
        factorial.assign(p, one);
        inverse.assign(p, one);
        for (std::uint64_t n = 1; n < p; ++n) {
            factorial[n] = factorial[n - 1] * Residue(static_cast<long long>(n), p);
            inverse[n] = Residue(static_cast<long long>(n), p).inverse();
        }
    }
};

std::vector<std::uint64_t> grid_mismatch(const Index& k, const GridTables& g, Residue& lhs_out, Residue& rhs_out)
{
    const std::uint64_t p = g.p;
    const int r = k.depth();
    const Residue one(1, p);
    const long long upper = static_cast<long long>(p) - 1;
    std::vector<std::uint64_t> x(static_cast<std::size_t>(r), 0);
    while (true) {
        SumSignature<Residue> lhs(upper, one);
        for (int i = 0; i < r; ++i) {
            Slot<Residue> s;
            s.table.resize(static_cast<std::size_t>(upper), one);
            for (long long n = 1; n <= upper; ++n) {
                Residue w = g.inverse[static_cast<std::size_t>(n)].pow(static_cast<std::uint64_t>(k[i]));
                w *= g.tail[x[i]][static_cast<std::size_t>(n)];
                w *= i + 1 < r ? g.rising[x[i + 1]][static_cast<std::size_t>(n)] : g.factorial[static_cast<std::size_t>(n)];
                s.table[static_cast<std::size_t>(n - 1)] = w;
            }
            lhs.add(std::move(s));
        }
        SumSignature<Residue> rhs(upper, one);
        for (int j = 0; j < r; ++j) {
            Slot<Residue> first;
            first.table.resize(static_cast<std::size_t>(upper), one);
            for (long long n = 1; n <= upper; ++n) {
                first.table[static_cast<std::size_t>(n - 1)] =
                    g.rising[x[j]][static_cast<std::size_t>(n - 1)] * g.tail[x[j]][static_cast<std::size_t>(n)];
            }
            rhs.add(std::move(first));
            for (int e = 1; e < k[j]; ++e) {
                Slot<Residue> s;
                s.link = Link::Weak;
                s.power = 1;
                rhs.add(std::move(s));
            }
        }
        const Residue a = lhs.evaluate();
        const Residue b = r % 2 == 0 ? rhs.evaluate() : -rhs.evaluate();
        if (a != b) {
            lhs_out = a;
            rhs_out = b;
            return x;
        }
        int pos = 0;
        while (pos < r && ++x[pos] == p) x[pos++] = 0;
        if (pos == r) return {};
    }
}

}  // namespace

SuiteReport verify_fmzv(const Campaign& c)
{
    std::vector<Job> jobs;
    const auto indices = enumerate_indices(c.max_weight, c.max_depth, false);

    for (const long long p : detail::primes_between(std::max(5LL, c.p_min), c.p_max)) {
        const auto up = static_cast<std::uint64_t>(p);
        for (const Index& k : indices) {
            if (k.empty()) continue;
            jobs.emplace_back([=] {
                return detail::fixed_case(tag_id("hoffman", k, p), [&] {
                    Cache cache;
                    Residue rhs(0, up);
                    for (const Index& l : refinements(k)) rhs += zeta_below(l, up, cache);
                    return Sides<Scalar>{Scalar(zeta_below(k, up, cache)), Scalar(signed_by_depth(k, rhs))};
                });
            });
            jobs.emplace_back([=] {
                return detail::fixed_case(tag_id("main-at-p", k, p), [&] {
                    const Residue one(1, up);
                    const std::vector<Residue> ones(static_cast<std::size_t>(k.depth()), one);
                    const Residue lhs = li_tilde(k, ones, p, one);
                    const Residue rhs = iterated_sum(k, ones, p, false, one);
                    return Sides<Scalar>{Scalar(lhs), Scalar(signed_by_depth(k, rhs))};
                });
            });
        }
    }

    const long long grid_hi = std::min(c.p_max, c.grid_p_max);
    for (const long long p : detail::primes_between(std::max(5LL, c.p_min), grid_hi)) {
        for (const Index& k : enumerate_indices(std::min(c.grid_max_weight, c.max_weight), c.max_depth, false)) {
            if (k.empty()) continue;
            jobs.emplace_back([=] {
                JobOutcome o;
                o.result.id = tag_id("cleared-congruence", k, p) + " grid=" + std::to_string(p) + "^" +
                              std::to_string(k.depth());
                const GridTables g(static_cast<std::uint64_t>(p));
                Residue a(0, g.p);
                Residue b(0, g.p);
                const auto bad = grid_mismatch(k, g, a, b);
                if (!bad.empty()) {
                    Point at;
                    for (auto v : bad) at.emplace_back(Residue(static_cast<long long>(v), g.p));
                    o.result.id += " x=" + detail::point_str(at);
                    o.result.status = Status::Fail;
                    o.result.lhs = a.str();
                    o.result.rhs = b.str();
                }
                return o;
            });
        }
    }

    for (const long long p : detail::primes_between(std::max(7LL, c.p_min), c.p_max)) {
        const auto up = static_cast<std::uint64_t>(p);
        for (const Index& k : indices) {
            if (k.empty()) continue;
            for (int m = 0; m <= c.m_max; ++m) {
                jobs.emplace_back([=] {
                    return detail::fixed_case(tag_id("star-product", k, p) + " m=" + std::to_string(m), [&] {
                        Cache cache;
                        const IndexCombo left =
                            m == 0 ? IndexCombo(k)
                                   : underline_harmonic(IndexCombo(k), coarsenings_star(Index(std::vector<int>(
                                                                           static_cast<std::size_t>(m), 1))));
                        Residue rhs(0, up);
                        for (const auto& l : weak_compositions(m, k.depth())) {
                            for (const Index& h : between_chain(l, k)) rhs += zeta_below(h, up, cache);
                        }
                        return Sides<Scalar>{Scalar(zeta_below(left, up, cache)), Scalar(signed_by_depth(k, rhs))};
                    });
                });
            }
        }
    }
    return detail::run_jobs(c, jobs);
}

}  // namespace dmpl
