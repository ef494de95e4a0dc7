// Copyright 2026 The dmpl Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "suite_internal.hpp"

namespace dmpl {

using detail::Job;
using detail::JobOutcome;

namespace {

const std::vector<Scalar>& word_params()
{
    static const std::vector<Scalar> ps{Scalar(Rational(1)), Scalar(Rational(-1)), Scalar(Rational(2)),
                                        Scalar(Gaussian::i())};
    return ps;
}

/// All words over the parameter set with flattened length exactly w.
std::vector<Word> words_of_weight(int w)
{
    std::vector<Word> out;
    for (const Index& k : enumerate_indices(w, w, false)) {
        if (k.weight() != w) continue;
        const int r = k.depth();
        std::vector<std::size_t> pick(static_cast<std::size_t>(r), 0);
        while (true) {
            std::vector<Letter> ls;
            for (int j = 0; j < r; ++j) ls.push_back({word_params()[pick[static_cast<std::size_t>(j)]], k[static_cast<std::size_t>(j)]});
            out.emplace_back(std::move(ls));
            int pos = 0;
            while (pos < r && ++pick[static_cast<std::size_t>(pos)] == word_params().size()) pick[static_cast<std::size_t>(pos++)] = 0;
            if (pos == r) break;
        }
    }
    return out;
}

JobOutcome combo_case(const std::string& id, const WordCombo& a, const WordCombo& b)
{
    JobOutcome o;
    o.result.id = id;
    if (!(a == b)) {
        o.result.status = Status::Fail;
        o.result.lhs = a.str();
        o.result.rhs = b.str();
    }
    return o;
}

/// Failure reason when some term of c violates the predicate or has the wrong weight.
std::string closure_defect(const WordCombo& c, int weight, bool (*tier)(const Word&))
{
    for (const auto& [w, coef] : c.terms()) {
        if (w.weight() != weight) return "weight of " + w.str();
        if (!tier(w)) return "tier of " + w.str();
    }
    return {};
}

std::string pair_id(const char* tag, const Word& u, const Word& v)
{
    return std::string(tag) + " u=[" + u.str() + "] v=[" + v.str() + "]";
}

/// Thread-safe memo of L_{<N}(w) for N = 1..n_max.
class LadderCache {
public:
    explicit LadderCache(long long n_max) : n_max_(n_max) {}

    std::vector<Scalar> get(const Word& w)
    {
        {
            std::lock_guard<std::mutex> lock(mu_);
            if (auto it = memo_.find(w); it != memo_.end()) return it->second;
        }
        auto v = eval_L_ladder(WordCombo(w), n_max_);
        std::lock_guard<std::mutex> lock(mu_);
        return memo_.emplace(w, std::move(v)).first->second;
    }

    std::vector<Scalar> get(const WordCombo& c)
    {
        std::vector<Scalar> acc(static_cast<std::size_t>(n_max_), Scalar(Rational(0)));
        for (const auto& [w, coef] : c.terms()) {
            const auto lw = get(w);
            for (std::size_t n = 0; n < acc.size(); ++n) {
                acc[n] = add_mixed(acc[n], lw[n] * Scalar(coef).promoted_to(lw[n].kind()));
            }
        }
        return acc;
    }

private:
    long long n_max_;
    std::mutex mu_;
    std::map<Word, std::vector<Scalar>> memo_;
};

Scalar mul_mixed(const Scalar& a, const Scalar& b)
{
    const auto u = unify({a, b});
    return u[0] * u[1];
}

}  // namespace

SuiteReport verify_words(const Campaign& c)
{
    std::vector<Job> jobs;
    const int max_len = c.max_weight;  // products of length <= max_len
    std::vector<std::vector<Word>> by_weight(static_cast<std::size_t>(max_len + 2));
    for (int w = 1; w <= max_len + 1; ++w) by_weight[static_cast<std::size_t>(w)] = words_of_weight(w);

    for (int a = 1; a < max_len; ++a) {
        for (int b = 1; a + b <= max_len; ++b) {
            for (const Word& u : by_weight[static_cast<std::size_t>(a)]) {
                for (const Word& v : by_weight[static_cast<std::size_t>(b)]) {
                    jobs.emplace_back([=] {
                        const WordCombo uv = harmonic(WordCombo(u), WordCombo(v));
                        JobOutcome o = combo_case(pair_id("harmonic-commutative", u, v), uv, harmonic(WordCombo(v), WordCombo(u)));
                        if (o.result.status == Status::Pass && in_h1_star(u) && in_h1_star(v)) {
                            if (auto d = closure_defect(uv, a + b, in_h1_star); !d.empty()) {
                                o.result.status = Status::Fail;
                                o.result.lhs = uv.str();
                                o.result.rhs = "closure: " + d;
                            }
                        }
                        return o;
                    });
                    jobs.emplace_back([=] {
                        const WordCombo uv = shuffle(WordCombo(u), WordCombo(v));
                        JobOutcome o = combo_case(pair_id("shuffle-commutative", u, v), uv, shuffle(WordCombo(v), WordCombo(u)));
                        if (o.result.status == Status::Pass) {
                            if (auto d = closure_defect(uv, a + b, in_h1_sh); !d.empty()) {
                                o.result.status = Status::Fail;
                                o.result.lhs = uv.str();
                                o.result.rhs = "closure: " + d;
                            }
                        }
                        return o;
                    });
                }
            }
        }
    }

    for (int a = 1; a < max_len; ++a) {
        for (int b = 1; a + b < max_len; ++b) {
            for (int d = 1; a + b + d <= max_len; ++d) {
                for (const Word& u : by_weight[static_cast<std::size_t>(a)]) {
                    for (const Word& v : by_weight[static_cast<std::size_t>(b)]) {
                        for (const Word& w : by_weight[static_cast<std::size_t>(d)]) {
                            const std::string tail = " w=[" + w.str() + "]";
                            jobs.emplace_back([=] {
                                const WordCombo U(u), V(v), W(w);
                                return combo_case(pair_id("harmonic-associative", u, v) + tail,
                                                  harmonic(harmonic(U, V), W), harmonic(U, harmonic(V, W)));
                            });
                            jobs.emplace_back([=] {
                                const WordCombo U(u), V(v), W(w);
                                return combo_case(pair_id("shuffle-associative", u, v) + tail,
                                                  shuffle(shuffle(U, V), W), shuffle(U, shuffle(V, W)));
                            });
                        }
                    }
                }
            }
        }
    }

    // Product formula for truncated sums, every N at once from ladders.
    const long long n_max = c.n_max;
    auto cache = std::make_shared<LadderCache>(n_max);
    const int prod_len = max_len + 1;
    for (int a = 1; a < prod_len; ++a) {
        for (int b = a; a + b <= prod_len; ++b) {
            const auto& us = by_weight[static_cast<std::size_t>(a)];
            const auto& vs = by_weight[static_cast<std::size_t>(b)];
            for (std::size_t iu = 0; iu < us.size(); ++iu) {
                for (std::size_t iv = a == b ? iu : 0; iv < vs.size(); ++iv) {
                    const Word u = us[iu];
                    const Word v = vs[iv];
                    jobs.emplace_back([=] {
                        JobOutcome o;
                        o.result.id = pair_id("truncated-product", u, v) + " N<=" + std::to_string(n_max);
                        const auto lu = cache->get(u);
                        const auto lv = cache->get(v);
                        const auto luv = cache->get(harmonic(WordCombo(u), WordCombo(v)));
                        for (long long N = 1; N <= n_max; ++N) {
                            const auto i = static_cast<std::size_t>(N - 1);
                            const Scalar lhs = mul_mixed(lu[i], lv[i]);
                            const auto both = unify({lhs, luv[i]});
                            if (both[0] != both[1]) {
                                o.result.id += " at N=" + std::to_string(N);
                                o.result.status = Status::Fail;
                                o.result.lhs = lhs.str();
                                o.result.rhs = luv[i].str();
                                break;
                            }
                        }
                        return o;
                    });
                }
            }
        }
    }

    // s_{<N}(k) zeta_{<N+1}(l) = s_{<N}(k underline-* l).
    const long long s_max = std::min(n_max, 20LL);
    auto zcache = std::make_shared<LadderCache>(s_max + 1);
    const auto zeta_ladder = [zcache](const IndexCombo& ic) {
        WordCombo wc;
        for (const auto& [h, coef] : ic.terms()) {
            wc.add(Word(h, std::vector<Scalar>(static_cast<std::size_t>(h.depth()), Scalar(Rational(1)))), coef);
        }
        return zcache->get(wc);
    };
    for (const Index& k : enumerate_indices(c.max_weight, c.max_depth, false)) {
        if (k.empty()) continue;
        for (const Index& l : enumerate_indices(c.max_weight, c.max_depth, false)) {
            if (l.empty()) continue;
            jobs.emplace_back([=] {
                JobOutcome o;
                o.result.id = "tail-product k=(" + k.str() + ") l=(" + l.str() + ") N<=" + std::to_string(s_max);
                const auto zk = zeta_ladder(IndexCombo(k));
                const auto zl = zeta_ladder(IndexCombo(l));
                const auto zkl = zeta_ladder(underline_harmonic(k, l));
                // Entry N-1 holds zeta_{<N}; zeta_{<1} = 0 for nonempty indices.
                const auto at = [](const std::vector<Scalar>& z, long long N) {
                    return N == 0 ? Scalar(Rational(0)) : z[static_cast<std::size_t>(N - 1)];
                };
                for (long long N = 1; N <= s_max; ++N) {
                    const Scalar lhs = (at(zk, N + 1) - at(zk, N)) * at(zl, N + 1);
                    const Scalar rhs = at(zkl, N + 1) - at(zkl, N);
                    if (lhs != rhs) {
                        o.result.id += " at N=" + std::to_string(N);
                        o.result.status = Status::Fail;
                        o.result.lhs = lhs.str();
                        o.result.rhs = rhs.str();
                        break;
                    }
                }
                return o;
            });
        }
    }
    return detail::run_jobs(c, jobs);
}

}  // namespace dmpl
