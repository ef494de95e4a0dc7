// Copyright 2026 The dmpl Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

#include <json.hpp>

#include "dmpl/errors.hpp"
#include "dmpl/suite.hpp"

namespace dmpl {

namespace {

void check_ladder(const std::vector<long long>& ns)
{
    if (ns.empty()) throw DomainError("empty N list");
    for (std::size_t j = 0; j < ns.size(); ++j) {
        if (ns[j] < 2) throw DomainError("trend N values must be at least 2");
        if (j > 0 && ns[j] <= ns[j - 1]) throw DomainError("N list must be strictly increasing");
    }
}

double log_pow(long long N, int e) { return std::pow(std::log(static_cast<double>(N)), e); }

struct Rate {
    std::string text;
    std::function<double(long long)> factor;
};

Rate cube_root_rate(int log_exp)
{
    return {"N^(1/3)/log(N)^" + std::to_string(log_exp),
            [log_exp](long long N) { return std::cbrt(static_cast<double>(N)) / log_pow(N, log_exp); }};
}

Rate linear_rate(int log_exp)
{
    return {"N/log(N)^" + std::to_string(log_exp),
            [log_exp](long long N) { return static_cast<double>(N) / log_pow(N, log_exp); }};
}

TrendReport build(std::string claim, std::string subject, const Rate& rate, const std::vector<long long>& ns,
                  const std::function<Sides<Scalar>(long long)>& sides)
{
    check_ladder(ns);
    TrendReport t;
    t.claim = std::move(claim);
    t.subject = std::move(subject);
    t.scaling = rate.text;
    for (const long long N : ns) {
        auto s = sides(N);
        const auto u = unify({s.lhs, s.rhs});
        TrendRow row;
        row.N = N;
        row.abs_error = abs_upper_bound(u[0] - u[1]);
        row.scaled_error = row.abs_error * Rational(mpq_class(rate.factor(N)));
        const double e = to_double(row.abs_error);
        for (const double p : {1.0 / 3.0, 0.5, 1.0}) row.power_scaled.push_back(e * std::pow(static_cast<double>(N), p));
        row.lhs = std::move(s.lhs);
        row.rhs = std::move(s.rhs);
        t.rows.push_back(std::move(row));
    }
    t.exact_zero = std::all_of(t.rows.begin(), t.rows.end(), [](const TrendRow& r) { return r.abs_error.is_zero(); });
    t.decreasing = true;
    for (std::size_t j = 1; j < t.rows.size(); ++j) {
        if (!(t.rows[j].abs_error < t.rows[j - 1].abs_error)) t.decreasing = false;
    }
    if (t.exact_zero) {
        t.bounded = true;
        t.ratio = 0;
        return t;
    }
    const auto [lo, hi] = std::minmax_element(t.rows.begin(), t.rows.end(), [](const TrendRow& a, const TrendRow& b) {
        return a.scaled_error < b.scaled_error;
    });
    t.ratio = lo->scaled_error.is_zero() ? std::numeric_limits<double>::infinity()
                                         : to_double(hi->scaled_error / lo->scaled_error);
    t.bounded = t.ratio < kTrendRatioLimit;
    return t;
}

std::string dec(const Rational& q)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.11e", to_double(q));
    return buf;
}

std::string dec(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.11e", v);
    return buf;
}

int word_weight(const Word& w) { return w.weight(); }

}  // namespace

const std::vector<long long>& default_trend_ladder()
{
    static const std::vector<long long> ns{20, 40, 80, 160};
    return ns;
}

TrendReport verify_prop25_trend(const Index& k, const Point& z, const std::vector<long long>& ns)
{
    if (k.empty() || static_cast<int>(z.size()) != k.depth()) throw DomainError("point length must equal the depth");
    for (const Scalar& v : z) {
        if (!abs_at_least_one(v)) throw DomainError("trend points need |z| >= 1");
    }
    return build("prop25", "k=(" + k.str() + ") z=" + "(" + render_scalar_list(z) + ")", cube_root_rate(k.depth()), ns,
                 [&](long long N) { return Sides<Scalar>{li_tilde(k, z, N), li_sh_truncated(k, z, N)}; });
}

TrendReport verify_duality_trend(const DualizablePair& p, const std::vector<long long>& ns)
{
    if (!satisfies_dual_condition(p)) throw DomainError("pair does not satisfy the dual condition");
    const DualResult d = dual_pair(p);
    const int wt = p.index.weight();
    const std::string subject = "k=(" + p.index.str() + ") z=(" + render_scalar_list(p.points) + ") dual k'=(" +
                                d.pair.index.str() + ") z'=(" + render_scalar_list(d.pair.points) + ")";
    return build("duality", subject, linear_rate(wt), ns, [&](long long N) {
        const Scalar a = iterated_sum(d.pair.index, d.pair.points, N, false);
        const Scalar b = iterated_sum(p.index, p.points, N, false);
        return Sides<Scalar>{a, wt % 2 == 0 ? b : -b};
    });
}

TrendReport verify_shuffle_trend(const Word& w1, const Word& w0, const std::vector<long long>& ns)
{
    if (!in_h1_sh(w1) || !in_h1_sh(w0)) throw DomainError("shuffle trend needs words in H^1_sh");
    const WordCombo sh = shuffle(WordCombo(w1), WordCombo(w0));
    const int wt = word_weight(w1) + word_weight(w0);
    return build("shuffle", "w1=[" + w1.str() + "] w0=[" + w0.str() + "]", linear_rate(wt), ns, [&](long long N) {
        const auto u = unify({eval_I(WordCombo(w1), N), eval_I(WordCombo(w0), N)});
        return Sides<Scalar>{u[0] * u[1], eval_I(sh, N)};
    });
}

TrendReport verify_adsr_trend(const Word& w1, const Word& w0, const std::vector<long long>& ns)
{
    if (!in_h1_sh(w1)) throw DomainError("w1 must lie in H^1_sh: " + w1.str());
    if (!in_h0_sh(w0)) throw DomainError("w0 must lie in H^0_sh: " + w0.str());
    const WordCombo stuffled = harmonic(top_map(WordCombo(w1)), top_map(WordCombo(w0)));
    const WordCombo shuffled = top_map(shuffle(WordCombo(w1), WordCombo(w0)));
    const int wt = word_weight(w1) + word_weight(w0);
    return build("adsr", "w1=[" + w1.str() + "] w0=[" + w0.str() + "]", cube_root_rate(wt), ns,
                 [&](long long N) { return Sides<Scalar>{eval_L(stuffled, N), eval_L(shuffled, N)}; });
}

std::vector<TrendReport> default_trends()
{
    const auto& ns = default_trend_ladder();
    const auto P = [](const char* s) { return parse_scalar_list(s); };
    const auto W = [](const char* s) { return Word::parse(s); };
    std::vector<TrendReport> out;
    out.push_back(verify_prop25_trend(Index{1}, P("-1"), ns));
    out.push_back(verify_prop25_trend(Index{1, 2}, P("2,1"), ns));
    out.push_back(verify_prop25_trend(Index{1, 2}, P("1,1"), ns));
    out.push_back(verify_duality_trend({Index{2}, P("1")}, ns));
    out.push_back(verify_duality_trend({Index{1}, P("-1")}, ns));
    out.push_back(verify_duality_trend({Index{1, 2}, P("2,2")}, ns));
    for (const auto& [a, b] : std::vector<std::pair<const char*, const char*>>{{"-1^2", "-1^2"}, {"2^1", "2^2"}, {"1", "-1^2"}}) {
        out.push_back(verify_shuffle_trend(W(a), W(b), ns));
        out.push_back(verify_adsr_trend(W(a), W(b), ns));
    }
    return out;
}

std::string trend_csv(const TrendReport& t)
{
    std::string out = "N,lhs,rhs,abs_error,scaled_error\n";
    for (const auto& r : t.rows) {
        out += std::to_string(r.N) + "," + r.lhs.str() + "," + r.rhs.str() + "," + dec(r.abs_error) + "," +
               dec(r.scaled_error) + "\n";
    }
    return out;
}

std::string trend_json(const TrendReport& t)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : t.rows) {
        rows.push_back({{"N", r.N},
                        {"lhs", r.lhs.str()},
                        {"rhs", r.rhs.str()},
                        {"abs_error", r.abs_error.str()},
                        {"scaled_error", r.scaled_error.str()},
                        {"abs_error_decimal", dec(r.abs_error)},
                        {"scaled_error_decimal", dec(r.scaled_error)},
                        {"power_scaled", {{"1/3", dec(r.power_scaled[0])}, {"1/2", dec(r.power_scaled[1])},
                                          {"1", dec(r.power_scaled[2])}}}});
    }
    const nlohmann::json doc{{"claim", t.claim},
                             {"subject", t.subject},
                             {"scaling", t.scaling},
                             {"evidence", "finite-N trend evidence, not a proof"},
                             {"exact_zero", t.exact_zero},
                             {"decreasing", t.decreasing},
                             {"bounded", t.bounded},
                             {"ratio", std::isfinite(t.ratio) ? nlohmann::json(dec(t.ratio)) : nlohmann::json("inf")},
                             {"ratio_limit", kTrendRatioLimit},
                             {"ok", t.ok()},
                             {"rows", std::move(rows)}};
    return doc.dump(2) + "\n";
}

}  // namespace dmpl
