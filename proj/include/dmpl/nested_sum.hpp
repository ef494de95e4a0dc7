// Copyright 2026 The dmpl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dmpl/scalar.hpp"

namespace dmpl {

/// Relation between a summation variable and the one before it.
enum class Link { Strict, Weak };

/// Summand factor attached to one summation variable n:
///   sign * n^{-power} * prod_c 1/(n + c) * g^n * prod_{j<=n} (top - j)/(bottom - j)
template <ExactField F>
struct Slot {
    Link link = Link::Strict;
    int power = 0;
    std::vector<F> offsets;
    bool negate = false;
    std::optional<F> geometric;
    std::optional<std::pair<F, F>> ratio;  // (top, bottom)
    /// Tabulated weights override everything above when non-empty (entry n-1).
    std::vector<F> table;
};

/// Nested sum over lower <= n_1 R n_2 R ... R n_S <= upper, where each R is the
/// slot's link, of the product of slot factors. Evaluated by a prefix-sum DP
/// in O(upper * S) field operations.
template <ExactField F>
class SumSignature {
public:
    SumSignature(long long upper, F one) : upper_(upper), one_(std::move(one)) {}

    void add(Slot<F> s) { slots_.push_back(std::move(s)); }
    /// Smallest value of n_1 (default 1).
    void set_lower(long long lower) { lower_ = std::max<long long>(lower, 1); }
    std::size_t size() const noexcept { return slots_.size(); }
    long long upper() const noexcept { return upper_; }
    const F& one() const noexcept { return one_; }

    /// Value of the full nested sum (1 for no slots).
    F evaluate() const
    {
        if (slots_.empty()) return one_;
        const auto w = tabulate();
        return forward(w, nullptr);
    }

    /// Entry n-1: the sum restricted to n_S = n.
    std::vector<F> last_profile() const
    {
        std::vector<F> profile;
        if (slots_.empty()) return profile;
        forward(tabulate(), &profile);
        return profile;
    }

    /// Entry n-1: the sum restricted to n_1 = n.
    std::vector<F> first_profile() const
    {
        std::vector<F> profile;
        if (slots_.empty()) return profile;
        backward(tabulate(), &profile);
        return profile;
    }

    /// Reachable range of slot s given the strict links around it.
    std::pair<long long, long long> range(std::size_t s) const
    {
        long long lo = lower_;
        long long hi = upper_;
        for (std::size_t t = 1; t <= s; ++t) {
            if (slots_[t].link == Link::Strict) ++lo;
        }
        for (std::size_t t = s + 1; t < slots_.size(); ++t) {
            if (slots_[t].link == Link::Strict) --hi;
        }
        return {lo, hi};
    }

private:
    F zero() const { return F::from_int(0, one_); }

    std::vector<std::vector<F>> tabulate() const
    {
        std::vector<std::vector<F>> w(slots_.size());
        for (std::size_t s = 0; s < slots_.size(); ++s) {
            const auto [lo, hi] = range(s);
            w[s].assign(static_cast<std::size_t>(std::max<long long>(upper_, 0)), zero());
            if (lo > hi) continue;
            const Slot<F>& sl = slots_[s];
            if (!sl.table.empty()) {
                for (long long n = lo; n <= hi; ++n) w[s][n - 1] = sl.table[static_cast<std::size_t>(n - 1)];
                continue;
            }
            F running_ratio = one_;
            F running_geo = one_;
            for (long long n = 1; n <= hi; ++n) {
                const F nn = F::from_int(n, one_);
                if (sl.ratio) {
                    const F den = sl.ratio->second - nn;
                    if (den.is_zero()) throw_pole(s, n, "binomial ratio");
                    running_ratio = running_ratio * (sl.ratio->first - nn) / den;
                }
                if (sl.geometric) running_geo = running_geo * *sl.geometric;
                if (n < lo) continue;
                F v = one_;
                if (sl.power > 0) {
                    if (nn.is_zero()) throw_pole(s, n, "power");
                    F inv = one_ / nn;
                    for (int e = 0; e < sl.power; ++e) v = v * inv;
                }
                for (const F& c : sl.offsets) {
                    const F d = nn + c;
                    if (d.is_zero()) throw_pole(s, n, "shifted denominator");
                    v = v / d;
                }
                if (sl.ratio) v = v * running_ratio;
                if (sl.geometric) v = v * running_geo;
                if (sl.negate) v = -v;
                w[s][n - 1] = std::move(v);
            }
        }
        return w;
    }

    [[noreturn]] static void throw_pole(std::size_t s, long long n, const char* what)
    {
        throw PoleError(std::string("pole in ") + what + " at slot " + std::to_string(s + 1) + ", n = " +
                            std::to_string(n),
                        static_cast<int>(s + 1), n);
    }

    F forward(const std::vector<std::vector<F>>& w, std::vector<F>* last) const
    {
        const std::size_t S = slots_.size();
        std::vector<F> acc(S, zero());
        if (last) last->assign(static_cast<std::size_t>(std::max<long long>(upper_, 0)), zero());
        for (long long n = 1; n <= upper_; ++n) {
            F prev_before = one_;  // acc[s-1] before this n
            for (std::size_t s = 0; s < S; ++s) {
                const F& wt = w[s][n - 1];
                F before = acc[s];
                if (!wt.is_zero()) {
                    F base = s == 0 ? one_ : (slots_[s].link == Link::Strict ? prev_before : acc[s - 1]);
                    if (!base.is_zero()) {
                        F c = wt * base;
                        if (last && s + 1 == S) (*last)[n - 1] = c;
                        acc[s] = acc[s] + c;
                    }
                }
                prev_before = std::move(before);
            }
        }
        return acc[S - 1];
    }

    void backward(const std::vector<std::vector<F>>& w, std::vector<F>* first) const
    {
        const std::size_t S = slots_.size();
        std::vector<F> acc(S, zero());  // acc[s] = sum over n_s >= current n
        first->assign(static_cast<std::size_t>(std::max<long long>(upper_, 0)), zero());
        for (long long n = upper_; n >= 1; --n) {
            F next_before = one_;
            for (std::size_t s = S; s-- > 0;) {
                const F& wt = w[s][n - 1];
                F before = acc[s];
                if (!wt.is_zero()) {
                    F base = s + 1 == S ? one_ : (slots_[s + 1].link == Link::Strict ? next_before : acc[s + 1]);
                    if (!base.is_zero()) {
                        F c = wt * base;
                        if (s == 0) (*first)[n - 1] = c;
                        acc[s] = acc[s] + c;
                    }
                }
                next_before = std::move(before);
            }
        }
    }

    long long upper_;
    long long lower_ = 1;
    F one_;
    std::vector<Slot<F>> slots_;
};

}  // namespace dmpl
