// Copyright 2026 The dmpl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "dmpl/index.hpp"
#include "dmpl/scalar.hpp"

namespace testing {

inline dmpl::Rational Q(std::string_view s) { return dmpl::Rational::parse(s); }
inline dmpl::Scalar S(std::string_view s) { return dmpl::Scalar::parse(s); }
inline dmpl::Index K(std::string_view s) { return dmpl::Index::parse(s); }
inline std::vector<dmpl::Scalar> P(std::string_view s) { return dmpl::parse_scalar_list(s); }

/// Seeded rationals with numerator in [-h, h] and denominator in [1, h].
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    dmpl::Rational rational(long long h = 50)
    {
        std::uniform_int_distribution<long long> num(-h, h);
        std::uniform_int_distribution<long long> den(1, h);
        return dmpl::Rational(num(g_)) / dmpl::Rational(den(g_));
    }
    dmpl::Rational nonzero(long long h = 50)
    {
        dmpl::Rational q;
        while (q.is_zero()) q = rational(h);
        return q;
    }
    long long integer(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(g_); }

private:
    std::mt19937_64 g_;
};

}  // namespace testing
