// Copyright 2026 The dmpl Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "oracle_sweep.hpp"

TEST_CASE("oracle agrees on hand-computed values")
{
    using dmpl::Rational;
    const Rational one(1);
    CHECK(oracle::iterated(dmpl::Index{2}, std::vector<Rational>{Rational(-1)}, 3, false, one) ==
          Rational::parse("19/40"));
    CHECK(oracle::li_tilde(dmpl::Index{1}, std::vector<Rational>{Rational(2)}, 2, one) == Rational::parse("1/3"));
    CHECK(oracle::r_value<Rational>({1, 1}, {0, 0}, 3, one) == Rational::parse("1/2"));
    CHECK_THROWS_AS(oracle::iterated(dmpl::Index{1}, std::vector<Rational>{Rational::parse("1/3")}, 3, false, one),
                    oracle::Pole);
}

TEST_CASE("dynamic programs equal brute force on a reduced sweep")
{
    oracle::SweepBounds b;
    b.max_weight = 3;
    b.n_max = 6;
    b.points = 8;
    const auto r = oracle::run_sweep(77, b);
    for (const auto& m : r.messages) MESSAGE(m);
    CHECK(r.checks > 1000);
    CHECK(r.discrepancies == 0);
}
