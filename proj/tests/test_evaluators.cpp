// Copyright 2026 The dmpl Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "dmpl/errors.hpp"
#include "dmpl/evaluators.hpp"
#include "dmpl/special.hpp"
#include "helpers.hpp"

using namespace dmpl;
using testing::K;
using testing::P;
using testing::Q;
using testing::S;

namespace {

Point rational_point(testing::Rng& rng, int r, long long h = 50)
{
    Point x;
    for (int i = 0; i < r; ++i) x.emplace_back(rng.rational(h));
    return x;
}

Scalar sign_power(int r, const Scalar& v) { return r % 2 == 0 ? v : -v; }

}  // namespace

TEST_CASE("li_tilde examples")
{
    CHECK(li_tilde(K("1"), P("1"), 2) == S("1"));
    CHECK(li_tilde(K("1"), P("2"), 2) == S("1/3"));
    CHECK(li_tilde(K(""), P(""), 7) == S("1"));
    CHECK(li_tilde(K("1,2"), P("1,1"), 30) == li_sh_truncated(K("1,2"), P("1,1"), 30));
}

TEST_CASE("iterated sum examples")
{
    CHECK(iterated_sum(K("1"), P("1"), 2, false) == S("-1"));
    CHECK(iterated_sum(K("2"), P("1"), 2, false) == S("-1"));
    // Shifted denominators n + 2 for n = 1, 2.
    CHECK(iterated_sum(K("1"), P("-1"), 2, true) == S("7/12"));
    CHECK(iterated_sum(K("2"), P("-1"), 3, false) == S("1/4") + S("1/8") + S("1/10"));
    CHECK(iterated_sum(K(""), P(""), 4, true) == S("1"));
    CHECK_THROWS_AS(iterated_sum(K("1"), P("1/3"), 3, false), PoleError);
    try {
        (void)iterated_sum(K("1,1"), P("5,1/2"), 4, false);
        FAIL("expected a pole");
    } catch (const PoleError& e) {
        CHECK(e.slot() == 2);
        CHECK(e.n() == 2);
    }
}

TEST_CASE("truncated polylogarithms")
{
    CHECK(li_sh_truncated(K("2"), P("1"), 3) == S("5/4"));
    CHECK(li_star_truncated(K("1"), P("-1"), 5) == S("-7/12"));
    CHECK(li_star_truncated(K("1,1"), P("1,1"), 4) == S("1"));
    CHECK_THROWS_AS(li_sh_truncated(K("1"), P("0"), 3), DomainError);
    CHECK_THROWS_AS(li_sh_truncated(K("1,2"), P("1"), 3), DomainError);
    CHECK_THROWS_AS(li_tilde(K("1"), P("1"), 0), DomainError);
}

TEST_CASE("connected sum boundary cases and a transport step")
{
    CHECK(connected_sum(K("1"), K(""), P("-1"), 2) == connected_sum(K(""), K("1"), P("-1"), 2));
    CHECK(connected_sum(K("1"), K(""), P("-1"), 2) == S("-7/12"));
    // binom(N x - 1, n) = binom(2, 3) vanishes at n = 3.
    CHECK_THROWS_AS(connected_sum(K("1"), K(""), P("1"), 3), PoleError);

    testing::Rng rng(23);
    for (int t = 0; t < 10; ++t) {
        const Point x = rational_point(rng, 2, 7);
        try {
            const Scalar a = connected_sum(K("1,2"), K(""), x, 10);
            const Scalar b = connected_sum(K("1"), K("2"), x, 10);
            CHECK(a == b);
        } catch (const PoleError&) {
        }
    }
    CHECK_THROWS_AS(connected_sum(K("1"), K("1"), P("2"), 3), DomainError);
}

TEST_CASE("R-value sums")
{
    CHECK(r_value({1}, {0}, 3) == S("3/2"));
    CHECK(r_value_z({1}, {0}, P("1"), 3) == S("-3/2"));
    CHECK(r_value({1, 1}, {0, 0}, 3) == S("1/2"));
    CHECK(r_value({0}, {2}, 4) == S("49/36"));
    CHECK_THROWS_AS(r_value({0}, {0}, 4), DomainError);
    CHECK_THROWS_AS(r_value_z({1}, {0}, P("1/2"), 4), DomainError);
    CHECK_THROWS_AS(r_value_z({2}, {0}, P("2"), 4), DomainError);
}

TEST_CASE("difference quotient")
{
    const Point x = P("3/7,-2");
    CHECK(difference_quotient([](const Point&) { return S("5/3"); }, x, 0, 9) == S("0"));
    const auto affine = [](const Point& p) { return S("4/5") * p[1] + S("2"); };
    for (long long N : {1, 2, 17}) CHECK(difference_quotient(affine, x, 1, N) == S("4/5"));
    // Exponent above one in the first slot: the quotient lowers it.
    const auto f = [](const Point& p) { return li_tilde(K("2"), p, 5); };
    CHECK(difference_quotient(f, P("3"), 0, 5) == -(S("1/3") * li_tilde(K("1"), P("3"), 5)));
}

TEST_CASE("modified identity: examples, bridge and a pole")
{
    const auto sides = modified_main_sides(K("1"), P("-1"), 2);
    CHECK(sides.lhs == sides.rhs);
    CHECK(sides.lhs == modified_lhs(K("1"), P("-1"), 2));
    CHECK(sides.rhs == -iterated_sum(K("1"), P("-1"), 2, true));
    // binom(N x - 1, 4) = binom(3, 4) vanishes.
    CHECK_THROWS_AS(modified_main_sides(K("2"), P("1"), 4), PoleError);

    testing::Rng rng(7);
    const long long N = 9;
    for (int t = 0; t < 10; ++t) {
        const Point x = rational_point(rng, 2);
        Point moved;
        for (const auto& v : x) moved.push_back(v * S(std::to_string(N) + "/" + std::to_string(N - 1)));
        try {
            const Scalar a = modified_lhs(K("1,2"), moved, N - 1);
            const Scalar b = li_tilde(K("1,2"), x, N);
            CHECK(a == b);
        } catch (const PoleError&) {
        }
    }
}

TEST_CASE("main identity on random rational and Gaussian points")
{
    testing::Rng rng(1);
    const std::vector<Point> gaussian{P("i"), P("-i"), P("1+i"), P("i,1-i"), P("1+i,-i,2")};
    for (const auto& k : enumerate_indices(4, 3, false)) {
        for (long long N = 1; N <= 12; ++N) {
            for (int t = 0; t < 3; ++t) {
                const Point x = rational_point(rng, k.depth());
                try {
                    const Scalar lhs = li_tilde(k, x, N);
                    const Scalar rhs = sign_power(k.depth(), iterated_sum(k, x, N, false));
                    CHECK(lhs == rhs);
                    const auto s = modified_main_sides(k, x, N);
                    CHECK(s.lhs == s.rhs);
                } catch (const PoleError&) {
                }
            }
            for (const auto& g : gaussian) {
                if (static_cast<int>(g.size()) != k.depth()) continue;
                try {
                    const Scalar lhs = li_tilde(k, g, N);
                    const Scalar rhs = sign_power(k.depth(), iterated_sum(k, g, N, false));
                    CHECK(lhs == rhs);
                } catch (const PoleError&) {
                }
            }
        }
    }
}

TEST_CASE("depth-one alternating form")
{
    for (int k = 1; k <= 6; ++k) {
        for (long long N = 1; N <= 40; N += 3) {
            Rational lhs;
            for (long long n = 1; n < N; ++n) {
                Rational t = gen_binomial(Rational(N - 1), n) / gen_binomial(Rational(N + n), n);
                for (int e = 0; e < k; ++e) t /= Rational(n);
                lhs += n % 2 == 1 ? t : -t;
            }
            CHECK(Scalar(lhs) == iterated_sum(Index{k}, P("-1"), N, false));
        }
    }
}

TEST_CASE("binomial telescope closed form")
{
    testing::Rng rng(19);
    for (int t = 0; t < 10; ++t) {
        const Rational x = rng.rational();
        const Rational xp = rng.rational();
        if (x == xp) continue;
        const auto ratio = [&](const Rational& top, long long i) { return gen_binomial(top, i) / gen_binomial(x, i); };
        for (long long n = 1; n <= 12; ++n) {
            for (long long r = 0; r < n; ++r) {
                try {
                    Rational lhs;
                    for (long long i = r + 1; i <= n; ++i) lhs += ratio(xp + Rational(1), i);
                    const Rational rhs = (xp + Rational(1)) / (x - xp) * (ratio(xp, r) - ratio(xp, n));
                    CHECK(lhs == rhs);
                } catch (const PoleError&) {
                }
            }
        }
    }
}

TEST_CASE("evaluators reject malformed input")
{
    CHECK_THROWS_AS(li_tilde(K("1,1"), P("2"), 3), DomainError);
    CHECK_THROWS_AS(iterated_sum(K("1"), P("1 mod 5,2 mod 5"), 3, false), DomainError);
    CHECK_THROWS_AS(li_tilde(K("1,1"), P("i,1 mod 5"), 3), MismatchError);
}

TEST_CASE("prime-field evaluation agrees with reduced rationals")
{
    for (long long p : {11, 13}) {
        const Rational exact = li_star_truncated(K("1,2"), P("2,3"), 7).as<Rational>();
        const Scalar mod = li_star_truncated(K("1,2"), P("2 mod " + std::to_string(p) + ",3 mod " + std::to_string(p)), 7);
        CHECK(mod == Scalar(Residue::from_rational(exact, static_cast<std::uint64_t>(p))));
    }
}
