// Copyright 2026 The dmpl Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "dmpl/errors.hpp"
#include "dmpl/evaluators.hpp"
#include "dmpl/words.hpp"
#include "helpers.hpp"

using namespace dmpl;
using testing::K;
using testing::P;
using testing::S;

namespace {

Word W(std::string_view s) { return Word::parse(s); }

WordCombo combo(std::initializer_list<std::pair<const char*, long long>> terms)
{
    WordCombo c;
    for (const auto& [w, coeff] : terms) c.add(W(w), Rational(coeff));
    return c;
}

Rational coefficient_sum(const WordCombo& c)
{
    Rational s;
    for (const auto& [w, coeff] : c.terms()) s += coeff;
    return s;
}

int flat_length(const WordCombo& c)
{
    int len = -1;
    for (const auto& [w, coeff] : c.terms()) {
        if (len >= 0 && len != w.weight()) return -2;
        len = w.weight();
    }
    return len;
}

}  // namespace

TEST_CASE("word literals")
{
    CHECK(W("").empty());
    CHECK(W("1").empty());
    CHECK(W("-1^2 . 2") == Word(K("2,1"), P("-1,2")));
    CHECK(W("i^3").weight() == 3);
    CHECK(W("1/2^1 . -1^2").depth() == 2);
    CHECK(W(W("1+i^2 . -1").str()) == W("1+i^2 . -1"));
    CHECK(W("1+0*i^2") == W("1^2"));
    CHECK_THROWS_AS(W("2^0"), ParseError);
    CHECK_THROWS_AS(W("2^"), ParseError);
    CHECK_THROWS_AS(W("2 .. 3"), ParseError);
}

TEST_CASE("harmonic product examples")
{
    CHECK(W("1").empty());
    CHECK(harmonic(W("1^1"), W("1^1")) == combo({{"1^1 . 1^1", 2}, {"1^2", 1}}));
    CHECK(harmonic(W("2^3 . i"), WordCombo::unit()) == WordCombo(W("2^3 . i")));
    CHECK(harmonic(W("-1"), W("-1")) == combo({{"-1 . -1", 2}, {"1^2", 1}}));
}

TEST_CASE("underline harmonic product")
{
    CHECK(underline_harmonic(K("2"), K("")) == IndexCombo(K("2")));
    IndexCombo expected;
    expected.add(K("1,1"), Rational(1));
    expected.add(K("2"), Rational(1));
    CHECK(underline_harmonic(K("1"), K("1")) == expected);
    CHECK_THROWS_AS(underline_harmonic(K(""), K("1")), DomainError);
}

TEST_CASE("shuffle product examples")
{
    CHECK(shuffle(W("3"), WordCombo::unit()) == WordCombo(W("3")));
    CHECK(coefficient_sum(shuffle(W("1^1"), W("-1"))) == Rational(2));
    CHECK(coefficient_sum(shuffle(W("1^2"), W("-1^2"))) == Rational(6));
    CHECK(shuffle(W("1^1"), W("-1")) == combo({{"1^1 . -1", 1}, {"-1 . 1^1", 1}}));
    CHECK_THROWS_AS(shuffle(W("1/2"), W("1")), DomainError);
}

TEST_CASE("top map examples")
{
    CHECK(top_map(WordCombo::unit()) == WordCombo::unit());
    CHECK(top_map(W("2^3")) == WordCombo(W("1/2^3")));
    CHECK(top_map(W("2 . 2^2")) == WordCombo(W("1 . 1/2^2")));
    CHECK(top_map(W("i")) == WordCombo(W("0-1*i")));
}

TEST_CASE("tier predicates")
{
    CHECK(in_h1_sh(W("2 . -1^2")));
    CHECK_FALSE(in_h1_sh(W("1/2")));
    CHECK(in_h0_sh(W("1^2")));
    CHECK_FALSE(in_h0_sh(W("2 . 1")));
    CHECK(in_h0_sh(W("2 . -1")));
    CHECK(in_h1_star(W("2 . 1/2")));
    CHECK(in_h1_star(W("1 . 1/2^2")));
    CHECK_FALSE(in_h1_star(W("1/2 . 2")));
    CHECK_FALSE(in_h1_star(W("2 . 1")));
}

TEST_CASE("L and I evaluation examples")
{
    for (long long N : {1, 5, 12}) {
        CHECK(eval_L(WordCombo::unit(), N) == S("1"));
        CHECK(eval_I(WordCombo::unit(), N) == S("1"));
    }
    const Scalar h9 = li_star_truncated(K("1"), P("1"), 10);
    CHECK(h9 == S("7129/2520"));
    CHECK(eval_L(harmonic(W("1^1"), W("1^1")), 10) == h9 * h9);
    CHECK(eval_L(W("-1"), 5) == S("-7/12"));
    CHECK(eval_I(W("1^1"), 3) == S("-3/2"));
    CHECK(eval_I(W("2 . 3^2"), 12) == li_tilde(K("1,2"), P("2,3"), 12));

    const auto ladder = eval_L_ladder(combo({{"-1 . 2^2", 3}, {"i", -1}}), 9);
    REQUIRE(ladder.size() == 9);
    for (long long N = 1; N <= 9; ++N)
        CHECK(ladder[static_cast<std::size_t>(N - 1)] == eval_L(combo({{"-1 . 2^2", 3}, {"i", -1}}), N));
}

TEST_CASE("products are commutative, associative, graded and tier-closed")
{
    const std::vector<Word> words{W("1^1"),    W("-1^2"), W("2 . 1"), W("i"),     W("-1 . i"),
                                  W("2^2 . -1"), W("i^2"),  W("1 . 1"), W("-1 . 2"), W("")};
    for (const auto& u : words) {
        for (const auto& v : words) {
            const WordCombo h = harmonic(u, v);
            const WordCombo s = shuffle(u, v);
            CHECK(h == harmonic(v, u));
            CHECK(s == shuffle(v, u));
            CHECK(flat_length(s) == u.weight() + v.weight());
            if (in_h1_star(u) && in_h1_star(v))
                for (const auto& [w, c] : h.terms()) CHECK(in_h1_star(w));
            for (const auto& [w, c] : s.terms()) CHECK(in_h1_sh(w));
        }
    }
    for (std::size_t a = 0; a < 5; ++a) {
        for (std::size_t b = 3; b < 8; ++b) {
            const Word& u = words[a];
            const Word& v = words[b];
            const Word& w = words[(a + b) % words.size()];
            CHECK(harmonic(harmonic(u, v), w) == harmonic(u, harmonic(v, w)));
            CHECK(shuffle(shuffle(u, v), w) == shuffle(u, shuffle(v, w)));
        }
    }
}

TEST_CASE("harmonic product formula for L on a few pairs")
{
    const auto mul = [](const Scalar& a, const Scalar& b) {
        const auto u = unify({a, b});
        return u[0] * u[1];
    };
    const auto same = [](const Scalar& a, const Scalar& b) {
        const auto u = unify({a, b});
        return u[0] == u[1];
    };
    const std::vector<Word> words{W("1^1"), W("-1^2"), W("2 . 1"), W("i . -1")};
    for (const auto& u : words) {
        for (const auto& v : words) {
            for (long long N : {3, 8, 15}) CHECK(same(eval_L(harmonic(u, v), N), mul(eval_L(u, N), eval_L(v, N))));
        }
    }
}
