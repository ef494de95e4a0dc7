// Copyright 2026 The dmpl Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "dmpl/errors.hpp"
#include "dmpl/scalar.hpp"
#include "dmpl/special.hpp"
#include "helpers.hpp"

using namespace dmpl;
using testing::Q;
using testing::S;

TEST_CASE("rationals are reduced with a positive denominator")
{
    CHECK(Q("-6/4").str() == "-3/2");
    CHECK_THROWS_AS(Q("6/-4"), ParseError);
    CHECK(Q("0/7").str() == "0");
    CHECK(Q("0/7").den() == 1);
    CHECK(Q("10/5").str() == "2");
    CHECK((Q("1/3") + Q("1/6")).str() == "1/2");
    CHECK_THROWS_AS(Q("1/0"), ParseError);
    CHECK_THROWS_AS(Q("abc"), ParseError);
    CHECK_THROWS_AS(Q("1") / Q("0"), PoleError);
}

TEST_CASE("scalar grammar round-trips")
{
    for (const char* text : {"0", "-7/3", "1/2+3/4*i", "0-1*i", "5 mod 11"}) {
        CHECK(S(text).str() == text);
        CHECK(S(S(text).str()) == S(text));
    }
    CHECK(S("i") == Scalar(Gaussian::i()));
    CHECK(S("1+i").kind() == ScalarKind::Gaussian);
    CHECK(S("12 mod 7") == Scalar(Residue(5, 7)));
    CHECK_THROWS_AS(S("3 mod 8"), ParseError);
    CHECK_THROWS_AS(S("1/2+"), ParseError);
}

TEST_CASE("scalar variants never mix silently")
{
    CHECK_THROWS_AS(S("1") + S("i"), MismatchError);
    CHECK_THROWS_AS(S("1 mod 5") * S("1 mod 7"), MismatchError);
    CHECK_THROWS_AS(S("1 mod 5") - S("1/2"), MismatchError);
    const auto u = unify({S("1/2"), S("i")});
    CHECK(u[0] == Scalar(Gaussian(Q("1/2"))));
    CHECK(S("1/2").promoted_to(ScalarKind::Residue, 7) == S("4 mod 7"));
}

TEST_CASE("gaussian rationals form a field with an involutive conjugation")
{
    testing::Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        const Gaussian a(rng.rational(), rng.rational());
        const Gaussian b(rng.rational(), rng.rational());
        CHECK(a.conj().conj() == a);
        const Gaussian ab = a * b;
        CHECK((ab * ab.conj()).im().is_zero());
        if (!a.is_zero()) CHECK(a * a.inverse() == Gaussian(Rational(1)));
    }
    CHECK_THROWS_AS(Gaussian().inverse(), PoleError);
}

TEST_CASE("prime residues match integer arithmetic")
{
    testing::Rng rng(5);
    for (std::uint64_t p : {5ULL, 7ULL, 97ULL}) {
        for (int t = 0; t < 100; ++t) {
            const long long a = rng.integer(-1000, 1000);
            const long long b = rng.integer(-1000, 1000);
            CHECK(Residue(a, p) * Residue(b, p) == Residue(a * b, p));
            CHECK(Residue(a, p) + Residue(b, p) == Residue(a + b, p));
            if (Residue(a, p).is_zero()) {
                CHECK_THROWS_AS(Residue(a, p).inverse(), PoleError);
            } else {
                CHECK(Residue(a, p) * Residue(a, p).inverse() == Residue(1, p));
            }
        }
    }
    CHECK(Residue::from_rational(Q("1/2"), 7) == Residue(4, 7));
    CHECK_THROWS(Residue(1, 9));
}

TEST_CASE("generalized binomial examples")
{
    CHECK(gen_binomial(Q("7/3"), 0) == Q("1"));
    CHECK(gen_binomial(Rational(5), 2) == Rational(10));
    CHECK(gen_binomial(Rational(-4), 2) == Rational(10));
    CHECK(gen_binomial(Rational(-4), 2) == gen_binomial(Rational(5), 2));
    CHECK_THROWS_AS(gen_binomial(Rational(1), -1), DomainError);
    CHECK_THROWS(gen_binomial(Residue(3, 5), 5));
    CHECK(gen_binomial(Residue(3, 5), 4) == Residue(0, 5));
}

TEST_CASE("Pascal rule and incremental binomials agree with the product form")
{
    testing::Rng rng(2);
    for (int t = 0; t < 20; ++t) {
        const Rational x = rng.rational();
        BinomialSequence<Rational> seq(x);
        for (long long n = 1; n <= 30; ++n) {
            CHECK(gen_binomial(x, n) == gen_binomial(x - Rational(1), n) + gen_binomial(x - Rational(1), n - 1));
            seq.next();
            CHECK(seq.order() == n);
            CHECK(seq.value() == gen_binomial(x, n));
        }
    }
}

TEST_CASE("rising factorial")
{
    CHECK(rising_factorial(Q("3/7"), 0) == Rational(1));
    CHECK(rising_factorial(Rational(1), 4) == Rational(24));
    CHECK(rising_factorial(Rational(2), 3) == Rational(24));
    testing::Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        const Rational x = rng.rational();
        Rational fact(1);
        for (long long n = 0; n <= 20; ++n) {
            if (n > 0) fact *= Rational(n);
            CHECK(rising_factorial(x, n) == fact * gen_binomial(x + Rational(n - 1), n));
        }
    }
}

TEST_CASE("Stirling numbers of the first kind")
{
    for (int n = 0; n <= 10; ++n) CHECK(stirling_first(n, n) == 1);
    CHECK(stirling_first(3, 2) == 3);
    CHECK(stirling_first(3, 5) == 0);
    mpz_class sum = 0;
    for (int j = 0; j <= 4; ++j) sum += stirling_first(4, j);
    CHECK(sum == 24);

    testing::Rng rng(4);
    const auto table = stirling_table(15);
    for (int t = 0; t < 10; ++t) {
        const Rational x = rng.rational();
        for (int n = 0; n <= 15; ++n) {
            Rational poly;
            Rational xp(1);
            for (int j = 0; j <= n; ++j) {
                poly += Rational(table[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)], mpz_class(1)) * xp;
                xp *= x;
            }
            CHECK(rising_factorial(x, n) == poly);
        }
    }
}
