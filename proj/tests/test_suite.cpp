// Copyright 2026 The dmpl Authors
// SPDX-License-Identifier: Apache-2.0

#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "dmpl/errors.hpp"
#include "dmpl/suite.hpp"
#include "helpers.hpp"

using namespace dmpl;
using testing::K;
using testing::P;
using testing::S;

namespace {

Campaign small(std::string_view tag)
{
    Campaign c = default_campaign(tag);
    c.max_weight = std::min(c.max_weight, 3);
    c.max_depth = std::min(c.max_depth, 3);
    c.n_max = std::min(c.n_max, 8LL);
    c.p_max = std::min(c.p_max, 13LL);
    c.grid_p_max = std::min(c.grid_p_max, 7LL);
    c.grid_max_weight = std::min(c.grid_max_weight, 2);
    c.m_max = std::min(c.m_max, 1);
    c.trials = 2;
    return c;
}

bool same(const Sides<Scalar>& s)
{
    const auto u = unify({s.lhs, s.rhs});
    return u[0] == u[1];
}

}  // namespace

TEST_CASE("every tag passes a reduced campaign")
{
    for (const auto& tag : suite_tags()) {
        CAPTURE(tag);
        const SuiteReport r = run_campaign(small(tag));
        CHECK(r.cases.size() > 0);
        CHECK(r.ok());
        CHECK(r.count(Status::Pass) + r.count(Status::SkippedPole) == static_cast<long long>(r.cases.size()));
        for (const auto& c : r.cases)
            if (c.status == Status::Fail) MESSAGE(c.id << ": " << c.lhs << " vs " << c.rhs);
    }
}

TEST_CASE("campaign validation")
{
    CHECK_THROWS_AS(default_campaign("nope"), DomainError);
    Campaign c = default_campaign("main");
    c.n_min = 5;
    c.n_max = 4;
    CHECK_THROWS_AS(run_campaign(c), DomainError);
    c = default_campaign("diff");
    c.diff_case = "3z";
    CHECK_THROWS_AS(run_campaign(c), DomainError);
    c = default_campaign("main");
    c.trials = 0;
    CHECK_THROWS_AS(run_campaign(c), DomainError);
}

TEST_CASE("reports are deterministic and independent of the thread count")
{
    Campaign c = small("main");
    c.seed = 99;
    const std::string a = report_json(run_campaign(c));
    c.threads = 3;
    const std::string b = report_json(run_campaign(c));
    CHECK(a == b);
    c.seed = 100;
    CHECK(report_json(run_campaign(c)) != a);

    const auto j = nlohmann::json::parse(a);
    CHECK(j["seed"] == 99);
    CHECK(j["tag"] == "main");
    CHECK(j["summary"]["failed"] == 0);
    CHECK(j["cases"].size() == j["summary"]["cases"].get<std::size_t>());
}

TEST_CASE("difference equation case dispatch")
{
    CHECK(diff_case_code(K("2"), 1) == "1a");
    CHECK(diff_case_code(K("1"), 1) == "1b");
    CHECK(diff_case_code(K("1,2"), 1) == "1c");
    CHECK(diff_case_code(K("2,2"), 2) == "2a");
    CHECK(diff_case_code(K("2,1,2"), 2) == "2b");
    CHECK(diff_case_code(K("1,2"), 2) == "2c");
    CHECK(diff_case_code(K("1,1"), 2) == "2d");
    CHECK_THROWS_AS(diff_case_code(K("1,1"), 3), DomainError);
}

TEST_CASE("difference equations at the documented points")
{
    for (bool li : {false, true}) {
        CHECK(same(difference_equation_sides(K("2"), 1, P("3"), 5, li)));
        CHECK(same(difference_equation_sides(K("1,1"), 2, P("2,3"), 7, li)));
        CHECK(same(difference_equation_sides(K("2,1,2"), 2, P("2,3,5"), 6, li)));
        CHECK(same(difference_equation_sides(K("1,1,1"), 3, P("i,2,-1"), 6, li)));
    }
}

TEST_CASE("transport chain is constant")
{
    testing::Rng rng(8);
    for (const char* k : {"2", "1,1", "1,2", "3,1,1"}) {
        for (long long N = 1; N <= 12; ++N) {
            Point x;
            for (int i = 0; i < K(k).depth(); ++i) x.emplace_back(rng.rational(7));
            try {
                const auto chain = transport_chain(K(k), x, N);
                CHECK(chain.size() == static_cast<std::size_t>(K(k).depth()) + 1);
                for (const auto& v : chain) CHECK(v == chain.front());
            } catch (const PoleError&) {
            }
        }
    }
}

TEST_CASE("arctangent discretization and depth-one closed forms")
{
    CHECK(arctan_coefficient(1, 2) == S("2/5").as<Rational>());
    for (long long N = 2; N <= 12; ++N) {
        Rational lhs;
        Rational rhs;
        for (long long n = 1; n < N; ++n) {
            lhs += arctan_coefficient(n, N) / Rational(n);
            rhs += Rational(N) / (Rational(n * n) + Rational(N * N));
        }
        CHECK(lhs == rhs);
    }
    CHECK(depth_one_closed_form(2, 3) == S("49/72").as<Rational>());
    for (int k = 1; k <= 7; ++k)
        for (long long N = 1; N <= 10; ++N)
            CHECK(Scalar(depth_one_closed_form(k, N)) == iterated_sum(Index{k}, P("-1"), N, true));
}

TEST_CASE("trend: exact zero cases")
{
    const auto& ladder = default_trend_ladder();
    CHECK(ladder == std::vector<long long>{20, 40, 80, 160});
    const auto self_dual = verify_duality_trend({K("2"), P("1")}, ladder);
    CHECK(self_dual.exact_zero);
    CHECK(self_dual.ok());
    const auto ones = verify_prop25_trend(K("1,2"), P("1,1"), {10, 20, 30});
    CHECK(ones.exact_zero);
    const auto unit = verify_adsr_trend(Word(), Word::parse("-1^2"), {10, 20});
    CHECK(unit.exact_zero);
    CHECK(verify_shuffle_trend(Word(), Word::parse("2 . 2"), {10, 20}).exact_zero);
}

TEST_CASE("trend: nonzero case rows and flags")
{
    const auto t = verify_prop25_trend(K("1"), P("-1"), {20, 40, 80});
    REQUIRE(t.rows.size() == 3);
    CHECK_FALSE(t.exact_zero);
    CHECK(t.decreasing);
    for (const auto& row : t.rows) {
        CHECK(row.abs_error.sign() > 0);
        CHECK(row.power_scaled.size() == 3);
        CHECK(row.lhs == li_tilde(K("1"), P("-1"), row.N));
        CHECK(row.rhs == li_sh_truncated(K("1"), P("-1"), row.N));
    }
    std::istringstream csv(trend_csv(t));
    std::string line;
    std::getline(csv, line);
    CHECK(line == "N,lhs,rhs,abs_error,scaled_error");
    int rows = 0;
    while (std::getline(csv, line)) ++rows;
    CHECK(rows == 3);
    const auto j = nlohmann::json::parse(trend_json(t));
    CHECK(j["claim"] == "prop25");
    CHECK(j["rows"].size() == 3);
    CHECK(j["ratio_limit"] == kTrendRatioLimit);
}

TEST_CASE("trend: input validation")
{
    CHECK_THROWS_AS(verify_prop25_trend(K("1"), P("-1"), {40, 20}), DomainError);
    CHECK_THROWS_AS(verify_prop25_trend(K("1"), P("-1"), {20, 20}), DomainError);
    CHECK_THROWS_AS(verify_prop25_trend(K("1"), P("-1"), {1, 20}), DomainError);
    CHECK_THROWS_AS(verify_duality_trend({K("1"), P("1")}, {20, 40}), DomainError);
    CHECK_THROWS_AS(verify_adsr_trend(Word::parse("2"), Word::parse("1^1"), {20, 40}), DomainError);
}
