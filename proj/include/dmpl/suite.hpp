// Copyright 2026 The dmpl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dmpl/evaluators.hpp"
#include "dmpl/index.hpp"
#include "dmpl/words.hpp"

namespace dmpl {

enum class Status { Pass, Fail, SkippedPole };

std::string_view status_name(Status s);

struct CaseResult {
    std::string id;
    Status status = Status::Pass;
    /// Both sides, filled on failure only.
    std::string lhs;
    std::string rhs;
};

/// Parameters of one verification run. Which fields matter depends on the tag.
struct Campaign {
    std::string tag = "main";
    int max_weight = 5;
    int max_depth = 3;
    long long n_min = 1;
    long long n_max = 40;
    long long p_min = 5;
    long long p_max = 97;
    int trials = 5;
    int height = 50;
    std::uint64_t seed = 1;
    bool gaussian = true;
    /// Restricts the difference-equation suite to one case code ("1a" ... "2d").
    std::string diff_case;
    /// Bounds for the cleared-polynomial congruence over the full grid F_p^r.
    int grid_max_weight = 3;
    long long grid_p_max = 31;
    /// Largest m in the star-product congruence.
    int m_max = 3;
    /// Worker threads; results are aggregated in case order regardless.
    int threads = 1;
};

/// Tags accepted by run_campaign, in a fixed order.
const std::vector<std::string>& suite_tags();

/// Default bounds for a tag (the acceptance bounds).
Campaign default_campaign(std::string_view tag);

struct SuiteReport {
    Campaign campaign;
    std::vector<CaseResult> cases;
    long long rejected_samples = 0;

    long long count(Status s) const;
    bool ok() const { return count(Status::Fail) == 0; }
};

/// Dispatches on campaign.tag; unknown tags raise DomainError.
SuiteReport run_campaign(const Campaign& c);

SuiteReport verify_main(const Campaign& c);
SuiteReport verify_modified(const Campaign& c);
SuiteReport verify_difference_equations(const Campaign& c);
SuiteReport verify_transport(const Campaign& c);
SuiteReport verify_fmzv(const Campaign& c);
SuiteReport verify_misc(const Campaign& c);
SuiteReport verify_words(const Campaign& c);

/// Case code of the difference equation for d/dx_i (i 1-based): "1a".."1c", "2a".."2d".
std::string diff_case_code(const Index& k, int i);

/// Difference quotient in x_i (lhs) and the closed difference equation (rhs),
/// for the iterated sum or, with li_side, for li_tilde.
Sides<Scalar> difference_equation_sides(const Index& k, int i, const Point& x, long long N, bool li_side);

/// Z_N(k_1..k_j | k_{j+1}..k_r) for j = r, r-1, ..., 0.
std::vector<Scalar> transport_chain(const Index& k, const Point& x, long long N);

/// a_n^{(N)} of the arctangent discretization, built from Stirling numbers.
Rational arctan_coefficient(long long n, long long N);

/// Even/odd closed form of the inclusive depth-one iterated sum at x = -1.
Rational depth_one_closed_form(int k, long long N);

/// Deterministic JSON rendering (no timestamps, sorted keys).
std::string report_json(const SuiteReport& r);
std::string report_summary(const SuiteReport& r);

// ---------------------------------------------------------------- trends

struct TrendRow {
    long long N = 0;
    Scalar lhs;
    Scalar rhs;
    /// Exact |lhs - rhs| for rationals; certified upper bound for Gaussians.
    Rational abs_error;
    /// abs_error times the claim's rate factor, rounded to a rational.
    Rational scaled_error;
    /// abs_error * N^e for e in {1/3, 1/2, 1}, as decimals.
    std::vector<double> power_scaled;
};

struct TrendReport {
    std::string claim;    // prop25 | duality | shuffle | adsr
    std::string subject;  // human-readable case description
    std::string scaling;  // rate factor description
    std::vector<TrendRow> rows;
    bool exact_zero = false;
    bool decreasing = false;
    bool bounded = false;
    double ratio = 0;  // max/min of scaled errors (0 when exactly zero)

    /// Exactly zero, or strictly decreasing with bounded scaled error.
    bool ok() const { return exact_zero || (decreasing && bounded); }
};

inline constexpr double kTrendRatioLimit = 10.0;

const std::vector<long long>& default_trend_ladder();

TrendReport verify_prop25_trend(const Index& k, const Point& z, const std::vector<long long>& ns);
TrendReport verify_duality_trend(const DualizablePair& p, const std::vector<long long>& ns);
TrendReport verify_shuffle_trend(const Word& w1, const Word& w0, const std::vector<long long>& ns);
TrendReport verify_adsr_trend(const Word& w1, const Word& w0, const std::vector<long long>& ns);

/// The default trend cases of every claim.
std::vector<TrendReport> default_trends();

std::string trend_csv(const TrendReport& t);
std::string trend_json(const TrendReport& t);

}  // namespace dmpl
