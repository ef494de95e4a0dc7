// Copyright 2026 The dmpl Authors
// SPDX-License-Identifier: Apache-2.0

// Shared plumbing of the verification suites: seeded sampling, case
// construction and the (optionally threaded) job runner.

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dmpl/errors.hpp"
#include "dmpl/suite.hpp"

namespace dmpl::detail {

struct JobOutcome {
    CaseResult result;
    long long rejected = 0;
};

using Job = std::function<JobOutcome()>;

/// Runs the jobs and collects results in job order.
SuiteReport run_jobs(const Campaign& c, const std::vector<Job>& jobs);

/// Per-case generator: the stream depends only on (seed, case index).
class Sampler {
public:
    Sampler(std::uint64_t seed, std::uint64_t case_index, int height);

    long long uniform(long long lo, long long hi);
    Rational rational();
    Point rational_point(int r);

private:
    std::mt19937_64 rng_;
    int height_;
};

/// Rotation `shift` of (i, -i, 1+i, 1-i), truncated to length r.
Point gaussian_point(int r, int shift);

std::string point_str(const Point& x);

/// Pass iff lhs == rhs after unification; witness on failure.
CaseResult compare(std::string id, const Scalar& lhs, const Scalar& rhs);

/// Evaluates fixed sides; a PoleError yields skipped-pole.
JobOutcome fixed_case(const std::string& id, const std::function<Sides<Scalar>()>& sides);

/// Draws points until the sides evaluate without a pole (at most kMaxDraws).
JobOutcome sampled_case(const std::string& id, Sampler sampler, int r,
                        const std::function<Sides<Scalar>(const Point&)>& sides);

inline constexpr int kMaxDraws = 200;

/// Largest campaign value capped by a hard bound.
inline long long clamp_hi(long long v, long long cap) { return v < cap ? v : cap; }

std::vector<long long> primes_between(long long lo, long long hi);

}  // namespace dmpl::detail
