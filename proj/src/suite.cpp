// Copyright 2026 The dmpl Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "suite_internal.hpp"

namespace dmpl {

namespace detail {

namespace {

std::uint64_t splitmix(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

SuiteReport run_jobs(const Campaign& c, const std::vector<Job>& jobs)
{
    std::vector<JobOutcome> out(jobs.size());
    const auto worker_count = static_cast<std::size_t>(std::max(1, c.threads));
    if (worker_count == 1 || jobs.size() < 2) {
        for (std::size_t j = 0; j < jobs.size(); ++j) out[j] = jobs[j]();
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(worker_count);
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < worker_count; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t j = next++; j < jobs.size(); j = next++) out[j] = jobs[j]();
                } catch (...) {
                    errors[w] = std::current_exception();
                    next = jobs.size();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }
    SuiteReport r;
    r.campaign = c;
    r.cases.reserve(out.size());
    for (auto& o : out) {
        r.rejected_samples += o.rejected;
        r.cases.push_back(std::move(o.result));
    }
    return r;
}

Sampler::Sampler(std::uint64_t seed, std::uint64_t case_index, int height)
    : rng_(splitmix(splitmix(seed) ^ case_index)), height_(height)
{
    if (height < 1) throw DomainError("sampling height must be positive");
}

long long Sampler::uniform(long long lo, long long hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(rng_() % span);
}

Rational Sampler::rational()
{
    const long long num = uniform(-height_, height_);
    const long long den = uniform(1, height_);
    return Rational(num) / Rational(den);
}

Point Sampler::rational_point(int r)
{
    Point x;
    for (int j = 0; j < r; ++j) x.emplace_back(rational());
    return x;
}

Point gaussian_point(int r, int shift)
{
    const Gaussian i = Gaussian::i();
    const Gaussian one(Rational(1));
    const std::vector<Gaussian> cycle{i, -i, one + i, one - i};
    Point x;
    for (int j = 0; j < r; ++j) x.emplace_back(cycle[static_cast<std::size_t>((j + shift) % 4)]);
    return x;
}

std::string point_str(const Point& x) { return "(" + render_scalar_list(x) + ")"; }

CaseResult compare(std::string id, const Scalar& lhs, const Scalar& rhs)
{
    CaseResult r;
    r.id = std::move(id);
    const auto u = unify({lhs, rhs});
    if (u[0] == u[1]) return r;
    r.status = Status::Fail;
    r.lhs = lhs.str();
    r.rhs = rhs.str();
    return r;
}

JobOutcome fixed_case(const std::string& id, const std::function<Sides<Scalar>()>& sides)
{
    JobOutcome o;
    try {
        const auto s = sides();
        o.result = compare(id, s.lhs, s.rhs);
    } catch (const PoleError&) {
        o.result.id = id;
        o.result.status = Status::SkippedPole;
    }
    return o;
}

JobOutcome sampled_case(const std::string& id, Sampler sampler, int r,
                        const std::function<Sides<Scalar>(const Point&)>& sides)
{
    JobOutcome o;
    for (int draw = 0; draw < kMaxDraws; ++draw) {
        const Point x = sampler.rational_point(r);
        try {
            const auto s = sides(x);
            o.result = compare(id + " x=" + point_str(x), s.lhs, s.rhs);
            return o;
        } catch (const PoleError&) {
            ++o.rejected;
        }
    }
    o.result.id = id;
    o.result.status = Status::SkippedPole;
    return o;
}

std::vector<long long> primes_between(long long lo, long long hi)
{
    std::vector<long long> ps;
    for (long long p = std::max(2LL, lo); p <= hi; ++p) {
        if (is_prime(static_cast<std::uint64_t>(p))) ps.push_back(p);
    }
    return ps;
}

}  // namespace detail

std::string_view status_name(Status s)
{
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::SkippedPole: return "skipped-pole";
    }
    return "unknown";
}

long long SuiteReport::count(Status s) const
{
    return std::count_if(cases.begin(), cases.end(), [s](const CaseResult& c) { return c.status == s; });
}

const std::vector<std::string>& suite_tags()
{
    static const std::vector<std::string> tags{"main", "modified", "diff", "transport", "fmzv", "misc", "words"};
    return tags;
}

Campaign default_campaign(std::string_view tag)
{
    Campaign c;
    c.tag = std::string(tag);
    if (tag == "main" || tag == "modified") return c;
    if (tag == "diff") {
        c.max_depth = 5;
        c.n_min = 2;
        c.n_max = 15;
        c.trials = 3;
        return c;
    }
    if (tag == "transport") {
        c.max_weight = 4;
        c.max_depth = 4;
        c.n_max = 12;
        c.trials = 3;
        return c;
    }
    if (tag == "fmzv") {
        c.max_weight = 4;
        c.max_depth = 4;
        return c;
    }
    if (tag == "misc") {
        c.max_weight = 7;
        c.n_max = 60;
        return c;
    }
    if (tag == "words") {
        c.max_weight = 4;
        c.max_depth = 4;
        c.n_max = 25;
        return c;
    }
    throw DomainError("unknown suite tag: " + std::string(tag));
}

SuiteReport run_campaign(const Campaign& c)
{
    if (c.max_weight < 1 || c.max_depth < 1 || c.n_min < 1 || c.n_max < c.n_min || c.trials < 1 ||
        c.p_min < 2 || c.p_max < c.p_min || c.height < 1 || c.m_max < 0 || c.grid_max_weight < 0) {
        throw DomainError("campaign bounds must be positive and ordered");
    }
    if (c.tag == "main") return verify_main(c);
    if (c.tag == "modified") return verify_modified(c);
    if (c.tag == "diff") return verify_difference_equations(c);
    if (c.tag == "transport") return verify_transport(c);
    if (c.tag == "fmzv") return verify_fmzv(c);
    if (c.tag == "misc") return verify_misc(c);
    if (c.tag == "words") return verify_words(c);
    throw DomainError("unknown suite tag: " + c.tag);
}

namespace {

nlohmann::json campaign_json(const Campaign& c)
{
    return {{"tag", c.tag},
            {"max_weight", c.max_weight},
            {"max_depth", c.max_depth},
            {"n_min", c.n_min},
            {"n_max", c.n_max},
            {"p_min", c.p_min},
            {"p_max", c.p_max},
            {"trials", c.trials},
            {"height", c.height},
            {"seed", c.seed},
            {"gaussian", c.gaussian},
            {"case", c.diff_case},
            {"grid_max_weight", c.grid_max_weight},
            {"grid_p_max", c.grid_p_max},
            {"m_max", c.m_max}};
}

}  // namespace

std::string report_json(const SuiteReport& r)
{
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& c : r.cases) {
        nlohmann::json j{{"id", c.id}, {"status", status_name(c.status)}};
        if (c.status == Status::Fail) {
            j["lhs"] = c.lhs;
            j["rhs"] = c.rhs;
        }
        cases.push_back(std::move(j));
    }
    // The thread count does not affect results and is left out on purpose.
    const nlohmann::json doc{
        {"tag", r.campaign.tag},
        {"seed", r.campaign.seed},
        {"campaign", campaign_json(r.campaign)},
        {"summary",
         {{"cases", r.cases.size()},
          {"passed", r.count(Status::Pass)},
          {"failed", r.count(Status::Fail)},
          {"skipped_pole", r.count(Status::SkippedPole)},
          {"rejected_samples", r.rejected_samples}}},
        {"cases", std::move(cases)}};
    return doc.dump(2) + "\n";
}

std::string report_summary(const SuiteReport& r)
{
    std::ostringstream os;
    os << r.campaign.tag << ": " << r.cases.size() << " cases, " << r.count(Status::Pass) << " passed, "
       << r.count(Status::Fail) << " failed, " << r.count(Status::SkippedPole) << " skipped (pole), "
       << r.rejected_samples << " resampled points\n";
    for (const auto& c : r.cases) {
        if (c.status == Status::Fail) os << "  FAIL " << c.id << ": " << c.lhs << " != " << c.rhs << "\n";
    }
    return os.str();
}

}  // namespace dmpl
