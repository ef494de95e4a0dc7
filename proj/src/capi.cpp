// Copyright 2026 The dmpl Authors
// SPDX-License-Identifier: Apache-2.0

#include "dmpl/dmpl.h"

#include <algorithm>
#include <exception>
#include <memory>
#include <set>
#include <string>

#include <json.hpp>

#include "dmpl/errors.hpp"
#include "dmpl/evaluators.hpp"
#include "dmpl/suite.hpp"
#include "dmpl/words.hpp"

#ifndef DMPL_VERSION_STRING
#define DMPL_VERSION_STRING "0.0.0"
#endif

struct dmpl_context {
    std::string last_error;
};

struct dmpl_result {
    std::string text;
    std::string json;
    std::string csv;
};

namespace {

using nlohmann::json;

/// Request-level problems that are not literal parse errors of the core.
struct RequestError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json parse_request(const char* text)
{
    if (text == nullptr) return json::object();
    json j = json::parse(text);
    if (!j.is_object()) throw RequestError("request must be a JSON object");
    return j;
}

void reject_unknown(const json& j, const std::set<std::string>& allowed)
{
    for (const auto& [key, value] : j.items()) {
        if (!allowed.count(key)) throw RequestError("unknown key: " + key);
    }
}

std::string need_string(const json& j, const char* key)
{
    if (!j.contains(key)) throw RequestError(std::string("missing key: ") + key);
    return j.at(key).get<std::string>();
}

/// Accepts "1,2" or [1, 2].
std::string list_text(const json& v)
{
    if (v.is_string()) return v.get<std::string>();
    if (!v.is_array()) throw RequestError("expected a list");
    std::string s;
    for (const auto& e : v) {
        if (!s.empty()) s += ',';
        s += e.is_string() ? e.get<std::string>() : e.dump();
    }
    return s;
}

// Comma-separated non-negative integers; empty text is the empty list.
std::vector<int> int_list(const json& j, const char* key)
{
    if (!j.contains(key)) throw RequestError(std::string("missing key: ") + key);
    const std::string text = list_text(j.at(key));
    std::vector<int> out;
    if (text.find_first_not_of(" ") == std::string::npos) return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        std::string tok = text.substr(start, comma - start);
        tok.erase(0, tok.find_first_not_of(' '));
        tok.erase(tok.find_last_not_of(' ') + 1);
        if (tok.empty() || tok.size() > 6 || tok.find_first_not_of("0123456789") != std::string::npos)
            throw dmpl::ParseError(std::string("bad entry '") + tok + "' in " + key);
        out.push_back(std::stoi(tok));
        if (comma == text.size()) break;
        start = comma + 1;
    }
    return out;
}

dmpl::Point point(const json& j, const char* key)
{
    if (!j.contains(key)) throw RequestError(std::string("missing key: ") + key);
    return dmpl::parse_scalar_list(list_text(j.at(key)));
}

dmpl::Index index_of(const json& j, const char* key)
{
    if (!j.contains(key)) return {};
    return dmpl::Index::parse(list_text(j.at(key)));
}

long long need_n(const json& j)
{
    if (!j.contains("n")) throw RequestError("missing key: n");
    return j.at("n").get<long long>();
}

dmpl_result* value_result(const std::string& subject, const dmpl::Scalar& v)
{
    auto* r = new dmpl_result;
    r->text = v.str();
    r->json = json{{"subject", subject}, {"value", v.str()}, {"kind", std::string(dmpl::kind_name(v.kind()))}}.dump(2) + "\n";
    return r;
}

dmpl::Scalar eval_subject(const std::string& subject, const json& a)
{
    using namespace dmpl;
    if (subject == "li-tilde") {
        reject_unknown(a, {"index", "x", "n"});
        return li_tilde(index_of(a, "index"), point(a, "x"), need_n(a));
    }
    if (subject == "li-sh") {
        reject_unknown(a, {"index", "z", "n"});
        return li_sh_truncated(index_of(a, "index"), point(a, "z"), need_n(a));
    }
    if (subject == "li-star") {
        reject_unknown(a, {"index", "xi", "n"});
        return li_star_truncated(index_of(a, "index"), point(a, "xi"), need_n(a));
    }
    if (subject == "iterated") {
        reject_unknown(a, {"index", "x", "n", "inclusive"});
        return iterated_sum(index_of(a, "index"), point(a, "x"), need_n(a), a.value("inclusive", false));
    }
    if (subject == "connected") {
        reject_unknown(a, {"index", "l", "x", "n"});
        return connected_sum(index_of(a, "index"), index_of(a, "l"), point(a, "x"), need_n(a));
    }
    if (subject == "r-value") {
        reject_unknown(a, {"a", "b", "z", "n"});
        const auto av = int_list(a, "a");
        const auto bv = a.contains("b") ? int_list(a, "b") : std::vector<int>{};
        if (a.contains("z")) return r_value_z(av, bv, point(a, "z"), need_n(a));
        return r_value(av, bv, need_n(a));
    }
    if (subject == "word-L" || subject == "word-I") {
        reject_unknown(a, {"word", "n"});
        const WordCombo w(Word::parse(need_string(a, "word")));
        return subject == "word-L" ? eval_L(w, need_n(a)) : eval_I(w, need_n(a));
    }
    throw RequestError("unknown subject: " + subject);
}

dmpl::Campaign campaign_from(const json& j)
{
    static const std::set<std::string> keys{"tag",    "max_weight", "max_depth", "n_min",           "n_max",
                                            "p_min",  "p_max",      "trials",    "height",          "seed",
                                            "gaussian", "case",     "threads",   "grid_max_weight", "grid_p_max",
                                            "m_max"};
    reject_unknown(j, keys);
    dmpl::Campaign c = dmpl::default_campaign(need_string(j, "tag"));
    const auto take = [&](const char* k, auto& field) {
        if (j.contains(k)) field = j.at(k).get<std::remove_reference_t<decltype(field)>>();
    };
    take("max_weight", c.max_weight);
    take("max_depth", c.max_depth);
    take("n_min", c.n_min);
    take("n_max", c.n_max);
    take("p_min", c.p_min);
    take("p_max", c.p_max);
    take("trials", c.trials);
    take("height", c.height);
    take("seed", c.seed);
    take("gaussian", c.gaussian);
    take("case", c.diff_case);
    take("threads", c.threads);
    take("grid_max_weight", c.grid_max_weight);
    take("grid_p_max", c.grid_p_max);
    take("m_max", c.m_max);
    return c;
}

json campaign_to_json(const dmpl::Campaign& c)
{
    return {{"tag", c.tag},       {"max_weight", c.max_weight}, {"max_depth", c.max_depth}, {"n_min", c.n_min},
            {"n_max", c.n_max},   {"p_min", c.p_min},           {"p_max", c.p_max},         {"trials", c.trials},
            {"height", c.height}, {"seed", c.seed},             {"gaussian", c.gaussian},   {"case", c.diff_case},
            {"threads", c.threads}, {"grid_max_weight", c.grid_max_weight}, {"grid_p_max", c.grid_p_max},
            {"m_max", c.m_max}};
}

std::string trend_text(const dmpl::TrendReport& t)
{
    std::string s = t.claim + " " + t.subject + " [" + t.scaling + "]: ";
    if (t.exact_zero) {
        s += "defect exactly 0";
    } else {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.4g", t.ratio);
        s += std::string("decreasing=") + (t.decreasing ? "yes" : "no") + " scaled max/min=" + buf +
             (t.bounded ? " (bounded)" : " (not bounded)");
    }
    return s + (t.ok() ? "  ok\n" : "  FAIL\n");
}

dmpl::TrendReport run_trend(const json& j)
{
    using namespace dmpl;
    const std::string claim = need_string(j, "claim");
    std::vector<long long> ns = default_trend_ladder();
    if (j.contains("n_list")) ns = j.at("n_list").get<std::vector<long long>>();
    if (claim == "prop25") {
        reject_unknown(j, {"claim", "n_list", "index", "z"});
        return verify_prop25_trend(index_of(j, "index"), point(j, "z"), ns);
    }
    if (claim == "duality") {
        reject_unknown(j, {"claim", "n_list", "index", "z"});
        return verify_duality_trend({index_of(j, "index"), point(j, "z")}, ns);
    }
    if (claim == "shuffle" || claim == "adsr") {
        reject_unknown(j, {"claim", "n_list", "w1", "w0"});
        const Word w1 = Word::parse(need_string(j, "w1"));
        const Word w0 = Word::parse(need_string(j, "w0"));
        return claim == "shuffle" ? verify_shuffle_trend(w1, w0, ns) : verify_adsr_trend(w1, w0, ns);
    }
    throw RequestError("unknown trend claim: " + claim);
}

template <class F>
dmpl_status guarded(dmpl_context* ctx, dmpl_result** out, F&& body)
{
    if (ctx == nullptr) return DMPL_ERR_INTERNAL;
    ctx->last_error.clear();
    if (out == nullptr) {
        ctx->last_error = "null result pointer";
        return DMPL_ERR_INTERNAL;
    }
    *out = nullptr;
    try {
        return body();
    } catch (const dmpl::PoleError& e) {
        ctx->last_error = e.what();
        return DMPL_ERR_POLE;
    } catch (const dmpl::ParseError& e) {
        ctx->last_error = e.what();
        return DMPL_ERR_PARSE;
    } catch (const json::exception& e) {
        ctx->last_error = std::string("malformed request: ") + e.what();
        return DMPL_ERR_PARSE;
    } catch (const RequestError& e) {
        ctx->last_error = e.what();
        return DMPL_ERR_PARSE;
    } catch (const dmpl::DomainError& e) {
        ctx->last_error = e.what();
        return DMPL_ERR_DOMAIN;
    } catch (const dmpl::MismatchError& e) {
        ctx->last_error = e.what();
        return DMPL_ERR_DOMAIN;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return DMPL_ERR_INTERNAL;
    } catch (...) {
        ctx->last_error = "unknown error";
        return DMPL_ERR_INTERNAL;
    }
}

}  // namespace

extern "C" {

int dmpl_abi_version(void) { return DMPL_ABI_VERSION; }

const char* dmpl_version(void) { return DMPL_VERSION_STRING; }

const char* dmpl_status_name(dmpl_status s)
{
    switch (s) {
    case DMPL_OK: return "ok";
    case DMPL_ERR_IDENTITY: return "identity failure";
    case DMPL_ERR_PARSE: return "parse error";
    case DMPL_ERR_POLE: return "pole";
    case DMPL_ERR_DOMAIN: return "domain error";
    case DMPL_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

dmpl_status dmpl_context_create(dmpl_context** out)
{
    if (out == nullptr) return DMPL_ERR_INTERNAL;
    try {
        *out = new dmpl_context;
    } catch (...) {
        *out = nullptr;
        return DMPL_ERR_INTERNAL;
    }
    return DMPL_OK;
}

void dmpl_context_destroy(dmpl_context* ctx) { delete ctx; }

const char* dmpl_last_error(const dmpl_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

dmpl_status dmpl_eval(dmpl_context* ctx, const char* subject, const char* args_json, dmpl_result** out)
{
    return guarded(ctx, out, [&] {
        if (subject == nullptr) throw RequestError("missing subject");
        const json args = parse_request(args_json);
        *out = value_result(subject, eval_subject(subject, args));
        return DMPL_OK;
    });
}

dmpl_status dmpl_verify(dmpl_context* ctx, const char* campaign_json, dmpl_result** out)
{
    return guarded(ctx, out, [&] {
        const dmpl::Campaign c = campaign_from(parse_request(campaign_json));
        const dmpl::SuiteReport rep = dmpl::run_campaign(c);
        auto* r = new dmpl_result;
        r->text = dmpl::report_summary(rep);
        r->json = dmpl::report_json(rep);
        *out = r;
        return rep.ok() ? DMPL_OK : DMPL_ERR_IDENTITY;
    });
}

dmpl_status dmpl_trend(dmpl_context* ctx, const char* trend_json, dmpl_result** out)
{
    return guarded(ctx, out, [&] {
        const json req = parse_request(trend_json);
        auto r = std::make_unique<dmpl_result>();
        bool ok = true;
        if (req.value("claim", std::string()) == "defaults") {
            reject_unknown(req, {"claim"});
            json all = json::array();
            for (const auto& t : dmpl::default_trends()) {
                json doc = json::parse(dmpl::trend_json(t));
                doc["csv"] = dmpl::trend_csv(t);
                all.push_back(std::move(doc));
                r->text += trend_text(t);
                ok = ok && t.ok();
            }
            r->json = json{{"trends", std::move(all)}}.dump(2) + "\n";
        } else {
            const dmpl::TrendReport t = run_trend(req);
            r->text = trend_text(t);
            r->json = dmpl::trend_json(t);
            r->csv = dmpl::trend_csv(t);
            ok = t.ok();
        }
        *out = r.release();
        return ok ? DMPL_OK : DMPL_ERR_IDENTITY;
    });
}

dmpl_status dmpl_default_campaign(dmpl_context* ctx, const char* tag, dmpl_result** out)
{
    return guarded(ctx, out, [&] {
        if (tag == nullptr) throw RequestError("missing tag");
        const json j = campaign_to_json(dmpl::default_campaign(tag));
        auto* r = new dmpl_result;
        r->json = j.dump(2) + "\n";
        r->text = r->json;
        *out = r;
        return DMPL_OK;
    });
}

const char* dmpl_result_text(const dmpl_result* r) { return r ? r->text.c_str() : ""; }

const char* dmpl_result_json(const dmpl_result* r) { return r ? r->json.c_str() : ""; }

const char* dmpl_result_csv(const dmpl_result* r) { return r ? r->csv.c_str() : ""; }

void dmpl_result_destroy(dmpl_result* r) { delete r; }

}  // extern "C"
