// Copyright 2026 The dmpl Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Talks to the library only through the C interface.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dmpl/dmpl.h"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kPole = 3, kInternal = 4 };

int exit_code(dmpl_status s)
{
    switch (s) {
    case DMPL_OK: return kPass;
    case DMPL_ERR_IDENTITY: return kFail;
    case DMPL_ERR_PARSE:
    case DMPL_ERR_DOMAIN: return kUsage;
    case DMPL_ERR_POLE: return kPole;
    case DMPL_ERR_INTERNAL: return kInternal;
    }
    return kInternal;
}

struct ContextDeleter {
    void operator()(dmpl_context* c) const { dmpl_context_destroy(c); }
};
struct ResultDeleter {
    void operator()(dmpl_result* r) const { dmpl_result_destroy(r); }
};
using Context = std::unique_ptr<dmpl_context, ContextDeleter>;
using Result = std::unique_ptr<dmpl_result, ResultDeleter>;

Context make_context()
{
    dmpl_context* raw = nullptr;
    if (dmpl_context_create(&raw) != DMPL_OK) throw std::runtime_error("cannot create library context");
    return Context(raw);
}

/// Reports a failed call on stderr; returns the process exit code.
int report_error(const dmpl_context* ctx, dmpl_status s)
{
    std::cerr << "error (" << dmpl_status_name(s) << "): " << dmpl_last_error(ctx) << "\n";
    return exit_code(s);
}

void write_file(const fs::path& path, const std::string& text)
{
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

std::string default_output_dir()
{
    const char* env = std::getenv("DMPL_OUTPUT_DIR");
    return env != nullptr && *env != '\0' ? env : ".";
}

struct EvalOptions {
    std::string subject;
    std::optional<std::string> index, l, x, z, xi, a, b, word;
    long long n = 0;
    bool inclusive = false;
};

struct VerifyOptions {
    std::string tag;
    std::string campaign_file;
    std::string output_dir;
    std::string json_path;
    std::optional<int> max_weight, max_depth, trials, height, threads, m_max, grid_max_weight;
    std::optional<long long> n_min, n_max, p_min, p_max, grid_p_max;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> diff_case;
    bool no_gaussian = false;
};

struct TrendOptions {
    std::string claim;
    std::optional<std::string> index, z, w1, w0;
    std::string n_list;
    std::string csv_path;
    std::string output_dir;
};

int run_eval(const EvalOptions& o)
{
    json args = json::object();
    const auto put = [&](const char* key, const std::optional<std::string>& v) {
        if (v) args[key] = *v;
    };
    put("index", o.index);
    put("l", o.l);
    put("x", o.x);
    put("z", o.z);
    put("xi", o.xi);
    put("a", o.a);
    put("b", o.b);
    put("word", o.word);
    args["n"] = o.n;
    if (o.inclusive) args["inclusive"] = true;
    if (o.subject == "connected" && !args.contains("index")) args["index"] = "";

    Context ctx = make_context();
    dmpl_result* raw = nullptr;
    const dmpl_status s = dmpl_eval(ctx.get(), o.subject.c_str(), args.dump().c_str(), &raw);
    Result r(raw);
    if (s != DMPL_OK) return report_error(ctx.get(), s);
    std::cout << dmpl_result_text(r.get()) << "\n";
    return kPass;
}

json campaign_from_flags(const VerifyOptions& o)
{
    json c{{"tag", o.tag}};
    const auto put = [&](const char* key, const auto& v) {
        if (v) c[key] = *v;
    };
    put("max_weight", o.max_weight);
    put("max_depth", o.max_depth);
    put("trials", o.trials);
    put("height", o.height);
    put("threads", o.threads);
    put("m_max", o.m_max);
    put("grid_max_weight", o.grid_max_weight);
    put("n_min", o.n_min);
    put("n_max", o.n_max);
    put("p_min", o.p_min);
    put("p_max", o.p_max);
    put("grid_p_max", o.grid_p_max);
    put("seed", o.seed);
    put("case", o.diff_case);
    if (o.no_gaussian) c["gaussian"] = false;
    return c;
}

/// Runs one campaign and writes its report; returns the exit code.
int run_one_campaign(dmpl_context* ctx, const json& campaign, const fs::path& report_path)
{
    dmpl_result* raw = nullptr;
    const dmpl_status s = dmpl_verify(ctx, campaign.dump().c_str(), &raw);
    Result r(raw);
    if (s != DMPL_OK && s != DMPL_ERR_IDENTITY) return report_error(ctx, s);
    std::cout << dmpl_result_text(r.get());
    write_file(report_path, dmpl_result_json(r.get()));
    std::cout << "report: " << report_path.string() << "\n";
    return exit_code(s);
}

int run_verify(const VerifyOptions& o)
{
    Context ctx = make_context();
    if (o.campaign_file.empty()) {
        if (o.tag.empty()) {
            std::cerr << "verify: a suite tag or --campaign-file is required\n";
            return kUsage;
        }
        const std::string dir = o.output_dir.empty() ? default_output_dir() : o.output_dir;
        const fs::path path = o.json_path.empty() ? fs::path(dir) / ("verify_" + o.tag + ".json") : fs::path(o.json_path);
        return run_one_campaign(ctx.get(), campaign_from_flags(o), path);
    }

    std::ifstream in(o.campaign_file);
    if (!in) {
        std::cerr << "verify: cannot read " << o.campaign_file << "\n";
        return kUsage;
    }
    json file;
    try {
        file = json::parse(in);
    } catch (const json::exception& e) {
        std::cerr << "verify: malformed campaign file: " << e.what() << "\n";
        return kUsage;
    }
    if (!file.is_object() || !file.contains("campaigns") || !file["campaigns"].is_array()) {
        std::cerr << "verify: campaign file needs a \"campaigns\" array\n";
        return kUsage;
    }
    for (const auto& [key, value] : file.items()) {
        if (key != "seed" && key != "output_dir" && key != "campaigns") {
            std::cerr << "verify: unknown key in campaign file: " << key << "\n";
            return kUsage;
        }
    }
    std::string dir = o.output_dir;
    if (dir.empty() && file.contains("output_dir")) dir = file["output_dir"].get<std::string>();
    if (dir.empty()) dir = default_output_dir();
    int worst = kPass;
    std::size_t n = 0;
    for (json c : file["campaigns"]) {
        if (!c.is_object()) {
            std::cerr << "verify: each campaign must be an object\n";
            return kUsage;
        }
        if (file.contains("seed") && !c.contains("seed")) c["seed"] = file["seed"];
        const std::string tag = c.value("tag", std::string("campaign"));
        const fs::path path = fs::path(dir) / ("verify_" + std::to_string(n++) + "_" + tag + ".json");
        const int code = run_one_campaign(ctx.get(), c, path);
        if (code == kUsage || code == kInternal) return code;
        worst = std::max(worst, code);
    }
    return worst;
}

int run_trend(const TrendOptions& o)
{
    json req{{"claim", o.claim}};
    const auto put = [&](const char* key, const std::optional<std::string>& v) {
        if (v) req[key] = *v;
    };
    put("index", o.index);
    put("z", o.z);
    put("w1", o.w1);
    put("w0", o.w0);
    if (!o.n_list.empty()) {
        std::vector<long long> ns;
        std::stringstream ss(o.n_list);
        for (std::string item; std::getline(ss, item, ',');) {
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(item, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != item.size()) {
                std::cerr << "trend: malformed N list: " << o.n_list << "\n";
                return kUsage;
            }
            ns.push_back(v);
        }
        req["n_list"] = ns;
    }

    Context ctx = make_context();
    dmpl_result* raw = nullptr;
    const dmpl_status s = dmpl_trend(ctx.get(), req.dump().c_str(), &raw);
    Result r(raw);
    if (s != DMPL_OK && s != DMPL_ERR_IDENTITY) return report_error(ctx.get(), s);
    std::cout << dmpl_result_text(r.get());

    const fs::path dir = o.output_dir.empty() ? default_output_dir() : o.output_dir;
    if (o.claim == "defaults") {
        const json all = json::parse(dmpl_result_json(r.get()));
        std::size_t n = 0;
        for (json t : all["trends"]) {
            const std::string stem = "trend_" + std::to_string(n++) + "_" + t["claim"].get<std::string>();
            write_file(dir / (stem + ".csv"), t["csv"].get<std::string>());
            t.erase("csv");
            write_file(dir / (stem + ".json"), t.dump(2) + "\n");
        }
        std::cout << "wrote " << n << " CSV files with JSON sidecars to " << dir.string() << "\n";
        return exit_code(s);
    }
    const fs::path csv = o.csv_path.empty() ? dir / ("trend_" + o.claim + ".csv") : fs::path(o.csv_path);
    fs::path sidecar = csv;
    sidecar.replace_extension(".json");
    write_file(csv, dmpl_result_csv(r.get()));
    write_file(sidecar, dmpl_result_json(r.get()));
    std::cout << "csv: " << csv.string() << "\njson: " << sidecar.string() << "\n";
    return exit_code(s);
}

int run_defaults(const std::string& tag)
{
    Context ctx = make_context();
    dmpl_result* raw = nullptr;
    const dmpl_status s = dmpl_default_campaign(ctx.get(), tag.c_str(), &raw);
    Result r(raw);
    if (s != DMPL_OK) return report_error(ctx.get(), s);
    std::cout << dmpl_result_json(r.get());
    return kPass;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"dmpl: exact discrete multiple polylogarithms and identity verification"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(dmpl_version()));

    EvalOptions ev;
    auto* eval = app.add_subcommand("eval", "Evaluate one sum exactly");
    eval->add_option("subject", ev.subject, "li-tilde | li-sh | li-star | iterated | connected | r-value | word-L | word-I")
        ->required()
        ->check(CLI::IsMember({"li-tilde", "li-sh", "li-star", "iterated", "connected", "r-value", "word-L", "word-I"}));
    eval->add_option("--index,-k", ev.index, "Index, e.g. 1,2 (the k side for connected)");
    eval->add_option("--l", ev.l, "Right index of a connected sum");
    eval->add_option("--x", ev.x, "Point x_1,...,x_r");
    eval->add_option("--z", ev.z, "Point z_1,...,z_r");
    eval->add_option("--xi", ev.xi, "Parameters xi_1,...,xi_r");
    eval->add_option("--a", ev.a, "R-value exponents a_i");
    eval->add_option("--b", ev.b, "R-value exponents b_i");
    eval->add_option("--word,-w", ev.word, "Word literal, e.g. \"-1^2 . 2\"");
    eval->add_option("--n,-N", ev.n, "Truncation N")->required();
    eval->add_flag("--inclusive", ev.inclusive, "Iterated sum with n <= N");

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "Run an identity campaign and write a JSON report");
    verify->add_option("tag", vo.tag, "main | modified | diff | transport | fmzv | misc | words");
    verify->add_option("--campaign-file", vo.campaign_file, "JSON campaign file")->check(CLI::ExistingFile);
    verify->add_option("--output-dir", vo.output_dir, "Report directory (default $DMPL_OUTPUT_DIR or .)");
    verify->add_option("--json", vo.json_path, "Report path for a single campaign");
    verify->add_option("--max-weight", vo.max_weight);
    verify->add_option("--max-depth", vo.max_depth);
    verify->add_option("--n-min", vo.n_min);
    verify->add_option("--n-max", vo.n_max);
    verify->add_option("--p-min", vo.p_min);
    verify->add_option("--p-max", vo.p_max);
    verify->add_option("--trials", vo.trials, "Random points per (index, N)");
    verify->add_option("--height", vo.height, "Height bound of random rationals");
    verify->add_option("--seed", vo.seed);
    verify->add_option("--case", vo.diff_case, "Difference-equation case 1a..2d");
    verify->add_option("--threads", vo.threads);
    verify->add_option("--m-max", vo.m_max);
    verify->add_option("--grid-max-weight", vo.grid_max_weight);
    verify->add_option("--grid-p-max", vo.grid_p_max);
    verify->add_flag("--no-gaussian", vo.no_gaussian, "Skip the Gaussian points");

    TrendOptions to;
    auto* trend = app.add_subcommand("trend", "Run a trend check and write CSV plus a JSON sidecar");
    trend->add_option("claim", to.claim, "prop25 | duality | shuffle | adsr | defaults")
        ->required()
        ->check(CLI::IsMember({"prop25", "duality", "shuffle", "adsr", "defaults"}));
    trend->add_option("--index,-k", to.index);
    trend->add_option("--z", to.z);
    trend->add_option("--w1", to.w1);
    trend->add_option("--w0", to.w0);
    trend->add_option("--n-list", to.n_list, "Strictly increasing N values, e.g. 20,40,80,160");
    trend->add_option("--csv", to.csv_path, "CSV path; the sidecar gets the .json extension");
    trend->add_option("--output-dir", to.output_dir);

    std::string default_tag;
    auto* defaults = app.add_subcommand("defaults", "Print the default campaign of a tag");
    defaults->add_option("tag", default_tag)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (eval->parsed()) return run_eval(ev);
        if (verify->parsed()) return run_verify(vo);
        if (trend->parsed()) return run_trend(to);
        if (defaults->parsed()) return run_defaults(default_tag);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}
