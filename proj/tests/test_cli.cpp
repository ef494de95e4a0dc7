// Copyright 2026 The dmpl Authors
// SPDX-License-Identifier: Apache-2.0

// Runs the command-line tool as a subprocess; DMPL_CLI is its path.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(DMPL_CLI) + " " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe) != nullptr) r.out += buf.data();
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / ("dmpl_cli_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

int lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("eval prints exact values")
{
    CHECK(run("eval li-tilde --index 1 --x 1 --n 2").out == "1\n");
    CHECK(run("eval iterated --index 2 --x 1 --n 2").out == "-1\n");
    CHECK(run("eval li-sh --index 2 --z 1 --n 3").out == "5/4\n");
    CHECK(run("eval word-I --word 1^1 --n 3").out == "-3/2\n");
    CHECK(run("eval connected --index 1 --l 1 --x -1,2 --n 4").code == 0);
    CHECK(run("eval iterated --index 1 --x -1 --n 2 --inclusive").out == "7/12\n");
}

TEST_CASE("exit codes")
{
    CHECK(run("eval li-tilde --index 1 --x 1 --n 2").code == 0);
    const Run parse = run("eval li-tilde --index 1,x --x 1 --n 2");
    CHECK(parse.code == 2);
    CHECK(parse.out.find("parse") != std::string::npos);
    const Run pole = run("eval iterated --index 1 --x 1/3 --n 3");
    CHECK(pole.code == 3);
    CHECK(pole.out.find("n = 1") != std::string::npos);
    CHECK(run("eval li-tilde --index 1 --n 2").code == 2);
    CHECK(run("eval nonsense --n 2").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("--help").code == 0);
    CHECK(run("verify nope").code == 2);
    CHECK(run("eval li-tilde --index 1,1 --x 1 --n 2").code == 2);
}

TEST_CASE("verify writes a summary and a deterministic report")
{
    const fs::path dir = scratch("verify");
    const std::string args = "verify diff --case 2b --n-max 6 --seed 4 --output-dir " + dir.string();
    const Run a = run(args);
    CHECK(a.code == 0);
    CHECK(a.out.find("0 failed") != std::string::npos);
    const std::string first = slurp(dir / "verify_diff.json");
    REQUIRE_FALSE(first.empty());
    CHECK(run(args).code == 0);
    CHECK(slurp(dir / "verify_diff.json") == first);
    const auto j = nlohmann::json::parse(first);
    CHECK(j["campaign"]["case"] == "2b");
    for (const auto& c : j["cases"]) CHECK(c["id"].get<std::string>().rfind("diff 2b", 0) == 0);
}

TEST_CASE("verify honours the output directory variable")
{
    const fs::path dir = scratch("env");
    const Run r = run("verify transport --max-weight 2 --n-max 4");  // default dir is the working dir
    CHECK(r.code == 0);
    fs::remove(fs::path("verify_transport.json"));
    const std::string cmd = "env DMPL_OUTPUT_DIR=" + dir.string() + " " + std::string(DMPL_CLI) +
                            " verify transport --max-weight 2 --n-max 4 > /dev/null";
    CHECK(std::system(cmd.c_str()) == 0);
    CHECK(fs::exists(dir / "verify_transport.json"));
}

TEST_CASE("campaign files")
{
    const fs::path dir = scratch("file");
    {
        std::ofstream f(dir / "c.json");
        f << R"({"seed": 5, "output_dir": ")" << (dir / "out").string() << R"(",
                 "campaigns": [{"tag": "transport", "max_weight": 2, "n_max": 4},
                               {"tag": "misc", "max_weight": 2, "n_max": 5}]})";
    }
    const Run r = run("verify --campaign-file " + (dir / "c.json").string());
    CHECK(r.code == 0);
    CHECK(fs::exists(dir / "out" / "verify_0_transport.json"));
    CHECK(fs::exists(dir / "out" / "verify_1_misc.json"));
    CHECK(nlohmann::json::parse(slurp(dir / "out" / "verify_1_misc.json"))["seed"] == 5);
    {
        std::ofstream f(dir / "bad.json");
        f << R"({"campaigns": [], "extra": 1})";
    }
    CHECK(run("verify --campaign-file " + (dir / "bad.json").string()).code == 2);
    {
        std::ofstream f(dir / "bad2.json");
        f << R"({"campaigns": [{"tag": "main", "wat": 1}]})";
    }
    CHECK(run("verify --campaign-file " + (dir / "bad2.json").string()).code == 2);
    CHECK(run("verify").code == 2);
}

TEST_CASE("trend writes CSV and a JSON sidecar")
{
    const fs::path dir = scratch("trend");
    const Run d = run("trend duality --index 1 --z -1 --n-list 20,40,80 --csv " + (dir / "d.csv").string());
    CHECK(d.code == 0);
    const std::string csv = slurp(dir / "d.csv");
    CHECK(csv.rfind("N,lhs,rhs,abs_error,scaled_error\n", 0) == 0);
    CHECK(lines(csv) == 4);
    CHECK(nlohmann::json::parse(slurp(dir / "d.json"))["rows"].size() == 3);

    const Run a = run("trend adsr --w1 \"-1^2\" --w0 \"-1^2\" --n-list 20,40,80 --output-dir " + dir.string());
    CHECK((a.code == 0 || a.code == 1));
    CHECK(lines(slurp(dir / "trend_adsr.csv")) == 4);

    const Run p = run("trend prop25 --index 1 --z -1 --n-list 20,40,80,160 --output-dir " + dir.string());
    CHECK(p.code == 0);
    CHECK(lines(slurp(dir / "trend_prop25.csv")) == 5);

    CHECK(run("trend prop25 --index 1 --z -1 --n-list 40,20").code == 2);
    CHECK(run("trend prop25 --index 1 --z -1 --n-list 20,x").code == 2);
    CHECK(run("trend sideways --n-list 20,40").code == 2);
}
