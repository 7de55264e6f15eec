#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "ctlcs/core.hpp"
#include "ctlcs/parse.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CTLCS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("parse_sequence grammar") {
    using ctlcs::IntSeq;
    CHECK(ctlcs::parse_sequence("12,5,3") == IntSeq{12, 5, 3});
    CHECK(ctlcs::parse_sequence("  -4 7\t9 ") == IntSeq{-4, 7, 9});
    CHECK(ctlcs::parse_sequence("0101") == IntSeq{0, 1, 0, 1});
    CHECK(ctlcs::parse_sequence("0101", /*force_ints=*/true) == IntSeq{101});
    CHECK(ctlcs::parse_sequence("0,1,0,1") == IntSeq{0, 1, 0, 1});
    CHECK(ctlcs::parse_sequence("") == IntSeq{});
    CHECK(ctlcs::parse_sequence("10") == IntSeq{1, 0});
    CHECK(ctlcs::parse_sequence("7") == IntSeq{7});
    CHECK_THROWS_AS(ctlcs::parse_sequence("1,x,3"), ctlcs::ParseError);
    CHECK_THROWS_AS(ctlcs::parse_sequence("1 2z"), ctlcs::ParseError);
}

TEST_CASE("lcs subcommand") {
    auto r = run("lcs \"12,5,3,14,2,9,4,11\" \"3,2,5,9,7,12,8,1\" --algo general");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "length: 5\n");

    auto j = run("lcs 0101 0011 --algo auto --witness --json");
    CHECK(j.exit_code == 0);
    json doc = json::parse(j.out);
    CHECK(doc["length"] == 3);
    CHECK(doc["algorithm"] == "binary");
    CHECK(doc["s_indices"].size() == 3);
    CHECK(doc["t_indices"].size() == 3);
    CHECK(doc["pattern"].size() == 3);
    CHECK(doc["elapsed_ms"].is_number());
    // indices are 1-based and the witness CT-matches
    ctlcs::IntSeq s{0, 1, 0, 1}, t{0, 0, 1, 1};
    std::vector<int> si = doc["s_indices"], ti = doc["t_indices"];
    CHECK(ctlcs::ct_match(ctlcs::subsequence(s, si), ctlcs::subsequence(t, ti)));
    ctlcs::IntSeq pat = doc["pattern"];
    CHECK(pat == ctlcs::subsequence(s, si));

    CHECK(run("lcs \"\" \"\"").out == "length: 0\n");
}

TEST_CASE("lcs exit codes") {
    CHECK(run("lcs \"1,2,x\" \"1,2\"").exit_code == 2);
    CHECK(run("lcs \"3,4,5\" \"1,2,3\" --algo binary").exit_code == 2);
    CHECK(run("lcs \"1,2,3,4,5\" \"1,2,3\" --algo general --max-n 4").exit_code == 3);
    CHECK(run("lcs \"1,2,3,4,5\" \"1,2,3\" --algo brute").exit_code == 0);
}

TEST_CASE("CTLCS_MAX_N environment override") {
    auto r = run("lcs \"1,2,3,4,5\" \"1,2,3\" --algo general");
    CHECK(r.exit_code == 0);
    std::string cmd = "CTLCS_MAX_N=4 " CTLCS_CLI_PATH " lcs \"1,2,3,4,5\" \"1,2,3\" --algo general";
    int status = std::system((cmd + " >/dev/null 2>&1").c_str());
    CHECK(WEXITSTATUS(status) == 3);
}

TEST_CASE("match / pd / tree subcommands") {
    auto m = run("match \"1,1,2\" \"1,1,1\"");
    CHECK(m.exit_code == 0);
    CHECK(m.out == "true\n");
    auto m2 = run("match \"1,2\" \"2,1\"");
    CHECK(m2.exit_code == 1);
    CHECK(m2.out == "false\n");

    CHECK(run("pd \"1,1,1,1,1\"").out == "0 1 1 1 1\n");

    CHECK(run("tree \"\" --format dot").out == "digraph ct {\n}\n");
    json tj = json::parse(run("tree \"2,1,3\" --format json").out);
    CHECK(tj["n"] == 3);
    CHECK(tj["root"] == 2);
    CHECK(tj["left"] == json::array({0, 1, 0}));
    CHECK(tj["right"] == json::array({0, 3, 0}));
}

TEST_CASE("file input") {
    std::string path = "/tmp/ctlcs_cli_test_input.txt";
    {
        FILE* f = fopen(path.c_str(), "w");
        REQUIRE(f);
        fputs("12,5,3,14,2,9,4,11\n3,2,5,9,7,12,8,1\n", f);
        fclose(f);
    }
    auto r = run("lcs --file " + path + " --algo general");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "length: 5\n");
    std::remove(path.c_str());
}

TEST_CASE("auto agrees with general on binary inputs") {
    std::mt19937_64 rng(101);
    for (int rep = 0; rep < 10; ++rep) {
        int n = 1 + static_cast<int>(rng() % 25);
        int m = 1 + static_cast<int>(rng() % 25);
        std::string a, b;
        for (int i = 0; i < n; ++i) a += char('0' + rng() % 2);
        for (int i = 0; i < m; ++i) b += char('0' + rng() % 2);
        json ja = json::parse(run("lcs " + a + " " + b + " --algo auto --json").out);
        json jg = json::parse(run("lcs " + a + " " + b + " --algo general --json").out);
        CHECK(ja["length"] == jg["length"]);
    }
}

TEST_CASE("bench") {
    auto r = run("bench --algo binary --n-list 100,200 --seed 7 --trials 2");
    CHECK(r.exit_code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 2);

    auto z = run("bench --algo binary --n-list 100 --trials 0");
    CHECK(z.exit_code == 0);
    CHECK(z.out.empty());

    auto j = run("bench --algo general --n-list 8,12 --seed 7 --trials 2 --json");
    CHECK(j.exit_code == 0);
    std::istringstream is(j.out);
    std::string line;
    int lines = 0;
    while (std::getline(is, line)) {
        json doc = json::parse(line);
        CHECK(doc["algorithm"] == "general");
        CHECK(doc["median_ms"].is_number());
        CHECK(doc["mem_bytes"].is_number());
        ++lines;
    }
    CHECK(lines == 2);

    CHECK(run("bench --algo binary --alphabet 5 --n-list 10 --trials 1").exit_code == 2);
    CHECK(run("bench --algo nosuch --n-list 10 --trials 1").exit_code == 2);
}

TEST_CASE("bench growth ratios") {
    auto medians = [&](const std::string& args) {
        std::vector<double> ms;
        std::istringstream is(run(args).out);
        std::string line;
        while (std::getline(is, line)) ms.push_back(json::parse(line)["median_ms"].get<double>());
        return ms;
    };

    // quadratic path: time roughly quadruples per doubling, slack factor 2
    auto b = medians("bench --algo binary --n-list 1000,2000,4000 --seed 7 --trials 5 --json");
    REQUIRE(b.size() == 3);
    for (int i = 0; i + 1 < 3; ++i) {
        double ratio = b[i + 1] / b[i];
        CHECK(ratio >= 2.0);
        CHECK(ratio <= 8.0);
    }

    // sextic path: n 8 -> 16 bracketed by [2^4, 2^8], constants dominate small n
    auto g = medians("bench --algo general --n-list 8,16 --seed 7 --trials 5 --json");
    REQUIRE(g.size() == 2);
    double ratio = g[1] / g[0];
    CHECK(ratio >= 16.0);
    CHECK(ratio <= 256.0);
}
