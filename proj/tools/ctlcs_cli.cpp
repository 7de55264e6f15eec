#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ctlcs/binary.hpp"
#include "ctlcs/core.hpp"
#include "ctlcs/lcs_index.hpp"
#include "ctlcs/general.hpp"
#include "ctlcs/oracle.hpp"
#include "ctlcs/parse.hpp"

namespace {

using json = nlohmann::json;
using ctlcs::IntSeq;

constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

struct LcsOptions {
    std::string s_text, t_text, file, algo = "auto";
    bool witness = false, as_json = false, force_ints = false;
    int max_n = 0;  // 0 = default / env
};

int resolve_general_cap(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("CTLCS_MAX_N")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return ctlcs::kDefaultGeneralCap;
}

void read_pair_from_file(const std::string& path, std::string& a, std::string& b) {
    if (path == "-") {
        std::getline(std::cin, a);
        std::getline(std::cin, b);
        return;
    }
    std::ifstream in(path);
    if (!in) throw ctlcs::ParseError("cannot open file: " + path);
    std::getline(in, a);
    std::getline(in, b);
}

struct LcsOutcome {
    std::string algorithm;
    ctlcs::CtLcsWitness witness;
    double ms = 0;
    std::size_t mem_bytes = 0;
};

LcsOutcome run_lcs(const IntSeq& s, const IntSeq& t, const std::string& algo_flag, int max_n) {
    std::string algo = algo_flag;
    if (algo == "auto")
        algo = (ctlcs::is_binary(s) && ctlcs::is_binary(t)) ? "binary" : "general";

    LcsOutcome out;
    out.algorithm = algo;
    auto t0 = std::chrono::steady_clock::now();
    if (algo == "general") {
        auto [w, tables] = ctlcs::ct_lcs_general(s, t, max_n);
        out.witness = std::move(w);
        out.mem_bytes = tables.memory_bytes();
    } else if (algo == "binary") {
        if (!ctlcs::is_binary(s) || !ctlcs::is_binary(t))
            throw std::invalid_argument("--algo binary requires 0/1 inputs");
        auto res = ctlcs::ct_lcs_binary(s, t);
        out.witness = std::move(res.witness);
        // boundary-line storage of the internal block LCS index
        const std::size_t n = s.size(), m = t.size();
        const std::size_t b = ctlcs::BlockLcsIndex::default_block(static_cast<int>(std::max(n, m)));
        out.mem_bytes = ((n / b + 1) * (m + 1) + (m / b + 1) * (n + 1)) * sizeof(int);
    } else if (algo == "brute") {
        out.witness = ctlcs::oracle::brute_force_ct_lcs(s, t);
    } else {
        throw std::invalid_argument("unknown algorithm: " + algo);
    }
    out.ms = elapsed_ms(t0);
    return out;
}

void print_lcs_report(const LcsOutcome& out, bool want_witness, bool as_json) {
    if (as_json) {
        json j;
        j["length"] = out.witness.length();
        j["s_indices"] = out.witness.s_indices;
        j["t_indices"] = out.witness.t_indices;
        j["pattern"] = out.witness.pattern;
        j["algorithm"] = out.algorithm;
        j["elapsed_ms"] = out.ms;
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << "length: " << out.witness.length() << "\n";
    if (want_witness) {
        auto fmt_idx = [](const std::vector<int>& v) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i)
                s += (i ? " " : "") + std::to_string(v[i]);
            return s;
        };
        std::cout << "s_indices: " << fmt_idx(out.witness.s_indices) << "\n"
                  << "t_indices: " << fmt_idx(out.witness.t_indices) << "\n"
                  << "pattern: " << ctlcs::format_sequence(out.witness.pattern) << "\n";
    }
}

IntSeq random_sequence(std::mt19937_64& rng, int n, int alphabet) {
    std::uniform_int_distribution<int> dist(0, alphabet - 1);
    IntSeq s(n);
    for (auto& v : s) v = dist(rng);
    return s;
}

int run_bench(const std::string& algo, const std::vector<int>& n_list, int alphabet,
              std::uint64_t seed, int trials, bool as_json, int max_n) {
    if (trials < 0 || alphabet < 1) throw std::invalid_argument("invalid bench flags");
    if (trials == 0) return 0;
    if (algo != "general" && algo != "binary" && algo != "brute")
        throw std::invalid_argument("bench --algo must be general, binary, or brute");
    if (algo == "binary" && alphabet != 2)
        throw std::invalid_argument("binary bench requires --alphabet 2");

    for (int n : n_list) {
        std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(n) << 20));
        std::vector<double> times;
        std::size_t mem = 0;
        for (int trial = 0; trial < trials; ++trial) {
            IntSeq s = random_sequence(rng, n, alphabet);
            IntSeq t = random_sequence(rng, n, alphabet);
            auto out = run_lcs(s, t, algo, std::max(max_n, n));
            times.push_back(out.ms);
            mem = std::max(mem, out.mem_bytes);
        }
        std::sort(times.begin(), times.end());
        double median = times[times.size() / 2];
        if (as_json) {
            json j{{"algorithm", algo}, {"n", n},      {"trials", trials},
                   {"median_ms", median}, {"mem_bytes", mem}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << algo << "," << n << "," << trials << "," << median << "," << mem
                      << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Longest common subsequence under Cartesian-tree matching"};
    app.require_subcommand(1);

    // lcs
    LcsOptions lcs_opts;
    auto* lcs_cmd = app.add_subcommand("lcs", "Compute the CT-LCS of two sequences");
    lcs_cmd->add_option("s", lcs_opts.s_text, "first sequence");
    lcs_cmd->add_option("t", lcs_opts.t_text, "second sequence");
    lcs_cmd->add_option("--file", lcs_opts.file, "read the two sequences from a file ('-' = stdin)");
    lcs_cmd->add_option("--algo", lcs_opts.algo, "general|binary|brute|auto")
        ->check(CLI::IsMember({"general", "binary", "brute", "auto"}));
    lcs_cmd->add_flag("--witness", lcs_opts.witness, "print matched indices and pattern");
    lcs_cmd->add_flag("--json", lcs_opts.as_json, "JSON output");
    lcs_cmd->add_flag("--ints", lcs_opts.force_ints, "never parse a 0/1 token as a binary string");
    lcs_cmd->add_option("--max-n", lcs_opts.max_n, "size cap for the general algorithm");

    // match
    std::string m_s, m_t;
    bool m_ints = false;
    auto* match_cmd = app.add_subcommand("match", "Test whether two sequences CT-match");
    match_cmd->add_option("s", m_s)->required();
    match_cmd->add_option("t", m_t)->required();
    match_cmd->add_flag("--ints", m_ints);

    // pd
    std::string pd_s;
    bool pd_ints = false;
    auto* pd_cmd = app.add_subcommand("pd", "Print the parent-distance representation");
    pd_cmd->add_option("s", pd_s)->required();
    pd_cmd->add_flag("--ints", pd_ints);

    // tree
    std::string tr_s, tr_fmt = "dot";
    bool tr_ints = false;
    auto* tree_cmd = app.add_subcommand("tree", "Emit the Cartesian tree");
    tree_cmd->add_option("s", tr_s);
    tree_cmd->add_option("--format", tr_fmt)->check(CLI::IsMember({"dot", "json"}));
    tree_cmd->add_flag("--ints", tr_ints);

    // bench
    std::string b_algo = "binary", b_nlist = "1000";
    int b_alpha = 2, b_trials = 3, b_maxn = 0;
    std::uint64_t b_seed = 1;
    bool b_json = false;
    auto* bench_cmd = app.add_subcommand("bench", "Benchmark on random instances");
    bench_cmd->add_option("--algo", b_algo);
    bench_cmd->add_option("--n-list", b_nlist, "comma-separated sizes");
    bench_cmd->add_option("--alphabet", b_alpha);
    bench_cmd->add_option("--seed", b_seed);
    bench_cmd->add_option("--trials", b_trials);
    bench_cmd->add_flag("--json", b_json);
    bench_cmd->add_option("--max-n", b_maxn);

    CLI11_PARSE(app, argc, argv);

    try {
        if (lcs_cmd->parsed()) {
            std::string a = lcs_opts.s_text, b = lcs_opts.t_text;
            if (!lcs_opts.file.empty()) read_pair_from_file(lcs_opts.file, a, b);
            IntSeq s = ctlcs::parse_sequence(a, lcs_opts.force_ints);
            IntSeq t = ctlcs::parse_sequence(b, lcs_opts.force_ints);
            auto out = run_lcs(s, t, lcs_opts.algo, resolve_general_cap(lcs_opts.max_n));
            print_lcs_report(out, lcs_opts.witness, lcs_opts.as_json);
            return 0;
        }
        if (match_cmd->parsed()) {
            bool ok = ctlcs::ct_match(ctlcs::parse_sequence(m_s, m_ints),
                                      ctlcs::parse_sequence(m_t, m_ints));
            std::cout << (ok ? "true" : "false") << "\n";
            return ok ? 0 : 1;
        }
        if (pd_cmd->parsed()) {
            auto pd = ctlcs::parent_distance(ctlcs::parse_sequence(pd_s, pd_ints));
            for (std::size_t i = 0; i < pd.size(); ++i)
                std::cout << (i ? " " : "") << pd[i];
            std::cout << "\n";
            return 0;
        }
        if (tree_cmd->parsed()) {
            auto ct = ctlcs::build_cartesian_tree(ctlcs::parse_sequence(tr_s, tr_ints));
            std::cout << (tr_fmt == "dot" ? ctlcs::tree_to_dot(ct) : ctlcs::tree_to_json(ct));
            if (tr_fmt == "json") std::cout << "\n";
            return 0;
        }
        if (bench_cmd->parsed()) {
            std::vector<int> sizes;
            for (auto v : ctlcs::parse_sequence(b_nlist, true)) sizes.push_back(static_cast<int>(v));
            return run_bench(b_algo, sizes, b_alpha, b_seed, b_trials, b_json,
                             resolve_general_cap(b_maxn));
        }
    } catch (const ctlcs::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return 0;
}
