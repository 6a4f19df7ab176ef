/*
 * Copyright 2026 The qpg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Exit codes: 0 success, 1 I/O error, 2 bad input (parse error, bad flags,
// guard violation), 3 universality check failed.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include <qpg/game.hpp>
#include <qpg/pgsolver.hpp>
#include <qpg/solver.hpp>
#include <qpg/universal_tree.hpp>
#include <qpg/width_formulas.hpp>

using namespace qpg;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_io = 1;
constexpr int exit_input = 2;
constexpr int exit_not_universal = 3;

struct InputError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

std::uint64_t
parse_uint(const std::string& s)
{
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &used);
    } catch (const std::exception&) {
        throw InputError("not a number: '" + s + "'");
    }
    if (used != s.size() || s.empty() || s[0] == '-') throw InputError("not a number: '" + s + "'");
    return v;
}

// "3", "2:256" (inclusive range); items joined with ','
std::vector<std::uint64_t>
parse_list(const std::vector<std::string>& items)
{
    std::vector<std::uint64_t> out;
    for (const auto& item : items) {
        auto colon = item.find(':');
        if (colon == std::string::npos) {
            out.push_back(parse_uint(item));
            continue;
        }
        auto lo = parse_uint(item.substr(0, colon));
        auto hi = parse_uint(item.substr(colon + 1));
        if (lo > hi) throw InputError("empty range '" + item + "'");
        for (auto v = lo; v <= hi; v++) out.push_back(v);
    }
    if (out.empty()) throw InputError("empty list");
    return out;
}

DegreeRange
parse_degree(const std::string& s)
{
    auto vals = parse_list({s});
    if (vals.front() < 1) throw InputError("out-degree must be at least 1");
    return {vals.front(), vals.back()};
}

bool
read_file(const std::string& path, std::string& out)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return !in.bad();
}

// Writes to stdout when path is empty or "-".
int
write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return exit_ok;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text) || !out.flush()) {
        std::cerr << "error: cannot write " << path << "\n";
        return exit_io;
    }
    return exit_ok;
}

const char*
order_name(WorklistOrder o)
{
    switch (o) {
    case WorklistOrder::Fifo: return "fifo";
    case WorklistOrder::Lifo: return "lifo";
    case WorklistOrder::Random: return "random";
    }
    return "?";
}

struct SolveArgs
{
    std::string path;
    bool verbose = false;
    bool oracle = false;
    std::string order = "fifo";
    std::uint64_t seed = 0;
};

int
cmd_solve(const SolveArgs& a)
{
    std::string text;
    if (!read_file(a.path, text)) {
        std::cerr << "error: cannot read " << a.path << "\n";
        return exit_io;
    }
    ParsedGame parsed = [&] {
        try {
            return parse_pgsolver_with_ids(text);
        } catch (const ParseError& e) {
            throw InputError(a.path + ": " + e.what());
        } catch (const std::invalid_argument& e) {
            throw InputError(a.path + ": " + e.what());
        }
    }();

    if (a.oracle) {
        std::cout << to_text(zielonka(parsed.game), parsed.ids);
        return exit_ok;
    }

    SolveOptions opts;
    if (a.order == "fifo") opts.order = WorklistOrder::Fifo;
    else if (a.order == "lifo") opts.order = WorklistOrder::Lifo;
    else if (a.order == "random") opts.order = WorklistOrder::Random;
    else throw InputError("unknown worklist order '" + a.order + "'");
    opts.seed = a.seed;

    auto res = solve(parsed.game, opts);
    std::cout << to_text(res.regions, parsed.ids);
    if (a.verbose) {
        const auto& s = res.stats;
        std::cout << "measured: " << to_string(s.measured) << "\n"
                  << "eta: " << s.eta << "\n"
                  << "tree width: " << s.tree_width << "\n"
                  << "tree height: " << s.tree_height << "\n"
                  << "lifts: " << s.lifts << "\n"
                  << "value changes: " << s.value_changes << "\n"
                  << "order: " << order_name(opts.order) << "\n";
    }
    return exit_ok;
}

struct WidthsArgs
{
    std::vector<std::string> n;
    std::vector<std::string> h;
    std::string out;
};

int
cmd_widths(const WidthsArgs& a)
{
    auto ns = parse_list(a.n);
    auto hs = parse_list(a.h);
    for (auto v : ns) {
        if (v == 0) throw InputError("n values must be positive");
    }
    for (auto v : hs) {
        if (v == 0) throw InputError("h values must be positive");
    }
    std::ostringstream csv;
    write_csv(csv, width_report(ns, hs));
    return write_output(a.out, csv.str());
}

struct VerifyArgs
{
    std::uint64_t n = 0;
    std::uint64_t h = 0;
    bool force = false;
    bool drop_last_leaf = false;
};

int
cmd_verify_universal(const VerifyArgs& a)
{
    if (!a.force && (a.n > 6 || a.h > 3)) {
        std::cerr << "error: exhaustive verification is limited to n <= 6 and h <= 3 "
                     "(the number of trees grows as h^(n-1)); pass --force to override\n";
        return exit_input;
    }
    if (a.n == 0) throw InputError("n must be positive");
    OrderedTree t = construct(a.n, a.h);
    if (a.drop_last_leaf) t = t.without_last_leaf();

    auto rep = check_universal(t, a.n);
    if (rep.universal) {
        std::cout << "UNIVERSAL (width=" << t.leaf_count() << ", trees checked=" << rep.trees_checked << ")\n";
        return exit_ok;
    }
    std::cout << "NOT UNIVERSAL (width=" << t.leaf_count() << ", trees checked=" << rep.trees_checked << ")\n"
              << "counterexample: " << to_string(*rep.counterexample) << "\n";
    return exit_not_universal;
}

struct GenArgs
{
    std::uint64_t n = 0;
    std::uint64_t d = 0;
    std::string degree = "1:3";
    std::uint64_t seed = 0;
    std::string out;
};

int
cmd_gen(const GenArgs& a)
{
    if (a.n == 0) throw InputError("n must be positive");
    if (a.d < 2 || a.d % 2) throw InputError("d must be even and at least 2");
    auto g = random_game(a.n, static_cast<Priority>(a.d), parse_degree(a.degree), a.seed);
    return write_output(a.out, serialize_pgsolver(g));
}

struct BenchArgs
{
    std::uint64_t n = 200;
    std::vector<std::string> d{"4", "8", "16"};
    std::uint64_t games = 10;
    std::string degree = "2:4";
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    std::string out;
};

int
cmd_bench(const BenchArgs& a)
{
    auto ds = parse_list(a.d);
    for (auto d : ds) {
        if (d < 2 || d % 2) throw InputError("d must be even and at least 2");
    }
    if (a.n == 0 || a.games == 0) throw InputError("n and games must be positive");
    const auto degree = parse_degree(a.degree);

    struct Job
    {
        std::uint64_t d;
        std::uint64_t index;
        std::string row;
    };
    std::vector<Job> jobs;
    for (auto d : ds) {
        for (std::uint64_t i = 0; i < a.games; i++) jobs.push_back({d, i, {}});
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t j; (j = next++) < jobs.size();) {
            auto& job = jobs[j];
            auto g = random_game(a.n, static_cast<Priority>(job.d), degree, a.seed + job.index);
            auto start = std::chrono::steady_clock::now();
            auto res = solve(g);
            std::chrono::duration<double> secs = std::chrono::steady_clock::now() - start;
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.6g", secs.count());
            std::ostringstream row;
            row << a.n << ',' << g.edge_count() << ',' << job.d << ',' << job.index << ',' << (a.seed + job.index)
                << ',' << to_string(res.stats.measured) << ',' << res.stats.eta << ',' << res.stats.tree_width << ','
                << res.stats.lifts << ',' << res.stats.value_changes << ',' << buf << '\n';
            job.row = row.str();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < std::max(1u, a.jobs); t++) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::string csv = "n,m,d,game,seed,measured,eta,tree_width,lifts,value_changes,seconds\n";
    for (const auto& job : jobs) csv += job.row;
    return write_output(a.out, csv);
}

} // namespace

int
main(int argc, char** argv)
{
    CLI::App app{"Universal trees and progress-measure lifting for parity games"};
    app.require_subcommand(1);
    // --h is the tree height, so help is long-form only
    app.set_help_flag("--help", "Print this help message and exit");

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Solve a game in PGSolver format");
    solve_cmd->add_option("path", solve_args.path, "Game file")->required();
    solve_cmd->add_flag("-v,--verbose", solve_args.verbose, "Print measured player, eta, tree width and lift count");
    solve_cmd->add_flag("--oracle", solve_args.oracle, "Solve with the recursive (Zielonka) solver instead");
    solve_cmd->add_option("--order", solve_args.order, "Worklist order: fifo, lifo or random");
    solve_cmd->add_option("--seed", solve_args.seed, "Seed for the random worklist order");

    WidthsArgs widths_args;
    auto* widths_cmd = app.add_subcommand("widths", "Tabulate universal-tree widths and bounds as CSV");
    widths_cmd->add_option("--n", widths_args.n, "n values, e.g. 3,5 or 2:256")->required()->delimiter(',');
    widths_cmd->add_option("--h", widths_args.h, "h values, e.g. 2,9 or 1:12")->required()->delimiter(',');
    widths_cmd->add_option("-o,--out", widths_args.out, "Output CSV path (default stdout)");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify-universal", "Exhaustively check that construct(n,h) is n-universal");
    verify_cmd->add_option("--n", verify_args.n, "Universality parameter")->required();
    verify_cmd->add_option("--h", verify_args.h, "Height")->required();
    verify_cmd->add_flag("--force", verify_args.force, "Lift the n <= 6, h <= 3 guard");
    verify_cmd->add_flag("--drop-last-leaf", verify_args.drop_last_leaf, "Remove one leaf before checking (test hook)")
        ->group("");

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen", "Write a seeded random game in PGSolver format");
    gen_cmd->add_option("--n", gen_args.n, "Number of vertices")->required();
    gen_cmd->add_option("--d", gen_args.d, "Even priority bound")->required();
    gen_cmd->add_option("--degree", gen_args.degree, "Out-degree range lo:hi");
    gen_cmd->add_option("--seed", gen_args.seed, "PRNG seed");
    gen_cmd->add_option("-o,--out", gen_args.out, "Output path (default stdout)");

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "Solve a seeded random corpus and record lift counts as CSV");
    bench_cmd->add_option("--n", bench_args.n, "Vertices per game");
    bench_cmd->add_option("--d", bench_args.d, "Priority bounds, e.g. 4,8,16")->delimiter(',');
    bench_cmd->add_option("--games", bench_args.games, "Games per priority bound");
    bench_cmd->add_option("--degree", bench_args.degree, "Out-degree range lo:hi");
    bench_cmd->add_option("--seed", bench_args.seed, "Seed of the first game");
    bench_cmd->add_option("-j,--jobs", bench_args.jobs, "Games solved concurrently");
    bench_cmd->add_option("-o,--out", bench_args.out, "Output CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (*solve_cmd) return cmd_solve(solve_args);
        if (*widths_cmd) return cmd_widths(widths_args);
        if (*verify_cmd) return cmd_verify_universal(verify_args);
        if (*gen_cmd) return cmd_gen(gen_args);
        if (*bench_cmd) return cmd_bench(bench_args);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}
