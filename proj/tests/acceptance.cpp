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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include <qpg/game.hpp>
#include <qpg/solver.hpp>
#include <qpg/universal_tree.hpp>
#include <qpg/width_formulas.hpp>

#include "cli_runner.hpp"

using namespace qpg;

namespace {

struct Outcome
{
    bool pass = true;
    std::string detail;
};

int failures = 0;

template <typename F>
void
criterion(int id, const char* title, F&& body)
{
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    std::chrono::duration<double> secs = std::chrono::steady_clock::now() - start;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", secs.count());
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << id << ". " << title << " -- " << o.detail << " (" << buf << ")"
              << std::endl;
    if (!o.pass) failures++;
}

std::string
fmt(double x, const char* spec = "%.4g")
{
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, x);
    return buf;
}

// Seeded corpus shared by the solver criteria: n cycles through 1..max_n, d through ds.
GameGraph
corpus_game(std::uint64_t i, std::size_t min_n, std::size_t max_n, const std::vector<Priority>& ds, std::uint64_t salt)
{
    const std::size_t n = min_n + i % (max_n - min_n + 1);
    const Priority d = ds[(i / (max_n - min_n + 1)) % ds.size()];
    return random_game(n, d, {1, 3}, salt * 1'000'003 + i);
}

Outcome
formula_equivalence()
{
    std::size_t pairs = 0, bad = 0;
    for (std::uint64_t n = 1; n <= 256; n++) {
        for (std::uint64_t h = 1; h <= 12; h++) {
            pairs++;
            if (f_explicit(n, h) != f_rec(n, h)) bad++;
        }
    }
    return {bad == 0 && pairs == 3072, std::to_string(pairs) + " pairs, " + std::to_string(bad) + " mismatches"};
}

Outcome
construction_width()
{
    std::size_t pairs = 0, bad = 0;
    for (std::size_t n = 0; n <= 64; n++) {
        for (std::size_t h = 0; h <= 6; h++) {
            pairs++;
            if (BigInt(leaf_count(construct(n, h))) != f_rec(n, h)) bad++;
        }
    }
    return {bad == 0, std::to_string(pairs) + " trees, " + std::to_string(bad) + " width mismatches"};
}

Outcome
universality()
{
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 5; n++) {
        for (std::size_t h = 0; h <= 3; h++) {
            auto rep = check_universal(construct(n, h), n);
            checked += rep.trees_checked;
            if (!rep.universal) {
                return {false, "construct(" + std::to_string(n) + "," + std::to_string(h) + ") misses "
                                   + to_string(*rep.counterexample)};
            }
        }
    }
    auto four = trees_of_width(2, 3);
    auto t = construct(3, 2);
    bool all_embed = true;
    for (const auto& s : four) all_embed = all_embed && embeds(s, t);
    bool ok = four.size() == 4 && all_embed && t.leaf_count() == 5;
    return {ok, std::to_string(checked) + " embeddings checked; height-2 width-3 trees: " + std::to_string(four.size())
                    + ", all embed into construct(3,2) of width " + std::to_string(t.leaf_count())};
}

Outcome
theorem_bounds()
{
    std::size_t bin_bad = 0, exp_bad = 0;
    double tightest = 1e300;
    for (std::uint64_t n = 1; n <= 256; n++) {
        for (std::uint64_t h = 1; h <= 12; h++) {
            BigInt f = f_explicit(n, h);
            if (f > bound_binomial(n, h)) bin_bad++;
            if (n >= 2) {
                double exact_down = to_double_down(f);
                double b = bound_exponential(n, h);
                if (!(exact_down <= b)) exp_bad++;
                tightest = std::min(tightest, b / exact_down);
            }
        }
    }
    return {bin_bad == 0 && exp_bad == 0, "binomial violations " + std::to_string(bin_bad) + ", exponential violations "
                                              + std::to_string(exp_bad) + ", smallest bound/f " + fmt(tightest)};
}

Outcome
old_vs_new_gap()
{
    auto r = cli::run("widths --n 5 --h 9");
    if (r.code != 0) return {false, "widths subcommand failed: " + r.out};
    std::istringstream in(r.out);
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    std::vector<std::string> cells;
    std::stringstream rs(row);
    for (std::string c; std::getline(rs, c, ',');) cells.push_back(c);
    if (header != width_csv_header || cells.size() != 8) return {false, "unexpected CSV: " + r.out};
    const bool exact = cells[3] == "225" && cells[4] == "1320";
    const double quotient = std::stod(cells[4]) / std::stod(cells[3]);

    std::size_t bad = 0;
    const std::uint64_t n = 100;
    const unsigned K = ceil_log2(n), L = floor_log2(n);
    for (std::uint64_t h = 2; h <= 256; h++) {
        BigInt old_c = binomial(h - 1 + K, K);
        BigInt new_c = binomial(h - 1 + L, L);
        // old_c / new_c == (h-1+K)/K
        if (old_c * K != new_c * (h - 1 + K)) bad++;
    }
    const bool ok = exact && fmt(quotient, "%.2f") == "5.87" && bad == 0;
    return {ok, "CSV old=" + cells[4] + " binomial=" + cells[3] + " quotient " + fmt(quotient, "%.4f")
                    + "; n=100 quotient identity failures over h in [2,256]: " + std::to_string(bad)};
}

Outcome
solver_correctness()
{
    std::size_t lifting_bad = 0, brute_bad = 0, brute_games = 0;
    for (std::uint64_t i = 0; i < 10000; i++) {
        auto g = corpus_game(i, 1, 12, {2, 4, 6}, 1);
        if (!(solve(g).regions == zielonka(g))) lifting_bad++;
    }
    for (std::uint64_t i = 0; i < 500; i++) {
        auto g = corpus_game(i, 1, 6, {2, 4, 6}, 2);
        brute_games++;
        if (!(brute_force_solve(g) == zielonka(g))) brute_bad++;
    }
    return {lifting_bad == 0 && brute_bad == 0,
            "lifting vs zielonka: 10000 games, " + std::to_string(lifting_bad) + " disagreements; zielonka vs brute force: "
                + std::to_string(brute_games) + " games, " + std::to_string(brute_bad) + " disagreements"};
}

Outcome
half_size_tree_suffices()
{
    std::size_t bad = 0, ratio_bad = 0;
    double min_ratio = 1e300, sum_ratio = 0;
    for (std::uint64_t i = 0; i < 2000; i++) {
        auto g = corpus_game(i, 2, 12, {2, 4, 6, 8}, 3);
        auto small = solve(g);
        SolveOptions full_opts;
        full_opts.universality = g.vertex_count();
        auto full = solve(g, full_opts);
        if (!(small.regions == full.regions)) bad++;
        const double ratio = static_cast<double>(full.stats.tree_width) / static_cast<double>(small.stats.tree_width);
        min_ratio = std::min(min_ratio, ratio);
        sum_ratio += ratio;
        if (ratio < 1.0) ratio_bad++;
        if (g.max_priority() >= 4 && small.stats.eta < g.vertex_count() && !(ratio > 1.0)) ratio_bad++;
    }
    return {bad == 0 && ratio_bad == 0, "2000 games (n in [2,12]), region mismatches " + std::to_string(bad)
                                            + ", width ratio violations " + std::to_string(ratio_bad) + ", min ratio "
                                            + fmt(min_ratio) + ", mean ratio " + fmt(sum_ratio / 2000)};
}

Outcome
lifting_discipline()
{
    std::size_t monotone_bad = 0, budget_bad = 0, order_bad = 0;
    for (std::uint64_t i = 0; i < 200; i++) {
        auto g = corpus_game(i, 2, 12, {2, 4, 6, 8}, 4);
        std::vector<Measure> finals;
        for (auto order : {WorklistOrder::Fifo, WorklistOrder::Lifo, WorklistOrder::Random}) {
            SolveOptions opts;
            opts.order = order;
            opts.seed = i;
            opts.on_change = [&](Vertex, const MeasureValue& before, const MeasureValue& after) {
                if (!(before < after)) monotone_bad++;
            };
            auto res = solve(g, opts);
            if (res.stats.value_changes > g.vertex_count() * (res.stats.tree_width + 1)) budget_bad++;
            finals.push_back(std::move(res.measure));
        }
        if (finals[0].values != finals[1].values || finals[0].values != finals[2].values) order_bad++;
    }
    return {monotone_bad == 0 && budget_bad == 0 && order_bad == 0,
            "200 games x 3 orders: monotonicity violations " + std::to_string(monotone_bad) + ", lift budget violations "
                + std::to_string(budget_bad) + ", order-dependent fixpoints " + std::to_string(order_bad)};
}

Outcome
scaling_trend()
{
    const std::size_t n = 200;
    const std::size_t games = 20;
    std::vector<double> log_width, log_lifts;
    std::string detail;
    for (Priority d : {4, 8, 16}) {
        double width = 0, lifts = 0;
        for (std::uint64_t i = 0; i < games; i++) {
            auto g = random_game(n, d, {2, 4}, 9000 + i);
            auto res = solve(g);
            width += static_cast<double>(res.stats.tree_width);
            lifts += static_cast<double>(res.stats.lifts);
        }
        width /= games;
        lifts /= games;
        log_width.push_back(std::log(width));
        log_lifts.push_back(std::log(lifts));
        detail += "d=" + std::to_string(d) + ": width " + fmt(width) + " lifts " + fmt(lifts) + "; ";
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < 3; i++) {
        mx += log_width[i] / 3;
        my += log_lifts[i] / 3;
    }
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < 3; i++) {
        sxy += (log_width[i] - mx) * (log_lifts[i] - my);
        sxx += (log_width[i] - mx) * (log_width[i] - mx);
    }
    const double slope = sxy / sxx;
    return {slope <= 1.2, detail + "log-log slope " + fmt(slope)};
}

} // namespace

int
main()
{
    criterion(1, "formula equivalence f_explicit = f_rec", formula_equivalence);
    criterion(2, "construction width = f_rec", construction_width);
    criterion(3, "exhaustive universality and the four trees of height 2, width 3", universality);
    criterion(4, "width bounds hold on the grid", theorem_bounds);
    criterion(5, "old-vs-new gap", old_vs_new_gap);
    criterion(6, "solver correctness against oracles", solver_correctness);
    criterion(7, "half-size universal tree gives the same regions", half_size_tree_suffices);
    criterion(8, "lifting discipline", lifting_discipline);
    criterion(9, "lift counts scale at most linearly in tree width", scaling_trend);
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    std::filesystem::remove_all(cli::scratch_dir());
    return failures == 0 ? 0 : 1;
}
