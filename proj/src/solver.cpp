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

#include <qpg/solver.hpp>

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>

namespace qpg {

std::string
to_string(const MeasureValue& v)
{
    return v.is_top() ? "T" : to_string(v.node());
}

std::size_t
trunc_len(Priority p, Player measured, Priority d)
{
    if (p < 1 || p > d) throw std::out_of_range("trunc_len: priority outside 1..d");
    if (measured == Player::Even) {
        // odd priorities >= p
        return static_cast<std::size_t>((d - p + 1) / 2);
    }
    // even priorities >= p
    return static_cast<std::size_t>((d - p) / 2 + 1);
}

bool
edge_ok(const GameGraph& g, const Measure& mu, Vertex v, Vertex w)
{
    const auto& mv = mu.values[v];
    const auto& mw = mu.values[w];
    if (mv.is_top()) return true;
    if (mw.is_top()) return false;
    const Priority p = g.priority(v);
    const std::size_t k = trunc_len(p, mu.measured, mu.d);
    auto a = mv.node().prefix(k);
    auto b = mw.node().prefix(k);
    return needs_strict(p, mu.measured) ? a > b : a >= b;
}

bool
vertex_ok(const GameGraph& g, const Measure& mu, Vertex v)
{
    if (mu.values[v].is_top()) return true;
    auto succ = g.successors(v);
    auto good = [&](Vertex w) { return edge_ok(g, mu, v, w); };
    if (g.owner(v) == mu.measured) return std::ranges::any_of(succ, good);
    return std::ranges::all_of(succ, good);
}

MeasureValue
lift(const GameGraph& g, const Measure& mu, Vertex v)
{
    const Priority p = g.priority(v);
    const std::size_t k = trunc_len(p, mu.measured, mu.d);
    const bool strict = needs_strict(p, mu.measured);
    const bool choose_min = g.owner(v) == mu.measured;

    std::optional<MeasureValue> best;
    for (Vertex w : g.successors(v)) {
        const auto& mw = mu.values[w];
        MeasureValue target = MeasureValue::top();
        if (!mw.is_top()) {
            if (!strict) {
                target = MeasureValue(mw.node().prefix(k));
            } else if (auto leaf = min_leaf_geq(*mu.tree, mw.node(), k, true)) {
                target = MeasureValue(leaf->prefix(k));
            }
        }
        if (!best || (choose_min ? target < *best : target > *best)) best = std::move(target);
    }
    return std::max(mu.values[v], *best);
}

std::string
to_text(const WinningRegions& r, std::span<const std::uint64_t> labels)
{
    auto line = [&](const char* name, const std::vector<Vertex>& vs) {
        std::vector<std::uint64_t> ids;
        for (auto v : vs) ids.push_back(labels.empty() ? v : labels[v]);
        std::ranges::sort(ids);
        std::string s = name;
        s += ':';
        for (auto id : ids) s += ' ' + std::to_string(id);
        return s + '\n';
    };
    return line("EVEN", r.even) + line("ODD", r.odd);
}

Player
choose_measured_player(const PriorityCounts& c)
{
    return c.odd_count <= c.even_count ? Player::Even : Player::Odd;
}

SolveResult
solve(const GameGraph& g, const SolveOptions& opts)
{
    const auto counts = g.priority_counts();
    const Player measured = choose_measured_player(counts);
    const std::size_t eta = measured == Player::Even ? counts.odd_count : counts.even_count;
    const std::size_t universality = opts.universality.value_or(std::max<std::size_t>(eta, 1));
    auto tree = std::make_shared<const OrderedTree>(construct(universality, static_cast<std::size_t>(g.max_priority() / 2)));
    auto res = solve_with_tree(g, measured, std::move(tree), opts);
    res.stats.eta = eta;
    res.stats.universality = universality;
    return res;
}

SolveResult
solve_with_tree(const GameGraph& g, Player measured, std::shared_ptr<const OrderedTree> tree, const SolveOptions& opts)
{
    if (!tree || tree->empty()) throw std::invalid_argument("solve: the tree must be nonempty");
    if (tree->height() != static_cast<std::size_t>(g.max_priority() / 2)) {
        throw std::invalid_argument("solve: tree height must be d/2");
    }
    const std::size_t n = g.vertex_count();

    SolveResult res;
    res.stats.measured = measured;
    res.stats.tree_width = tree->leaf_count();
    res.stats.tree_height = tree->height();
    res.measure.measured = measured;
    res.measure.d = g.max_priority();
    res.measure.tree = std::move(tree);
    res.measure.values.assign(n, MeasureValue());
    auto& mu = res.measure;

    std::vector<Vertex> pending;
    std::deque<Vertex> queue;
    std::vector<bool> queued(n, true);
    std::mt19937_64 rng(opts.seed);
    for (Vertex v = 0; v < n; v++) queue.push_back(v);
    if (opts.order == WorklistOrder::Random) pending.assign(queue.begin(), queue.end());

    auto push = [&](Vertex v) {
        if (queued[v]) return;
        queued[v] = true;
        if (opts.order == WorklistOrder::Random) pending.push_back(v);
        else queue.push_back(v);
    };
    auto pop = [&]() -> Vertex {
        Vertex v = 0;
        switch (opts.order) {
        case WorklistOrder::Fifo:
            v = queue.front();
            queue.pop_front();
            break;
        case WorklistOrder::Lifo:
            v = queue.back();
            queue.pop_back();
            break;
        case WorklistOrder::Random: {
            std::uniform_int_distribution<std::size_t> pick(0, pending.size() - 1);
            std::size_t i = pick(rng);
            v = pending[i];
            pending[i] = pending.back();
            pending.pop_back();
            break;
        }
        }
        queued[v] = false;
        return v;
    };
    auto empty = [&] { return opts.order == WorklistOrder::Random ? pending.empty() : queue.empty(); };

    while (!empty()) {
        const Vertex v = pop();
        if (vertex_ok(g, mu, v)) continue;
        res.stats.lifts++;
        MeasureValue next = lift(g, mu, v);
        if (next == mu.values[v]) continue;
        res.stats.value_changes++;
        if (opts.on_change) opts.on_change(v, mu.values[v], next);
        mu.values[v] = std::move(next);
        for (Vertex u : g.predecessors(v)) {
            if (!mu.values[u].is_top()) push(u);
        }
    }

    for (Vertex v = 0; v < n; v++) {
        bool measured_wins = !mu.values[v].is_top();
        auto& side = (measured_wins == (measured == Player::Even)) ? res.regions.even : res.regions.odd;
        side.push_back(v);
    }
    return res;
}

} // namespace qpg
