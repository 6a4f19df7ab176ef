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

#include <qpg/game.hpp>

#include <algorithm>
#include <cassert>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace qpg {

const char*
to_string(Player p)
{
    return p == Player::Even ? "Even" : "Odd";
}

GameGraph::GameGraph(std::vector<Priority> priority, std::vector<Player> owner,
                     std::vector<std::vector<Vertex>> successors, Priority d)
    : priority_(std::move(priority)), owner_(std::move(owner)), successors_(std::move(successors)), d_(d)
{
    const std::size_t n = priority_.size();
    if (n == 0) throw std::invalid_argument("game has no vertices");
    if (owner_.size() != n || successors_.size() != n) {
        throw std::invalid_argument("priority, owner and successor arrays differ in length");
    }
    if (d_ < 2 || d_ % 2 != 0) throw std::invalid_argument("priority bound d must be even and >= 2");

    predecessors_.resize(n);
    for (Vertex v = 0; v < n; v++) {
        if (priority_[v] < 1 || priority_[v] > d_) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " has priority "
                                        + std::to_string(priority_[v]) + " outside 1.."
                                        + std::to_string(d_));
        }
        if (successors_[v].empty()) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " has no successors");
        }
        for (Vertex w : successors_[v]) {
            if (w >= n) {
                throw std::invalid_argument("edge " + std::to_string(v) + " -> " + std::to_string(w)
                                            + " leaves the vertex range");
            }
            predecessors_[w].push_back(v);
        }
        edge_count_ += successors_[v].size();
        if (priority_[v] % 2 == 0) counts_.even_count++;
        else counts_.odd_count++;
    }
    // the measured side never needs more than half of the vertices
    assert(counts_.eta() <= n / 2);
}

bool
structurally_equal(const GameGraph& a, const GameGraph& b)
{
    if (a.vertex_count() != b.vertex_count()) return false;
    for (Vertex v = 0; v < a.vertex_count(); v++) {
        if (a.priority(v) != b.priority(v) || a.owner(v) != b.owner(v)) return false;
        if (!std::ranges::equal(a.successors(v), b.successors(v))) return false;
    }
    return true;
}

PriorityCounts
priority_counts(const GameGraph& g)
{
    return g.priority_counts();
}

NormalizedPriorities
normalize_priorities(std::span<const std::uint64_t> raw)
{
    NormalizedPriorities res;
    if (raw.empty()) return res;

    const auto [lo, hi] = std::ranges::minmax(raw);
    // smallest becomes 1 (odd) or 2 (even)
    const long long target = (lo % 2 == 0) ? 2 : 1;
    res.shift = target - static_cast<long long>(lo);

    res.priorities.reserve(raw.size());
    for (auto p : raw) res.priorities.push_back(static_cast<Priority>(static_cast<long long>(p) + res.shift));
    const auto top = static_cast<Priority>(static_cast<long long>(hi) + res.shift);
    res.d = top + (top % 2);
    return res;
}

GameGraph
normalized(const GameGraph& g)
{
    std::vector<std::uint64_t> raw(g.priorities().begin(), g.priorities().end());
    auto norm = normalize_priorities(raw);
    std::vector<std::vector<Vertex>> succ;
    succ.reserve(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); v++) {
        succ.emplace_back(g.successors(v).begin(), g.successors(v).end());
    }
    return GameGraph(std::move(norm.priorities), {g.owners().begin(), g.owners().end()}, std::move(succ), norm.d);
}

GameGraph
random_game(std::size_t n, Priority d, DegreeRange out_degree, std::uint64_t seed)
{
    if (n == 0) throw std::invalid_argument("random_game: n must be positive");
    if (d < 2 || d % 2 != 0) throw std::invalid_argument("random_game: d must be even and >= 2");
    if (out_degree.min < 1 || out_degree.min > out_degree.max) {
        throw std::invalid_argument("random_game: invalid out-degree range");
    }
    const std::size_t lo = std::min(out_degree.min, n);
    const std::size_t hi = std::min(out_degree.max, n);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Priority> prio(1, d);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<std::size_t> degree(lo, hi);

    std::vector<Priority> priority(n);
    std::vector<Player> owner(n);
    std::vector<std::vector<Vertex>> succ(n);
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{0});

    for (std::size_t v = 0; v < n; v++) {
        priority[v] = prio(rng);
        owner[v] = coin(rng) ? Player::Odd : Player::Even;
        const std::size_t k = degree(rng);
        std::sample(all.begin(), all.end(), std::back_inserter(succ[v]), k, rng);
    }
    return GameGraph(std::move(priority), std::move(owner), std::move(succ), d);
}

} // namespace qpg
