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
#include <array>
#include <stdexcept>

namespace qpg {

std::vector<bool>
attractor(const GameGraph& g, Player player, const std::vector<bool>& target, const std::vector<bool>& alive)
{
    const std::size_t n = g.vertex_count();
    std::vector<bool> attr(n, false);
    std::vector<std::size_t> escapes(n, 0);
    std::vector<Vertex> todo;
    for (Vertex v = 0; v < n; v++) {
        if (!alive[v]) continue;
        for (Vertex w : g.successors(v)) {
            if (alive[w]) escapes[v]++;
        }
        if (target[v]) {
            attr[v] = true;
            todo.push_back(v);
        }
    }
    while (!todo.empty()) {
        Vertex w = todo.back();
        todo.pop_back();
        for (Vertex u : g.predecessors(w)) {
            if (!alive[u] || attr[u]) continue;
            if (g.owner(u) == player || --escapes[u] == 0) {
                attr[u] = true;
                todo.push_back(u);
            }
        }
    }
    return attr;
}

namespace {

using Split = std::array<std::vector<bool>, 2>;

std::size_t
idx(Player p)
{
    return static_cast<std::size_t>(p);
}

Split
zielonka_rec(const GameGraph& g, const std::vector<bool>& alive)
{
    const std::size_t n = g.vertex_count();
    Split win{std::vector<bool>(n, false), std::vector<bool>(n, false)};

    Priority top = 0;
    for (Vertex v = 0; v < n; v++) {
        if (alive[v]) top = std::max(top, g.priority(v));
    }
    if (top == 0) return win;

    const Player alpha = parity_player(top);
    const Player beta = opponent(alpha);

    std::vector<bool> heads(n, false);
    for (Vertex v = 0; v < n; v++) heads[v] = alive[v] && g.priority(v) == top;
    auto a = attractor(g, alpha, heads, alive);

    std::vector<bool> rest(n);
    for (Vertex v = 0; v < n; v++) rest[v] = alive[v] && !a[v];
    Split sub = zielonka_rec(g, rest);

    if (std::ranges::none_of(sub[idx(beta)], [](bool b) { return b; })) {
        win[idx(alpha)] = alive;
        return win;
    }

    auto b = attractor(g, beta, sub[idx(beta)], alive);
    for (Vertex v = 0; v < n; v++) rest[v] = alive[v] && !b[v];
    Split sub2 = zielonka_rec(g, rest);
    win[idx(alpha)] = sub2[idx(alpha)];
    for (Vertex v = 0; v < n; v++) win[idx(beta)][v] = sub2[idx(beta)][v] || b[v];
    return win;
}

WinningRegions
to_regions(const std::vector<bool>& even_wins)
{
    WinningRegions r;
    for (Vertex v = 0; v < even_wins.size(); v++) (even_wins[v] ? r.even : r.odd).push_back(v);
    return r;
}

} // namespace

WinningRegions
zielonka(const GameGraph& g)
{
    Split w = zielonka_rec(g, std::vector<bool>(g.vertex_count(), true));
    return to_regions(w[idx(Player::Even)]);
}

WinningRegions
brute_force_solve(const GameGraph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<Vertex> even_vertices;
    std::uint64_t strategies = 1;
    for (Vertex v = 0; v < n; v++) {
        if (g.owner(v) != Player::Even) continue;
        even_vertices.push_back(v);
        strategies *= g.successors(v).size();
        if (strategies > brute_force_limit) throw std::length_error("brute_force_solve: too many strategies");
    }

    std::vector<std::size_t> choice(even_vertices.size(), 0);
    std::vector<bool> even_wins(n, false);
    std::vector<std::vector<Vertex>> succ(n), pred(n);

    while (true) {
        for (auto& s : succ) s.clear();
        for (auto& p : pred) p.clear();
        std::size_t next_even = 0;
        for (Vertex v = 0; v < n; v++) {
            auto out = g.successors(v);
            if (g.owner(v) == Player::Even) succ[v].push_back(out[choice[next_even++]]);
            else succ[v].assign(out.begin(), out.end());
            for (Vertex w : succ[v]) pred[w].push_back(v);
        }

        // u is bad if it has odd priority p and lies on a cycle through priorities <= p
        std::vector<bool> losing(n, false);
        std::vector<Vertex> todo;
        for (Vertex u = 0; u < n; u++) {
            const Priority p = g.priority(u);
            if (p % 2 == 0) continue;
            std::vector<bool> seen(n, false);
            std::vector<Vertex> stack;
            for (Vertex w : succ[u]) {
                if (g.priority(w) <= p && !seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
            while (!stack.empty() && !seen[u]) {
                Vertex x = stack.back();
                stack.pop_back();
                for (Vertex y : succ[x]) {
                    if (g.priority(y) <= p && !seen[y]) {
                        seen[y] = true;
                        stack.push_back(y);
                    }
                }
            }
            if (seen[u]) {
                losing[u] = true;
                todo.push_back(u);
            }
        }
        // everything that can reach a bad vertex loses under this strategy
        while (!todo.empty()) {
            Vertex x = todo.back();
            todo.pop_back();
            for (Vertex y : pred[x]) {
                if (!losing[y]) {
                    losing[y] = true;
                    todo.push_back(y);
                }
            }
        }
        for (Vertex v = 0; v < n; v++) {
            if (!losing[v]) even_wins[v] = true;
        }

        std::size_t i = 0;
        for (; i < choice.size(); i++) {
            if (++choice[i] < g.successors(even_vertices[i]).size()) break;
            choice[i] = 0;
        }
        if (i == choice.size()) break;
    }
    return to_regions(even_wins);
}

} // namespace qpg
