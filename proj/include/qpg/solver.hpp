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

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <qpg/game.hpp>
#include <qpg/universal_tree.hpp>

namespace qpg {

/**
 * Value of a progress measure: a node of the working tree or top.
 *
 * Nodes are ordered as TreePath (a node is below all its descendants) and
 * top lies above every node. The root is the least value.
 */
class MeasureValue
{
public:
    MeasureValue() = default;
    explicit MeasureValue(TreePath node) : node_(std::move(node)) {}
    static MeasureValue top()
    {
        MeasureValue v;
        v.top_ = true;
        return v;
    }

    bool is_top() const { return top_; }
    /// Only meaningful when !is_top().
    const TreePath& node() const { return node_; }

    friend std::strong_ordering operator<=>(const MeasureValue& a, const MeasureValue& b)
    {
        if (a.top_ || b.top_) return a.top_ <=> b.top_;
        return a.node_ <=> b.node_;
    }
    friend bool operator==(const MeasureValue& a, const MeasureValue& b) { return (a <=> b) == 0; }

private:
    TreePath node_;
    bool top_ = false;
};

std::string to_string(const MeasureValue& v);

/**
 * Progress measure for one player over a tree of height d/2.
 *
 * Tree levels correspond, top-down, to the priorities of the opponent's
 * parity: d-1, d-3, ..., 1 for an Even measure and d, d-2, ..., 2 for an Odd
 * measure.
 */
struct Measure
{
    Player measured = Player::Even;
    Priority d = 2;
    std::shared_ptr<const OrderedTree> tree;
    std::vector<MeasureValue> values;
};

/// Number of tree levels compared at a vertex of priority p.
std::size_t trunc_len(Priority p, Player measured, Priority d);

/// Whether edge v -> w requires a strict increase, i.e. p has the opponent's parity.
constexpr bool needs_strict(Priority p, Player measured) { return parity_player(p) != measured; }

/// Whether the edge v -> w satisfies the progress condition under mu.
bool edge_ok(const GameGraph& g, const Measure& mu, Vertex v, Vertex w);

/// Whether v is consistent: some good edge for the measured player's vertices, all edges good otherwise.
bool vertex_ok(const GameGraph& g, const Measure& mu, Vertex v);

/// Least value >= mu(v) making v consistent, given the current values of its successors.
MeasureValue lift(const GameGraph& g, const Measure& mu, Vertex v);

struct WinningRegions
{
    std::vector<Vertex> even;
    std::vector<Vertex> odd;

    friend bool operator==(const WinningRegions&, const WinningRegions&) = default;
};

/// "EVEN: ids\nODD: ids\n", each list sorted; ids are mapped through labels when given.
std::string to_text(const WinningRegions& r, std::span<const std::uint64_t> labels = {});

enum class WorklistOrder { Fifo, Lifo, Random };

struct SolveOptions
{
    WorklistOrder order = WorklistOrder::Fifo;
    /// Seed for WorklistOrder::Random.
    std::uint64_t seed = 0;
    /// Universality parameter of the tree; defaults to max(eta, 1).
    std::optional<std::size_t> universality;
    /// Called on every value change with (vertex, old, new).
    std::function<void(Vertex, const MeasureValue&, const MeasureValue&)> on_change;
};

struct SolveStats
{
    Player measured = Player::Even;
    std::size_t eta = 0;
    std::size_t universality = 1;
    std::size_t tree_width = 0;
    std::size_t tree_height = 0;
    /// Lift applications on inconsistent vertices.
    std::size_t lifts = 0;
    /// Lifts that changed a value.
    std::size_t value_changes = 0;
};

struct SolveResult
{
    WinningRegions regions;
    SolveStats stats;
    Measure measure;
};

/**
 * Measured player for a game: Even when the odd-priority vertices are no more
 * numerous than the even-priority ones, Odd otherwise.
 */
Player choose_measured_player(const PriorityCounts& c);

/**
 * Solve by progress-measure lifting over construct(max(eta, 1), d/2), where
 * eta counts the vertices whose priority has the opponent's parity.
 */
SolveResult solve(const GameGraph& g, const SolveOptions& opts = {});

/// Lifting with an explicit measured player and tree; the fixpoint of the worklist loop.
SolveResult solve_with_tree(const GameGraph& g, Player measured, std::shared_ptr<const OrderedTree> tree,
                            const SolveOptions& opts = {});

/// Classical recursive attractor-based solver.
WinningRegions zielonka(const GameGraph& g);

/// Vertices from which `player` can force a visit to target within the subgame `alive`.
std::vector<bool> attractor(const GameGraph& g, Player player, const std::vector<bool>& target,
                            const std::vector<bool>& alive);

/// Largest product of Even out-degrees accepted by brute_force_solve.
inline constexpr std::uint64_t brute_force_limit = 1'000'000;

/**
 * Enumerate Even's positional strategies. Even wins from v if for some
 * strategy every cycle reachable from v has even maximal priority. Throws
 * std::length_error beyond brute_force_limit strategies.
 */
WinningRegions brute_force_solve(const GameGraph& g);

} // namespace qpg
