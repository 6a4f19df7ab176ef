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

#include <cstdint>
#include <span>
#include <vector>

namespace qpg {

using Vertex = std::uint32_t;
using Priority = int;

enum class Player : std::uint8_t { Even = 0, Odd = 1 };

constexpr Player opponent(Player p) { return p == Player::Even ? Player::Odd : Player::Even; }

/// Player favoured by a priority: even priorities are good for Even.
constexpr Player parity_player(Priority p) { return (p % 2 == 0) ? Player::Even : Player::Odd; }

const char* to_string(Player p);

struct PriorityCounts
{
    std::size_t odd_count = 0;
    std::size_t even_count = 0;

    std::size_t eta() const { return odd_count < even_count ? odd_count : even_count; }
};

/**
 * Parity game with priorities on vertices.
 *
 * Priorities lie in 1..d for an even bound d, every vertex has at least one
 * successor. The graph is immutable once constructed; the constructor throws
 * std::invalid_argument when any of these invariants is violated.
 */
class GameGraph
{
public:
    GameGraph(std::vector<Priority> priority, std::vector<Player> owner,
              std::vector<std::vector<Vertex>> successors, Priority d);

    std::size_t vertex_count() const { return priority_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    Priority max_priority() const { return d_; }

    Priority priority(Vertex v) const { return priority_[v]; }
    Player owner(Vertex v) const { return owner_[v]; }
    std::span<const Vertex> successors(Vertex v) const { return successors_[v]; }
    std::span<const Vertex> predecessors(Vertex v) const { return predecessors_[v]; }

    std::span<const Priority> priorities() const { return priority_; }
    std::span<const Player> owners() const { return owner_; }

    PriorityCounts priority_counts() const { return counts_; }

private:
    std::vector<Priority> priority_;
    std::vector<Player> owner_;
    std::vector<std::vector<Vertex>> successors_;
    std::vector<std::vector<Vertex>> predecessors_;
    Priority d_;
    std::size_t edge_count_ = 0;
    PriorityCounts counts_;
};

/// Same owners, priorities and successor lists. The bound d is not compared.
bool structurally_equal(const GameGraph& a, const GameGraph& b);

PriorityCounts priority_counts(const GameGraph& g);

struct NormalizedPriorities
{
    std::vector<Priority> priorities;
    Priority d = 2;
    /// Even constant added to every raw priority.
    long long shift = 0;
};

/**
 * Shift raw priorities by one even constant so that the smallest becomes 1 or
 * 2. The bound d is the largest shifted priority rounded up to even. Parity,
 * and therefore the winner of every play, is unchanged.
 */
NormalizedPriorities normalize_priorities(std::span<const std::uint64_t> raw);

/// The game with its priorities normalized as above and d recomputed.
GameGraph normalized(const GameGraph& g);

struct DegreeRange
{
    std::size_t min = 1;
    std::size_t max = 1;
};

/**
 * Seeded random game. Uses std::mt19937_64 (fully specified by the C++
 * standard) with the standard library's distributions; output is
 * reproducible for a given standard library.
 *
 * Every vertex gets a uniform priority in 1..d, a uniform owner and an
 * out-degree uniform in the given range (clamped to n) with distinct,
 * uniformly chosen targets.
 */
GameGraph random_game(std::size_t n, Priority d, DegreeRange out_degree, std::uint64_t seed);

} // namespace qpg
