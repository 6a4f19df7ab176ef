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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qpg {

/**
 * Address of a tree node as the sequence of child indices from the root.
 *
 * Paths compare lexicographically and a proper prefix is smaller than all of
 * its extensions, so a node of depth j < h behaves like its path padded with
 * an element below every child index. The empty path (the root) is therefore
 * below every leaf.
 */
struct TreePath
{
    std::vector<std::uint32_t> index;

    TreePath() = default;
    TreePath(std::initializer_list<std::uint32_t> il) : index(il) {}
    explicit TreePath(std::vector<std::uint32_t> v) : index(std::move(v)) {}

    std::size_t depth() const { return index.size(); }

    /// First min(k, depth()) coordinates.
    TreePath prefix(std::size_t k) const;

    friend auto operator<=>(const TreePath&, const TreePath&) = default;
    friend bool operator==(const TreePath&, const TreePath&) = default;
};

std::string to_string(const TreePath& p);

/**
 * Ordered tree whose leaves all sit at depth height(). Nodes are stored in an
 * arena; node 0 is the root unless the tree is empty.
 */
class OrderedTree
{
public:
    using Node = std::uint32_t;

    /// Empty tree (no nodes, no leaves) of the given height.
    explicit OrderedTree(std::size_t height = 0) : height_(height) {}

    static OrderedTree leaf();
    /// Root whose children are the roots of the given trees; all must share one height.
    static OrderedTree join(std::span<const OrderedTree> children);
    static OrderedTree complete(std::size_t arity, std::size_t height);
    /// Nested parentheses, "." for a leaf; see to_string().
    static OrderedTree parse(std::string_view text);

    bool empty() const { return children_.empty(); }
    std::size_t height() const { return height_; }
    std::size_t node_count() const { return children_.size(); }
    std::size_t leaf_count() const { return leaves_; }

    Node root() const { return 0; }
    std::span<const Node> children(Node x) const { return children_[x]; }

    /// Node reached by a path, or nullopt when the path leaves the tree.
    std::optional<Node> find(const TreePath& p) const;

    /// Leftmost leaf below the node at path p (p must exist).
    TreePath leftmost_leaf(const TreePath& p) const;

    /// All leaves in increasing order.
    std::vector<TreePath> leaves() const;

    /// Drop the rightmost leaf together with any ancestors left childless.
    OrderedTree without_last_leaf() const;

    friend bool operator==(const OrderedTree&, const OrderedTree&) = default;

private:
    friend class TreeBuilder;

    std::size_t height_;
    std::vector<std::vector<Node>> children_;
    std::size_t leaves_ = 0;
};

/// Leaves of t; the same as t.leaf_count().
std::size_t leaf_count(const OrderedTree& t);

/**
 * Universal tree of height h obtained by grafting: for n, h >= 1 the root's
 * children are those of construct(n/2, h), then a new child carrying
 * construct(n, h-1), then those of construct(n-1-n/2, h). It is n-universal
 * and has exactly f(n, h) leaves.
 */
OrderedTree construct(std::size_t n, std::size_t h);

/// Nested parentheses; construct(3,2) prints as "((.)(...)(.))". The empty tree prints as "".
std::string to_string(const OrderedTree& t);

/**
 * Visit every ordered tree of height h with between 1 and max_width leaves.
 * Trees come by increasing width; within a width, the root's arity
 * composition is taken in lexicographic order and children vary recursively
 * in the same order, rightmost fastest. Stops early when visit returns false.
 */
void enumerate_trees(std::size_t h, std::size_t max_width, const std::function<bool(const OrderedTree&)>& visit);

/// Every ordered tree of height h and width exactly w, in canonical order.
std::vector<OrderedTree> trees_of_width(std::size_t h, std::size_t w);

/**
 * Whether t1 embeds into t2: an injective map preserving the child relation
 * and the sibling order. Throws std::invalid_argument if heights differ.
 */
bool embeds(const OrderedTree& t1, const OrderedTree& t2);

struct UniversalityReport
{
    bool universal = true;
    std::size_t trees_checked = 0;
    std::optional<OrderedTree> counterexample;
};

/// Exhaustively check that every tree of t's height and width <= n embeds into t.
UniversalityReport check_universal(const OrderedTree& t, std::size_t n);

bool verify_universal(const OrderedTree& t, std::size_t n);

/**
 * Least leaf whose length-k prefix is >= (or > when strict) the length-k
 * prefix of current, with current padded below every child index when it is
 * shorter than k. Returns nullopt (top) when there is no such leaf.
 *
 * current may be any node of t: a leaf, or an inner node such as the root,
 * which stands for "below every leaf". Throws std::invalid_argument when
 * current is not a node of t or k exceeds the height.
 */
std::optional<TreePath> min_leaf_geq(const OrderedTree& t, const TreePath& current, std::size_t k, bool strict);

} // namespace qpg
