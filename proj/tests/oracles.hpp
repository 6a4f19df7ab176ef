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

// Slow reference implementations used only by the tests.

#pragma once

#include <qpg/universal_tree.hpp>

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

// Number of ordered trees of height h and width w, from the composition
// recursion: a root's children form a sequence of height-(h-1) trees whose
// widths sum to w.
inline std::size_t
count_trees(std::size_t h, std::size_t w)
{
    if (h == 0) return w == 1 ? 1 : 0;
    // seq[m] = number of nonempty-or-empty child sequences of total width m
    std::vector<std::size_t> seq(w + 1, 0);
    seq[0] = 1;
    for (std::size_t m = 1; m <= w; m++) {
        for (std::size_t first = 1; first <= m; first++) seq[m] += count_trees(h - 1, first) * seq[m - first];
    }
    return w == 0 ? 0 : seq[w];
}

// Embedding by exhaustive backtracking over all order-preserving assignments.
inline bool
embeds_backtracking(const qpg::OrderedTree& a, const qpg::OrderedTree& b)
{
    if (a.height() != b.height()) return false;
    if (a.empty()) return true;
    if (b.empty()) return false;
    std::function<bool(qpg::OrderedTree::Node, qpg::OrderedTree::Node)> fits;
    fits = [&](qpg::OrderedTree::Node u, qpg::OrderedTree::Node v) -> bool {
        auto cu = a.children(u);
        auto cv = b.children(v);
        std::function<bool(std::size_t, std::size_t)> assign = [&](std::size_t i, std::size_t from) -> bool {
            if (i == cu.size()) return true;
            for (std::size_t j = from; j < cv.size(); j++) {
                if (fits(cu[i], cv[j]) && assign(i + 1, j + 1)) return true;
            }
            return false;
        };
        return assign(0, 0);
    };
    return fits(a.root(), b.root());
}

inline std::optional<qpg::TreePath>
min_leaf_scan(const std::vector<qpg::TreePath>& sorted_leaves, const qpg::TreePath& cur, std::size_t k, bool strict)
{
    auto want = cur.prefix(k);
    for (const auto& l : sorted_leaves) {
        auto p = l.prefix(k);
        if (strict ? p > want : p >= want) return l;
    }
    return std::nullopt;
}

// Random tree of height h with at most max_leaves leaves.
inline qpg::OrderedTree
random_tree(std::size_t h, std::size_t max_leaves, std::mt19937_64& rng)
{
    std::function<qpg::OrderedTree(std::size_t, std::size_t)> grow = [&](std::size_t height, std::size_t budget) {
        if (height == 0) return qpg::OrderedTree::leaf();
        std::uniform_int_distribution<std::size_t> arity(1, std::min<std::size_t>(budget, 4));
        std::size_t k = arity(rng);
        std::vector<qpg::OrderedTree> kids;
        std::size_t left = budget;
        for (std::size_t i = 0; i < k; i++) {
            std::size_t share = std::max<std::size_t>(1, left / (k - i));
            auto c = grow(height - 1, share);
            left -= std::min(left, c.leaf_count());
            kids.push_back(std::move(c));
            if (left == 0) break;
        }
        return qpg::OrderedTree::join(kids);
    };
    return grow(h, max_leaves);
}

} // namespace oracle
