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

#include <qpg/universal_tree.hpp>

#include <map>
#include <stdexcept>

namespace qpg {

TreePath
TreePath::prefix(std::size_t k) const
{
    if (k >= index.size()) return *this;
    return TreePath(std::vector<std::uint32_t>(index.begin(), index.begin() + static_cast<std::ptrdiff_t>(k)));
}

std::string
to_string(const TreePath& p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.index.size(); i++) {
        if (i) s += ',';
        s += std::to_string(p.index[i]);
    }
    return s + ")";
}

class TreeBuilder
{
public:
    using Node = OrderedTree::Node;

    explicit TreeBuilder(std::size_t height) : tree_(height) {}

    Node add_node()
    {
        tree_.children_.emplace_back();
        return static_cast<Node>(tree_.children_.size() - 1);
    }

    void add_child(Node parent, Node child) { tree_.children_[parent].push_back(child); }

    // Append the root-children of construct(n, h) below parent.
    void graft(std::size_t n, std::size_t h, Node parent)
    {
        if (n == 0) return;
        graft(n / 2, h, parent);
        Node mid = add_node();
        add_child(parent, mid);
        if (h > 1) graft(n, h - 1, mid);
        graft(n - 1 - n / 2, h, parent);
    }

    // Copy the subtree of src rooted at x, returning the copy of x.
    Node copy(const OrderedTree& src, Node x)
    {
        Node y = add_node();
        for (Node c : src.children(x)) {
            Node cy = copy(src, c);
            add_child(y, cy);
        }
        return y;
    }

    // Copy without the rightmost leaf when on_last is set; nullopt if nothing remains.
    std::optional<Node> copy_trimmed(const OrderedTree& src, Node x, bool on_last)
    {
        auto ch = src.children(x);
        if (ch.empty()) {
            if (on_last) return std::nullopt;
            return add_node();
        }
        std::vector<Node> kept;
        for (std::size_t i = 0; i < ch.size(); i++) {
            auto c = copy_trimmed(src, ch[i], on_last && i + 1 == ch.size());
            if (c) kept.push_back(*c);
        }
        if (kept.empty()) return std::nullopt;
        Node y = add_node();
        for (Node c : kept) add_child(y, c);
        return y;
    }

    // Validates leaf depths and counts leaves; nodes may have been added in any order.
    OrderedTree finish(Node root)
    {
        OrderedTree out(tree_.height_);
        if (tree_.children_.empty()) return out;
        // renumber in preorder so that the root is node 0
        std::vector<std::vector<Node>> renumbered;
        renumber(root, 0, renumbered, out.leaves_);
        out.children_ = std::move(renumbered);
        return out;
    }

private:
    Node renumber(Node x, std::size_t depth, std::vector<std::vector<Node>>& out, std::size_t& leaves)
    {
        Node id = static_cast<Node>(out.size());
        out.emplace_back();
        const auto& ch = tree_.children_[x];
        if (ch.empty()) {
            if (depth != tree_.height_) throw std::invalid_argument("ordered tree has a leaf at the wrong depth");
            leaves++;
        } else if (depth >= tree_.height_) {
            throw std::invalid_argument("ordered tree is deeper than its height");
        }
        std::vector<Node> mapped;
        mapped.reserve(ch.size());
        for (Node c : ch) mapped.push_back(renumber(c, depth + 1, out, leaves));
        out[id] = std::move(mapped);
        return id;
    }

    OrderedTree tree_;
};

OrderedTree
OrderedTree::leaf()
{
    TreeBuilder b(0);
    return b.finish(b.add_node());
}

OrderedTree
OrderedTree::join(std::span<const OrderedTree> children)
{
    if (children.empty()) throw std::invalid_argument("join needs at least one subtree");
    const std::size_t h = children.front().height();
    TreeBuilder b(h + 1);
    Node root = b.add_node();
    for (const auto& c : children) {
        if (c.height() != h) throw std::invalid_argument("join: subtrees differ in height");
        if (c.empty()) throw std::invalid_argument("join: empty subtree");
        b.add_child(root, b.copy(c, c.root()));
    }
    return b.finish(root);
}

OrderedTree
OrderedTree::complete(std::size_t arity, std::size_t height)
{
    if (arity == 0 && height > 0) throw std::invalid_argument("complete tree needs positive arity");
    OrderedTree t = leaf();
    for (std::size_t i = 0; i < height; i++) {
        std::vector<OrderedTree> copies(arity, t);
        t = join(copies);
    }
    return t;
}

OrderedTree
OrderedTree::parse(std::string_view text)
{
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\n' || text[pos] == '\t')) pos++;
    };
    skip();
    if (pos == text.size()) return OrderedTree(0);

    // first pass: structure with provisional height, depth is checked in finish()
    struct Raw
    {
        std::vector<Raw> kids;
    };
    std::function<Raw()> node = [&]() -> Raw {
        skip();
        if (pos >= text.size()) throw std::invalid_argument("tree text ends early");
        if (text[pos] == '.') {
            pos++;
            return {};
        }
        if (text[pos] != '(') throw std::invalid_argument("unexpected character in tree text");
        pos++;
        Raw r;
        while (true) {
            skip();
            if (pos >= text.size()) throw std::invalid_argument("unbalanced parentheses in tree text");
            if (text[pos] == ')') break;
            r.kids.push_back(node());
        }
        pos++;
        if (r.kids.empty()) throw std::invalid_argument("inner node without children in tree text");
        return r;
    };
    Raw root = node();
    skip();
    if (pos != text.size()) throw std::invalid_argument("trailing characters in tree text");

    std::size_t h = 0;
    for (const Raw* r = &root; !r->kids.empty(); r = &r->kids.front()) h++;

    TreeBuilder b(h);
    std::function<Node(const Raw&)> emit = [&](const Raw& r) -> Node {
        Node x = b.add_node();
        for (const auto& k : r.kids) b.add_child(x, emit(k));
        return x;
    };
    return b.finish(emit(root));
}

std::optional<OrderedTree::Node>
OrderedTree::find(const TreePath& p) const
{
    if (empty() || p.depth() > height_) return std::nullopt;
    Node x = root();
    for (auto i : p.index) {
        if (i >= children_[x].size()) return std::nullopt;
        x = children_[x][i];
    }
    return x;
}

TreePath
OrderedTree::leftmost_leaf(const TreePath& p) const
{
    auto x = find(p);
    if (!x) throw std::invalid_argument("path " + to_string(p) + " is not a node of the tree");
    TreePath out = p;
    Node y = *x;
    while (!children_[y].empty()) {
        out.index.push_back(0);
        y = children_[y][0];
    }
    return out;
}

std::vector<TreePath>
OrderedTree::leaves() const
{
    std::vector<TreePath> out;
    if (empty()) return out;
    out.reserve(leaves_);
    TreePath cur;
    std::function<void(Node)> walk = [&](Node x) {
        if (children_[x].empty()) {
            out.push_back(cur);
            return;
        }
        for (std::uint32_t i = 0; i < children_[x].size(); i++) {
            cur.index.push_back(i);
            walk(children_[x][i]);
            cur.index.pop_back();
        }
    };
    walk(root());
    return out;
}

OrderedTree
OrderedTree::without_last_leaf() const
{
    if (empty()) return *this;
    TreeBuilder b(height_);
    auto r = b.copy_trimmed(*this, root(), true);
    if (!r) return OrderedTree(height_);
    return b.finish(*r);
}

std::size_t
leaf_count(const OrderedTree& t)
{
    return t.leaf_count();
}

OrderedTree
construct(std::size_t n, std::size_t h)
{
    TreeBuilder b(h);
    if (n == 0) return b.finish(0);
    auto root = b.add_node();
    if (h > 0) b.graft(n, h, root);
    return b.finish(root);
}

std::string
to_string(const OrderedTree& t)
{
    if (t.empty()) return "";
    std::string s;
    std::function<void(OrderedTree::Node)> walk = [&](OrderedTree::Node x) {
        auto ch = t.children(x);
        if (ch.empty()) {
            s += '.';
            return;
        }
        s += '(';
        for (auto c : ch) walk(c);
        s += ')';
    };
    walk(t.root());
    return s;
}

namespace {

void
compositions(std::size_t w, std::vector<std::size_t>& cur, const std::function<void(const std::vector<std::size_t>&)>& out)
{
    if (w == 0) {
        out(cur);
        return;
    }
    for (std::size_t first = 1; first <= w; first++) {
        cur.push_back(first);
        compositions(w - first, cur, out);
        cur.pop_back();
    }
}

class TreeCatalog
{
public:
    const std::vector<OrderedTree>& get(std::size_t h, std::size_t w)
    {
        auto key = std::make_pair(h, w);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        std::vector<OrderedTree> result;
        if (h == 0) {
            if (w == 1) result.push_back(OrderedTree::leaf());
        } else if (w > 0) {
            std::vector<std::size_t> cur;
            compositions(w, cur, [&](const std::vector<std::size_t>& parts) {
                std::vector<const std::vector<OrderedTree>*> options;
                for (auto p : parts) {
                    options.push_back(&get(h - 1, p));
                    if (options.back()->empty()) return;
                }
                std::vector<std::size_t> pick(parts.size(), 0);
                std::vector<OrderedTree> kids(parts.size());
                // odometer over the cartesian product, rightmost digit fastest
                while (true) {
                    for (std::size_t i = 0; i < parts.size(); i++) kids[i] = (*options[i])[pick[i]];
                    result.push_back(OrderedTree::join(kids));
                    std::size_t i = parts.size();
                    while (i > 0) {
                        i--;
                        if (++pick[i] < options[i]->size()) break;
                        pick[i] = 0;
                        if (i == 0) return;
                    }
                }
            });
        }
        return memo_.emplace(key, std::move(result)).first->second;
    }

private:
    std::map<std::pair<std::size_t, std::size_t>, std::vector<OrderedTree>> memo_;
};

} // namespace

std::vector<OrderedTree>
trees_of_width(std::size_t h, std::size_t w)
{
    TreeCatalog cat;
    return cat.get(h, w);
}

void
enumerate_trees(std::size_t h, std::size_t max_width, const std::function<bool(const OrderedTree&)>& visit)
{
    TreeCatalog cat;
    for (std::size_t w = 1; w <= max_width; w++) {
        for (const auto& t : cat.get(h, w)) {
            if (!visit(t)) return;
        }
    }
}

bool
embeds(const OrderedTree& t1, const OrderedTree& t2)
{
    if (t1.height() != t2.height()) throw std::invalid_argument("embeds: trees differ in height");
    if (t1.empty()) return true;
    if (t2.empty()) return false;

    const std::size_t cols = t2.node_count();
    // 0 unknown, 1 yes, 2 no
    std::vector<std::uint8_t> memo(t1.node_count() * cols, 0);

    // Children of u are matched left to right; the earliest feasible target for
    // each prefix of u's children is optimal, so one forward scan decides.
    std::function<bool(OrderedTree::Node, OrderedTree::Node)> fits = [&](OrderedTree::Node u, OrderedTree::Node v) {
        auto& slot = memo[u * cols + v];
        if (slot) return slot == 1;
        auto cu = t1.children(u);
        auto cv = t2.children(v);
        bool ok = true;
        std::size_t j = 0;
        for (auto c : cu) {
            while (j < cv.size() && !fits(c, cv[j])) j++;
            if (j == cv.size()) {
                ok = false;
                break;
            }
            j++;
        }
        slot = ok ? 1 : 2;
        return ok;
    };
    return fits(t1.root(), t2.root());
}

UniversalityReport
check_universal(const OrderedTree& t, std::size_t n)
{
    UniversalityReport rep;
    enumerate_trees(t.height(), n, [&](const OrderedTree& s) {
        rep.trees_checked++;
        if (!embeds(s, t)) {
            rep.universal = false;
            rep.counterexample = s;
            return false;
        }
        return true;
    });
    return rep;
}

bool
verify_universal(const OrderedTree& t, std::size_t n)
{
    return check_universal(t, n).universal;
}

std::optional<TreePath>
min_leaf_geq(const OrderedTree& t, const TreePath& current, std::size_t k, bool strict)
{
    if (k > t.height()) throw std::invalid_argument("min_leaf_geq: prefix length exceeds tree height");
    if (!t.find(current)) throw std::invalid_argument("min_leaf_geq: " + to_string(current) + " is not a node of the tree");

    // A node shorter than k is padded below every child index: any leaf
    // under it is already strictly larger at coordinate depth().
    if (current.depth() < k || !strict) return t.leftmost_leaf(current.prefix(k));

    std::vector<OrderedTree::Node> along;
    along.reserve(k);
    OrderedTree::Node x = t.root();
    for (std::size_t j = 0; j < k; j++) {
        along.push_back(x);
        x = t.children(x)[current.index[j]];
    }
    for (std::size_t j = k; j-- > 0;) {
        if (current.index[j] + 1 < t.children(along[j]).size()) {
            TreePath next = current.prefix(j);
            next.index.push_back(current.index[j] + 1);
            return t.leftmost_leaf(next);
        }
    }
    return std::nullopt;
}

} // namespace qpg
