#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "compositions.hpp"
#include "numbers.hpp"
#include "partitions.hpp"
#include "permutations.hpp"

namespace multilie {

/// Planar rooted binary tree; leaves carry distinct positive labels, internal
/// nodes carry a color in [k] (0 marks an uncolored tree). Immutable, shared
/// structurally.
struct TreeNode;
using Tree = std::shared_ptr<const TreeNode>;

struct TreeNode {
    int label = 0;  // leaf label, meaningful iff leaf
    int color = 0;  // internal color, 0 = uncolored
    Tree left, right;
    bool is_leaf() const { return !left; }
};

inline Tree leaf(int label) {
    auto n = std::make_shared<TreeNode>();
    n->label = label;
    return n;
}

inline Tree node(int color, Tree l, Tree r) {
    auto n = std::make_shared<TreeNode>();
    n->color = color;
    n->left = std::move(l);
    n->right = std::move(r);
    return n;
}

inline int tree_compare(const Tree& a, const Tree& b) {
    if (a->is_leaf() != b->is_leaf()) return a->is_leaf() ? -1 : 1;
    if (a->is_leaf()) return a->label < b->label ? -1 : (a->label > b->label ? 1 : 0);
    if (a->color != b->color) return a->color < b->color ? -1 : 1;
    if (int c = tree_compare(a->left, b->left)) return c;
    return tree_compare(a->right, b->right);
}

struct TreeLess {
    bool operator()(const Tree& a, const Tree& b) const { return tree_compare(a, b) < 0; }
};

inline bool tree_equal(const Tree& a, const Tree& b) { return tree_compare(a, b) == 0; }

inline int leaf_count(const Tree& t) {
    return t->is_leaf() ? 1 : leaf_count(t->left) + leaf_count(t->right);
}

inline int internal_count(const Tree& t) { return leaf_count(t) - 1; }

// Smallest leaf label in the subtree (the valency v(x)).
inline int valency(const Tree& t) {
    return t->is_leaf() ? t->label : std::min(valency(t->left), valency(t->right));
}

inline void collect_leaf_labels(const Tree& t, std::vector<int>& out) {
    if (t->is_leaf())
        out.push_back(t->label);
    else {
        collect_leaf_labels(t->left, out);
        collect_leaf_labels(t->right, out);
    }
}

// Leaf labels left to right; for ground set [n] this is the permutation sigma.
inline Permutation leaf_word(const Tree& t) {
    std::vector<int> w;
    collect_leaf_labels(t, w);
    return Permutation(std::move(w));
}

// Content mu(T): color multiplicities over internal nodes.
inline WeakComposition content(const Tree& t) {
    std::vector<int> counts;
    auto rec = [&](auto&& self, const Tree& u) -> void {
        if (u->is_leaf()) return;
        if (u->color >= 1) {
            if (static_cast<int>(counts.size()) < u->color) counts.resize(u->color, 0);
            ++counts[u->color - 1];
        }
        self(self, u->left);
        self(self, u->right);
    };
    rec(rec, t);
    return WeakComposition(std::move(counts));
}

// Subtrees rooted at internal nodes, in postorder (left, right, root).
inline std::vector<Tree> postorder_internal(const Tree& t) {
    std::vector<Tree> out;
    auto rec = [&](auto&& self, const Tree& u) -> void {
        if (u->is_leaf()) return;
        self(self, u->left);
        self(self, u->right);
        out.push_back(u);
    };
    rec(rec, t);
    return out;
}

// sgn(T) = 1 on leaves, (-1)^{|I(right)|} sgn(left) sgn(right) otherwise.
inline int tree_sign(const Tree& t) {
    if (t->is_leaf()) return 1;
    int s = tree_sign(t->left) * tree_sign(t->right);
    return internal_count(t->right) % 2 == 0 ? s : -s;
}

// Normalized: every subtree's leftmost leaf carries its minimum, i.e.
// v(x) = v(L(x)) at each internal node.
inline bool is_normalized(const Tree& t) {
    if (t->is_leaf()) return true;
    if (valency(t->left) > valency(t->right)) return false;
    return is_normalized(t->left) && is_normalized(t->right);
}

// A Lyndon node: either L(x) is a leaf or v(R(L(x))) > v(R(x)).
inline bool is_lyndon_node(const Tree& x) {
    if (x->is_leaf()) throw std::invalid_argument("is_lyndon_node: leaf");
    if (x->left->is_leaf()) return true;
    return valency(x->left->right) > valency(x->right);
}

inline void require_normalized(const Tree& t, const char* who) {
    if (!is_normalized(t)) throw std::invalid_argument(std::string(who) + ": tree not normalized");
}

// Colored Lyndon tree: normalized, and every non-Lyndon node x satisfies
// color(L(x)) > color(x).
inline bool is_colored_lyndon(const Tree& t) {
    require_normalized(t, "is_colored_lyndon");
    for (const Tree& x : postorder_internal(t))
        if (!is_lyndon_node(x) && x->left->color <= x->color) return false;
    return true;
}

// Colored comb: normalized, and every internal node x with an internal right
// child satisfies color(x) > color(R(x)).
inline bool is_colored_comb(const Tree& t) {
    require_normalized(t, "is_colored_comb");
    for (const Tree& x : postorder_internal(t))
        if (!x->right->is_leaf() && x->color <= x->right->color) return false;
    return true;
}

/// Lyndon and comb blocks of a normalized tree: the finest partitions of the
/// internal nodes where a non-Lyndon node joins its left child (Lyndon rule)
/// or an internal right child joins its parent (comb rule). Blocks are sets
/// of postorder indices (1-based); the types are the block-size partitions.
struct TreeTypeReport {
    IntegerPartition lyn_type;
    IntegerPartition comb_type;
    SetPartition lyn_blocks;
    SetPartition comb_blocks;
};

namespace detail {
// union-find over postorder indices 0..m-1
struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int m) : parent(m) {
        for (int i = 0; i < m; ++i) parent[i] = i;
    }
    int find(int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); }
    void unite(int i, int j) { parent[find(i)] = find(j); }
};

inline SetPartition dsu_blocks(Dsu& d, int m) {
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < m; ++i) groups[d.find(i)].push_back(i + 1);
    std::vector<std::vector<int>> blocks;
    for (auto& [root, members] : groups) blocks.push_back(members);
    return SetPartition(std::move(blocks));
}
}  // namespace detail

inline TreeTypeReport tree_types(const Tree& t) {
    require_normalized(t, "tree_types");
    auto nodes = postorder_internal(t);
    int m = static_cast<int>(nodes.size());
    std::map<const TreeNode*, int> index;
    for (int i = 0; i < m; ++i) index[nodes[i].get()] = i;

    detail::Dsu lyn(m), comb(m);
    for (int i = 0; i < m; ++i) {
        const Tree& x = nodes[i];
        if (!x->left->is_leaf() && !is_lyndon_node(x)) lyn.unite(i, index.at(x->left.get()));
        if (!x->right->is_leaf()) comb.unite(i, index.at(x->right.get()));
    }
    TreeTypeReport rep;
    rep.lyn_blocks = detail::dsu_blocks(lyn, m);
    rep.comb_blocks = detail::dsu_blocks(comb, m);
    rep.lyn_type = rep.lyn_blocks.shape();
    rep.comb_type = rep.comb_blocks.shape();
    return rep;
}

/// All normalized (uncolored) binary trees on a label set, enumerated by
/// splitting off the right leaf set; deterministic order.
inline std::vector<Tree> enumerate_nor(const std::vector<int>& labels) {
    if (labels.empty()) throw std::invalid_argument("enumerate_nor: empty label set");
    std::vector<int> sorted(labels);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("enumerate_nor: repeated label");

    std::map<std::vector<int>, std::vector<Tree>> memo;
    auto rec = [&](auto&& self, const std::vector<int>& set) -> const std::vector<Tree>& {
        auto it = memo.find(set);
        if (it != memo.end()) return it->second;
        std::vector<Tree> result;
        if (set.size() == 1) {
            result.push_back(leaf(set[0]));
        } else {
            // the minimum stays on the left; iterate right subsets in binary order
            int rest = static_cast<int>(set.size()) - 1;
            for (int mask = 1; mask < (1 << rest); ++mask) {
                std::vector<int> left{set[0]}, right;
                for (int i = 0; i < rest; ++i)
                    ((mask >> i) & 1 ? right : left).push_back(set[i + 1]);
                for (const Tree& l : self(self, left))
                    for (const Tree& r : self(self, right)) result.push_back(node(0, l, r));
            }
        }
        return memo[set] = std::move(result);
    };
    return rec(rec, sorted);
}

namespace detail {
/// Color the given blocks of internal nodes with sets of distinct colors so
/// the total content is mu, calling sink once per complete assignment with
/// colors[i] = color of the node with postorder index i. Within a block the
/// placement is forced: the node listed first receives the smallest color.
inline void assign_block_colors(const std::vector<std::vector<int>>& blocks,
                                const WeakComposition& mu,
                                const std::function<void(const std::vector<int>&)>& sink) {
    int k = mu.max_support();
    std::vector<int> remaining(k + 1, 0);
    for (int j = 1; j <= k; ++j) remaining[j] = mu.part(j);
    int m = 0;
    for (const auto& b : blocks) m += static_cast<int>(b.size());
    std::vector<int> colors(m + 1, 0);

    auto rec = [&](auto&& self, size_t bi) -> void {
        if (bi == blocks.size()) {
            sink(colors);
            return;
        }
        const auto& block = blocks[bi];
        int need = static_cast<int>(block.size());
        // choose an increasing sequence of colors c_1 < ... < c_need from the
        // remaining supply; node nearest the root gets the smallest
        std::vector<int> chosen;
        auto choose = [&](auto&& pick, int next_color) -> void {
            if (static_cast<int>(chosen.size()) == need) {
                for (int i = 0; i < need; ++i) colors[block[i]] = chosen[i];
                self(self, bi + 1);
                return;
            }
            for (int c = next_color; c <= k; ++c) {
                if (remaining[c] == 0) continue;
                --remaining[c];
                chosen.push_back(c);
                pick(pick, c + 1);
                chosen.pop_back();
                ++remaining[c];
            }
        };
        choose(choose, 1);
    };
    rec(rec, 0);
}

inline Tree recolor(const Tree& t, const std::vector<int>& colors, int& counter) {
    if (t->is_leaf()) return t;
    Tree l = recolor(t->left, colors, counter);
    Tree r = recolor(t->right, colors, counter);
    ++counter;
    return node(colors[counter], l, r);
}
}  // namespace detail

/// Block node orderings for coloring. Within a block, position 0 receives the
/// smallest color. A parent follows its children in postorder, so the
/// root-side end of a block is its highest postorder index. Lyndon blocks are
/// colored decreasing toward the root (root-side node smallest); comb blocks
/// decrease down the right chain (root-side node largest).
inline std::vector<std::vector<int>> blocks_root_first(const SetPartition& blocks) {
    std::vector<std::vector<int>> out;
    for (const auto& b : blocks.blocks()) {
        std::vector<int> idx(b);
        std::sort(idx.begin(), idx.end(), std::greater<int>());
        out.push_back(idx);
    }
    return out;
}

inline std::vector<std::vector<int>> blocks_root_last(const SetPartition& blocks) {
    std::vector<std::vector<int>> out;
    for (const auto& b : blocks.blocks()) {
        std::vector<int> idx(b);
        std::sort(idx.begin(), idx.end());
        out.push_back(idx);
    }
    return out;
}

/// Colored Lyndon trees of content mu on ground set [|mu|+1]: color each
/// Lyndon block of each normalized tree with a set of distinct colors,
/// decreasing toward the root.
inline std::vector<Tree> enumerate_lyn(const WeakComposition& mu) {
    int n = mu.size() + 1;
    std::vector<int> ground(n);
    for (int i = 0; i < n; ++i) ground[i] = i + 1;
    std::vector<Tree> out;
    for (const Tree& t : enumerate_nor(ground)) {
        auto rep = tree_types(t);
        auto blocks = blocks_root_first(rep.lyn_blocks);
        detail::assign_block_colors(blocks, mu, [&](const std::vector<int>& colors) {
            int counter = 0;
            out.push_back(detail::recolor(t, colors, counter));
        });
    }
    return out;
}

/// Colored combs of content mu, colored along comb blocks (right chains),
/// decreasing away from the block's top node.
inline std::vector<Tree> enumerate_comb(const WeakComposition& mu) {
    int n = mu.size() + 1;
    std::vector<int> ground(n);
    for (int i = 0; i < n; ++i) ground[i] = i + 1;
    std::vector<Tree> out;
    for (const Tree& t : enumerate_nor(ground)) {
        auto rep = tree_types(t);
        auto blocks = blocks_root_last(rep.comb_blocks);
        detail::assign_block_colors(blocks, mu, [&](const std::vector<int>& colors) {
            int counter = 0;
            out.push_back(detail::recolor(t, colors, counter));
        });
    }
    return out;
}

/// Bracket notation: expr := label | "[" expr "," expr "]" "_" color.
/// Uncolored nodes (color 0) print without the color suffix.
inline std::string tree_to_string(const Tree& t) {
    if (t->is_leaf()) return std::to_string(t->label);
    std::string s = "[" + tree_to_string(t->left) + "," + tree_to_string(t->right) + "]";
    if (t->color >= 1) s += "_" + std::to_string(t->color);
    return s;
}

struct parse_error : std::runtime_error {
    size_t position;
    parse_error(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

inline Tree parse_tree(const std::string& text) {
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_int = [&]() -> int {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw parse_error("expected integer", pos);
        return std::stoi(text.substr(start, pos - start));
    };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw parse_error(std::string("expected '") + c + "'", pos);
        ++pos;
    };
    auto rec = [&](auto&& self) -> Tree {
        skip_ws();
        if (pos < text.size() && text[pos] == '[') {
            ++pos;
            Tree l = self(self);
            expect(',');
            Tree r = self(self);
            expect(']');
            expect('_');
            int color = parse_int();
            if (color < 1) throw parse_error("color must be >= 1", pos);
            return node(color, l, r);
        }
        return leaf(parse_int());
    };
    Tree t = rec(rec);
    skip_ws();
    if (pos != text.size()) throw parse_error("trailing input", pos);
    std::vector<int> labels;
    collect_leaf_labels(t, labels);
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        throw parse_error("duplicate leaf label", text.size());
    return t;
}

}  // namespace multilie
