#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "colored_trees.hpp"
#include "permutations.hpp"
#include "poset.hpp"

namespace multilie {

/// Edge label (a, b)^color of the EL-labeling: a and b are the minima of the
/// merged blocks (a < b), color the added unit weight. The edge into the
/// artificial top is (1, n+1)^1.
struct EdgeLabel {
    int a = 0;
    int b = 0;
    int color = 0;

    auto operator<=>(const EdgeLabel&) const = default;
};

/// Partial order of the label poset: the ordinal sum over a of the grids
/// {(a,b)^u}, so labels with distinct a compare by a alone, and within equal
/// a componentwise on (b, color).
inline bool label_leq(const EdgeLabel& p, const EdgeLabel& q) {
    if (p.a != q.a) return p.a < q.a;
    return p.b <= q.b && p.color <= q.color;
}

inline bool label_lt(const EdgeLabel& p, const EdgeLabel& q) { return label_leq(p, q) && p != q; }

inline std::string to_string(const EdgeLabel& l) {
    return "(" + std::to_string(l.a) + "," + std::to_string(l.b) + ")^" + std::to_string(l.color);
}

/// Label of a cover x <. y in the interval (y may be the artificial top).
inline EdgeLabel edge_label(const PosetInterval& I, int x, int y) {
    if (I.is_artificial(y)) {
        if (I.element(x).block_count() != 1)
            throw std::invalid_argument("edge_label: only one-block elements are covered by the top");
        return {1, static_cast<int>(I.ground().size()) + 1, 1};
    }
    const WeightedPartition& a = I.element(x);
    const WeightedPartition& b = I.element(y);
    if (a.rank() + 1 != b.rank() || !wp_leq(a, b))
        throw std::invalid_argument("edge_label: not a cover");
    // find the merged block of b and the two a-blocks inside it
    for (const auto& [bl, bw] : b.blocks()) {
        std::vector<int> mins;
        WeakComposition inner;
        for (const auto& [al, aw] : a.blocks())
            if (std::includes(bl.begin(), bl.end(), al.begin(), al.end())) {
                mins.push_back(al.front());
                inner = composition_add(inner, aw);
            }
        if (mins.size() == 2) {
            WeakComposition diff = composition_sub(bw, inner);
            return {std::min(mins[0], mins[1]), std::max(mins[0], mins[1]), diff.support().front()};
        }
    }
    throw std::logic_error("edge_label: cover without a merged pair");
}

/// A saturated chain from x to y with its induced label word.
struct MaximalChain {
    std::vector<int> elems;
    std::vector<EdgeLabel> labels;

    auto operator<=>(const MaximalChain&) const = default;
};

inline std::vector<MaximalChain> all_maximal_chains(const PosetInterval& I, int x, int y) {
    std::vector<MaximalChain> out;
    MaximalChain cur;
    cur.elems.push_back(x);
    auto rec = [&](auto&& self, int u) -> void {
        if (u == y) {
            out.push_back(cur);
            return;
        }
        for (int c : I.covers_of(u)) {
            if (!I.leq(c, y)) continue;
            cur.elems.push_back(c);
            cur.labels.push_back(edge_label(I, u, c));
            self(self, c);
            cur.elems.pop_back();
            cur.labels.pop_back();
        }
    };
    if (I.leq(x, y)) rec(rec, x);
    return out;
}

inline bool is_increasing(const std::vector<EdgeLabel>& word) {
    for (size_t i = 0; i + 1 < word.size(); ++i)
        if (!label_lt(word[i], word[i + 1])) return false;
    return true;
}

inline bool is_ascent_free(const std::vector<EdgeLabel>& word) {
    for (size_t i = 0; i + 1 < word.size(); ++i)
        if (label_lt(word[i], word[i + 1])) return false;
    return true;
}

/// u lexicographically precedes w when at the first differing position the
/// label of u lies strictly below that of w in the label poset. With a
/// partially ordered label set this is only a partial preference; verify_el
/// demands that the increasing chain strictly precedes every other chain.
inline bool lex_precedes(const std::vector<EdgeLabel>& u, const std::vector<EdgeLabel>& w) {
    for (size_t i = 0; i < std::min(u.size(), w.size()); ++i) {
        if (u[i] == w[i]) continue;
        return label_lt(u[i], w[i]);
    }
    return false;
}

struct ElReport {
    bool ok = true;
    std::string counterexample;
};

/// EL-labeling check: every closed subinterval [x, y] has exactly one maximal
/// chain with strictly increasing label word, and that chain lexicographically
/// precedes every other maximal chain of [x, y].
inline ElReport verify_el(const PosetInterval& I) {
    auto describe = [&](int x, int y) {
        std::string sx = I.is_artificial(x) ? "1^" : to_string(I.element(x), I.k());
        std::string sy = I.is_artificial(y) ? "1^" : to_string(I.element(y), I.k());
        return "[" + sx + ", " + sy + "]";
    };
    for (int x = 0; x < I.size(); ++x)
        for (int y = 0; y < I.size(); ++y) {
            if (!I.leq(x, y) || x == y || I.rank(y) - I.rank(x) < 2) continue;
            auto chains = all_maximal_chains(I, x, y);
            int increasing = -1;
            for (size_t i = 0; i < chains.size(); ++i)
                if (is_increasing(chains[i].labels)) {
                    if (increasing >= 0)
                        return {false, "two increasing chains in " + describe(x, y)};
                    increasing = static_cast<int>(i);
                }
            if (increasing < 0) return {false, "no increasing chain in " + describe(x, y)};
            for (size_t i = 0; i < chains.size(); ++i) {
                if (static_cast<int>(i) == increasing) continue;
                if (!lex_precedes(chains[increasing].labels, chains[i].labels))
                    return {false, "increasing chain not lex-first in " + describe(x, y)};
            }
        }
    return {};
}

/// Ascent-free maximal chains of a bounded interval (bottom to top).
inline std::vector<MaximalChain> ascent_free_chains(const PosetInterval& I) {
    std::vector<MaximalChain> out;
    for (auto& c : all_maximal_chains(I, I.bottom(), I.top()))
        if (is_ascent_free(c.labels)) out.push_back(std::move(c));
    return out;
}

/// tau (a permutation of postorder positions) induces a linear extension of
/// the internal nodes iff every node is merged after its internal children.
inline bool is_linear_extension(const Tree& t, const Permutation& tau) {
    auto nodes = postorder_internal(t);
    int m = static_cast<int>(nodes.size());
    if (tau.size() != m) return false;
    std::map<const TreeNode*, int> time;
    for (int i = 1; i <= m; ++i) {
        if (tau(i) < 1 || tau(i) > m) return false;
        time[nodes[tau(i) - 1].get()] = i;
    }
    for (const Tree& x : nodes)
        for (const Tree& child : {x->left, x->right})
            if (!child->is_leaf() && time.at(child.get()) > time.at(x.get())) return false;
    return true;
}

/// The chain c(T, sigma, tau): merge the blocks under the internal nodes of T
/// in the order given by the linear extension tau of the postorder listing.
/// tau = identity is postorder itself.
inline MaximalChain chain_from_tree(const PosetInterval& I, const Tree& t,
                                    const Permutation& tau) {
    auto nodes = postorder_internal(t);
    int m = static_cast<int>(nodes.size());
    if (tau.size() != m) throw std::invalid_argument("chain_from_tree: extension has wrong size");
    // a node must not be merged before any node in its subtree
    std::map<const TreeNode*, int> position;  // postorder index -> merge time
    for (int time = 1; time <= m; ++time) {
        int idx = tau(time);
        if (idx < 1 || idx > m) throw std::invalid_argument("chain_from_tree: bad extension");
        position[nodes[idx - 1].get()] = time;
    }
    for (int i = 0; i < m; ++i) {
        const Tree& x = nodes[i];
        for (const Tree& child : {x->left, x->right})
            if (!child->is_leaf() && position.at(child.get()) > position.at(x.get()))
                throw std::invalid_argument("chain_from_tree: not a linear extension");
    }

    MaximalChain chain;
    WeightedPartition cur = WeightedPartition::discrete(I.ground());
    chain.elems.push_back(I.require(cur));
    for (int time = 1; time <= m; ++time) {
        const Tree& x = nodes[tau(time) - 1];
        std::vector<int> left_labels, right_labels;
        collect_leaf_labels(x->left, left_labels);
        collect_leaf_labels(x->right, right_labels);
        std::sort(left_labels.begin(), left_labels.end());
        std::sort(right_labels.begin(), right_labels.end());
        std::vector<WeightedPartition::Block> blocks;
        std::vector<int> merged_labels;
        WeakComposition merged_weight = unit_composition(x->color);
        for (const auto& [bl, bw] : cur.blocks()) {
            if (bl == left_labels || bl == right_labels) {
                merged_labels.insert(merged_labels.end(), bl.begin(), bl.end());
                merged_weight = composition_add(merged_weight, bw);
            } else {
                blocks.push_back({bl, bw});
            }
        }
        if (static_cast<int>(merged_labels.size()) !=
            static_cast<int>(left_labels.size() + right_labels.size()))
            throw std::logic_error("chain_from_tree: blocks not present at merge time");
        blocks.push_back({merged_labels, merged_weight});
        cur = WeightedPartition(std::move(blocks));
        int id = I.require(cur);
        chain.labels.push_back(edge_label(I, chain.elems.back(), id));
        chain.elems.push_back(id);
    }
    return chain;
}

inline MaximalChain chain_from_tree(const PosetInterval& I, const Tree& t) {
    return chain_from_tree(I, t, Permutation::identity(internal_count(t)));
}

/// The unique linear extension of the internal nodes along which valencies
/// weakly decrease; ties (equal valencies along a left spine) are forced,
/// child before parent, which in postorder position means smaller index
/// first.
inline Permutation decreasing_extension(const Tree& t) {
    auto nodes = postorder_internal(t);
    int m = static_cast<int>(nodes.size());
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i + 1;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        int va = valency(nodes[a - 1]), vb = valency(nodes[b - 1]);
        if (va != vb) return va > vb;
        return a < b;
    });
    return Permutation(std::move(order));
}

}  // namespace multilie
