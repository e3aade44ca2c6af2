#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "el_shelling.hpp"
#include "linalg.hpp"
#include "poset.hpp"

namespace multilie {

/// A cohomology class in the top chain space: rational coefficients on
/// indexed maximal chains of the open rank window.
using ChainVec = std::map<int, Rat>;

/// Presentation of the top reduced cohomology of the order complex of the
/// elements with ranks in [lo, hi] of a graded poset chunk: the span of the
/// rank-complete chains modulo the coboundary images of the once-gapped
/// chains. For an open interval (x, y) of length >= 2 the window is the
/// interior ranks; a window of width 0 encodes the (-1)-dimensional reduced
/// cohomology of the empty complex.
class CohomologyPresentation {
public:
    CohomologyPresentation(const PosetInterval& I, int lo, int hi) : I_(&I), lo_(lo), hi_(hi) {
        std::vector<int> prefix;
        enumerate_full(prefix, lo_);
        for (size_t i = 0; i < chains_.size(); ++i) chain_ids_[chains_[i]] = static_cast<int>(i);
        build_relations();
    }

    /// Open interval (x, y) inside I.
    static CohomologyPresentation open_interval(const PosetInterval& I, int x, int y) {
        return CohomologyPresentation(I, I.rank(x) + 1, I.rank(y) - 1, x, y);
    }

    int chain_count() const { return static_cast<int>(chains_.size()); }
    int relation_rank() const { return relations_.rank(); }
    Int dimension() const { return Int(chain_count()) - relation_rank(); }

    int chain_id(const std::vector<int>& elems) const {
        auto it = chain_ids_.find(elems);
        if (it == chain_ids_.end())
            throw std::invalid_argument("CohomologyPresentation: unknown chain");
        return it->second;
    }

    const std::vector<std::vector<int>>& chains() const { return chains_; }

    bool in_coboundary_span(const ChainVec& v) const { return relations_.contains(to_sparse_row(v)); }

    /// True iff the vectors are linearly independent modulo the coboundary
    /// relations and their count equals the dimension.
    bool verify_basis(const std::vector<ChainVec>& vecs) const {
        if (Int(vecs.size()) != dimension()) return false;
        return independent_mod_relations(vecs) == static_cast<int>(vecs.size());
    }

    /// True iff the vectors span the quotient.
    bool spans(const std::vector<ChainVec>& vecs) const {
        SparseEchelon e = relations_;
        for (const auto& v : vecs) e.add_row(to_sparse_row(v));
        return e.rank() == chain_count();
    }

    int independent_mod_relations(const std::vector<ChainVec>& vecs) const {
        SparseEchelon e = relations_;
        int count = 0;
        for (const auto& v : vecs)
            if (e.add_row(to_sparse_row(v))) ++count;
        return count;
    }

    /// Sparse triplet export of the relation matrix rows (echelonized):
    /// "row col value" lines.
    std::string export_triplets() const {
        std::string out;
        int row = 0;
        for (const auto& [lead, r] : relations_.pivots()) {
            for (const auto& [col, val] : r)
                out += std::to_string(row) + " " + std::to_string(col) + " " + val.str() + "\n";
            ++row;
        }
        return out;
    }

private:
    CohomologyPresentation(const PosetInterval& I, int lo, int hi, int bottom, int top)
        : I_(&I), lo_(lo), hi_(hi), bottom_(bottom), top_(top) {
        std::vector<int> prefix;
        enumerate_full(prefix, lo_);
        for (size_t i = 0; i < chains_.size(); ++i) chain_ids_[chains_[i]] = static_cast<int>(i);
        build_relations();
    }

    bool admissible(int id) const {
        if (bottom_ && !I_->leq(*bottom_, id)) return false;
        if (top_ && !I_->leq(id, *top_)) return false;
        return true;
    }

    bool window_leq(int x, int y) const { return I_->leq(x, y); }

    void enumerate_full(std::vector<int>& prefix, int next_rank) {
        if (next_rank > hi_) {
            chains_.push_back(prefix);
            return;
        }
        for (int id : I_->elements_of_rank(next_rank)) {
            if (!admissible(id)) continue;
            if (!prefix.empty() && !window_leq(prefix.back(), id)) continue;
            prefix.push_back(id);
            enumerate_full(prefix, next_rank + 1);
            prefix.pop_back();
        }
    }

    void build_relations() {
        // one relation per once-gapped chain: the sum of its completions
        // (the boundary position is fixed by the gap rank, so signs are
        // constant along a row and drop out)
        if (hi_ < lo_) return;  // empty window: single empty chain, no relations
        for (int gap = lo_; gap <= hi_; ++gap) {
            std::vector<int> prefix;
            enumerate_gapped(prefix, lo_, gap);
        }
    }

    void enumerate_gapped(std::vector<int>& prefix, int next_rank, int gap) {
        if (next_rank > hi_) {
            ChainVec row;
            // completions: insert any admissible z at the gap rank
            for (int z : I_->elements_of_rank(gap)) {
                if (!admissible(z)) continue;
                size_t pos = gap - lo_;
                if (pos > 0 && !window_leq(prefix[pos - 1], z)) continue;
                if (pos < prefix.size() && !window_leq(z, prefix[pos])) continue;
                std::vector<int> full(prefix);
                full.insert(full.begin() + pos, z);
                row[chain_ids_.at(full)] += 1;
            }
            if (!row.empty()) relations_.add_row(to_sparse_row(row));
            return;
        }
        if (next_rank == gap) {
            enumerate_gapped(prefix, next_rank + 1, gap);
            return;
        }
        for (int id : I_->elements_of_rank(next_rank)) {
            if (!admissible(id)) continue;
            // across the gap, comparability at rank distance 2 suffices
            if (!prefix.empty() && !window_leq(prefix.back(), id)) continue;
            prefix.push_back(id);
            enumerate_gapped(prefix, next_rank + 1, gap);
            prefix.pop_back();
        }
    }

    const PosetInterval* I_;
    int lo_, hi_;
    std::optional<int> bottom_, top_;
    std::vector<std::vector<int>> chains_;
    std::map<std::vector<int>, int> chain_ids_;
    SparseEchelon relations_;
};

/// dim of the top reduced cohomology of the open interval (bottom, top) of a
/// maximal interval, including the degenerate conventions: an empty open part
/// contributes 1 (reduced degree -1), an antichain of atoms contributes
/// (#atoms - 1).
inline Int top_cohomology_dim(const PosetInterval& I) {
    auto pres = CohomologyPresentation::open_interval(I, I.bottom(), I.top());
    return pres.dimension();
}

/// Embed the chain c(T, sigma, tau) of the interval I as a unit vector.
inline ChainVec chain_class(const CohomologyPresentation& pres, const PosetInterval& I,
                            const Tree& t, const Permutation& tau) {
    MaximalChain c = chain_from_tree(I, t, tau);
    std::vector<int> open(c.elems.begin() + 1, c.elems.end() - 1);
    return {{pres.chain_id(open), Rat(1)}};
}

inline ChainVec chain_class(const CohomologyPresentation& pres, const PosetInterval& I,
                            const Tree& t) {
    return chain_class(pres, I, t, Permutation::identity(internal_count(t)));
}

/// c(T, sigma, tau) - sgn(tau) c(T, sigma) must lie in the coboundary span.
inline bool lemma_sign_check(const CohomologyPresentation& pres, const PosetInterval& I,
                             const Tree& t, const Permutation& tau) {
    ChainVec v = chain_class(pres, I, t, tau);
    ChainVec w = chain_class(pres, I, t);
    for (auto& [id, c] : w) v[id] -= Rat(tau.sign()) * c;
    return pres.in_coboundary_span(v);
}

/// phi([T, sigma]) = sgn(sigma) sgn(T) c(T, sigma) as a chain vector.
inline ChainVec phi_map(const CohomologyPresentation& pres, const PosetInterval& I,
                        const Tree& t) {
    int s = leaf_word(t).sign() * tree_sign(t);
    ChainVec v = chain_class(pres, I, t);
    for (auto& [id, c] : v) c *= s;
    return v;
}

/// --- straightening to the colored Lyndon basis -------------------------
///
/// Rewrites a chain class as a combination of classes of colored Lyndon
/// trees using only the presentation's cohomology relations:
///   swap:      c(a(Y1 ^j Y2)b)  =  (-1)^{|I(Y1)||I(Y2)|} c(a(Y2 ^j Y1)b)
///   same j:    c(a((Y1 ^j Y2) ^j Y3)b) resolves against the Jacobi-shaped
///              three-term relation
///   mixed i<j: six-term relation
/// Each step strictly decreases the (valency inversions, coloring inversions)
/// pair, so the rewriting terminates.

using TreeCombo = std::map<Tree, Rat, TreeLess>;

namespace detail {
// Apply f to the subtree at `path` (0 = left, 1 = right), rebuilding the spine.
inline Tree replace_at(const Tree& t, const std::vector<int>& path, size_t depth,
                       const std::function<Tree(const Tree&)>& f) {
    if (depth == path.size()) return f(t);
    if (path[depth] == 0) return node(t->color, replace_at(t->left, path, depth + 1, f), t->right);
    return node(t->color, t->left, replace_at(t->right, path, depth + 1, f));
}

// Find a path to a non-normalized node (v(L) > v(R)), if any.
inline bool find_unnormalized(const Tree& t, std::vector<int>& path) {
    if (t->is_leaf()) return false;
    if (valency(t->left) > valency(t->right)) return true;
    path.push_back(0);
    if (find_unnormalized(t->left, path)) return true;
    path.pop_back();
    path.push_back(1);
    if (find_unnormalized(t->right, path)) return true;
    path.pop_back();
    return false;
}

// Find a path to a node of shape (Y1 ^i Y2) ^j Y3 with v(Y2) < v(Y3), i <= j
// (a witness that the normalized tree is not colored Lyndon).
inline bool find_straightening_site(const Tree& t, std::vector<int>& path) {
    if (t->is_leaf()) return false;
    if (!t->left->is_leaf() && valency(t->left->right) < valency(t->right) &&
        t->left->color <= t->color)
        return true;
    path.push_back(0);
    if (find_straightening_site(t->left, path)) return true;
    path.pop_back();
    path.push_back(1);
    if (find_straightening_site(t->right, path)) return true;
    path.pop_back();
    return false;
}
}  // namespace detail

inline TreeCombo straighten_to_lyndon(const Tree& input) {
    TreeCombo pending;
    pending[input] = 1;
    TreeCombo done;

    while (!pending.empty()) {
        auto it = pending.begin();
        Tree t = it->first;
        Rat coef = it->second;
        pending.erase(it);
        if (coef == 0) continue;

        std::vector<int> path;
        if (detail::find_unnormalized(t, path)) {
            // swap relation
            Tree sub = t;
            for (int step : path) sub = step == 0 ? sub->left : sub->right;
            int sign = (internal_count(sub->left) * internal_count(sub->right)) % 2 == 0 ? 1 : -1;
            Tree replaced = detail::replace_at(t, path, 0, [](const Tree& u) {
                return node(u->color, u->right, u->left);
            });
            pending[replaced] += coef * sign;
            continue;
        }

        if (is_colored_lyndon(t)) {
            done[t] += coef;
            continue;
        }

        path.clear();
        if (!detail::find_straightening_site(t, path))
            throw std::logic_error("straighten: normalized non-Lyndon tree without site");
        Tree sub = t;
        for (int step : path) sub = step == 0 ? sub->left : sub->right;
        Tree y1 = sub->left->left, y2 = sub->left->right, y3 = sub->right;
        int i = sub->left->color, j = sub->color;
        int e1 = internal_count(y1), e2 = internal_count(y2), e3 = internal_count(y3);
        Rat s12 = (e1 * e2) % 2 == 0 ? 1 : -1;
        Rat s3 = e3 % 2 == 0 ? 1 : -1;

        std::vector<std::pair<Tree, Rat>> rewrite;
        if (i == j) {
            // c((Y1 ^j Y2) ^j Y3) = -s3 [ c(Y1 ^j (Y2 ^j Y3)) + s12 c(Y2 ^j (Y1 ^j Y3)) ]
            rewrite.emplace_back(node(j, y1, node(j, y2, y3)), -s3 * coef);
            rewrite.emplace_back(node(j, y2, node(j, y1, y3)), -s3 * s12 * coef);
        } else {
            // c((Y1 ^i Y2) ^j Y3) = - c((Y1 ^j Y2) ^i Y3)
            //   - s3 [ c(Y1 ^j (Y2 ^i Y3)) + c(Y1 ^i (Y2 ^j Y3)) ]
            //   - s3 s12 [ c(Y2 ^j (Y1 ^i Y3)) + c(Y2 ^i (Y1 ^j Y3)) ]
            rewrite.emplace_back(node(i, node(j, y1, y2), y3), -coef);
            rewrite.emplace_back(node(j, y1, node(i, y2, y3)), -s3 * coef);
            rewrite.emplace_back(node(i, y1, node(j, y2, y3)), -s3 * coef);
            rewrite.emplace_back(node(j, y2, node(i, y1, y3)), -s3 * s12 * coef);
            rewrite.emplace_back(node(i, y2, node(j, y1, y3)), -s3 * s12 * coef);
        }
        for (auto& [replacement, c] : rewrite) {
            Tree whole = detail::replace_at(
                t, path, 0, [&replacement](const Tree&) { return replacement; });
            pending[whole] += c;
        }
    }

    for (auto it = done.begin(); it != done.end();)
        it = it->second == 0 ? done.erase(it) : std::next(it);
    return done;
}

/// Expand a tree combo into the chain space of a presentation.
inline ChainVec combo_to_chain_vec(const CohomologyPresentation& pres, const PosetInterval& I,
                                   const TreeCombo& combo) {
    ChainVec v;
    for (const auto& [t, c] : combo) {
        ChainVec u = chain_class(pres, I, t);
        for (auto& [id, x] : u) v[id] += c * x;
    }
    return v;
}

/// Cohomology of the full poset minus its minimum: chains run over ranks
/// 1..n-1 and hit one of the many maximal elements; the extra coboundary
/// relations at the top rank tie the colors together.
struct FullPosetCohomology {
    Int dimension = 0;
    bool lyndon_root_basis_ok = false;  // {c(T): T Lyndon, root color != 1}
    bool comb_root_spans = false;       // {c(T): T comb, root color != k}
    bool comb_root_independent = false; // the conjectural basis property
};

inline FullPosetCohomology full_poset_cohomology(int n, int k, int bound = 4) {
    if (n > bound) throw bound_exceeded("full_poset_cohomology: n exceeds enumeration bound");
    PosetInterval P = build_full_poset(n, k);
    CohomologyPresentation pres(P, 1, n - 1);

    auto collect = [&](const std::vector<Tree>& trees, int banned_root_color) {
        std::vector<ChainVec> vecs;
        for (const Tree& t : trees) {
            if (t->color == banned_root_color) continue;
            MaximalChain c = chain_from_tree(P, t);
            std::vector<int> open(c.elems.begin() + 1, c.elems.end());  // keep the top
            vecs.push_back({{pres.chain_id(open), Rat(1)}});
        }
        return vecs;
    };

    std::vector<Tree> lyn, comb;
    for (const WeakComposition& mu : weak_compositions(n - 1, k)) {
        for (const Tree& t : enumerate_lyn(mu)) lyn.push_back(t);
        for (const Tree& t : enumerate_comb(mu)) comb.push_back(t);
    }

    FullPosetCohomology out;
    out.dimension = pres.dimension();
    auto lyn_vecs = collect(lyn, 1);
    auto comb_vecs = collect(comb, k);
    out.lyndon_root_basis_ok = pres.verify_basis(lyn_vecs);
    out.comb_root_spans = pres.spans(comb_vecs);
    out.comb_root_independent =
        pres.independent_mod_relations(comb_vecs) == static_cast<int>(comb_vecs.size());
    return out;
}

}  // namespace multilie
