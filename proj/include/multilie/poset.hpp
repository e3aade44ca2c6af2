#pragma once

#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "polynomial.hpp"
#include "weighted_partition.hpp"

namespace multilie {

/// An interned, graded chunk of the weighted partition poset: either a closed
/// interval [bottom, top], the whole poset over a ground set, or either of
/// those with an artificial maximum added. Elements are stored by id with
/// precomputed covers and order relation so chain and Moebius computations
/// are table lookups.
class PosetInterval {
public:
    /// Closed interval [0^, [ground]^mu].
    static PosetInterval interval(const std::vector<int>& ground, const WeakComposition& mu,
                                  int k) {
        if (mu.size() != static_cast<int>(ground.size()) - 1)
            throw std::invalid_argument("PosetInterval: |mu| must be |ground| - 1");
        if (mu.max_support() > k) k = mu.max_support();
        WeightedPartition top = WeightedPartition::one_block(ground, mu);
        PosetInterval I;
        I.k_ = k;
        I.build(ground, k, &top);
        return I;
    }

    /// The whole poset Pi_n^k over a ground set (no artificial top).
    static PosetInterval full_poset(const std::vector<int>& ground, int k) {
        PosetInterval I;
        I.k_ = k;
        I.build(ground, k, nullptr);
        return I;
    }

    /// Same, extended by an artificial maximum covering every one-block
    /// element; edge labels to it are (1, n+1)^1.
    static PosetInterval full_poset_with_top(const std::vector<int>& ground, int k) {
        PosetInterval I = full_poset(ground, k);
        int top = I.size();
        I.elems_.push_back(WeightedPartition());  // sentinel
        I.artificial_top_ = top;
        I.rank_.push_back(static_cast<int>(ground.size()));
        I.max_rank_ = static_cast<int>(ground.size());
        I.covers_.emplace_back();
        I.leq_.emplace_back(I.size(), 0);
        for (int x = 0; x < top; ++x) {
            I.leq_[x].resize(I.size(), 0);
            I.leq_[x][top] = 1;
            if (I.elems_[x].block_count() == 1) I.covers_[x].push_back(top);
        }
        I.leq_[top][top] = 1;
        return I;
    }

    int size() const { return static_cast<int>(elems_.size()); }
    int k() const { return k_; }
    int bottom() const { return 0; }
    std::optional<int> artificial_top() const { return artificial_top_; }
    bool is_artificial(int id) const { return artificial_top_ && *artificial_top_ == id; }
    const WeightedPartition& element(int id) const {
        if (is_artificial(id)) throw std::invalid_argument("element: artificial top");
        return elems_[id];
    }
    int rank(int id) const { return rank_[id]; }
    int length() const { return max_rank_; }
    const std::vector<int>& covers_of(int id) const { return covers_[id]; }
    bool leq(int x, int y) const { return leq_[x][y] != 0; }
    const std::vector<int>& ground() const { return ground_; }

    int find(const WeightedPartition& wp) const {
        auto it = index_.find(wp);
        return it == index_.end() ? -1 : it->second;
    }

    int require(const WeightedPartition& wp) const {
        int id = find(wp);
        if (id < 0) throw std::invalid_argument("PosetInterval: element not in interval");
        return id;
    }

    std::vector<int> elements_of_rank(int r) const {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (rank_[i] == r) out.push_back(i);
        return out;
    }

    // Unique maximal element id (the top of a closed interval, or the
    // artificial top); throws if ambiguous.
    int top() const {
        if (artificial_top_) return *artificial_top_;
        std::vector<int> tops = elements_of_rank(max_rank_);
        if (tops.size() != 1) throw std::logic_error("PosetInterval: no unique top");
        return tops[0];
    }

private:
    void build(const std::vector<int>& ground, int k, const WeightedPartition* top) {
        ground_ = ground;
        WeightedPartition bottom = WeightedPartition::discrete(ground);
        auto add = [&](const WeightedPartition& wp) {
            auto it = index_.find(wp);
            if (it != index_.end()) return it->second;
            int id = size();
            index_.emplace(wp, id);
            elems_.push_back(wp);
            rank_.push_back(wp.rank());
            covers_.emplace_back();
            return id;
        };
        add(bottom);
        std::queue<int> work;
        work.push(0);
        std::vector<bool> expanded;
        while (!work.empty()) {
            int id = work.front();
            work.pop();
            if (static_cast<int>(expanded.size()) <= id) expanded.resize(id + 1, false);
            if (expanded[id]) continue;
            expanded[id] = true;
            WeightedPartition cur = elems_[id];  // copy: elems_ may reallocate
            for (const WeightedPartition& c : wp_covers(cur, k)) {
                if (top && !wp_leq(c, *top)) continue;
                bool fresh = index_.find(c) == index_.end();
                int cid = add(c);
                covers_[id].push_back(cid);
                if (fresh) work.push(cid);
            }
        }
        max_rank_ = 0;
        for (int r : rank_) max_rank_ = std::max(max_rank_, r);
        // transitive closure over covers, by decreasing rank
        leq_.assign(size(), std::vector<char>(size(), 0));
        std::vector<int> order(size());
        for (int i = 0; i < size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) { return rank_[a] > rank_[b]; });
        for (int x : order) {
            leq_[x][x] = 1;
            for (int c : covers_[x])
                for (int y = 0; y < size(); ++y)
                    if (leq_[c][y]) leq_[x][y] = 1;
        }
    }

    int k_ = 1;
    int max_rank_ = 0;
    std::vector<int> ground_;
    std::vector<WeightedPartition> elems_;
    std::vector<int> rank_;
    std::vector<std::vector<int>> covers_;
    std::vector<std::vector<char>> leq_;
    std::map<WeightedPartition, int> index_;
    std::optional<int> artificial_top_;
};

inline PosetInterval build_interval(int n, const WeakComposition& mu, int k = 0) {
    std::vector<int> ground(n);
    for (int i = 0; i < n; ++i) ground[i] = i + 1;
    return PosetInterval::interval(ground, mu, std::max(k, mu.max_support()));
}

inline PosetInterval build_full_poset(int n, int k) {
    std::vector<int> ground(n);
    for (int i = 0; i < n; ++i) ground[i] = i + 1;
    return PosetInterval::full_poset(ground, k);
}

/// Moebius function values mu^(x, y) for all y >= x, by the standard
/// recursion sum_{x <= z <= y} mu^(x, z) = delta_{x,y}.
inline std::map<int, Int> mobius_from(const PosetInterval& I, int x) {
    std::map<int, Int> mob;
    std::vector<int> ups;
    for (int y = 0; y < I.size(); ++y)
        if (I.leq(x, y)) ups.push_back(y);
    std::sort(ups.begin(), ups.end(), [&](int a, int b) { return I.rank(a) < I.rank(b); });
    for (int y : ups) {
        Int s = 0;
        for (int z : ups)
            if (I.leq(z, y) && z != y) s += mob[z];
        mob[y] = (y == x) ? Int(1) : -s;
    }
    return mob;
}

inline Int mobius(const PosetInterval& I, int x, int y) {
    if (!I.leq(x, y)) return 0;
    return mobius_from(I, x).at(y);
}

/// mu^(x, y) for all x <= y at once, by the dual recursion.
inline std::map<int, Int> mobius_to(const PosetInterval& I, int y) {
    std::map<int, Int> mob;
    std::vector<int> downs;
    for (int x = 0; x < I.size(); ++x)
        if (I.leq(x, y)) downs.push_back(x);
    std::sort(downs.begin(), downs.end(), [&](int a, int b) { return I.rank(a) > I.rank(b); });
    for (int x : downs) {
        Int s = 0;
        for (int z : downs)
            if (I.leq(x, z) && z != x) s += mob[z];
        mob[x] = (x == y) ? Int(1) : -s;
    }
    return mob;
}

/// mu^(0^, 1^) of a bounded interval.
inline Int mobius_interval(const PosetInterval& I) { return mobius(I, I.bottom(), I.top()); }

/// Weighted Whitney numbers of the first and second kind for Pi_n^k with the
/// weighting x^{mu(alpha)}; entry j of each list is rank j.
struct WhitneyNumbers {
    std::vector<Poly> first;   // w_j
    std::vector<Poly> second;  // W_j
};

inline WhitneyNumbers whitney_direct(int n, int k, int bound = 6) {
    if (n > bound) throw bound_exceeded("whitney_direct: n exceeds enumeration bound");
    PosetInterval P = build_full_poset(n, k);
    auto mob = mobius_from(P, P.bottom());
    WhitneyNumbers w;
    w.first.assign(n, Poly{});
    w.second.assign(n, Poly{});
    for (int id = 0; id < P.size(); ++id) {
        int r = P.rank(id);
        Poly mono = Poly::monomial(P.element(id).total_weight());
        w.second[r] += mono;
        w.first[r] += mono * Rat(mob.at(id));
    }
    return w;
}

/// Uniformity of Pi_n^k: every upper ideal I_alpha is isomorphic to
/// Pi_{|alpha|}^k via block collapse, and every lower interval [0^, alpha]
/// factors as the product of the maximal intervals of the blocks. Both
/// isomorphisms are constructed explicitly and checked in both directions.
inline bool check_uniformity(int n, int k, int bound = 5) {
    if (n > bound) throw bound_exceeded("check_uniformity: n exceeds enumeration bound");
    PosetInterval P = build_full_poset(n, k);
    for (int a = 0; a < P.size(); ++a) {
        const WeightedPartition& alpha = P.element(a);
        int s = alpha.block_count();

        // --- upper ideal: collapse each alpha-block to its index ---
        std::vector<int> small_ground(s);
        for (int i = 0; i < s; ++i) small_ground[i] = i + 1;
        PosetInterval S = PosetInterval::full_poset(small_ground, k);

        auto collapse = [&](const WeightedPartition& beta) {
            std::vector<WeightedPartition::Block> blocks;
            for (const auto& [bl, bw] : beta.blocks()) {
                std::vector<int> labels;
                WeakComposition inner;
                for (int i = 0; i < s; ++i) {
                    const auto& [al, aw] = alpha.blocks()[i];
                    if (std::binary_search(bl.begin(), bl.end(), al.front())) {
                        labels.push_back(i + 1);
                        inner = composition_add(inner, aw);
                    }
                }
                blocks.push_back({labels, composition_sub(bw, inner)});
            }
            return WeightedPartition(std::move(blocks));
        };

        std::map<int, int> image;
        int count = 0;
        for (int b = 0; b < P.size(); ++b) {
            if (!P.leq(a, b)) continue;
            int sid = S.find(collapse(P.element(b)));
            if (sid < 0) return false;
            image[b] = sid;
            ++count;
        }
        if (count != S.size()) return false;  // not injective or not onto
        std::map<int, int> seen;
        for (auto [b, sid] : image)
            if (!seen.emplace(sid, b).second) return false;
        for (auto [b1, s1] : image)
            for (auto [b2, s2] : image)
                if (P.leq(b1, b2) != S.leq(s1, s2)) return false;

        // --- lower interval: restrict to each block ---
        std::vector<PosetInterval> factors;
        for (const auto& [al, aw] : alpha.blocks())
            factors.push_back(PosetInterval::interval(al, aw, k));
        Int expected = 1;
        for (const auto& F : factors) expected *= F.size();
        std::map<std::vector<int>, int> tuples;
        Int below = 0;
        for (int b = 0; b < P.size(); ++b) {
            if (!P.leq(b, a)) continue;
            ++below;
            const WeightedPartition& beta = P.element(b);
            std::vector<int> key;
            for (int i = 0; i < s; ++i) {
                const auto& [al, aw] = alpha.blocks()[i];
                std::vector<WeightedPartition::Block> restricted;
                for (const auto& [bl, bw] : beta.blocks())
                    if (std::binary_search(al.begin(), al.end(), bl.front()))
                        restricted.push_back({bl, bw});
                key.push_back(factors[i].require(WeightedPartition(std::move(restricted))));
            }
            if (!tuples.emplace(key, b).second) return false;
        }
        if (below != expected) return false;
        for (const auto& [k1, b1] : tuples)
            for (const auto& [k2, b2] : tuples) {
                bool componentwise = true;
                for (int i = 0; i < s; ++i)
                    if (!factors[i].leq(k1[i], k2[i])) componentwise = false;
                if (P.leq(b1, b2) != componentwise) return false;
            }
    }
    return true;
}

}  // namespace multilie
