#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "colored_trees.hpp"
#include "compositions.hpp"
#include "partitions.hpp"
#include "permutations.hpp"

namespace multilie {

/// A Stirling permutation is a word over the doubled multiset of a label set
/// in which every letter between the two copies of m exceeds m. Words store
/// labels as plain ints so label sets beyond [9] work.
using Word = std::vector<int>;

inline bool is_stirling(const Word& w) {
    if (w.size() % 2 != 0) return false;
    std::map<int, int> first, count;
    for (size_t i = 0; i < w.size(); ++i) {
        if (!first.count(w[i])) first[w[i]] = static_cast<int>(i);
        ++count[w[i]];
    }
    for (auto [m, c] : count)
        if (c != 2) return false;
    for (auto [m, f] : first) {
        size_t second = 0;
        for (size_t i = f + 1; i < w.size(); ++i)
            if (w[i] == m) {
                second = i;
                break;
            }
        for (size_t i = f + 1; i < second; ++i)
            if (w[i] < m) return false;
    }
    return true;
}

/// All Stirling permutations of a label set, built by inserting the doubled
/// largest letter into every slot of the smaller words; deterministic order.
inline std::vector<Word> enumerate_stirling(const std::vector<int>& labels) {
    std::vector<int> sorted(labels);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("enumerate_stirling: repeated label");
    std::vector<Word> words{{}};
    for (int m : sorted) {
        std::vector<Word> next;
        for (const Word& w : words)
            for (size_t pos = 0; pos <= w.size(); ++pos) {
                Word v(w.begin(), w.begin() + pos);
                v.push_back(m);
                v.push_back(m);
                v.insert(v.end(), w.begin() + pos, w.end());
                next.push_back(std::move(v));
            }
        words = std::move(next);
    }
    return words;
}

namespace detail {
inline std::pair<size_t, size_t> occurrences(const Word& w, int m) {
    size_t f = w.size(), s = w.size();
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i] == m) {
            if (f == w.size())
                f = i;
            else
                s = i;
        }
    if (s == w.size()) throw std::invalid_argument("occurrences: letter not doubled");
    return {f, s};
}
}  // namespace detail

/// Ascending adjacent pair (a,b): a < b and the second occurrence of a
/// immediately precedes the first occurrence of b.
inline bool is_aa_pair(const Word& w, int a, int b) {
    if (a >= b) return false;
    auto [fa, sa] = detail::occurrences(w, a);
    auto [fb, sb] = detail::occurrences(w, b);
    (void)fa;
    (void)sb;
    return sa + 1 == fb;
}

/// Terminally nested pair (a,b): a < b and the second occurrence of a
/// immediately succeeds the second occurrence of b.
inline bool is_tn_pair(const Word& w, int a, int b) {
    if (a >= b) return false;
    auto [fa, sa] = detail::occurrences(w, a);
    auto [fb, sb] = detail::occurrences(w, b);
    (void)fa;
    (void)fb;
    return sb + 1 == sa;
}

namespace detail {
// Maximal chains of the successor map a -> b over the letters of w.
inline std::vector<std::vector<int>> maximal_sequences(
    const Word& w, const std::function<bool(int, int)>& pair) {
    std::set<int> letters(w.begin(), w.end());
    std::map<int, int> next;
    std::set<int> has_pred;
    for (int a : letters)
        for (int b : letters)
            if (pair(a, b)) {
                next[a] = b;
                has_pred.insert(b);
            }
    std::vector<std::vector<int>> seqs;
    for (int a : letters) {
        if (has_pred.count(a)) continue;
        std::vector<int> seq{a};
        while (next.count(seq.back())) seq.push_back(next.at(seq.back()));
        seqs.push_back(std::move(seq));
    }
    return seqs;
}
}  // namespace detail

inline std::vector<std::vector<int>> aa_sequences(const Word& w) {
    return detail::maximal_sequences(w, [&](int a, int b) { return is_aa_pair(w, a, b); });
}

inline std::vector<std::vector<int>> tn_sequences(const Word& w) {
    return detail::maximal_sequences(w, [&](int a, int b) { return is_tn_pair(w, a, b); });
}

inline IntegerPartition aa_type(const Word& w) {
    std::vector<int> lens;
    for (const auto& s : aa_sequences(w)) lens.push_back(static_cast<int>(s.size()));
    return IntegerPartition(std::move(lens));
}

inline IntegerPartition tn_type(const Word& w) {
    std::vector<int> lens;
    for (const auto& s : tn_sequences(w)) lens.push_back(static_cast<int>(s.size()));
    return IntegerPartition(std::move(lens));
}

namespace detail {
// Split w into its (unique) factorization into blocks B(a): segments that
// start and end with the same letter.
inline std::vector<Word> block_factorization(const Word& w) {
    std::vector<Word> blocks;
    size_t i = 0;
    while (i < w.size()) {
        int head = w[i];
        size_t j = i + 1;
        while (w[j] != head) ++j;
        blocks.emplace_back(w.begin() + i, w.begin() + j + 1);
        i = j + 1;
    }
    return blocks;
}

inline Word concat(const std::vector<Word>& parts) {
    Word out;
    for (const Word& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

// kappa(head of block): the last letter of the maximal terminally nested
// sequence inside the block, followed from the head.
inline int kappa_of_block(const Word& block) {
    int a = block.front();
    Word interior(block.begin() + 1, block.end() - 1);
    if (interior.empty()) return a;
    auto inner = block_factorization(interior);
    return kappa_of_block(inner.back());
}
}  // namespace detail

/// The bijection xi: factor completely at descents of consecutive block heads
/// (ascending adjacent factorization) and rewrite each irreducible AA-word
/// a1 t1 a1 a2 t2 a2 ... ak tk ak  ->  a1 xi(t1) a2 xi(t2) ... ak ak ... a1 xi(tk).
inline Word xi(const Word& w) {
    if (w.empty()) return w;
    auto blocks = detail::block_factorization(w);
    // complete AA factorization: cut where the next block head drops
    std::vector<std::vector<Word>> factors;
    factors.push_back({blocks[0]});
    for (size_t i = 1; i < blocks.size(); ++i) {
        if (blocks[i].front() < factors.back().back().front())
            factors.push_back({blocks[i]});
        else
            factors.back().push_back(blocks[i]);
    }
    Word out;
    for (const auto& factor : factors) {
        // irreducible AA-word with heads a1 < a2 < ... < ak
        size_t k = factor.size();
        for (size_t i = 0; i + 1 < k; ++i) {
            out.push_back(factor[i].front());
            Word tau(factor[i].begin() + 1, factor[i].end() - 1);
            Word x = xi(tau);
            out.insert(out.end(), x.begin(), x.end());
        }
        out.push_back(factor[k - 1].front());
        for (size_t i = k; i-- > 0;) out.push_back(factor[i].front());
        Word tau(factor[k - 1].begin() + 1, factor[k - 1].end() - 1);
        Word x = xi(tau);
        out.insert(out.end(), x.begin(), x.end());
    }
    return out;
}

/// Inverse of xi via the terminally nested factorization.
inline Word xi_inv(const Word& w) {
    if (w.empty()) return w;
    auto blocks = detail::block_factorization(w);
    // complete TN factorization: a factor ends when kappa(first head) exceeds
    // the next block head
    std::vector<std::vector<Word>> factors;
    factors.push_back({blocks[0]});
    int cur_kappa = detail::kappa_of_block(blocks[0]);
    for (size_t i = 1; i < blocks.size(); ++i) {
        if (cur_kappa > blocks[i].front()) {
            factors.push_back({blocks[i]});
            cur_kappa = detail::kappa_of_block(blocks[i]);
        } else {
            factors.back().push_back(blocks[i]);
        }
    }
    Word out;
    for (const auto& factor : factors) {
        // irreducible TN-word: B(a1) alpha with TN chain a1 < a2 < ... < ak
        // inside B(a1); tau_k is the part after B(a1).
        std::vector<int> heads;
        std::vector<Word> taus;
        Word block = factor[0];
        while (true) {
            heads.push_back(block.front());
            Word interior(block.begin() + 1, block.end() - 1);
            if (interior.empty()) {
                taus.push_back({});
                break;
            }
            auto inner = detail::block_factorization(interior);
            Word tau = detail::concat(std::vector<Word>(inner.begin(), inner.end() - 1));
            taus.push_back(tau);
            block = inner.back();
        }
        Word tail = detail::concat(std::vector<Word>(factor.begin() + 1, factor.end()));
        // last tau belongs to the deepest head together with the tail
        taus.back().insert(taus.back().end(), tail.begin(), tail.end());
        for (size_t i = 0; i < heads.size(); ++i) {
            out.push_back(heads[i]);
            Word x = xi_inv(taus[i]);
            out.insert(out.end(), x.begin(), x.end());
            out.push_back(heads[i]);
        }
    }
    return out;
}

/// gamma~: normalized tree -> Stirling permutation starting and ending with
/// the minimum label; m gamma~(Y1) ... gamma~(Yj) m along the left spine.
inline Word gamma_tilde(const Tree& t) {
    require_normalized(t, "gamma_tilde");
    if (t->is_leaf()) return {t->label, t->label};
    std::vector<Tree> rights;
    Tree cur = t;
    while (!cur->is_leaf()) {
        rights.push_back(cur->right);
        cur = cur->left;
    }
    int m = cur->label;
    Word out{m};
    for (auto it = rights.rbegin(); it != rights.rend(); ++it) {
        Word part = gamma_tilde(*it);
        out.insert(out.end(), part.begin(), part.end());
    }
    out.push_back(m);
    return out;
}

/// Inverse of gamma~: parse the interior blocks and hang them on a left spine.
inline Tree gamma_tilde_inv(const Word& w) {
    if (w.size() < 2 || w.front() != w.back())
        throw std::invalid_argument("gamma_tilde_inv: word must start and end with its minimum");
    int m = w.front();
    for (int x : w)
        if (x < m) throw std::invalid_argument("gamma_tilde_inv: word must start with its minimum");
    Word interior(w.begin() + 1, w.end() - 1);
    Tree t = leaf(m);
    if (interior.empty()) return t;
    for (const Word& block : detail::block_factorization(interior))
        t = node(0, t, gamma_tilde_inv(block));
    return t;
}

/// red: strip the leading/trailing minimum (which must be 1 on ground [n])
/// and decrement the remaining letters.
inline Word red_map(const Word& w) {
    if (w.size() < 2 || w.front() != w.back())
        throw std::invalid_argument("red_map: first and last letter must agree");
    int m = w.front();
    Word out;
    for (size_t i = 1; i + 1 < w.size(); ++i) {
        if (w[i] <= m) throw std::invalid_argument("red_map: interior letter not above minimum");
        out.push_back(w[i] - 1);
    }
    return out;
}

inline Word red_inv(const Word& w, int m = 1) {
    Word out{m};
    for (int x : w) out.push_back(x + 1);
    out.push_back(m);
    return out;
}

/// gamma = red . gamma~ : Nor_n -> Q_{n-1}.
inline Word gamma_map(const Tree& t) { return red_map(gamma_tilde(t)); }

inline Tree gamma_inv(const Word& w) { return gamma_tilde_inv(red_inv(w)); }

/// Subword of first occurrences.
inline Permutation init_perm(const Word& w) {
    std::set<int> seen;
    std::vector<int> out;
    for (int x : w)
        if (seen.insert(x).second) out.push_back(x);
    return Permutation(std::move(out));
}

/// Colored Stirling permutations: a word plus a color per letter. AA-colored
/// words require c(a) > c(b) on every ascending adjacent pair; TN-colored
/// words require the same on terminally nested pairs.
struct ColoredWord {
    Word word;
    std::map<int, int> color;  // letter -> color

    auto operator<=>(const ColoredWord&) const = default;
};

inline WeakComposition colored_word_content(const ColoredWord& cw) {
    std::vector<int> counts;
    for (auto [letter, c] : cw.color) {
        if (static_cast<int>(counts.size()) < c) counts.resize(c, 0);
        ++counts[c - 1];
    }
    return WeakComposition(std::move(counts));
}

namespace detail {
// Colorings of the letters with content mu, strictly decreasing along each of
// the given sequences (so each sequence takes a set of distinct colors).
inline std::vector<std::map<int, int>> sequence_colorings(
    const std::vector<std::vector<int>>& seqs, const WeakComposition& mu) {
    int k = mu.max_support();
    std::vector<int> remaining(k + 1, 0);
    for (int j = 1; j <= k; ++j) remaining[j] = mu.part(j);
    std::vector<std::map<int, int>> out;
    std::map<int, int> cur;
    auto rec = [&](auto&& self, size_t si) -> void {
        if (si == seqs.size()) {
            out.push_back(cur);
            return;
        }
        const auto& seq = seqs[si];
        int need = static_cast<int>(seq.size());
        std::vector<int> chosen;
        auto choose = [&](auto&& pick, int next_color) -> void {
            if (static_cast<int>(chosen.size()) == need) {
                // ascending letters get strictly decreasing colors
                for (int i = 0; i < need; ++i) cur[seq[i]] = chosen[need - 1 - i];
                self(self, si + 1);
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
    return out;
}
}  // namespace detail

inline std::vector<ColoredWord> enumerate_aa_colored(const Word& w, const WeakComposition& mu) {
    std::vector<ColoredWord> out;
    for (auto& c : detail::sequence_colorings(aa_sequences(w), mu)) out.push_back({w, c});
    return out;
}

inline std::vector<ColoredWord> enumerate_tn_colored(const Word& w, const WeakComposition& mu) {
    std::vector<ColoredWord> out;
    for (auto& c : detail::sequence_colorings(tn_sequences(w), mu)) out.push_back({w, c});
    return out;
}

/// The natural coloring transfer along gamma: the internal node x of a tree
/// on [n] corresponds to the letter v(R(x)) - 1 of gamma(tree).
inline ColoredWord colored_gamma(const Tree& t) {
    ColoredWord cw;
    cw.word = gamma_map(t);
    for (const Tree& x : postorder_internal(t)) cw.color[valency(x->right) - 1] = x->color;
    return cw;
}

inline Tree colored_gamma_inv(const ColoredWord& cw) {
    Tree bare = gamma_inv(cw.word);
    auto rec = [&](auto&& self, const Tree& u) -> Tree {
        if (u->is_leaf()) return u;
        Tree l = self(self, u->left);
        Tree r = self(self, u->right);
        return node(cw.color.at(valency(u->right) - 1), l, r);
    };
    return rec(rec, bare);
}

/// xi transfers colorings unchanged (letters keep their identity).
inline ColoredWord colored_xi(const ColoredWord& cw) { return {xi(cw.word), cw.color}; }
inline ColoredWord colored_xi_inv(const ColoredWord& cw) { return {xi_inv(cw.word), cw.color}; }

}  // namespace multilie
