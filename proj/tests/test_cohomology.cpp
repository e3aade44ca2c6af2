#include <catch2/catch_amalgamated.hpp>

#include <set>

#include <multilie/cohomology.hpp>

#include "oracles.hpp"

using namespace multilie;

namespace {
Tree T(const std::string& s) { return parse_tree(s); }

std::vector<ChainVec> lyndon_vectors(const CohomologyPresentation& pres, const PosetInterval& I,
                                     const WeakComposition& mu) {
    std::vector<ChainVec> out;
    for (const Tree& t : enumerate_lyn(mu)) out.push_back(chain_class(pres, I, t));
    return out;
}

std::vector<ChainVec> comb_vectors(const CohomologyPresentation& pres, const PosetInterval& I,
                                   const WeakComposition& mu) {
    std::vector<ChainVec> out;
    for (const Tree& t : enumerate_comb(mu)) out.push_back(chain_class(pres, I, t));
    return out;
}
}  // namespace

TEST_CASE("top cohomology dimensions on small intervals") {
    CHECK(top_cohomology_dim(build_interval(3, WeakComposition{1, 1})) == 5);
    CHECK(top_cohomology_dim(build_interval(2, WeakComposition{1})) == 1);  // empty open part
    CHECK(top_cohomology_dim(build_interval(4, WeakComposition{3})) == 6);  // classical n=4
}

TEST_CASE("presentation dimension equals the simplicial Betti number") {
    // independent route: rational Betti numbers of the whole order complex
    for (int k = 1; k <= 2; ++k)
        for (int n = 3; n <= 4; ++n)
            for (const auto& mu : weak_compositions(n - 1, k)) {
                PosetInterval I = build_interval(n, mu);
                // open part elements, reindexed
                std::vector<int> open;
                for (int i = 0; i < I.size(); ++i)
                    if (i != I.bottom() && i != I.top()) open.push_back(i);
                auto betti = oracles::reduced_betti_numbers(
                    static_cast<int>(open.size()),
                    [&](int a, int b) { return open[a] != open[b] && I.leq(open[a], open[b]); });
                Int expected = top_cohomology_dim(I);
                // top reduced Betti number (dimension n-3) must match, and all
                // lower ones vanish (Cohen-Macaulay)
                REQUIRE(static_cast<int>(betti.size()) == n - 1);
                CHECK(betti.back() == expected);
                for (size_t i = 0; i + 1 < betti.size(); ++i) CHECK(betti[i] == 0);
            }
}

TEST_CASE("dimension ladder against tree counts") {
    for (int k = 1; k <= 2; ++k)
        for (int n = 2; n <= 5; ++n)
            for (const auto& mu : weak_compositions(n - 1, k)) {
                PosetInterval I = build_interval(n, mu);
                Int dim = top_cohomology_dim(I);
                CHECK(dim == Int(enumerate_lyn(mu).size()));
                CHECK(dim == Int(enumerate_comb(mu).size()));
                CHECK(dim == Int(ascent_free_chains(I).size()));
            }
}

TEST_CASE("Lyndon and comb chain sets are bases") {
    for (int k = 1; k <= 3; ++k)
        for (int n = 2; n <= 4; ++n)
            for (const auto& mu : weak_compositions(n - 1, k)) {
                PosetInterval I = build_interval(n, mu);
                auto pres = CohomologyPresentation::open_interval(I, I.bottom(), I.top());
                CHECK(pres.verify_basis(lyndon_vectors(pres, I, mu)));
                CHECK(pres.verify_basis(comb_vectors(pres, I, mu)));
            }
}

TEST_CASE("a set containing a coboundary image is not a basis") {
    PosetInterval I = build_interval(3, WeakComposition{1, 1});
    auto pres = CohomologyPresentation::open_interval(I, I.bottom(), I.top());
    // the sum of all six atoms is the one coboundary relation
    ChainVec all;
    for (int i = 0; i < pres.chain_count(); ++i) all[i] = 1;
    REQUIRE(pres.in_coboundary_span(all));
    auto vecs = lyndon_vectors(pres, I, WeakComposition{1, 1});
    vecs[0] = all;
    CHECK_FALSE(pres.verify_basis(vecs));
}

TEST_CASE("chains from different linear extensions are cohomologous up to sign") {
    for (const auto& mu : weak_compositions(3, 2)) {
        PosetInterval I = build_interval(4, mu);
        auto pres = CohomologyPresentation::open_interval(I, I.bottom(), I.top());
        // every colored labeled tree of content mu, every linear extension
        std::vector<Tree> shapes;
        for (const auto& nu : std::vector<WeakComposition>{mu})
            for (const Tree& t : enumerate_lyn(nu)) shapes.push_back(t);
        // also include non-Lyndon trees: all colorings of all normalized trees
        for (const Tree& bare : enumerate_nor({1, 2, 3, 4})) {
            int m = internal_count(bare);
            std::vector<int> colors(m + 1, 1);
            while (true) {
                int counter = 0;
                auto rec = [&](auto&& self, const Tree& u) -> Tree {
                    if (u->is_leaf()) return u;
                    Tree l = self(self, u->left);
                    Tree r = self(self, u->right);
                    ++counter;
                    return node(colors[counter], l, r);
                };
                Tree c = rec(rec, bare);
                if (content(c) == mu) shapes.push_back(c);
                int i = m;
                while (i >= 1 && colors[i] == 2) colors[i--] = 1;
                if (i < 1) break;
                ++colors[i];
            }
        }
        for (const Tree& t : shapes) {
            int m = internal_count(t);
            std::vector<int> word(m);
            for (int i = 0; i < m; ++i) word[i] = i + 1;
            do {
                Permutation tau(word);
                if (!is_linear_extension(t, tau)) continue;
                CHECK(lemma_sign_check(pres, I, t, tau));
            } while (std::next_permutation(word.begin(), word.end()));
        }
    }
}

TEST_CASE("phi sends the generator relations into the coboundary span") {
    // n = 3: both colors, all three relation families, in the interval for
    // the appropriate content
    SECTION("antisymmetry") {
        PosetInterval I = build_interval(3, WeakComposition{1, 1});
        auto pres = CohomologyPresentation::open_interval(I, I.bottom(), I.top());
        // [x,y]_j + [y,x]_j = 0 maps to c(x^j y) - (-1)^{0} c(y^j x) = 0;
        // phi of the relation must be a coboundary
        ChainVec v = phi_map(pres, I, T("[[1,2]_1,3]_2"));
        for (auto& [id, c] : phi_map(pres, I, T("[[2,1]_1,3]_2"))) v[id] += c;
        CHECK(pres.in_coboundary_span(v));
    }
    SECTION("single-color Jacobi") {
        PosetInterval I = build_interval(3, WeakComposition{2});
        auto pres = CohomologyPresentation::open_interval(I, I.bottom(), I.top());
        ChainVec v = phi_map(pres, I, T("[1,[2,3]_1]_1"));
        for (auto& [id, c] : phi_map(pres, I, T("[[1,2]_1,3]_1"))) v[id] -= c;
        for (auto& [id, c] : phi_map(pres, I, T("[2,[1,3]_1]_1"))) v[id] -= c;
        CHECK(pres.in_coboundary_span(v));
    }
    SECTION("mixed Jacobi") {
        PosetInterval I = build_interval(3, WeakComposition{1, 1});
        auto pres = CohomologyPresentation::open_interval(I, I.bottom(), I.top());
        ChainVec v;
        auto acc = [&](const char* s, int sign) {
            for (auto& [id, c] : phi_map(pres, I, T(s))) v[id] += Rat(sign) * c;
        };
        acc("[1,[2,3]_2]_1", 1);
        acc("[1,[2,3]_1]_2", 1);
        acc("[[1,2]_1,3]_2", -1);
        acc("[[1,2]_2,3]_1", -1);
        acc("[2,[1,3]_2]_1", -1);
        acc("[2,[1,3]_1]_2", -1);
        CHECK(pres.in_coboundary_span(v));
    }
    SECTION("relabeling equivariance at n = 3") {
        // phi(tau . [T,sigma]) = sgn(tau) (tau . phi([T,sigma])): relabeling
        // the leaves then mapping equals mapping then relabeling the chains,
        // twisted by sgn
        PosetInterval I = build_interval(3, WeakComposition{1, 1});
        auto pres = CohomologyPresentation::open_interval(I, I.bottom(), I.top());

        auto relabel_tree = [&](const Tree& t, const Permutation& tau) {
            auto rec = [&](auto&& self, const Tree& u) -> Tree {
                if (u->is_leaf()) return leaf(tau(u->label));
                return node(u->color, self(self, u->left), self(self, u->right));
            };
            return rec(rec, t);
        };
        auto relabel_vec = [&](const ChainVec& v, const Permutation& tau) {
            ChainVec out;
            for (const auto& [id, c] : v) {
                std::vector<int> mapped;
                for (int elem : pres.chains()[id]) {
                    std::vector<WeightedPartition::Block> blocks;
                    for (auto [labels, w] : I.element(elem).blocks()) {
                        for (int& l : labels) l = tau(l);
                        blocks.push_back({labels, w});
                    }
                    mapped.push_back(I.require(WeightedPartition(std::move(blocks))));
                }
                out[pres.chain_id(mapped)] += c;
            }
            return out;
        };

        std::vector<int> word{1, 2, 3};
        std::vector<Tree> sample{T("[1,[2,3]_2]_1"), T("[[1,2]_1,3]_2"), T("[[1,3]_2,2]_1")};
        do {
            Permutation tau(word);
            for (const Tree& t : sample) {
                ChainVec lhs = phi_map(pres, I, relabel_tree(t, tau));
                ChainVec rhs = relabel_vec(phi_map(pres, I, t), tau);
                for (auto& [id, c] : rhs) lhs[id] -= Rat(tau.sign()) * c;
                for (auto& [id, c] : lhs) CHECK(c == 0);
            }
        } while (std::next_permutation(word.begin(), word.end()));
    }
}

TEST_CASE("straightening expresses classes in the Lyndon basis") {
    SECTION("already Lyndon") {
        Tree t = T("[1,[2,3]_2]_1");
        auto combo = straighten_to_lyndon(t);
        REQUIRE(combo.size() == 1);
        CHECK(tree_equal(combo.begin()->first, t));
        CHECK(combo.begin()->second == 1);
    }
    SECTION("non-normalized input picks up the swap sign") {
        auto combo = straighten_to_lyndon(T("[2,1]_1"));
        REQUIRE(combo.size() == 1);
        CHECK(tree_equal(combo.begin()->first, T("[1,2]_1")));
        CHECK(combo.begin()->second == 1);  // both subtrees are leaves
    }
    SECTION("the non-Lyndon bicolored comb expands with five terms") {
        auto combo = straighten_to_lyndon(T("[[1,2]_1,3]_2"));
        CHECK(combo.size() == 5);
        for (auto& [t, c] : combo) {
            CHECK(is_colored_lyndon(t));
            CHECK(c == -1);
        }
    }
    SECTION("agreement with the exact linear solve on every tree, n = 4, k = 2") {
        for (const auto& mu : weak_compositions(3, 2)) {
            PosetInterval I = build_interval(4, mu);
            auto pres = CohomologyPresentation::open_interval(I, I.bottom(), I.top());
            auto lyn = enumerate_lyn(mu);
            // all colorings of all normalized trees with content mu
            for (const Tree& bare : enumerate_nor({1, 2, 3, 4})) {
                int m = internal_count(bare);
                std::vector<int> colors(m + 1, 1);
                while (true) {
                    int counter = 0;
                    auto rec = [&](auto&& self, const Tree& u) -> Tree {
                        if (u->is_leaf()) return u;
                        Tree l = self(self, u->left);
                        Tree r = self(self, u->right);
                        ++counter;
                        return node(colors[counter], l, r);
                    };
                    Tree c = rec(rec, bare);
                    if (content(c) == mu) {
                        auto combo = straighten_to_lyndon(c);
                        for (auto& [u, coef] : combo) CHECK(is_colored_lyndon(u));
                        // residual = c(input) - sum coef * c(basis tree) must
                        // be a coboundary
                        ChainVec v = chain_class(pres, I, c);
                        for (auto& [u, coef] : combo)
                            for (auto& [id, x] : chain_class(pres, I, u)) v[id] -= coef * x;
                        CHECK(pres.in_coboundary_span(v));
                    }
                    int i = m;
                    while (i >= 1 && colors[i] == 2) colors[i--] = 1;
                    if (i < 1) break;
                    ++colors[i];
                }
            }
        }
    }
}

TEST_CASE("full poset cohomology") {
    auto rep22 = full_poset_cohomology(2, 2);
    CHECK(rep22.dimension == 1);  // k atoms, one relation
    auto rep23 = full_poset_cohomology(2, 3);
    CHECK(rep23.dimension == 2);

    auto rep32 = full_poset_cohomology(3, 2);
    CHECK(rep32.dimension == 4);
    CHECK(rep32.lyndon_root_basis_ok);
    CHECK(rep32.comb_root_spans);

    auto rep33 = full_poset_cohomology(3, 3);
    CHECK(rep33.lyndon_root_basis_ok);
    CHECK(rep33.comb_root_spans);

    // the dimension always matches the count of Lyndon trees with non-minimal
    // root color; the comb set with root color != k spans, and whether it is
    // independent is reported (observed to hold on every case tried here)
    for (int k = 2; k <= 3; ++k)
        for (int n = 2; n <= 4; ++n) {
            auto rep = full_poset_cohomology(n, k);
            Int expected = 0;
            for (const auto& mu : weak_compositions(n - 1, k))
                for (const Tree& t : enumerate_lyn(mu))
                    if (t->color != 1) ++expected;
            CHECK(rep.dimension == expected);
            CHECK(rep.lyndon_root_basis_ok);
            CHECK(rep.comb_root_spans);
            CHECK(rep.comb_root_independent);
        }
    CHECK_THROWS_AS(full_poset_cohomology(5, 2), bound_exceeded);
}

TEST_CASE("relation matrix exports as sparse triplets") {
    PosetInterval I = build_interval(3, WeakComposition{1, 1});
    auto pres = CohomologyPresentation::open_interval(I, I.bottom(), I.top());
    std::string triplets = pres.export_triplets();
    // one relation row (the all-ones coboundary) over six chains
    int lines = 0;
    for (char ch : triplets)
        if (ch == '\n') ++lines;
    CHECK(lines == 6);
    CHECK(triplets.find("0 0 1") == 0);
}

TEST_CASE("Cohen-Macaulay spot check on the bounded poset") {
    // every open interval of Pi_4^2 with a top added has vanishing reduced
    // cohomology below the top degree
    PosetInterval P = PosetInterval::full_poset_with_top({1, 2, 3, 4}, 2);
    for (int x = 0; x < P.size(); ++x)
        for (int y = 0; y < P.size(); ++y) {
            if (!P.leq(x, y) || P.rank(y) - P.rank(x) < 2) continue;
            std::vector<int> open;
            for (int i = 0; i < P.size(); ++i)
                if (P.leq(x, i) && P.leq(i, y) && i != x && i != y) open.push_back(i);
            auto betti = oracles::reduced_betti_numbers(
                static_cast<int>(open.size()),
                [&](int a, int b) { return open[a] != open[b] && P.leq(open[a], open[b]); });
            int length = P.rank(y) - P.rank(x);
            // reduced Betti_{i} stored at betti[i+1]; require 0 for i < length-2
            for (int i = -1; i < length - 2; ++i)
                if (i + 1 < static_cast<int>(betti.size())) CHECK(betti[i + 1] == 0);
        }
}
