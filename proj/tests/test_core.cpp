#include <catch2/catch_amalgamated.hpp>

#include <set>

#include <multilie/compositions.hpp>
#include <multilie/numbers.hpp>
#include <multilie/partitions.hpp>
#include <multilie/permutations.hpp>
#include <multilie/rooted_trees.hpp>

#include "oracles.hpp"

using namespace multilie;

TEST_CASE("weak composition canonical form and accessors") {
    WeakComposition mu{1, 0, 2, 0, 0};
    CHECK(mu.parts() == std::vector<int>{1, 0, 2});
    CHECK(mu.size() == 3);
    CHECK(mu.part(1) == 1);
    CHECK(mu.part(2) == 0);
    CHECK(mu.part(7) == 0);
    CHECK(mu.support() == std::vector<int>{1, 3});
    CHECK(WeakComposition{} == WeakComposition{0, 0});
}

TEST_CASE("weak_compositions enumerates with the documented order and counts") {
    auto w22 = weak_compositions(2, 2);
    REQUIRE(w22.size() == 3);
    CHECK(w22[0] == WeakComposition{2});
    CHECK(w22[1] == WeakComposition{1, 1});
    CHECK(w22[2] == WeakComposition{0, 2});

    CHECK(weak_compositions(2, 3).size() == 6);  // the six maximal elements at n=3, k=3
    auto empty = weak_compositions(0, 5);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0] == WeakComposition{});

    for (int total = 0; total <= 4; ++total)
        for (int k = 1; k <= 4; ++k) {
            auto all = weak_compositions(total, k);
            Int expected = total == 0 ? Int(1) : binomial(k + total - 1, total);
            CHECK(Int(all.size()) == expected);
            std::set<WeakComposition> dedup(all.begin(), all.end());
            CHECK(dedup.size() == all.size());
            for (const auto& mu : all) {
                CHECK(mu.size() == total);
                CHECK(mu.max_support() <= k);
            }
        }
}

TEST_CASE("composition add and leq") {
    CHECK(composition_add(WeakComposition{1, 0, 2}, WeakComposition{0, 1}) ==
          WeakComposition{1, 1, 2});
    CHECK_FALSE(composition_leq(WeakComposition{1, 1}, WeakComposition{1, 0, 2}));
    SECTION("zero vector is minimum") {
        for (const auto& mu : weak_compositions(3, 3)) CHECK(composition_leq(WeakComposition{}, mu));
    }
    SECTION("partial order laws on a finite sample") {
        auto sample = weak_compositions(3, 3);
        for (const auto& a : sample) {
            CHECK(composition_leq(a, a));
            for (const auto& b : sample) {
                if (composition_leq(a, b) && composition_leq(b, a)) CHECK(a == b);
                for (const auto& c : sample)
                    if (composition_leq(a, b) && composition_leq(b, c))
                        CHECK(composition_leq(a, c));
            }
        }
    }
    SECTION("add is commutative and associative on a sample") {
        auto sample = weak_compositions(2, 3);
        for (const auto& a : sample)
            for (const auto& b : sample) {
                CHECK(composition_add(a, b) == composition_add(b, a));
                for (const auto& c : sample)
                    CHECK(composition_add(composition_add(a, b), c) ==
                          composition_add(a, composition_add(b, c)));
            }
    }
}

TEST_CASE("set partitions hit the Bell numbers") {
    CHECK(set_partitions({1, 2}).size() == 2);
    CHECK(set_partitions({1, 2, 3}).size() == 5);
    CHECK(set_partitions({1, 2, 3, 4, 5}).size() == 52);
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> ground(n);
        for (int i = 0; i < n; ++i) ground[i] = i + 1;
        CHECK(Int(set_partitions(ground).size()) == oracles::bell_number(n));
    }
}

TEST_CASE("integer partitions") {
    CHECK(integer_partitions(4).size() == 5);
    IntegerPartition l{2, 2, 1};
    CHECK(l.length() == 3);
    CHECK(l.size() == 5);
    CHECK(l.multiplicity(2) == 2);
    CHECK(l.multiplicity_factorial() == 2);
    CHECK(l.strip_ones() == IntegerPartition{1, 1});
    CHECK(IntegerPartition({1, 3, 2}).parts() == std::vector<int>{3, 2, 1});
}

TEST_CASE("permutation signs") {
    CHECK(Permutation::identity(4).sign() == 1);
    CHECK(Permutation{2, 1, 3}.sign() == -1);
    CHECK(Permutation{2, 3, 1}.sign() == 1);
    CHECK(Permutation{1, 5, 2, 4, 3}.inversions() == 4);
    CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
}

TEST_CASE("rooted tree descent census") {
    auto c3 = rooted_trees_by_descents(3);
    CHECK(c3 == std::map<int, Int>{{0, 2}, {1, 5}, {2, 2}});
    auto c2 = rooted_trees_by_descents(2);
    CHECK(c2 == std::map<int, Int>{{0, 1}, {1, 1}});

    SECTION("totals are n^(n-1) and match the product formula") {
        for (int n = 2; n <= 7; ++n) {
            auto census = rooted_trees_by_descents(n);
            Int total = 0;
            for (auto [d, c] : census) total += c;
            Int expected = 1;
            for (int i = 0; i < n - 1; ++i) expected *= n;
            CHECK(total == expected);
            auto poly = oracles::descent_product_poly(n);
            for (size_t i = 0; i < poly.size(); ++i) {
                Int got = census.count(static_cast<int>(i)) ? census.at(static_cast<int>(i)) : 0;
                CHECK(got == poly[i]);
            }
        }
    }
    SECTION("bound is enforced") {
        CHECK_THROWS_AS(rooted_trees_by_descents(8), bound_exceeded);
        CHECK_NOTHROW(rooted_trees_by_descents(8, 8));
    }
}
