#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "numbers.hpp"

namespace multilie {

/// An integer partition: weakly decreasing positive parts.
class IntegerPartition {
public:
    IntegerPartition() = default;

    explicit IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
        if (!parts_.empty() && parts_.back() <= 0)
            throw std::invalid_argument("IntegerPartition: parts must be positive");
    }

    IntegerPartition(std::initializer_list<int> parts) : IntegerPartition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    // multiplicity of the part s
    int multiplicity(int s) const {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), s));
    }

    // prod_s m_s(lambda)!
    Int multiplicity_factorial() const {
        Int r = 1;
        int run = 1;
        for (size_t i = 1; i <= parts_.size(); ++i) {
            if (i < parts_.size() && parts_[i] == parts_[i - 1]) {
                ++run;
                r *= run;  // accumulates run! incrementally
            } else {
                run = 1;
            }
        }
        return r;
    }

    // Each part decreased by one, zero parts dropped.
    IntegerPartition strip_ones() const {
        std::vector<int> v;
        for (int p : parts_)
            if (p > 1) v.push_back(p - 1);
        return IntegerPartition(std::move(v));
    }

    auto operator<=>(const IntegerPartition&) const = default;

private:
    std::vector<int> parts_;
};

/// All partitions of n, in a fixed deterministic order (lexicographically
/// decreasing as sorted-descending part lists; (n) comes first).
inline std::vector<IntegerPartition> integer_partitions(int n) {
    std::vector<IntegerPartition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int max_part) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// z_lambda = prod_i lambda_i * prod_s m_s(lambda)!  (centralizer order of the
// conjugacy class of cycle type lambda).
inline Int z_lambda(const IntegerPartition& lambda) {
    Int z = lambda.multiplicity_factorial();
    for (int p : lambda.parts()) z *= p;
    return z;
}

/// A set partition: disjoint nonempty sorted blocks covering a ground set,
/// blocks ordered by ascending minimum.
class SetPartition {
public:
    SetPartition() = default;

    explicit SetPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
        for (auto& b : blocks_) {
            if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
            std::sort(b.begin(), b.end());
        }
        std::sort(blocks_.begin(), blocks_.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        std::vector<int> all;
        for (const auto& b : blocks_) all.insert(all.end(), b.begin(), b.end());
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end())
            throw std::invalid_argument("SetPartition: blocks not disjoint");
    }

    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }

    std::vector<int> ground_set() const {
        std::vector<int> all;
        for (const auto& b : blocks_) all.insert(all.end(), b.begin(), b.end());
        std::sort(all.begin(), all.end());
        return all;
    }

    // Block sizes as an integer partition.
    IntegerPartition shape() const {
        std::vector<int> sizes;
        for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
        return IntegerPartition(std::move(sizes));
    }

    auto operator<=>(const SetPartition&) const = default;

private:
    std::vector<std::vector<int>> blocks_;
};

/// All set partitions of a nonempty ground set, in a deterministic order
/// (elements inserted in ascending order, new block last).
inline std::vector<SetPartition> set_partitions(const std::vector<int>& ground) {
    if (ground.empty()) throw std::invalid_argument("set_partitions: empty ground set");
    std::vector<int> sorted(ground);
    std::sort(sorted.begin(), sorted.end());
    std::vector<SetPartition> out;
    std::vector<std::vector<int>> cur;
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == sorted.size()) {
            out.emplace_back(cur);
            return;
        }
        for (size_t b = 0; b < cur.size(); ++b) {
            cur[b].push_back(sorted[i]);
            self(self, i + 1);
            cur[b].pop_back();
        }
        cur.push_back({sorted[i]});
        self(self, i + 1);
        cur.pop_back();
    };
    rec(rec, 0);
    return out;
}

}  // namespace multilie
