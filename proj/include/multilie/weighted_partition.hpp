#pragma once

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "compositions.hpp"
#include "partitions.hpp"

namespace multilie {

/// A weighted partition: blocks of a set partition, each carrying a weak
/// composition of size at most |block| - 1. Canonical order is by ascending
/// block minimum.
class WeightedPartition {
public:
    using Block = std::pair<std::vector<int>, WeakComposition>;

    WeightedPartition() = default;

    explicit WeightedPartition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
        for (auto& [labels, weight] : blocks_) {
            if (labels.empty()) throw std::invalid_argument("WeightedPartition: empty block");
            std::sort(labels.begin(), labels.end());
            if (weight.size() > static_cast<int>(labels.size()) - 1)
                throw std::invalid_argument("WeightedPartition: weight too heavy for block");
        }
        std::sort(blocks_.begin(), blocks_.end(),
                  [](const Block& a, const Block& b) { return a.first.front() < b.first.front(); });
        std::vector<int> all;
        for (const auto& [labels, weight] : blocks_) all.insert(all.end(), labels.begin(), labels.end());
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end())
            throw std::invalid_argument("WeightedPartition: blocks not disjoint");
    }

    // The discrete partition with all weights zero.
    static WeightedPartition discrete(const std::vector<int>& ground) {
        std::vector<Block> blocks;
        for (int x : ground) blocks.push_back({{x}, WeakComposition{}});
        return WeightedPartition(std::move(blocks));
    }

    // The one-block partition ground^mu; requires |mu| = |ground| - 1.
    static WeightedPartition one_block(const std::vector<int>& ground, const WeakComposition& mu) {
        if (mu.size() != static_cast<int>(ground.size()) - 1)
            throw std::invalid_argument("one_block: |mu| must be |ground| - 1");
        return WeightedPartition({{ground, mu}});
    }

    const std::vector<Block>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }

    std::vector<int> ground_set() const {
        std::vector<int> all;
        for (const auto& [labels, weight] : blocks_) all.insert(all.end(), labels.begin(), labels.end());
        std::sort(all.begin(), all.end());
        return all;
    }

    SetPartition underlying() const {
        std::vector<std::vector<int>> bs;
        for (const auto& [labels, weight] : blocks_) bs.push_back(labels);
        return SetPartition(std::move(bs));
    }

    // mu(alpha): the total weight.
    WeakComposition total_weight() const {
        WeakComposition w;
        for (const auto& [labels, weight] : blocks_) w = composition_add(w, weight);
        return w;
    }

    int rank() const {  // n - |alpha|
        return static_cast<int>(ground_set().size()) - block_count();
    }

    // index of the block containing a label, or -1
    int block_of(int label) const {
        for (int i = 0; i < block_count(); ++i)
            if (std::binary_search(blocks_[i].first.begin(), blocks_[i].first.end(), label)) return i;
        return -1;
    }

    auto operator<=>(const WeightedPartition&) const = default;

private:
    std::vector<Block> blocks_;
};

/// "13:(1,0)|2:()" text form: nonzero weights padded to k entries, the empty
/// weight printed as "()"; labels >= 10 switch every block to comma-separated
/// labels.
inline std::string to_string(const WeightedPartition& wp, int k = 0) {
    bool commas = false;
    for (const auto& [labels, w] : wp.blocks())
        for (int l : labels)
            if (l >= 10) commas = true;
    std::string out;
    for (size_t i = 0; i < wp.blocks().size(); ++i) {
        if (i) out += "|";
        const auto& [labels, w] = wp.blocks()[i];
        for (size_t j = 0; j < labels.size(); ++j) {
            if (j && commas) out += ",";
            out += std::to_string(labels[j]);
        }
        out += ":(";
        int width = w.empty() ? 0 : std::max(k, w.max_support());
        for (int j = 1; j <= width; ++j) {
            if (j > 1) out += ",";
            out += std::to_string(w.part(j));
        }
        out += ")";
    }
    return out;
}

/// Order relation of the weighted partition poset: underlying partitions
/// refine, every merged block gains weight componentwise, and the gain has
/// size (number of merged blocks) - 1.
inline bool wp_leq(const WeightedPartition& a, const WeightedPartition& b) {
    if (a.ground_set() != b.ground_set())
        throw std::invalid_argument("wp_leq: mismatched ground sets");
    for (const auto& [bl, bw] : b.blocks()) {
        WeakComposition merged;
        int count = 0;
        // every a-block meeting bl must lie inside it
        for (const auto& [al, aw] : a.blocks()) {
            bool inside = std::includes(bl.begin(), bl.end(), al.begin(), al.end());
            if (inside) {
                merged = composition_add(merged, aw);
                ++count;
            } else {
                for (int x : al)
                    if (std::binary_search(bl.begin(), bl.end(), x)) return false;
            }
        }
        if (!composition_leq(merged, bw)) return false;
        if (composition_sub(bw, merged).size() != count - 1) return false;
    }
    return true;
}

/// All covers of a: merge two blocks and add e_r to the combined weight,
/// r in [k].
inline std::vector<WeightedPartition> wp_covers(const WeightedPartition& a, int k) {
    std::vector<WeightedPartition> out;
    int s = a.block_count();
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
            for (int r = 1; r <= k; ++r) {
                std::vector<WeightedPartition::Block> blocks;
                for (int t = 0; t < s; ++t)
                    if (t != i && t != j) blocks.push_back(a.blocks()[t]);
                std::vector<int> labels(a.blocks()[i].first);
                labels.insert(labels.end(), a.blocks()[j].first.begin(), a.blocks()[j].first.end());
                WeakComposition w = composition_add(
                    composition_add(a.blocks()[i].second, a.blocks()[j].second), unit_composition(r));
                blocks.push_back({std::move(labels), std::move(w)});
                out.emplace_back(std::move(blocks));
            }
    return out;
}

}  // namespace multilie
