#pragma once

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <vector>

namespace multilie {

/// A sequence of distinct labels; when the ground set is [n] this is a
/// permutation word in one-line notation.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
        auto sorted = word_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("Permutation: repeated entry");
    }

    Permutation(std::initializer_list<int> word) : Permutation(std::vector<int>(word)) {}

    const std::vector<int>& word() const { return word_; }
    int size() const { return static_cast<int>(word_.size()); }
    int operator()(int i) const { return word_.at(i - 1); }  // 1-indexed

    int inversions() const {
        int inv = 0;
        for (size_t i = 0; i < word_.size(); ++i)
            for (size_t j = i + 1; j < word_.size(); ++j)
                if (word_[i] > word_[j]) ++inv;
        return inv;
    }

    int sign() const { return inversions() % 2 == 0 ? 1 : -1; }

    static Permutation identity(int n) {
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = i + 1;
        return Permutation(std::move(w));
    }

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> word_;
};

}  // namespace multilie
