#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "numbers.hpp"

namespace multilie {

/// A weak composition: a logically infinite vector of nonnegative integers
/// with finite support, stored densely with trailing zeros stripped.
/// part(i) is 1-indexed, matching the usual mu(1), mu(2), ... notation.
class WeakComposition {
public:
    WeakComposition() = default;

    explicit WeakComposition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 0) throw std::invalid_argument("WeakComposition: negative part");
        canonicalize();
    }

    WeakComposition(std::initializer_list<int> parts) : WeakComposition(std::vector<int>(parts)) {}

    int part(int i) const {  // 1-indexed
        return (i >= 1 && i <= static_cast<int>(parts_.size())) ? parts_[i - 1] : 0;
    }

    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    std::vector<int> support() const {
        std::vector<int> s;
        for (int i = 0; i < static_cast<int>(parts_.size()); ++i)
            if (parts_[i] > 0) s.push_back(i + 1);
        return s;
    }

    // Largest index with a nonzero part; 0 for the empty composition.
    int max_support() const { return static_cast<int>(parts_.size()); }

    const std::vector<int>& parts() const { return parts_; }

    bool empty() const { return parts_.empty(); }

    auto operator<=>(const WeakComposition&) const = default;

private:
    void canonicalize() {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    std::vector<int> parts_;
};

// e_r: the unit composition with a single 1 in position r.
inline WeakComposition unit_composition(int r) {
    if (r < 1) throw std::invalid_argument("unit_composition: r must be >= 1");
    std::vector<int> v(r, 0);
    v[r - 1] = 1;
    return WeakComposition(std::move(v));
}

inline WeakComposition composition_add(const WeakComposition& a, const WeakComposition& b) {
    std::vector<int> v(std::max(a.parts().size(), b.parts().size()), 0);
    for (size_t i = 0; i < a.parts().size(); ++i) v[i] += a.parts()[i];
    for (size_t i = 0; i < b.parts().size(); ++i) v[i] += b.parts()[i];
    return WeakComposition(std::move(v));
}

// Componentwise a(i) <= b(i).
inline bool composition_leq(const WeakComposition& a, const WeakComposition& b) {
    for (int i = 1; i <= std::max(a.max_support(), b.max_support()); ++i)
        if (a.part(i) > b.part(i)) return false;
    return true;
}

// Componentwise difference; requires b <= a.
inline WeakComposition composition_sub(const WeakComposition& a, const WeakComposition& b) {
    if (!composition_leq(b, a)) throw std::invalid_argument("composition_sub: not componentwise <=");
    std::vector<int> v(a.parts());
    for (size_t i = 0; i < b.parts().size(); ++i) v[i] -= b.parts()[i];
    return WeakComposition(std::move(v));
}

/// All weak compositions of `total` with support contained in [k], each in
/// canonical form. The order is deterministic: first part descending, then
/// recursively on the remainder (so for total=2, k=2: (2), (1,1), (0,2)).
inline std::vector<WeakComposition> weak_compositions(int total, int k) {
    if (k < 1) throw std::invalid_argument("weak_compositions: k must be >= 1");
    if (total < 0) throw std::invalid_argument("weak_compositions: total must be >= 0");
    std::vector<WeakComposition> out;
    std::vector<int> cur(k, 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == k) {
            if (rem == 0) out.emplace_back(cur);
            return;
        }
        for (int v = rem; v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, rem - v);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, total);
    return out;
}

}  // namespace multilie
