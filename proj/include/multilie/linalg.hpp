#pragma once

#include <map>
#include <utility>
#include <vector>

#include "numbers.hpp"

namespace multilie {

/// Sparse integer row: (column, coefficient) pairs sorted by column, no zero
/// entries, gcd-reduced with positive leading coefficient.
using SparseRow = std::vector<std::pair<int, Int>>;

inline void normalize_row(SparseRow& r) {
    if (r.empty()) return;
    Int g = 0;
    for (const auto& [c, v] : r) g = boost::multiprecision::gcd(g, abs(v));
    if (g > 1)
        for (auto& [c, v] : r) v /= g;
    if (r.front().second < 0)
        for (auto& [c, v] : r) v = -v;
}

// a - (a_lead / b_lead-cross) * b, fraction-free: b_lead * a - a_coeff * b
// where a_coeff is a's entry in b's leading column.
inline SparseRow eliminate(const SparseRow& a, const SparseRow& b) {
    const Int& blead = b.front().second;
    Int acoef = 0;
    for (const auto& [c, v] : a)
        if (c == b.front().first) {
            acoef = v;
            break;
        }
    SparseRow out;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.emplace_back(a[i].first, a[i].second * blead);
            ++i;
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -acoef * b[j].second);
            ++j;
        } else {
            Int v = a[i].second * blead - acoef * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    normalize_row(out);
    return out;
}

/// Incremental row echelon form over the integers (fraction-free: rows are
/// combined by cross-multiplication and gcd-reduced, so all arithmetic is
/// exact). Supports rank queries and membership tests against the row space.
class SparseEchelon {
public:
    // Reduce r against the pivots; the result has no entry in any pivot column.
    SparseRow reduce(SparseRow r) const {
        while (!r.empty()) {
            auto it = pivots_.find(r.front().first);
            if (it == pivots_.end()) break;
            r = eliminate(r, it->second);
        }
        return r;
    }

    // Returns true if the row increased the rank.
    bool add_row(SparseRow r) {
        normalize_row(r);
        r = reduce(std::move(r));
        if (r.empty()) return false;
        pivots_.emplace(r.front().first, std::move(r));
        return true;
    }

    bool contains(SparseRow r) const {
        normalize_row(r);
        return reduce(std::move(r)).empty();
    }

    int rank() const { return static_cast<int>(pivots_.size()); }

    const std::map<int, SparseRow>& pivots() const { return pivots_; }

private:
    std::map<int, SparseRow> pivots_;  // leading column -> row
};

/// Clear denominators of a rational vector into a SparseRow.
inline SparseRow to_sparse_row(const std::map<int, Rat>& v) {
    Int lcm = 1;
    for (const auto& [c, x] : v)
        if (x != 0) lcm = boost::multiprecision::lcm(lcm, denominator(x));
    SparseRow r;
    for (const auto& [c, x] : v)
        if (x != 0) r.emplace_back(c, numerator(x) * (lcm / denominator(x)));
    normalize_row(r);
    return r;
}

}  // namespace multilie
