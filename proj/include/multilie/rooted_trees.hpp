#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "numbers.hpp"

namespace multilie {

/// Census of rooted labeled trees on [n] bucketed by the number of descending
/// edges (a parent with a greater label than its child). Enumeration goes
/// through Pruefer sequences (n^(n-2) free trees, each rooted n ways), so the
/// total is n^(n-1); beyond the bound callers should use the product formula
/// prod_j ((n-j)+jt) instead.
inline std::map<int, Int> rooted_trees_by_descents(int n, int bound = 7) {
    if (n < 1) throw std::invalid_argument("rooted_trees_by_descents: n must be >= 1");
    if (n > bound) throw bound_exceeded("rooted_trees_by_descents: n exceeds enumeration bound");
    std::map<int, Int> census;
    if (n == 1) {
        census[0] = 1;
        return census;
    }

    std::vector<int> seq(std::max(n - 2, 0), 1);
    while (true) {
        // decode the Pruefer sequence into edges
        std::vector<int> degree(n + 1, 1);
        for (int v : seq) ++degree[v];
        std::vector<bool> gone(n + 1, false);
        std::vector<std::pair<int, int>> edges;
        for (int v : seq) {
            int leaf = 0;
            for (int u = 1; u <= n; ++u)
                if (!gone[u] && degree[u] == 1) {
                    leaf = u;
                    break;
                }
            edges.emplace_back(leaf, v);
            gone[leaf] = true;
            --degree[v];
        }
        std::vector<int> rest;
        for (int u = 1; u <= n; ++u)
            if (!gone[u]) rest.push_back(u);
        edges.emplace_back(rest[0], rest[1]);

        std::vector<std::vector<int>> adj(n + 1);
        for (auto [a, b] : edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        // orient away from each root and count parent > child edges
        for (int root = 1; root <= n; ++root) {
            int descents = 0;
            std::vector<int> stack{root};
            std::vector<bool> seen(n + 1, false);
            seen[root] = true;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int w : adj[u])
                    if (!seen[w]) {
                        seen[w] = true;
                        if (u > w) ++descents;
                        stack.push_back(w);
                    }
            }
            census[descents] += 1;
        }

        int i = static_cast<int>(seq.size()) - 1;
        while (i >= 0 && seq[i] == n) {
            seq[i] = 1;
            --i;
        }
        if (i < 0) break;
        ++seq[i];
    }
    return census;
}

}  // namespace multilie
