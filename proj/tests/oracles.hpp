// Brute-force oracles, kept independent of the library's search paths:
// automorphisms by filtering all n! permutations of the edge relation, the
// fixing number and metric dimension by full subset enumeration in
// lexicographic order, distances by Floyd-Warshall.
#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "fixig/graph.hpp"
#include "fixig/perm.hpp"

namespace oracle {

inline std::vector<std::vector<int>> aut_images(const fixig::Graph& g) {
    int n = g.order();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> found;
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (g.adjacent(u, v) != g.adjacent(p[u], p[v])) ok = false;
        if (ok) found.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return found;  // lexicographic by construction
}

inline std::vector<fixig::Perm> aut_elements(const fixig::Graph& g) {
    std::vector<fixig::Perm> out;
    for (const auto& img : aut_images(g)) out.push_back(fixig::Perm::from_images(img));
    return out;
}

struct FixingOracle {
    int fix = 0;
    std::vector<int> witness;
};

inline FixingOracle fixing(const fixig::Graph& g) {
    auto elements = aut_images(g);
    int n = g.order();
    auto fixes_all = [&](const std::vector<int>& subset) {
        for (const auto& img : elements) {
            bool identity_on_subset = true;
            for (int v : subset)
                if (img[v] != v) {
                    identity_on_subset = false;
                    break;
                }
            if (!identity_on_subset) continue;
            for (int v = 0; v < n; ++v)
                if (img[v] != v) return false;  // non-identity fixing the subset
        }
        return true;
    };
    for (int k = 0; k <= n; ++k) {
        std::vector<int> subset(k);
        std::iota(subset.begin(), subset.end(), 0);
        for (;;) {
            if (fixes_all(subset)) return {k, subset};
            int i = k - 1;
            while (i >= 0 && subset[i] == n - k + i) --i;
            if (i < 0) break;
            ++subset[i];
            for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
        }
    }
    return {n, {}};  // unreachable for a valid group
}

inline std::vector<std::vector<int>> floyd_warshall(const fixig::Graph& g) {
    int n = g.order();
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

struct MetricOracle {
    int beta = 0;
    std::vector<int> witness;
};

inline MetricOracle metric(const fixig::Graph& g) {
    int n = g.order();
    if (n == 1) return {0, {}};
    auto d = floyd_warshall(g);
    auto resolves = [&](const std::vector<int>& w) {
        std::vector<std::vector<int>> sigs(n);
        for (int v = 0; v < n; ++v)
            for (int x : w) sigs[v].push_back(d[v][x]);
        std::sort(sigs.begin(), sigs.end());
        return std::adjacent_find(sigs.begin(), sigs.end()) == sigs.end();
    };
    for (int k = 1; k <= n; ++k) {
        std::vector<int> subset(k);
        std::iota(subset.begin(), subset.end(), 0);
        for (;;) {
            if (resolves(subset)) return {k, subset};
            int i = k - 1;
            while (i >= 0 && subset[i] == n - k + i) --i;
            if (i < 0) break;
            ++subset[i];
            for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
        }
    }
    return {n, {}};
}

} // namespace oracle
