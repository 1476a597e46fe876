#include "fixig/resolving.hpp"

#include <algorithm>
#include <stdexcept>

#include "fixig/util.hpp"

namespace fixig {

namespace {

std::vector<std::vector<int>> connected_distances(const Graph& g, const char* who) {
    if (!is_connected(g))
        throw std::invalid_argument(std::string(who) + ": graph must be connected");
    return distance_matrix(g);
}

// Distances fit in 4 bits (n <= 16), so a landmark set of size <= 15 packs
// into one uint64 signature per vertex.
bool resolves(const std::vector<std::vector<int>>& dm, int n, std::span<const int> w,
              std::vector<std::uint64_t>& sig) {
    sig.resize(n);
    for (int v = 0; v < n; ++v) {
        std::uint64_t s = 0;
        for (std::size_t j = 0; j < w.size(); ++j)
            s |= static_cast<std::uint64_t>(dm[v][w[j]]) << (4 * j);
        sig[v] = s;
    }
    std::sort(sig.begin(), sig.end());
    return std::adjacent_find(sig.begin(), sig.end()) == sig.end();
}

} // namespace

bool is_resolving_set(const Graph& g, std::span<const int> landmarks) {
    for (int v : landmarks)
        if (v < 0 || v >= g.order())
            throw std::invalid_argument("is_resolving_set: vertex out of range");
    auto dm = connected_distances(g, "is_resolving_set");
    int n = g.order();
    std::vector<std::vector<int>> vectors(n);
    for (int v = 0; v < n; ++v) {
        vectors[v].reserve(landmarks.size());
        for (int w : landmarks) vectors[v].push_back(dm[v][w]);
    }
    std::sort(vectors.begin(), vectors.end());
    return std::adjacent_find(vectors.begin(), vectors.end()) == vectors.end();
}

ResolvingResult metric_dimension(const Graph& g, const Caps& caps) {
    int n = g.order();
    if (n > caps.mdim_max_n)
        throw CapExceeded("metric_dimension: order " + std::to_string(n) + " exceeds cap " +
                          std::to_string(caps.mdim_max_n));
    auto dm = connected_distances(g, "metric_dimension");
    if (n == 1) return ResolvingResult{0, {}};
    std::vector<std::uint64_t> sig;
    std::vector<int> combo;
    for (int k = 1; k < n; ++k) {
        if (!first_combination(combo, n, k)) break;
        do {
            if (resolves(dm, n, combo, sig)) return ResolvingResult{k, combo};
        } while (next_combination(combo, n));
    }
    // All-but-one always resolves (every vertex's zero coordinate is unique),
    // so the loop cannot fall through for n >= 2.
    return ResolvingResult{n - 1, [&] {
                               std::vector<int> w(n - 1);
                               for (int i = 0; i + 1 < n; ++i) w[i] = i;
                               return w;
                           }()};
}

} // namespace fixig
