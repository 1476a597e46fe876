#include "fixig/fixing.hpp"

#include <algorithm>

#include "fixig/group.hpp"
#include "fixig/util.hpp"

namespace fixig {

bool is_fixing_set(const Graph& g, std::span<const int> vertices) {
    return !find_automorphism_fixing(g, vertices).has_value();
}

int twin_lower_bound(const Graph& g) {
    TwinPartition tp = twin_partition(g);
    auto bound = [](const std::vector<std::vector<int>>& classes) {
        int total = 0;
        for (const auto& c : classes) total += static_cast<int>(c.size()) - 1;
        return total;
    };
    return std::max(bound(tp.closed_classes), bound(tp.open_classes));
}

namespace {

// DFS at depth limit k over the stabilizer chain of an explicit group.
// Candidates extend past the last chosen vertex and are restricted to the
// least member of a size->=2 orbit of the current stabilizer; the lex-least
// minimum fixing set survives this restriction (swapping a non-least orbit
// member to its orbit minimum via a stabilizer element yields a lex-smaller
// minimum fixing set, contradiction), so the first set found is that witness.
struct FixSearch {
    int n;
    const PermGroup& group;
    std::vector<int> chosen;
    std::uint64_t nodes = 0;

    FixSearch(int degree, const PermGroup& grp) : n(degree), group(grp) {}

    const std::uint8_t* row(std::uint64_t idx) const { return group.element(idx).data(); }

    bool dfs(const std::vector<std::uint64_t>& alive, int last, int budget) {
        ++nodes;
        if (alive.size() <= 1) return true;
        if (budget == 0) return false;

        std::vector<std::uint64_t> orbit_mask(n, 0);
        for (std::uint64_t idx : alive) {
            const std::uint8_t* e = row(idx);
            for (int v = 0; v < n; ++v) orbit_mask[v] |= bit_of(e[v]);
        }
        int max_orbit = 0;
        for (int v = 0; v < n; ++v)
            max_orbit = std::max(max_orbit, std::popcount(orbit_mask[v]));
        // Fixing one vertex divides the order by its orbit size, and orbits
        // only shrink down the chain, so `budget` more vertices reduce the
        // order by at most max_orbit^budget.
        std::uint64_t reducible = 1;
        for (int i = 0; i < budget && reducible < alive.size(); ++i)
            reducible *= static_cast<std::uint64_t>(max_orbit);
        if (reducible < alive.size()) return false;

        for (int v = last + 1; v < n; ++v) {
            if (std::popcount(orbit_mask[v]) < 2) continue;
            if (lowest_set(orbit_mask[v]) != v) continue;
            std::vector<std::uint64_t> child;
            child.reserve(alive.size());
            for (std::uint64_t idx : alive)
                if (row(idx)[v] == v) child.push_back(idx);
            chosen.push_back(v);
            if (dfs(child, v, budget - 1)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

} // namespace

FixingResult fixing_number(const Graph& g, const Caps& caps) {
    PermGroup group = automorphism_group(g, caps);
    FixingResult result;
    result.aut_order = group.order();
    result.lower_bound_used = twin_lower_bound(g);

    int n = g.order();
    std::vector<std::uint64_t> all(group.order());
    for (std::uint64_t i = 0; i < group.order(); ++i) all[i] = i;

    FixSearch search(n, group);
    int start = result.lower_bound_used;
    if (group.order() > 1 && start < 1) start = 1;
    for (int k = start; k <= std::max(0, n - 1); ++k) {
        search.chosen.clear();
        if (search.dfs(all, -1, k)) {
            result.fix = static_cast<int>(search.chosen.size());
            result.witness = search.chosen;
            break;
        }
        if (group.order() <= 1) break;  // rigid: k = 0 already succeeded
    }
    result.nodes_searched = search.nodes;
    return result;
}

std::vector<int> min_fixing_set(const Graph& g, const Caps& caps) {
    return fixing_number(g, caps).witness;
}

} // namespace fixig
