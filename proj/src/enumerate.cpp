#include "fixig/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

#include "fixig/fixing.hpp"
#include "fixig/io.hpp"
#include "fixig/resolving.hpp"
#include "fixig/util.hpp"

namespace fixig {

namespace {

// Edge index order (0,1),(0,2),...,(0,n-1),(1,2),...: bit i of an edge mask
// selects the i-th pair.
std::vector<Edge> edge_table(int n) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

bool mask_connected(int n, const std::vector<Edge>& pairs, std::uint64_t mask) {
    std::vector<std::uint64_t> adj(n, 0);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1) {
            adj[pairs[i].first] |= bit_of(pairs[i].second);
            adj[pairs[i].second] |= bit_of(pairs[i].first);
        }
    std::uint64_t reached = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            int v = lowest_set(frontier);
            frontier &= frontier - 1;
            next |= adj[v] & ~reached;
        }
        reached |= next;
        frontier = next;
    }
    return reached == (n >= 64 ? ~std::uint64_t{0} : (bit_of(n) - 1));
}

Graph graph_from_mask(int n, const std::vector<Edge>& pairs, std::uint64_t mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1) edges.push_back(pairs[i]);
    return Graph::make(n, edges);
}

} // namespace

std::vector<Graph> connected_graphs(int n, const Caps& caps) {
    if (n < 1 || n > caps.enum_graphs_max_n)
        throw CapExceeded("connected_graphs: n must be in 1.." +
                          std::to_string(caps.enum_graphs_max_n));
    auto pairs = edge_table(n);
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < bit_of(static_cast<int>(pairs.size())); ++mask)
        if (mask_connected(n, pairs, mask)) out.push_back(graph_from_mask(n, pairs, mask));
    return out;
}

std::vector<Graph> all_labeled_graphs(int n) {
    if (n < 1 || n > 6) throw CapExceeded("all_labeled_graphs: n must be in 1..6");
    auto pairs = edge_table(n);
    std::vector<Graph> out;
    out.reserve(std::size_t{1} << pairs.size());
    for (std::uint64_t mask = 0; mask < bit_of(static_cast<int>(pairs.size())); ++mask)
        out.push_back(graph_from_mask(n, pairs, mask));
    return out;
}

Graph tree_from_pruefer(std::span<const int> seq) {
    int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> deg(n, 1);
    for (int x : seq) {
        if (x < 0 || x >= n) throw std::invalid_argument("pruefer entry out of range");
        ++deg[x];
    }
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (int x : seq) {
        for (int leaf = 0; leaf < n; ++leaf)
            if (deg[leaf] == 1) {
                edges.emplace_back(leaf, x);
                --deg[leaf];
                --deg[x];
                break;
            }
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) (a < 0 ? a : b) = v;
    edges.emplace_back(a, b);
    return Graph::make(n, edges);
}

std::vector<Graph> labeled_trees(int n) {
    if (n < 1 || n > 8) throw CapExceeded("labeled_trees: n must be in 1..8");
    if (n == 1) return {Graph::make(1, {})};
    if (n == 2) return {path_graph(2)};
    std::vector<Graph> out;
    std::vector<int> seq(n - 2, 0);
    for (;;) {
        out.push_back(tree_from_pruefer(seq));
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return out;
}

void for_each_function(int n, const std::function<void(const VertexFunction&)>& fn) {
    if (n < 1) throw std::invalid_argument("for_each_function: n must be >= 1");
    VertexFunction g{n, std::vector<int>(n, 0)};
    for (;;) {
        fn(g);
        int i = n - 1;
        while (i >= 0 && g.images[i] == n - 1) g.images[i--] = 0;
        if (i < 0) break;
        ++g.images[i];
    }
}

FunctionSweep sweep_all_functions(const Graph& base, const Caps& caps) {
    int n = base.order();
    if (n < 1 || n > caps.enum_functions_max_n)
        throw CapExceeded("sweep_all_functions: n must be in 1.." +
                          std::to_string(caps.enum_functions_max_n));
    FunctionSweep sweep;
    sweep.base_order = n;
    bool ambient = n >= 3;  // the fix/beta bounds assume order >= 3
    int hi = 2 * n - 3;
    bool first = true;
    for_each_function(n, [&](const VertexFunction& g) {
        Graph f = build_functigraph(base, g);
        int fix = fixing_number(f, caps).fix;
        int beta = metric_dimension(f, caps).beta;
        ++sweep.functions;
        ++sweep.fix_histogram[fix];
        if (first || fix < sweep.min_fix) {
            sweep.min_fix = fix;
            sweep.min_fix_function = g;
        }
        if (first || fix > sweep.max_fix) {
            sweep.max_fix = fix;
            sweep.max_fix_function = g;
        }
        if (first || beta < sweep.min_beta) sweep.min_beta = beta;
        if (first || beta > sweep.max_beta) sweep.max_beta = beta;
        first = false;
        if (ambient) {
            bool bad_fix = fix < 0 || fix > hi;
            bool bad_beta = beta < 2 || beta > hi;
            bool bad_order = fix > beta;
            if (bad_fix) ++sweep.fix_bound_violations;
            if (bad_beta) ++sweep.beta_bound_violations;
            if (bad_order) ++sweep.fix_le_beta_violations;
            if ((bad_fix || bad_beta || bad_order) && sweep.violation_examples.size() < 5)
                sweep.violation_examples.push_back(io::write_graph(base) + "| g = " +
                                                   io::write_function(g));
        }
    });
    return sweep;
}

} // namespace fixig
