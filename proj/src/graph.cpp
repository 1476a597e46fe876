#include "fixig/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "fixig/util.hpp"

namespace fixig {

Graph Graph::make(int n, std::span<const Edge> edges) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be in 0.." + std::to_string(kMaxVertices));
    Graph g;
    g.n_ = n;
    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ")");
        if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        g.edges_.emplace_back(u, v);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    g.adj_.assign(n, 0);
    for (auto [u, v] : g.edges_) {
        g.adj_[u] |= bit_of(v);
        g.adj_[v] |= bit_of(u);
    }
    g.nbr_off_.assign(n + 1, 0);
    for (auto [u, v] : g.edges_) {
        ++g.nbr_off_[u + 1];
        ++g.nbr_off_[v + 1];
    }
    for (int v = 0; v < n; ++v) g.nbr_off_[v + 1] += g.nbr_off_[v];
    g.nbr_flat_.resize(2 * g.edges_.size());
    std::vector<int> cursor(g.nbr_off_.begin(), g.nbr_off_.end() - 1);
    for (auto [u, v] : g.edges_) {
        g.nbr_flat_[cursor[u]++] = v;
        g.nbr_flat_[cursor[v]++] = u;
    }
    for (int v = 0; v < n; ++v)
        std::sort(g.nbr_flat_.begin() + g.nbr_off_[v], g.nbr_flat_.begin() + g.nbr_off_[v + 1]);
    return g;
}

Graph Graph::make(int n, std::initializer_list<Edge> edges) {
    return make(n, std::span<const Edge>(edges.begin(), edges.size()));
}

int Graph::degree(int v) const { return nbr_off_[v + 1] - nbr_off_[v]; }

std::span<const int> Graph::neighbors(int v) const {
    return {nbr_flat_.data() + nbr_off_[v],
            static_cast<std::size_t>(nbr_off_[v + 1] - nbr_off_[v])};
}

Graph make_graph(int n, std::span<const Edge> edges) { return Graph::make(n, edges); }
Graph make_graph(int n, std::initializer_list<Edge> edges) { return Graph::make(n, edges); }

// ---- families ----

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path order must be >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::make(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle order must be >= 3");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return Graph::make(n, e);
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph order must be >= 1");
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::make(n, e);
}

Graph star_graph(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star must have >= 1 leaf");
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph::make(leaves + 1, e);
}

Graph pendant_pair_tree(int t) {
    if (t < 2) throw std::invalid_argument("pendant_pair_tree requires t >= 2");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < t; ++i) e.emplace_back(i, i + 1);
    for (int i = 0; i < t; ++i) {
        e.emplace_back(i, t + i);
        e.emplace_back(i, 2 * t + i);
    }
    return Graph::make(3 * t, e);
}

Graph complete_minus_matching(int n, int removed) {
    if (n < 2 || removed < 1 || removed > n / 2)
        throw std::invalid_argument("complete_minus_matching requires 1 <= i <= n/2");
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool dropped = (v == u + 1) && (u % 2 == 0) && (u < 2 * removed);
            if (!dropped) e.emplace_back(u, v);
        }
    return Graph::make(n, e);
}

Graph join_graphs(const Graph& a, const Graph& b) {
    int n = a.order() + b.order();
    std::vector<Edge> e(a.edges());
    for (auto [u, v] : b.edges()) e.emplace_back(u + a.order(), v + a.order());
    for (int u = 0; u < a.order(); ++u)
        for (int v = 0; v < b.order(); ++v) e.emplace_back(u, a.order() + v);
    return Graph::make(n, e);
}

Graph union_graphs(const Graph& a, const Graph& b) {
    int n = a.order() + b.order();
    std::vector<Edge> e(a.edges());
    for (auto [u, v] : b.edges()) e.emplace_back(u + a.order(), v + a.order());
    return Graph::make(n, e);
}

// ---- family specs ----

namespace {

const std::map<std::string, FamilySpec::Kind>& kind_names() {
    static const std::map<std::string, FamilySpec::Kind> names = {
        {"path", FamilySpec::Kind::path},
        {"cycle", FamilySpec::Kind::cycle},
        {"complete", FamilySpec::Kind::complete},
        {"star", FamilySpec::Kind::star},
        {"pendant_pair_tree", FamilySpec::Kind::pendant_pair_tree},
        {"complete_minus_matching", FamilySpec::Kind::complete_minus_matching},
        {"join", FamilySpec::Kind::join},
        {"union", FamilySpec::Kind::union_graphs},
    };
    return names;
}

std::string kind_name(FamilySpec::Kind k) {
    for (const auto& [name, kind] : kind_names())
        if (kind == k) return name;
    return "?";
}

// Split "a,b" at the top-level comma (not inside parentheses).
std::pair<std::string, std::string> split_operands(const std::string& body) {
    int depth = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (body[i] == '(') ++depth;
        else if (body[i] == ')') --depth;
        else if (body[i] == ',' && depth == 0)
            return {body.substr(0, i), body.substr(i + 1)};
    }
    throw std::invalid_argument("expected two comma-separated operands in '" + body + "'");
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t used = 0;
        int v = std::stoi(s.substr(pos), &used);
        out.push_back(v);
        pos += used;
        if (pos < s.size()) {
            if (s[pos] != ',') throw std::invalid_argument("expected ',' in parameter list");
            ++pos;
        }
    }
    return out;
}

} // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
    auto paren = text.find('(');
    auto colon = text.find(':');
    FamilySpec spec;
    if (paren != std::string::npos && (colon == std::string::npos || paren < colon)) {
        if (text.back() != ')') throw std::invalid_argument("missing ')' in '" + text + "'");
        std::string name = text.substr(0, paren);
        auto it = kind_names().find(name);
        if (it == kind_names().end())
            throw std::invalid_argument("unknown graph family '" + name + "'");
        spec.kind = it->second;
        if (spec.kind != Kind::join && spec.kind != Kind::union_graphs)
            throw std::invalid_argument("family '" + name + "' takes integer parameters, not operands");
        auto [lhs, rhs] = split_operands(text.substr(paren + 1, text.size() - paren - 2));
        spec.operands.push_back(parse(lhs));
        spec.operands.push_back(parse(rhs));
        return spec;
    }
    std::string name = colon == std::string::npos ? text : text.substr(0, colon);
    auto it = kind_names().find(name);
    if (it == kind_names().end())
        throw std::invalid_argument("unknown graph family '" + name + "'");
    spec.kind = it->second;
    if (spec.kind == Kind::join || spec.kind == Kind::union_graphs)
        throw std::invalid_argument("family '" + name + "' takes operands: " + name + "(a,b)");
    if (colon == std::string::npos)
        throw std::invalid_argument("family '" + name + "' requires parameters");
    try {
        spec.params = parse_int_list(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad parameter list in '" + text + "'");
    }
    return spec;
}

std::string FamilySpec::to_string() const {
    std::string out = kind_name(kind);
    if (!operands.empty()) {
        out += "(" + operands[0].to_string() + "," + operands[1].to_string() + ")";
        return out;
    }
    out += ":";
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(params[i]);
    }
    return out;
}

Graph generate(const FamilySpec& spec) {
    using K = FamilySpec::Kind;
    auto want_params = [&](std::size_t k) {
        if (spec.params.size() != k)
            throw std::invalid_argument("family '" + kind_name(spec.kind) + "' takes " +
                                        std::to_string(k) + " parameter(s)");
    };
    switch (spec.kind) {
        case K::path: want_params(1); return path_graph(spec.params[0]);
        case K::cycle: want_params(1); return cycle_graph(spec.params[0]);
        case K::complete: want_params(1); return complete_graph(spec.params[0]);
        case K::star: want_params(1); return star_graph(spec.params[0]);
        case K::pendant_pair_tree: want_params(1); return pendant_pair_tree(spec.params[0]);
        case K::complete_minus_matching:
            want_params(2);
            return complete_minus_matching(spec.params[0], spec.params[1]);
        case K::join: return join_graphs(generate(spec.operands.at(0)), generate(spec.operands.at(1)));
        case K::union_graphs:
            return union_graphs(generate(spec.operands.at(0)), generate(spec.operands.at(1)));
    }
    throw std::invalid_argument("bad family spec");
}

// ---- structural queries ----

namespace {

void check_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order())
        throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range");
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.order(), -1);
    dist[src] = 0;
    std::deque<int> queue{src};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

std::vector<std::vector<int>> group_by_mask(const Graph& g,
                                            const std::vector<std::uint64_t>& key) {
    std::map<std::uint64_t, std::vector<int>> buckets;
    for (int v = 0; v < g.order(); ++v) buckets[key[v]].push_back(v);
    std::vector<std::vector<int>> classes;
    classes.reserve(buckets.size());
    for (auto& [mask, members] : buckets) classes.push_back(std::move(members));
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return classes;
}

} // namespace

std::optional<int> distance(const Graph& g, int u, int v) {
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v) return 0;
    auto dist = bfs_distances(g, u);
    if (dist[v] < 0) return std::nullopt;
    return dist[v];
}

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
    std::vector<std::vector<int>> m(g.order());
    for (int v = 0; v < g.order(); ++v) m[v] = bfs_distances(g, v);
    return m;
}

std::vector<int> saturated_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1) out.push_back(v);
    return out;
}

TwinPartition twin_partition(const Graph& g) {
    std::vector<std::uint64_t> open(g.order()), closed(g.order());
    for (int v = 0; v < g.order(); ++v) {
        open[v] = g.neighbor_mask(v);
        closed[v] = g.closed_neighbor_mask(v);
    }
    return TwinPartition{group_by_mask(g, closed), group_by_mask(g, open)};
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

std::pair<int, int> pendant_support_counts(const Graph& tree) {
    if (!is_tree(tree)) throw std::invalid_argument("pendant_support_counts: input is not a tree");
    int pendants = 0, supports = 0;
    for (int v = 0; v < tree.order(); ++v) {
        if (tree.degree(v) == 1) ++pendants;
        bool support = false;
        for (int w : tree.neighbors(v)) support = support || tree.degree(w) == 1;
        if (support) ++supports;
    }
    return {pendants, supports};
}

} // namespace fixig
