#include "fixig/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "fixig/util.hpp"

namespace fixig {

namespace {

// (degree, sorted neighbor-degree multiset, sorted distance multiset) per
// vertex, collapsed to class ids. Automorphisms preserve all three, so images
// are confined to one class. Unreachable distances use the sentinel n.
std::vector<int> invariant_classes(const Graph& g) {
    int n = g.order();
    auto dm = distance_matrix(g);
    using Key = std::tuple<int, std::vector<int>, std::vector<int>>;
    std::vector<Key> keys(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> nbr_degs;
        nbr_degs.reserve(g.degree(v));
        for (int w : g.neighbors(v)) nbr_degs.push_back(g.degree(w));
        std::sort(nbr_degs.begin(), nbr_degs.end());
        std::vector<int> dists = dm[v];
        for (int& d : dists)
            if (d < 0) d = n;
        std::sort(dists.begin(), dists.end());
        keys[v] = Key{g.degree(v), std::move(nbr_degs), std::move(dists)};
    }
    std::vector<Key> uniq(keys);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int> cls(n);
    for (int v = 0; v < n; ++v)
        cls[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), keys[v]) -
                                  uniq.begin());
    return cls;
}

// Neighbors of v with smaller id; their images constrain the image of v.
std::vector<std::vector<int>> earlier_neighbors(const Graph& g) {
    std::vector<std::vector<int>> out(g.order());
    for (int v = 0; v < g.order(); ++v)
        for (int u : g.neighbors(v))
            if (u < v) out[v].push_back(u);
    return out;
}

struct AutSearch {
    const Graph& g;
    int n;
    std::vector<int> cls;
    std::vector<std::vector<int>> earlier;
    std::vector<std::uint8_t> img;
    std::uint64_t used = 0;
    std::uint64_t cap = 0;
    std::uint64_t count = 0;
    bool cap_hit = false;
    std::vector<std::uint8_t> out;

    explicit AutSearch(const Graph& graph, std::uint64_t element_cap)
        : g(graph),
          n(graph.order()),
          cls(invariant_classes(graph)),
          earlier(earlier_neighbors(graph)),
          img(graph.order(), 0),
          cap(element_cap) {}

    bool dfs(int v) {
        if (v == n) {
            if (count == cap) {
                cap_hit = true;
                return false;
            }
            out.insert(out.end(), img.begin(), img.end());
            ++count;
            return true;
        }
        std::uint64_t need = 0;
        for (int u : earlier[v]) need |= bit_of(img[u]);
        for (int w = 0; w < n; ++w) {
            if ((used >> w) & 1) continue;
            if (cls[w] != cls[v]) continue;
            if ((g.neighbor_mask(w) & used) != need) continue;
            img[v] = static_cast<std::uint8_t>(w);
            used |= bit_of(w);
            bool keep_going = dfs(v + 1);
            used &= ~bit_of(w);
            if (!keep_going) return false;
        }
        return true;
    }
};

// Stabilizer-chain transversal representatives. The scan order over the
// lex-sorted element list makes every representative the lex-least element
// with its (base point -> image) action, so the result is deterministic.
std::vector<Perm> chain_generators(int degree, const std::vector<std::uint8_t>& flat,
                                   std::uint64_t count) {
    std::vector<Perm> gens;
    if (degree == 0 || count <= 1) return gens;
    std::vector<std::uint64_t> alive(count);
    for (std::uint64_t i = 0; i < count; ++i) alive[i] = i;
    auto at = [&](std::uint64_t idx, int v) { return flat[idx * degree + v]; };
    while (alive.size() > 1) {
        int base = -1;
        for (int v = 0; v < degree && base < 0; ++v)
            for (std::uint64_t idx : alive)
                if (at(idx, v) != v) {
                    base = v;
                    break;
                }
        if (base < 0) break;
        std::map<int, std::uint64_t> rep;
        for (std::uint64_t idx : alive) {
            int w = at(idx, base);
            if (w != base) rep.emplace(w, idx);
        }
        for (const auto& [w, idx] : rep) {
            std::vector<std::uint8_t> img(flat.begin() + idx * degree,
                                          flat.begin() + (idx + 1) * degree);
            gens.emplace_back(std::move(img));
        }
        std::vector<std::uint64_t> next;
        next.reserve(alive.size());
        for (std::uint64_t idx : alive)
            if (at(idx, base) == base) next.push_back(idx);
        alive.swap(next);
    }
    return gens;
}

// Drop generators already produced by the kept prefix. Only worth the closure
// cost on small groups.
constexpr std::uint64_t kIrredundancyCap = 100'000;

std::vector<Perm> irredundant(std::vector<Perm> gens, int degree) {
    std::set<Perm> known;
    known.insert(Perm::identity(degree));
    std::vector<Perm> kept;
    for (auto& cand : gens) {
        if (known.count(cand)) continue;
        kept.push_back(std::move(cand));
        std::set<Perm> closure{Perm::identity(degree)};
        std::vector<Perm> queue{Perm::identity(degree)};
        while (!queue.empty()) {
            Perm x = std::move(queue.back());
            queue.pop_back();
            for (const Perm& h : kept) {
                Perm y = compose(x, h);
                if (closure.insert(y).second) queue.push_back(y);
            }
        }
        known = std::move(closure);
    }
    return kept;
}

} // namespace

PermGroup PermGroup::from_sorted_flat(int degree, std::vector<std::uint8_t> flat) {
    PermGroup g;
    g.degree_ = degree;
    g.count_ = degree > 0 ? flat.size() / degree : 1;
    g.flat_ = std::move(flat);
    if (g.count_ == 0) throw std::invalid_argument("group must contain the identity");
    g.generators_ = chain_generators(degree, g.flat_, g.count_);
    if (g.count_ <= kIrredundancyCap)
        g.generators_ = irredundant(std::move(g.generators_), degree);
    return g;
}

PermGroup PermGroup::from_elements(int degree, std::vector<Perm> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty() || !elements.front().is_identity())
        throw std::invalid_argument("group must contain the identity");
    for (const Perm& p : elements)
        if (p.degree() != degree) throw std::invalid_argument("element degree mismatch");
    std::vector<std::uint8_t> flat;
    flat.reserve(elements.size() * degree);
    for (const Perm& p : elements)
        flat.insert(flat.end(), p.images().begin(), p.images().end());
    return from_sorted_flat(degree, std::move(flat));
}

Perm PermGroup::element_perm(std::uint64_t i) const {
    auto row = element(i);
    return Perm(std::vector<std::uint8_t>(row.begin(), row.end()));
}

std::vector<Perm> PermGroup::elements() const {
    std::vector<Perm> out;
    out.reserve(count_);
    for (std::uint64_t i = 0; i < count_; ++i) out.push_back(element_perm(i));
    return out;
}

PermGroup automorphism_group(const Graph& g, const Caps& caps) {
    if (g.order() < 1) throw std::invalid_argument("automorphism_group: empty graph");
    if (g.order() > caps.aut_max_n)
        throw CapExceeded("automorphism_group: order " + std::to_string(g.order()) +
                          " exceeds cap " + std::to_string(caps.aut_max_n));
    AutSearch search(g, caps.aut_max_elements);
    search.dfs(0);
    if (search.cap_hit) {
        auto partial = chain_generators(g.order(), search.out, search.count);
        throw AutCapExceeded("automorphism_group: element cap " +
                                 std::to_string(caps.aut_max_elements) + " exceeded",
                             std::move(partial), search.count);
    }
    return PermGroup::from_sorted_flat(g.order(), std::move(search.out));
}

namespace {

struct PinnedSearch {
    const Graph& g;
    int n;
    std::vector<int> cls;
    std::vector<std::vector<int>> earlier;
    std::uint64_t pinned = 0;
    std::vector<std::uint8_t> img;
    std::uint64_t used = 0;
    std::optional<Perm> found;

    PinnedSearch(const Graph& graph, std::uint64_t pinned_mask)
        : g(graph),
          n(graph.order()),
          cls(invariant_classes(graph)),
          earlier(earlier_neighbors(graph)),
          pinned(pinned_mask),
          img(graph.order(), 0) {}

    bool try_candidate(int v, int w) {
        if ((used >> w) & 1) return false;
        if (cls[w] != cls[v]) return false;
        std::uint64_t need = 0;
        for (int u : earlier[v]) need |= bit_of(img[u]);
        if ((g.neighbor_mask(w) & used) != need) return false;
        img[v] = static_cast<std::uint8_t>(w);
        used |= bit_of(w);
        bool done = dfs(v + 1);
        used &= ~bit_of(w);
        return done;
    }

    bool dfs(int v) {
        if (v == n) {
            Perm p(std::vector<std::uint8_t>(img.begin(), img.end()));
            if (p.is_identity()) return false;
            found = std::move(p);
            return true;
        }
        if ((pinned >> v) & 1) return try_candidate(v, v);
        for (int w = 0; w < n; ++w)
            if (try_candidate(v, w)) return true;
        return false;
    }
};

} // namespace

std::optional<Perm> find_automorphism_fixing(const Graph& g, std::span<const int> fixed) {
    std::uint64_t pinned = 0;
    for (int v : fixed) {
        if (v < 0 || v >= g.order())
            throw std::invalid_argument("find_automorphism_fixing: vertex out of range");
        pinned |= bit_of(v);
    }
    if (g.order() == 0) return std::nullopt;
    PinnedSearch search(g, pinned);
    search.dfs(0);
    return search.found;
}

OrbitPartition orbits(const PermGroup& group) {
    int n = group.degree();
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    if (!group.generators().empty()) {
        for (const Perm& p : group.generators())
            for (int v = 0; v < n; ++v) unite(v, p(v));
    } else {
        for (std::uint64_t i = 0; i < group.order(); ++i) {
            auto e = group.element(i);
            for (int v = 0; v < n; ++v) unite(v, e[v]);
        }
    }
    std::map<int, std::vector<int>> blocks;
    for (int v = 0; v < n; ++v) blocks[find(v)].push_back(v);
    OrbitPartition out;
    out.block_of.assign(n, 0);
    for (auto& [root, members] : blocks) {
        for (int v : members) out.block_of[v] = static_cast<int>(out.orbits.size());
        out.orbits.push_back(std::move(members));
    }
    return out;
}

PermGroup pointwise_stabilizer(const PermGroup& group, std::span<const int> fixed) {
    int degree = group.degree();
    for (int v : fixed)
        if (v < 0 || v >= degree)
            throw std::invalid_argument("pointwise_stabilizer: vertex out of range");
    std::vector<std::uint8_t> flat;
    for (std::uint64_t i = 0; i < group.order(); ++i) {
        auto e = group.element(i);
        bool ok = true;
        for (int v : fixed) ok = ok && e[v] == v;
        if (ok) flat.insert(flat.end(), e.begin(), e.end());
    }
    return PermGroup::from_sorted_flat(degree, std::move(flat));
}

} // namespace fixig
