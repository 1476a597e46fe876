#include "fixig/functigraph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

namespace fixig {

VertexFunction VertexFunction::make(std::vector<int> images) {
    int n = static_cast<int>(images.size());
    for (int v : images)
        if (v < 0 || v >= n)
            throw std::invalid_argument("vertex function image out of range");
    return VertexFunction{n, std::move(images)};
}

VertexFunction VertexFunction::constant(int n, int target) {
    if (n < 1 || target < 0 || target >= n)
        throw std::invalid_argument("constant function target out of range");
    return VertexFunction{n, std::vector<int>(n, target)};
}

VertexFunction VertexFunction::identity(int n) {
    if (n < 1) throw std::invalid_argument("identity function needs n >= 1");
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return VertexFunction{n, std::move(img)};
}

int PreimageProfile::total() const {
    return std::accumulate(counts.begin(), counts.end(), 0);
}

Graph build_functigraph(const Graph& base, const VertexFunction& g) {
    int n = base.order();
    if (g.n != n) throw std::invalid_argument("function size does not match graph order");
    std::vector<Edge> edges(base.edges());
    for (auto [u, v] : base.edges()) edges.emplace_back(u + n, v + n);
    for (int u = 0; u < n; ++u) edges.emplace_back(u, n + g.images[u]);
    return Graph::make(2 * n, edges);
}

int image_size(const VertexFunction& g) {
    std::uint64_t seen = 0;
    for (int v : g.images) seen |= std::uint64_t{1} << v;
    return std::popcount(seen);
}

PreimageProfile preimage_profile(const VertexFunction& g) {
    std::map<int, int> counts;
    for (int v : g.images) ++counts[v];
    PreimageProfile p;
    p.counts.reserve(counts.size());
    for (const auto& [v, c] : counts) p.counts.push_back(c);
    std::sort(p.counts.begin(), p.counts.end(), std::greater<>());
    return p;
}

VertexFunction precompose(const VertexFunction& g, const Perm& alpha) {
    if (alpha.degree() != g.n)
        throw std::invalid_argument("precompose: degree mismatch");
    std::vector<int> img(g.n);
    for (int u = 0; u < g.n; ++u) img[u] = g.images[alpha(u)];
    return VertexFunction{g.n, std::move(img)};
}

// ---- catalog ----

namespace {

// Image table on pendant_pair_tree(t), path vertices copied identically.
// set_pair assigns the images of the pendant pair (u_i, w_i), 1-based i.
struct PendantTreeImages {
    int t;
    std::vector<int> img;

    explicit PendantTreeImages(int t_) : t(t_), img(3 * t_) {
        for (int i = 1; i <= t; ++i) img[i - 1] = i - 1;
    }
    void split(int i) {  // u_i -> v_i', w_i -> w_i'
        img[t + i - 1] = i - 1;
        img[2 * t + i - 1] = 2 * t + i - 1;
    }
    void collapse_onto(int i, int target) {  // u_i, w_i -> v_target'
        img[t + i - 1] = target - 1;
        img[2 * t + i - 1] = target - 1;
    }
    void split_onto(int i, int target) {  // u_i -> v_target', w_i -> w_target'
        img[t + i - 1] = target - 1;
        img[2 * t + i - 1] = 2 * t + target - 1;
    }
    VertexFunction take() { return VertexFunction::make(std::move(img)); }
};

} // namespace

VertexFunction realize_function(int t) {
    if (t < 2) throw std::invalid_argument("realize_function requires t >= 2");
    PendantTreeImages g(t);
    for (int i = 1; i <= t; ++i) {
        if (t % 2 == 1 && i == t) g.split_onto(i, t - 2);
        else if (i % 2 == 1) g.split(i);
        else g.collapse_onto(i, i);
    }
    return g.take();
}

VertexFunction successor_function(int t) {
    if (t < 3)
        throw std::invalid_argument("successor_function requires t >= 3 (even case uses v_{t-3})");
    PendantTreeImages g(t);
    if (t % 2 == 0) {
        for (int i = 1; i <= t; ++i) {
            if (i == t - 1) g.collapse_onto(i, t - 1);
            else if (i == t) g.split_onto(i, t - 3);
            else if (i % 2 == 1) g.split(i);
            else g.collapse_onto(i, i);
        }
    } else {
        for (int i = 1; i <= t; ++i) {
            if (i == t) g.collapse_onto(i, t);
            else if (i % 2 == 1) g.split(i);
            else g.collapse_onto(i, i);
        }
    }
    return g.take();
}

namespace {

// Shared shape of the sum/difference constructions: every pendant pair
// splits, except the last one, which splits onto position tau-1.
VertexFunction split_shift_function(int tau) {
    PendantTreeImages g(tau);
    for (int i = 1; i < tau; ++i) g.split(i);
    g.split_onto(tau, tau - 1);
    return g.take();
}

} // namespace

VertexFunction sum_function(int t) {
    if (t < 2) throw std::invalid_argument("sum_function requires t >= 2");
    if (t == 2) return VertexFunction::identity(3);
    return split_shift_function(t - 1);
}

VertexFunction diff_function(int t) {
    if (t < 2) throw std::invalid_argument("diff_function requires t >= 2");
    return split_shift_function(t + 1);
}

VertexFunction collapse_function(int t) {
    if (t < 2) throw std::invalid_argument("collapse_function requires t >= 2");
    PendantTreeImages g(t);
    for (int i = 1; i <= t; ++i) g.collapse_onto(i, i);
    return g.take();
}

VertexFunction profile_function(int n, const PreimageProfile& profile) {
    if (profile.counts.empty() || profile.total() != n)
        throw std::invalid_argument("profile must be nonempty and sum to n");
    if (!std::is_sorted(profile.counts.begin(), profile.counts.end(), std::greater<>()))
        throw std::invalid_argument("profile must be sorted descending");
    if (profile.counts.back() < 1)
        throw std::invalid_argument("profile entries must be >= 1");
    std::vector<int> img;
    img.reserve(n);
    for (int j = 0; j < profile.parts(); ++j)
        img.insert(img.end(), profile.counts[j], j);
    return VertexFunction::make(std::move(img));
}

VertexFunction menu_function(int n, int s, int variant) {
    if (s < 2 || n < s + 2 || n > 2 * s)
        throw std::invalid_argument("menu_function requires s >= 2 and s+2 <= n <= 2s");
    if (variant == 2) {
        if (n != 2 * s)
            throw std::invalid_argument("menu_function variant 2 exists only for n = 2s");
        return profile_function(n, PreimageProfile{std::vector<int>(s, 2)});
    }
    if (variant != 1) throw std::invalid_argument("menu_function variant must be 1 or 2");
    int pairs = n - s - 2;
    std::vector<int> counts{3};
    counts.insert(counts.end(), pairs, 2);
    counts.insert(counts.end(), s - 1 - pairs, 1);
    return profile_function(n, PreimageProfile{std::move(counts)});
}

// ---- string dispatch ----

namespace {

void want(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

} // namespace

VertexFunction catalog_function(const std::string& tag, std::span<const int> params) {
    auto p = [&](std::size_t i) { return params[i]; };
    if (tag == "lemma_fff_even") {
        want(params.size() == 1 && p(0) >= 2 && p(0) % 2 == 0, "lemma_fff_even:t needs even t >= 2");
        return realize_function(p(0));
    }
    if (tag == "lemma_fff_odd") {
        want(params.size() == 1 && p(0) >= 3 && p(0) % 2 == 1, "lemma_fff_odd:t needs odd t >= 3");
        return realize_function(p(0));
    }
    if (tag == "lemma_succ_even") {
        want(params.size() == 1 && p(0) >= 4 && p(0) % 2 == 0, "lemma_succ_even:t needs even t >= 4");
        return successor_function(p(0));
    }
    if (tag == "lemma_succ_odd") {
        want(params.size() == 1 && p(0) >= 3 && p(0) % 2 == 1, "lemma_succ_odd:t needs odd t >= 3");
        return successor_function(p(0));
    }
    if (tag == "lemma_sum") {
        want(params.size() == 1, "lemma_sum:t");
        return sum_function(p(0));
    }
    if (tag == "lemma_diff") {
        want(params.size() == 1, "lemma_diff:t");
        return diff_function(p(0));
    }
    if (tag == "lemma_diff_rev") {
        want(params.size() == 1, "lemma_diff_rev:t");
        return collapse_function(p(0));
    }
    if (tag == "kn_from_profile") {
        want(params.size() >= 2, "kn_from_profile:n,c1,...");
        PreimageProfile profile{std::vector<int>(params.begin() + 1, params.end())};
        return profile_function(p(0), profile);
    }
    if (tag == "f112_menu") {
        want(params.size() == 3, "f112_menu:n,s,variant");
        return menu_function(p(0), p(1), p(2));
    }
    if (tag == "constant") {
        want(params.size() == 2, "constant:n,target");
        return VertexFunction::constant(p(0), p(1));
    }
    if (tag == "identity") {
        want(params.size() == 1, "identity:n");
        return VertexFunction::identity(p(0));
    }
    throw std::invalid_argument("unknown catalog tag '" + tag + "'");
}

Graph catalog_base_graph(const std::string& tag, std::span<const int> params) {
    auto p = [&](std::size_t i) { return params[i]; };
    want(!params.empty(), "catalog tag needs parameters");
    if (tag == "lemma_fff_even" || tag == "lemma_fff_odd" || tag == "lemma_succ_even" ||
        tag == "lemma_succ_odd" || tag == "lemma_diff_rev")
        return pendant_pair_tree(p(0));
    if (tag == "lemma_sum") return p(0) == 2 ? path_graph(3) : pendant_pair_tree(p(0) - 1);
    if (tag == "lemma_diff") return pendant_pair_tree(p(0) + 1);
    if (tag == "kn_from_profile" || tag == "f112_menu") return complete_graph(p(0));
    if (tag == "constant" || tag == "identity")
        throw std::invalid_argument("catalog tag '" + tag +
                                    "' has no canonical base graph; supply --family");
    throw std::invalid_argument("unknown catalog tag '" + tag + "'");
}

std::vector<std::string> catalog_tags() {
    return {"lemma_fff_even", "lemma_fff_odd", "lemma_succ_even", "lemma_succ_odd",
            "lemma_sum",      "lemma_diff",    "lemma_diff_rev",  "kn_from_profile",
            "f112_menu",      "constant",      "identity"};
}

} // namespace fixig
