// Functigraph construction: two copies A, B of a base graph plus an edge from
// each A-vertex u to its image g(u) in B, and the catalog of explicit
// functions used by the verified claims.
#pragma once

#include <span>
#include <string>
#include <vector>

#include "fixig/graph.hpp"
#include "fixig/perm.hpp"

namespace fixig {

// Total function from copy A into copy B of an n-vertex graph, in B-local
// indexing (images in 0..n-1); the builder adds the +n offset. Need not be
// injective or surjective.
struct VertexFunction {
    int n = 0;
    std::vector<int> images;

    static VertexFunction make(std::vector<int> images);  // validates range
    static VertexFunction constant(int n, int target);
    static VertexFunction identity(int n);

    bool operator==(const VertexFunction&) const = default;
};

// Multiset of preimage counts over image vertices, sorted descending.
// Entries sum to n; the entry count is the image size s.
struct PreimageProfile {
    std::vector<int> counts;

    int parts() const { return static_cast<int>(counts.size()); }
    int total() const;
    bool operator==(const PreimageProfile&) const = default;
};

// Graph on 2n vertices: A = 0..n-1 (copy of g's base), B = n..2n-1 (shifted
// copy), plus the n cross edges {u, n+g(u)}. Exactly 2m+n edges.
Graph build_functigraph(const Graph& base, const VertexFunction& g);

int image_size(const VertexFunction& g);

PreimageProfile preimage_profile(const VertexFunction& g);

// g∘alpha (precompose with an automorphism of the base): u -> g(alpha(u)).
VertexFunction precompose(const VertexFunction& g, const Perm& alpha);

// ---- Catalog: the explicit constructions behind the realization lemmas and
// ---- complete-graph results. All functions are stated on the documented
// ---- labelings of the base families (see pendant_pair_tree, complete_graph).

// On pendant_pair_tree(t), t >= 2: realizes fix(G) = t = fix(F_G).
// Path copies identically; pendant pairs at odd positions split
// (u_i -> v_i', w_i -> w_i'), pairs at even positions collapse onto v_i';
// for odd t the last pair maps onto position t-2 instead.
VertexFunction realize_function(int t);

// On pendant_pair_tree(t), t >= 3: realizes fix(G) = t, fix(F_G) = t+1.
// (The even-t variant references position t-3, so t = 2 has no instance.)
VertexFunction successor_function(int t);

// Base graph: path_graph(3) for t = 2 (identity function), else
// pendant_pair_tree(t-1). Realizes fix(G) + fix(F_G) = t.
VertexFunction sum_function(int t);  // t >= 2

// On pendant_pair_tree(t+1): realizes fix(G) - fix(F_G) = t.
VertexFunction diff_function(int t);  // t >= 2

// On pendant_pair_tree(t): every triple v_i, u_i, w_i maps to v_i'; realizes
// fix(F_G) - fix(G) = t.
VertexFunction collapse_function(int t);  // t >= 2

// On complete_graph(n): function with the given preimage profile; images are
// B-vertices 0..s-1 in descending profile order, A-vertices taken in id order.
VertexFunction profile_function(int n, const PreimageProfile& profile);

// On complete_graph(n): the listed function menu realizing
// fix(K_n) = fix(F_{K_n}) at image size s. Variant 1 exists for every valid
// (n, s) with s+2 <= n <= 2s; variant 2 (all preimage counts equal to 2) only
// for n = 2s.
VertexFunction menu_function(int n, int s, int variant);

// String-dispatched access for the CLI (--catalog TAG:PARAMS). Tags:
//   lemma_fff_even:t | lemma_fff_odd:t | lemma_succ_even:t | lemma_succ_odd:t
//   lemma_sum:t | lemma_diff:t | lemma_diff_rev:t
//   kn_from_profile:n,c1,c2,... | f112_menu:n,s,variant
//   constant:n,target | identity:n
VertexFunction catalog_function(const std::string& tag, std::span<const int> params);
// The base graph each catalog tag is defined on.
Graph catalog_base_graph(const std::string& tag, std::span<const int> params);
std::vector<std::string> catalog_tags();

} // namespace fixig
