// Exhaustive generators at desk scale: labeled connected graphs by edge-subset
// filtering, labeled trees via Pruefer sequences, and all-functions sweeps
// over a base graph.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "fixig/caps.hpp"
#include "fixig/functigraph.hpp"
#include "fixig/graph.hpp"

namespace fixig {

// All labeled connected graphs on n vertices, in increasing edge-bitmask
// order (edge index order (0,1),(0,2),...,(n-2,n-1)). n <= caps cap.
std::vector<Graph> connected_graphs(int n, const Caps& caps = Caps::defaults());

// All 2^C(n,2) labeled graphs, same order, disconnected included. n <= 6.
std::vector<Graph> all_labeled_graphs(int n);

// All n^(n-2) labeled trees on n vertices (n <= 8), by Pruefer sequence in
// lexicographic order; n = 1, 2 give the single tree.
std::vector<Graph> labeled_trees(int n);
Graph tree_from_pruefer(std::span<const int> seq);

// Every function {0..n-1} -> {0..n-1} in lexicographic image order.
void for_each_function(int n, const std::function<void(const VertexFunction&)>& fn);

// Exhaustive sweep of all n^n functions on a base graph: fixing number and
// metric dimension of every functigraph, ambient bound checks, extremal
// functions, and the fix-value distribution.
struct FunctionSweep {
    int base_order = 0;
    std::uint64_t functions = 0;
    std::map<int, std::uint64_t> fix_histogram;
    int min_fix = 0, max_fix = 0;
    VertexFunction min_fix_function, max_fix_function;  // first in lex order
    int min_beta = 0, max_beta = 0;
    std::uint64_t fix_bound_violations = 0;   // fix outside [0, 2n-3]
    std::uint64_t beta_bound_violations = 0;  // beta outside [2, 2n-3]
    std::uint64_t fix_le_beta_violations = 0;
    std::vector<std::string> violation_examples;  // serialized (graph, function)
};

FunctionSweep sweep_all_functions(const Graph& base, const Caps& caps = Caps::defaults());

} // namespace fixig
