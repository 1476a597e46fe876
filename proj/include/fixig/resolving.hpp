// Resolving sets and exact metric dimension by subset enumeration in
// increasing size with distance-signature collision pruning.
#pragma once

#include <span>
#include <vector>

#include "fixig/caps.hpp"
#include "fixig/graph.hpp"

namespace fixig {

struct ResolvingResult {
    int beta = 0;
    std::vector<int> witness;  // ascending; lex-least minimum resolving set
};

// True iff the distance vectors to `landmarks` are pairwise distinct.
// Throws std::invalid_argument on disconnected input.
bool is_resolving_set(const Graph& g, std::span<const int> landmarks);

// Exact metric dimension; requires a connected graph within caps.mdim_max_n.
ResolvingResult metric_dimension(const Graph& g, const Caps& caps = Caps::defaults());

} // namespace fixig
