// Fixing sets and the exact fixing number: iterative deepening from the
// twin-set lower bound, extending only by least-id orbit representatives of
// the current pointwise stabilizer. Returns the lexicographically least
// minimum fixing set.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fixig/caps.hpp"
#include "fixig/graph.hpp"

namespace fixig {

struct FixingResult {
    int fix = 0;
    std::vector<int> witness;       // sorted; lex-least minimum fixing set
    int lower_bound_used = 0;       // twin-set lower bound the search started from
    std::uint64_t nodes_searched = 0;
    std::uint64_t aut_order = 1;
};

// True iff no non-identity automorphism fixes every vertex of `vertices`.
bool is_fixing_set(const Graph& g, std::span<const int> vertices);

// max over the closed/open twin partitions of sum(|class|-1) over classes of
// size >= 2; always <= fix(g).
int twin_lower_bound(const Graph& g);

FixingResult fixing_number(const Graph& g, const Caps& caps = Caps::defaults());

std::vector<int> min_fixing_set(const Graph& g, const Caps& caps = Caps::defaults());

} // namespace fixig
