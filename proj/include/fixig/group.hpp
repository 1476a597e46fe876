// Exact automorphism groups of small graphs by backtracking over vertex
// images, plus orbits and pointwise stabilizers on explicitly enumerated
// groups. Desk scale by design: explicit element lists keep stabilizers and
// tests auditable; caps make failure explicit.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fixig/caps.hpp"
#include "fixig/graph.hpp"
#include "fixig/perm.hpp"

namespace fixig {

// Explicit permutation group: all elements, lexicographically sorted by image
// array (so the identity is element 0), stored flat for cache friendliness.
class PermGroup {
public:
    PermGroup() = default;

    // `flat` holds count*degree images, rows lex-sorted and unique, identity
    // included. Generators are derived (stabilizer-chain transversals, then a
    // greedy irredundancy pass on small groups).
    static PermGroup from_sorted_flat(int degree, std::vector<std::uint8_t> flat);
    static PermGroup from_elements(int degree, std::vector<Perm> elements);

    int degree() const { return degree_; }
    std::uint64_t order() const { return count_; }
    bool is_trivial() const { return count_ <= 1; }

    std::span<const std::uint8_t> element(std::uint64_t i) const {
        return {flat_.data() + i * degree_, static_cast<std::size_t>(degree_)};
    }
    Perm element_perm(std::uint64_t i) const;
    std::vector<Perm> elements() const;  // materialized copies

    const std::vector<Perm>& generators() const { return generators_; }

private:
    int degree_ = 0;
    std::uint64_t count_ = 0;
    std::vector<std::uint8_t> flat_;
    std::vector<Perm> generators_;
};

struct OrbitPartition {
    std::vector<std::vector<int>> orbits;  // sorted blocks, listed by least element
    std::vector<int> block_of;             // vertex -> index into orbits
};

// Thrown when the automorphism search exceeds the element cap; carries what
// was found so far.
struct AutCapExceeded : CapExceeded {
    AutCapExceeded(std::string msg, std::vector<Perm> partial, std::uint64_t found)
        : CapExceeded(std::move(msg)),
          partial_generators(std::move(partial)),
          elements_found(found) {}
    std::vector<Perm> partial_generators;
    std::uint64_t elements_found;
};

// Full automorphism group, elements in lexicographic image order.
// Pruning invariant per vertex: (degree, sorted neighbor-degree multiset,
// sorted distance multiset). Throws AutCapExceeded / CapExceeded on caps.
PermGroup automorphism_group(const Graph& g, const Caps& caps = Caps::defaults());

// A non-identity automorphism fixing every vertex of `fixed` pointwise, or
// nullopt if only the identity does. Searches with the set pre-pinned; never
// materializes the group.
std::optional<Perm> find_automorphism_fixing(const Graph& g, std::span<const int> fixed);

OrbitPartition orbits(const PermGroup& group);

PermGroup pointwise_stabilizer(const PermGroup& group, std::span<const int> fixed);

} // namespace fixig
