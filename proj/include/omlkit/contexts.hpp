#ifndef OMLKIT_CONTEXTS_HPP
#define OMLKIT_CONTEXTS_HPP

#include <cstdint>
#include <vector>

#include "omlkit/lattice.hpp"

namespace omlkit {

/// A Boolean sublattice of a parent lattice: a context.
struct Block {
    /// Sorted ids, always containing bottom and top.
    std::vector<ElementId> elements;
    /// Minimal nonzero elements of the block, sorted.
    std::vector<ElementId> atoms;

    bool contains(ElementId x) const;
    bool operator==(const Block &) const = default;
};

/// A two-valued Boolean homomorphism on a block, determined by the atom it sends to 1.
struct Valuation {
    std::vector<ElementId> domain;
    std::vector<std::uint8_t> values; ///< parallel to domain
    ElementId atom = 0;

    /// Value of x; x must lie in the domain.
    int value(ElementId x) const;
};

/// a = (a ^ b) v (a ^ ~b)
bool commutes(const Lattice &L, ElementId a, ElementId b);

/// Checks that `elements` (with bottom and top added) is closed under ^, v, ~ and
/// distributive, and returns it as a Block. Throws OmlError otherwise.
Block make_block(const Lattice &L, std::vector<ElementId> elements);

/// Maximal Boolean sublattices, ordered lexicographically by their sorted element ids.
std::vector<Block> blocks(const Lattice &L);

/// One valuation per atom p of W, v(x) = 1 iff p <= x, ordered by atom id.
std::vector<Valuation> homomorphisms(const Lattice &L, const Block &W);

/// Exhaustive check that v preserves ^, v, ~, 0 and 1 on its domain.
bool is_homomorphism(const Lattice &L, const Valuation &v);

} // namespace omlkit

#endif // OMLKIT_CONTEXTS_HPP
