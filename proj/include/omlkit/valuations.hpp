#ifndef OMLKIT_VALUATIONS_HPP
#define OMLKIT_VALUATIONS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "omlkit/contexts.hpp"
#include "omlkit/greechie.hpp"
#include "omlkit/lattice.hpp"
#include "omlkit/search.hpp"

namespace omlkit {

/// A compatible family of block valuations: v_i and v_j agree on W_i ^ W_j.
struct GlobalValuation {
    std::vector<Valuation> per_block; ///< parallel to the block list searched over
    std::vector<std::uint8_t> total;  ///< induced value of every element
};

using ValuationOutcome = SearchOutcome<GlobalValuation>;
using ColoringOutcome = SearchOutcome<std::vector<std::uint8_t>>;

/// Exactly-one encoding of global valuations.
///
/// Variables are the atoms of all blocks, plus every shared element whose value
/// is not already tied down by shared atoms: an element x lying in several
/// blocks needs its own variable unless x is an atom of every block containing
/// it, or ~x is. Constraints are, per block W:
///   - exactly one atom of W is 1;
///   - for each variable x in W that is not an atom of W, exactly one of
///     {x} and the atoms of W below ~x is 1 (i.e. x = OR of W's atoms below x).
/// For pasted rank-3 lattices this is exactly the diagram's hypergraph.
struct ValuationEncoding {
    std::vector<ElementId> variables;    ///< element behind each variable, ascending
    std::vector<std::int32_t> var_of;    ///< element -> variable or -1
    ExactOneProblem problem;
};

ValuationEncoding encode_valuations(const Lattice &L, const std::vector<Block> &blocks);

GlobalValuation decode_valuation(const Lattice &L, const std::vector<Block> &blocks,
                                 const std::vector<ElementId> &chosen_atoms);

/// Re-checks a witness from scratch: each v_i is a homomorphism on exactly W_i,
/// every pair agrees on W_i ^ W_j, and the total map is well defined with t(~x) = 1 - t(x).
bool verify_global_valuation(const Lattice &L, const std::vector<Block> &blocks, const GlobalValuation &g);

ValuationOutcome global_valuation(const Lattice &L, const SearchOptions &options = {});
ValuationOutcome global_valuation(const Lattice &L, const std::vector<Block> &blocks,
                                  const SearchOptions &options = {});

/// Global valuation search in which some block atoms are forced to 0.
/// Used by compatible actualizations.
ValuationOutcome global_valuation_excluding(const Lattice &L, const std::vector<Block> &blocks,
                                            const std::vector<ElementId> &forced_zero,
                                            const SearchOptions &options = {});

/// Vertex map into {0,1} with exactly one 1 on every edge.
ColoringOutcome check_coloring(const OrthoHypergraph &h, const SearchOptions &options = {});
bool verify_coloring(const OrthoHypergraph &h, const std::vector<std::uint8_t> &coloring);

/// DIMACS CNF whose models are exactly the global valuations (resp. colorings):
/// per constraint one at-least-one clause and pairwise at-most-one clauses,
/// with "c atom <name> = <var>" comment lines.
std::string to_cnf(const Lattice &L);
std::string to_cnf(const Lattice &L, const std::vector<Block> &blocks);
std::string to_cnf(const OrthoHypergraph &h);

} // namespace omlkit

#endif // OMLKIT_VALUATIONS_HPP
