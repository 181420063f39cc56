#ifndef OMLKIT_MODAL_HPP
#define OMLKIT_MODAL_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "omlkit/contexts.hpp"
#include "omlkit/lattice.hpp"
#include "omlkit/valuations.hpp"

namespace omlkit {

/// A Boolean homomorphism from the possibility space into 2.
using PossibilityHomomorphism = Valuation;

/// The possibility operator of a finite orthomodular lattice, taken in the
/// lattice itself: a finite OML is complete, hence Boolean saturated, and
/// diamond(x) is the least central element above x.
class ModalLayer {
public:
    explicit ModalLayer(Lattice L);

    const Lattice &lattice() const { return lattice_; }
    const std::vector<ElementId> &center() const { return center_; }
    const std::vector<Block> &contexts() const { return blocks_; }
    const Block &possibility_space() const { return possibility_space_; }

    ElementId diamond(ElementId x) const { return diamond_[x]; }
    /// The diamond image {diamond(x) : x in L}, sorted.
    std::vector<ElementId> image() const;
    bool is_central(ElementId x) const;

private:
    Lattice lattice_;
    std::vector<ElementId> center_;
    std::vector<ElementId> diamond_;
    std::vector<Block> blocks_;
    Block possibility_space_;
};

/// Closure of `generators` under ^, v, ~ (with 0 and 1).
std::vector<ElementId> generated_subalgebra(const Lattice &L, std::vector<ElementId> generators);

struct AxiomResult {
    std::string name;
    std::string statement;
    bool holds = true;
    /// First failing tuple, if any.
    std::vector<ElementId> witness;
};

struct ModalAxiomReport {
    std::array<AxiomResult, 7> axioms;
    bool all_hold() const;
};

/// S1..S7, each checked over every element tuple.
ModalAxiomReport verify_modal_axioms(const ModalLayer &layer);

std::vector<PossibilityHomomorphism> possibility_homomorphisms(const ModalLayer &layer);

/// Global valuations whose restriction to each context agrees with f on the
/// context's intersection with the possibility space.
ValuationOutcome actualization_compatible(const ModalLayer &layer, const PossibilityHomomorphism &f,
                                          const SearchOptions &options = {});

/// True if g agrees with f on every W_i intersected with the possibility space.
bool agrees_with(const ModalLayer &layer, const GlobalValuation &g, const PossibilityHomomorphism &f);

struct MksReport {
    bool side_a = false;              ///< a global valuation exists
    bool side_b = false;              ///< some f admits a compatible actualization
    bool agreement = false;
    ValuationOutcome global;          ///< side A search
    std::vector<ValuationOutcome> per_homomorphism; ///< side B searches, parallel to possibility_homomorphisms()
    std::optional<std::size_t> witness_homomorphism;
};

/// Both sides by independent exhaustive searches. Throws Inconclusive if any
/// search hits its budget.
MksReport mks_check(const ModalLayer &layer, const SearchOptions &options = {});

/// {x in possibility space : diamond(P) <= x}
std::vector<ElementId> classical_consequences(const ModalLayer &layer, ElementId p);

struct CorrespondenceReport {
    std::size_t homomorphisms_checked = 0;
    bool holds = true;
    /// (atom of the failing homomorphism, element) of the first failure.
    std::optional<std::pair<ElementId, ElementId>> witness;
};

/// On a Boolean lattice, every homomorphism v satisfies v(diamond x) = v(x).
/// Throws NotBoolean otherwise.
CorrespondenceReport classical_correspondence_check(const ModalLayer &layer);

} // namespace omlkit

#endif // OMLKIT_MODAL_HPP
