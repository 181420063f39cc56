#ifndef OMLKIT_LATTICE_HPP
#define OMLKIT_LATTICE_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "omlkit/error.hpp"

namespace omlkit {

struct LatticeInput {
    std::size_t n = 0;
    /// Generating pairs (a, b) meaning a <= b. Reflexive and transitive closure is taken.
    std::vector<std::pair<ElementId, ElementId>> order_pairs;
    std::vector<ElementId> ortho;
    std::vector<std::string> names;
};

/// A validated finite orthomodular lattice. Immutable once built; meets and
/// joins are tabulated at construction.
class Lattice {
public:
    std::size_t size() const { return n_; }
    ElementId bottom() const { return bottom_; }
    ElementId top() const { return top_; }

    bool leq(ElementId a, ElementId b) const { return leq_[a * n_ + b] != 0; }
    ElementId meet(ElementId a, ElementId b) const { return meet_[a * n_ + b]; }
    ElementId join(ElementId a, ElementId b) const { return join_[a * n_ + b]; }
    ElementId ortho(ElementId a) const { return ortho_[a]; }

    const std::string &name(ElementId a) const { return names_[a]; }
    const std::vector<std::string> &names() const { return names_; }
    const std::vector<ElementId> &ortho_map() const { return ortho_; }

    /// Elements covering bottom.
    std::vector<ElementId> atoms() const;
    /// Pairs (a, b) with a < b and nothing strictly between.
    std::vector<std::pair<ElementId, ElementId>> covers() const;

    bool operator==(const Lattice &other) const;

private:
    friend Lattice build_lattice(LatticeInput input);

    std::size_t n_ = 0;
    std::vector<unsigned char> leq_;
    std::vector<ElementId> meet_;
    std::vector<ElementId> join_;
    std::vector<ElementId> ortho_;
    std::vector<std::string> names_;
    ElementId bottom_ = 0;
    ElementId top_ = 0;
};

/// Validates every orthomodular lattice axiom exhaustively. Throws FormatError
/// for structurally bad input and LatticeError naming the first violated axiom.
Lattice build_lattice(LatticeInput input);

struct TripleReport {
    ElementId a, b, c;
    bool holds_d;
    bool holds_dstar;
    bool holds_t;
};

/// (a,b,c)D: (a v b) ^ c = (a ^ c) v (b ^ c)
bool distributes(const Lattice &L, ElementId a, ElementId b, ElementId c);
/// (a,b,c)D*: (a ^ b) v c = (a v c) ^ (b v c)
bool codistributes(const Lattice &L, ElementId a, ElementId b, ElementId c);

TripleReport check_triple(const Lattice &L, ElementId a, ElementId b, ElementId c);

/// Central elements: z with (a,b,z)T for all a, b.
std::vector<ElementId> center_by_triples(const Lattice &L);
/// Central elements: z with a = (a ^ z) v (a ^ ~z) for all a.
std::vector<ElementId> center_by_decomposition(const Lattice &L);
/// Both characterizations, compared. Throws DefinitionMismatch if they differ.
std::vector<ElementId> center(const Lattice &L);

bool is_boolean(const Lattice &L);

/// Componentwise product; element (i, j) has id i * right.size() + j.
Lattice product(const Lattice &left, const Lattice &right);
/// Boolean algebra of subsets of a k-element set; element id is the subset bitmask.
Lattice boolean_algebra(unsigned k);
/// MOk: 0, 1 and k pairs of complementary atoms, ids 0, a0, a0', a1, a1', ..., 1.
Lattice mo(unsigned k);

ElementId find_element(const Lattice &L, const std::string &name_or_id);

} // namespace omlkit

#endif // OMLKIT_LATTICE_HPP
