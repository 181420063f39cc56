#ifndef OMLKIT_ERROR_HPP
#define OMLKIT_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace omlkit {

using ElementId = std::uint32_t;

class OmlError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input that never reached axiom validation (bad ids, sizes, JSON shape).
class FormatError : public OmlError {
public:
    using OmlError::OmlError;
};

enum class LatticeErrorKind {
    NotAPoset,
    NotALattice,
    InvolutionViolation,
    ComplementLawViolation,
    OrthomodularityViolation,
};

const char *to_string(LatticeErrorKind kind);

/// First violated axiom found by build_lattice, with the witness elements
/// that exhibit it (lexicographically first under element ids).
class LatticeError : public OmlError {
public:
    LatticeError(LatticeErrorKind kind, std::vector<ElementId> witness, const std::string &detail);

    LatticeErrorKind kind() const { return kind_; }
    const std::vector<ElementId> &witness() const { return witness_; }

private:
    LatticeErrorKind kind_;
    std::vector<ElementId> witness_;
};

/// The two characterizations of the center disagreed. Never caused by valid input.
class DefinitionMismatch : public OmlError {
public:
    using OmlError::OmlError;
};

class BudgetExceeded : public OmlError {
public:
    BudgetExceeded(std::uint64_t budget, std::uint64_t nodes);

    std::uint64_t budget() const { return budget_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    std::uint64_t budget_;
    std::uint64_t nodes_;
};

/// An inner search of the modal Kochen-Specker check ran out of budget.
class Inconclusive : public OmlError {
public:
    using OmlError::OmlError;
};

class NotBoolean : public OmlError {
public:
    using OmlError::OmlError;
};

} // namespace omlkit

#endif // OMLKIT_ERROR_HPP
