#include "omlkit/error.hpp"

namespace omlkit {

const char *to_string(LatticeErrorKind kind)
{
    switch (kind) {
    case LatticeErrorKind::NotAPoset: return "NotAPoset";
    case LatticeErrorKind::NotALattice: return "NotALattice";
    case LatticeErrorKind::InvolutionViolation: return "InvolutionViolation";
    case LatticeErrorKind::ComplementLawViolation: return "ComplementLawViolation";
    case LatticeErrorKind::OrthomodularityViolation: return "OrthomodularityViolation";
    }
    return "unknown";
}

LatticeError::LatticeError(LatticeErrorKind kind, std::vector<ElementId> witness, const std::string &detail)
    : OmlError(std::string(to_string(kind)) + ": " + detail), kind_(kind), witness_(std::move(witness))
{
}

BudgetExceeded::BudgetExceeded(std::uint64_t budget, std::uint64_t nodes)
    : OmlError("search budget of " + std::to_string(budget) + " nodes exceeded"), budget_(budget), nodes_(nodes)
{
}

} // namespace omlkit
