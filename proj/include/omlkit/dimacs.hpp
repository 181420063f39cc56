#ifndef OMLKIT_DIMACS_HPP
#define OMLKIT_DIMACS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace omlkit {

struct CnfFormula {
    std::size_t variables = 0;
    std::vector<std::vector<int>> clauses;
    /// From "c atom <name> = <var>" / "c element <name> = <var>" comments.
    std::map<int, std::string> names;
};

/// Throws FormatError on a malformed header or clause.
CnfFormula parse_dimacs(std::string_view text);

struct CnfResult {
    bool satisfiable = false;
    std::vector<bool> model; ///< index 0 unused
    std::uint64_t decisions = 0;
};

/// Plain DPLL with unit propagation over generic clauses. Throws BudgetExceeded.
CnfResult solve_cnf(const CnfFormula &f, std::uint64_t decision_budget = 10'000'000);

bool satisfies(const CnfFormula &f, const std::vector<bool> &model);

} // namespace omlkit

#endif // OMLKIT_DIMACS_HPP
