#include "omlkit/dimacs.hpp"

#include <cstdlib>
#include <sstream>

#include "omlkit/error.hpp"

namespace omlkit {

CnfFormula parse_dimacs(std::string_view text)
{
    CnfFormula f;
    std::istringstream in{std::string(text)};
    std::string line;
    bool header = false;
    std::size_t declared = 0;
    std::vector<int> clause;
    while (std::getline(in, line)) {
        std::istringstream words(line);
        std::string first;
        if (!(words >> first))
            continue;
        if (first == "c") {
            std::string kind, name, eq;
            int var = 0;
            if (words >> kind >> name >> eq >> var && (kind == "atom" || kind == "element") && eq == "=")
                f.names[var] = name;
            continue;
        }
        if (first == "p") {
            std::string fmt;
            if (header || !(words >> fmt >> f.variables >> declared) || fmt != "cnf")
                throw FormatError("bad DIMACS header: " + line);
            header = true;
            continue;
        }
        if (!header)
            throw FormatError("DIMACS clause before header");
        std::istringstream lits(line);
        for (std::string tok; lits >> tok;) {
            char *end = nullptr;
            long lit = std::strtol(tok.c_str(), &end, 10);
            if (*end != '\0' || static_cast<std::size_t>(std::labs(lit)) > f.variables)
                throw FormatError("bad DIMACS literal '" + tok + "'");
            if (lit == 0) {
                f.clauses.push_back(std::move(clause));
                clause.clear();
            } else {
                clause.push_back(static_cast<int>(lit));
            }
        }
    }
    if (!header)
        throw FormatError("missing DIMACS header");
    if (!clause.empty())
        throw FormatError("unterminated DIMACS clause");
    if (f.clauses.size() != declared)
        throw FormatError("DIMACS header declares " + std::to_string(declared) + " clauses, found " +
                          std::to_string(f.clauses.size()));
    return f;
}

namespace {

class Dpll {
public:
    Dpll(const CnfFormula &f, std::uint64_t budget) : f_(f), value_(f.variables + 1, 0), budget_(budget) {}

    bool solve()
    {
        std::size_t mark = trail_.size();
        if (!propagate()) {
            undo(mark);
            return false;
        }
        int var = 0;
        for (std::size_t v = 1; v <= f_.variables; ++v) {
            if (value_[v] == 0) {
                var = static_cast<int>(v);
                break;
            }
        }
        if (var == 0)
            return true;
        for (int lit : {var, -var}) {
            if (++decisions_ > budget_)
                throw BudgetExceeded(budget_, decisions_);
            std::size_t inner = trail_.size();
            set(lit);
            if (solve())
                return true;
            undo(inner);
        }
        undo(mark);
        return false;
    }

    std::vector<bool> model() const
    {
        std::vector<bool> m(value_.size(), false);
        for (std::size_t v = 1; v < value_.size(); ++v)
            m[v] = value_[v] > 0;
        return m;
    }

    std::uint64_t decisions() const { return decisions_; }

private:
    int lit_value(int lit) const
    {
        int v = value_[static_cast<std::size_t>(std::abs(lit))];
        return lit > 0 ? v : -v;
    }

    void set(int lit)
    {
        value_[static_cast<std::size_t>(std::abs(lit))] = lit > 0 ? 1 : -1;
        trail_.push_back(std::abs(lit));
    }

    void undo(std::size_t mark)
    {
        while (trail_.size() > mark) {
            value_[static_cast<std::size_t>(trail_.back())] = 0;
            trail_.pop_back();
        }
    }

    // Repeats unit propagation to a fixpoint; false on a falsified clause.
    bool propagate()
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto &clause : f_.clauses) {
                int open = 0, unit = 0;
                bool satisfied = false;
                for (int lit : clause) {
                    int v = lit_value(lit);
                    if (v > 0) {
                        satisfied = true;
                        break;
                    }
                    if (v == 0) {
                        ++open;
                        unit = lit;
                    }
                }
                if (satisfied)
                    continue;
                if (open == 0)
                    return false;
                if (open == 1) {
                    set(unit);
                    changed = true;
                }
            }
        }
        return true;
    }

    const CnfFormula &f_;
    std::vector<int> value_;
    std::vector<int> trail_;
    std::uint64_t budget_;
    std::uint64_t decisions_ = 0;
};

} // namespace

CnfResult solve_cnf(const CnfFormula &f, std::uint64_t decision_budget)
{
    Dpll solver(f, decision_budget);
    CnfResult r;
    r.satisfiable = solver.solve();
    r.decisions = solver.decisions();
    if (r.satisfiable) {
        r.model = solver.model();
        if (!satisfies(f, r.model))
            throw OmlError("internal error: DPLL model does not satisfy the formula");
    }
    return r;
}

bool satisfies(const CnfFormula &f, const std::vector<bool> &model)
{
    if (model.size() != f.variables + 1)
        return false;
    for (const auto &clause : f.clauses) {
        bool ok = false;
        for (int lit : clause)
            if (model[static_cast<std::size_t>(std::abs(lit))] == (lit > 0))
                ok = true;
        if (!ok)
            return false;
    }
    return true;
}

} // namespace omlkit
