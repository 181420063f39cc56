#include "omlkit/valuations.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace omlkit {

namespace {

bool is_atom_of(const Block &W, ElementId x)
{
    return std::binary_search(W.atoms.begin(), W.atoms.end(), x);
}

void add_constraint(ExactOneProblem &problem, std::vector<std::uint32_t> c)
{
    problem.constraints.push_back(std::move(c));
}

} // namespace

ValuationEncoding encode_valuations(const Lattice &L, const std::vector<Block> &blocks)
{
    const auto n = static_cast<ElementId>(L.size());
    std::vector<std::vector<std::size_t>> containing(n);
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (ElementId x : blocks[i].elements)
            containing[x].push_back(i);

    std::vector<bool> needs_var(n, false);
    for (const auto &W : blocks)
        for (ElementId p : W.atoms)
            needs_var[p] = true;
    for (ElementId x = 0; x < n; ++x) {
        if (x == L.bottom() || x == L.top() || containing[x].size() < 2)
            continue;
        auto atom_everywhere = [&](ElementId e) {
            return std::all_of(containing[x].begin(), containing[x].end(),
                               [&](std::size_t i) { return is_atom_of(blocks[i], e); });
        };
        if (!atom_everywhere(x) && !atom_everywhere(L.ortho(x)))
            needs_var[x] = true;
    }

    ValuationEncoding enc;
    enc.var_of.assign(n, -1);
    for (ElementId x = 0; x < n; ++x) {
        if (needs_var[x]) {
            enc.var_of[x] = static_cast<std::int32_t>(enc.variables.size());
            enc.variables.push_back(x);
        }
    }
    enc.problem.variables = enc.variables.size();

    auto var = [&](ElementId x) { return static_cast<std::uint32_t>(enc.var_of[x]); };
    for (const auto &W : blocks) {
        std::vector<std::uint32_t> exactly_one;
        for (ElementId p : W.atoms)
            exactly_one.push_back(var(p));
        add_constraint(enc.problem, std::move(exactly_one));
        for (ElementId x : W.elements) {
            if (enc.var_of[x] < 0 || is_atom_of(W, x))
                continue;
            std::vector<std::uint32_t> link{var(x)};
            for (ElementId p : W.atoms)
                if (L.leq(p, L.ortho(x)))
                    link.push_back(var(p));
            add_constraint(enc.problem, std::move(link));
        }
    }
    return enc;
}

GlobalValuation decode_valuation(const Lattice &L, const std::vector<Block> &blocks,
                                 const std::vector<ElementId> &chosen_atoms)
{
    GlobalValuation g;
    g.total.assign(L.size(), 0);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        Valuation v;
        v.domain = blocks[i].elements;
        v.atom = chosen_atoms[i];
        for (ElementId x : v.domain) {
            v.values.push_back(L.leq(v.atom, x) ? 1 : 0);
            g.total[x] = v.values.back();
        }
        g.per_block.push_back(std::move(v));
    }
    return g;
}

bool verify_global_valuation(const Lattice &L, const std::vector<Block> &blocks, const GlobalValuation &g)
{
    if (g.per_block.size() != blocks.size() || g.total.size() != L.size())
        return false;
    std::vector<int> seen(L.size(), -1);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const auto &v = g.per_block[i];
        if (v.domain != blocks[i].elements || !is_homomorphism(L, v))
            return false;
        for (ElementId x : v.domain) {
            int value = v.value(x);
            if (seen[x] != -1 && seen[x] != value)
                return false;
            seen[x] = value;
        }
    }
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j)
            for (ElementId x : blocks[i].elements)
                if (blocks[j].contains(x) && g.per_block[i].value(x) != g.per_block[j].value(x))
                    return false;
    for (ElementId x = 0; x < L.size(); ++x) {
        if (seen[x] == -1 || seen[x] != g.total[x])
            return false;
        if (g.total[L.ortho(x)] != 1 - g.total[x])
            return false;
    }
    return true;
}

namespace {

ValuationOutcome run_valuation_search(const Lattice &L, const std::vector<Block> &blocks,
                                      const std::vector<ElementId> &forced_zero, const SearchOptions &options)
{
    auto start = std::chrono::steady_clock::now();
    auto enc = encode_valuations(L, blocks);
    std::vector<std::int8_t> seeds;
    if (!forced_zero.empty()) {
        seeds.assign(enc.problem.variables, -1);
        for (ElementId x : forced_zero) {
            if (enc.var_of[x] < 0)
                throw OmlError("cannot force " + L.name(x) + ": it is not a block atom");
            seeds[static_cast<std::size_t>(enc.var_of[x])] = 0;
        }
    }
    auto result = solve_exact_one(enc.problem, seeds, options);

    ValuationOutcome out;
    out.verdict = result.verdict;
    out.nodes_explored = result.nodes;
    if (result.verdict == Verdict::Found) {
        std::vector<ElementId> chosen;
        for (const auto &W : blocks) {
            auto it = std::find_if(W.atoms.begin(), W.atoms.end(), [&](ElementId p) {
                return result.assignment[static_cast<std::size_t>(enc.var_of[p])] == 1;
            });
            chosen.push_back(*it);
        }
        out.witness = decode_valuation(L, blocks, chosen);
        if (!verify_global_valuation(L, blocks, *out.witness))
            throw OmlError("internal error: search produced a witness that fails verification");
    }
    out.wall_time = std::chrono::steady_clock::now() - start;
    return out;
}

} // namespace

ValuationOutcome global_valuation(const Lattice &L, const SearchOptions &options)
{
    return global_valuation(L, blocks(L), options);
}

ValuationOutcome global_valuation(const Lattice &L, const std::vector<Block> &blocks, const SearchOptions &options)
{
    return run_valuation_search(L, blocks, {}, options);
}

ValuationOutcome global_valuation_excluding(const Lattice &L, const std::vector<Block> &blocks,
                                            const std::vector<ElementId> &forced_zero, const SearchOptions &options)
{
    return run_valuation_search(L, blocks, forced_zero, options);
}

ColoringOutcome check_coloring(const OrthoHypergraph &h, const SearchOptions &options)
{
    auto start = std::chrono::steady_clock::now();
    ExactOneProblem problem;
    problem.variables = h.vertices.size();
    for (const auto &e : h.edges)
        problem.constraints.emplace_back(e.begin(), e.end());
    auto result = solve_exact_one(problem, {}, options);

    ColoringOutcome out;
    out.verdict = result.verdict;
    out.nodes_explored = result.nodes;
    if (result.verdict == Verdict::Found) {
        out.witness = std::move(result.assignment);
        if (!verify_coloring(h, *out.witness))
            throw OmlError("internal error: search produced a coloring that fails verification");
    }
    out.wall_time = std::chrono::steady_clock::now() - start;
    return out;
}

bool verify_coloring(const OrthoHypergraph &h, const std::vector<std::uint8_t> &coloring)
{
    if (coloring.size() != h.vertices.size())
        return false;
    return std::all_of(h.edges.begin(), h.edges.end(), [&](const auto &e) {
        return std::count_if(e.begin(), e.end(), [&](std::size_t v) { return coloring[v] == 1; }) == 1;
    });
}

namespace {

std::string dimacs(const std::vector<std::string> &comments, const ExactOneProblem &problem)
{
    std::vector<std::vector<int>> clauses;
    for (const auto &c : problem.constraints) {
        std::vector<int> at_least_one;
        for (auto v : c)
            at_least_one.push_back(static_cast<int>(v) + 1);
        clauses.push_back(std::move(at_least_one));
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                clauses.push_back({-static_cast<int>(c[i]) - 1, -static_cast<int>(c[j]) - 1});
    }
    std::ostringstream out;
    for (const auto &line : comments)
        out << "c " << line << '\n';
    out << "p cnf " << problem.variables << ' ' << clauses.size() << '\n';
    for (const auto &clause : clauses) {
        for (int lit : clause)
            out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

} // namespace

std::string to_cnf(const Lattice &L)
{
    return to_cnf(L, blocks(L));
}

std::string to_cnf(const Lattice &L, const std::vector<Block> &blocks)
{
    auto enc = encode_valuations(L, blocks);
    std::vector<std::string> comments;
    for (std::size_t v = 0; v < enc.variables.size(); ++v) {
        ElementId x = enc.variables[v];
        bool atom = std::any_of(blocks.begin(), blocks.end(), [&](const Block &W) { return is_atom_of(W, x); });
        comments.push_back(std::string(atom ? "atom " : "element ") + L.name(x) + " = " + std::to_string(v + 1));
    }
    return dimacs(comments, enc.problem);
}

std::string to_cnf(const OrthoHypergraph &h)
{
    ExactOneProblem problem;
    problem.variables = h.vertices.size();
    for (const auto &e : h.edges)
        problem.constraints.emplace_back(e.begin(), e.end());
    std::vector<std::string> comments;
    for (std::size_t v = 0; v < h.vertices.size(); ++v)
        comments.push_back("atom " + h.vertices[v] + " = " + std::to_string(v + 1));
    return dimacs(comments, problem);
}

} // namespace omlkit
