#include "omlkit/greechie.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace omlkit {

const char *to_string(GreechieErrorKind kind)
{
    switch (kind) {
    case GreechieErrorKind::BadIdentifier: return "BadIdentifier";
    case GreechieErrorKind::WrongBlockSize: return "WrongBlockSize";
    case GreechieErrorKind::DuplicateAtomInBlock: return "DuplicateAtomInBlock";
    case GreechieErrorKind::BlocksShareTwoAtoms: return "BlocksShareTwoAtoms";
    case GreechieErrorKind::ShortLoop: return "ShortLoop";
    case GreechieErrorKind::Empty: return "Empty";
    }
    return "unknown";
}

GreechieError::GreechieError(GreechieErrorKind kind, std::vector<std::size_t> where, const std::string &detail)
    : FormatError(std::string(to_string(kind)) + ": " + detail), kind_(kind), where_(std::move(where))
{
}

namespace {

bool is_identifier(const std::string &s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
    });
}

struct RawLine {
    std::size_t line;
    std::vector<std::string> tokens;
};

std::vector<RawLine> tokenize(std::istream &in)
{
    std::vector<RawLine> out;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        if (auto hash = text.find('#'); hash != std::string::npos)
            text.resize(hash);
        std::istringstream words(text);
        RawLine raw{line, {}};
        for (std::string w; words >> w;) {
            if (!is_identifier(w))
                throw GreechieError(GreechieErrorKind::BadIdentifier, {line},
                                    "'" + w + "' on line " + std::to_string(line) + " is not an identifier");
            raw.tokens.push_back(std::move(w));
        }
        if (!raw.tokens.empty())
            out.push_back(std::move(raw));
    }
    return out;
}

struct Indexed {
    std::vector<std::string> vertices;
    std::vector<std::vector<std::size_t>> edges;
    std::vector<std::size_t> lines;
};

Indexed index_atoms(const std::vector<RawLine> &raw)
{
    Indexed out;
    std::map<std::string, std::size_t> ids;
    for (const auto &r : raw) {
        std::vector<std::size_t> edge;
        for (const auto &t : r.tokens) {
            auto [it, inserted] = ids.try_emplace(t, out.vertices.size());
            if (inserted)
                out.vertices.push_back(t);
            if (std::find(edge.begin(), edge.end(), it->second) != edge.end())
                throw GreechieError(GreechieErrorKind::DuplicateAtomInBlock, {r.line},
                                    "atom '" + t + "' repeated on line " + std::to_string(r.line));
            edge.push_back(it->second);
        }
        out.edges.push_back(std::move(edge));
        out.lines.push_back(r.line);
    }
    return out;
}

std::string join_lines(const std::vector<std::size_t> &lines)
{
    std::string s;
    for (std::size_t l : lines)
        s += (s.empty() ? "" : ", ") + std::to_string(l);
    return s;
}

constexpr std::size_t none = static_cast<std::size_t>(-1);

// Loops of order 3 and 4: cycles of distinct blocks where consecutive blocks
// meet in pairwise distinct atoms. Returns block indices in loop order.
std::optional<std::vector<std::size_t>> find_short_loop(const GreechieDiagram &d)
{
    const std::size_t m = d.blocks.size();
    std::vector<std::size_t> shared(m * m, none);
    std::vector<std::vector<std::size_t>> adj(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            for (std::size_t a : d.blocks[i]) {
                if (std::find(d.blocks[j].begin(), d.blocks[j].end(), a) != d.blocks[j].end()) {
                    shared[i * m + j] = shared[j * m + i] = a;
                    adj[i].push_back(j);
                    adj[j].push_back(i);
                }
            }
        }
    }
    auto s = [&](std::size_t i, std::size_t j) { return shared[i * m + j]; };
    auto distinct = [](std::vector<std::size_t> v) {
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) == v.end();
    };

    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j : adj[i])
            if (j > i)
                for (std::size_t l : adj[j])
                    if (l > j && s(l, i) != none && distinct({s(i, j), s(j, l), s(l, i)}))
                        return std::vector<std::size_t>{i, j, l};

    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j : adj[i])
            if (j > i)
                for (std::size_t l : adj[j])
                    if (l > i && l != j)
                        for (std::size_t k : adj[l])
                            if (k > j && k != l && s(k, i) != none &&
                                distinct({s(i, j), s(j, l), s(l, k), s(k, i)}))
                                return std::vector<std::size_t>{i, j, l, k};
    return std::nullopt;
}

} // namespace

GreechieDiagram parse_greechie(std::istream &in)
{
    auto raw = tokenize(in);
    for (const auto &r : raw)
        if (r.tokens.size() != 3)
            throw GreechieError(GreechieErrorKind::WrongBlockSize, {r.line},
                                "line " + std::to_string(r.line) + " has " + std::to_string(r.tokens.size()) +
                                    " atoms, blocks must have exactly 3");
    if (raw.empty())
        throw GreechieError(GreechieErrorKind::Empty, {}, "diagram has no blocks");

    auto idx = index_atoms(raw);
    GreechieDiagram d;
    d.atoms = std::move(idx.vertices);
    d.lines = std::move(idx.lines);
    for (const auto &e : idx.edges)
        d.blocks.push_back({e[0], e[1], e[2]});

    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < d.blocks.size(); ++j) {
            int common = 0;
            for (std::size_t a : d.blocks[i])
                common += std::count(d.blocks[j].begin(), d.blocks[j].end(), a);
            if (common >= 2)
                throw GreechieError(GreechieErrorKind::BlocksShareTwoAtoms, {d.lines[i], d.lines[j]},
                                    "blocks on lines " + std::to_string(d.lines[i]) + " and " +
                                        std::to_string(d.lines[j]) + " share two atoms");
        }
    }

    if (auto loop = find_short_loop(d)) {
        std::vector<std::size_t> where;
        for (std::size_t b : *loop)
            where.push_back(d.lines[b]);
        throw GreechieError(GreechieErrorKind::ShortLoop, where,
                            "loop of order " + std::to_string(loop->size()) + " through blocks on lines " +
                                join_lines(where));
    }
    return d;
}

GreechieDiagram parse_greechie(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_greechie(in);
}

OrthoHypergraph parse_hypergraph(std::istream &in)
{
    auto raw = tokenize(in);
    for (const auto &r : raw)
        if (r.tokens.size() < 2)
            throw GreechieError(GreechieErrorKind::WrongBlockSize, {r.line},
                                "line " + std::to_string(r.line) + " has fewer than 2 vertices");
    auto idx = index_atoms(raw);
    return {std::move(idx.vertices), std::move(idx.edges)};
}

OrthoHypergraph parse_hypergraph(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_hypergraph(in);
}

Lattice paste(const GreechieDiagram &d)
{
    const auto k = static_cast<ElementId>(d.atoms.size());
    const ElementId top = 2 * k + 1;
    auto atom = [](std::size_t i) { return static_cast<ElementId>(i + 1); };
    auto coatom = [k](std::size_t i) { return static_cast<ElementId>(k + 1 + i); };

    LatticeInput input;
    input.n = top + 1;
    input.names.resize(input.n);
    input.ortho.resize(input.n);
    input.names[0] = "0";
    input.names[top] = "1";
    input.ortho[0] = top;
    input.ortho[top] = 0;
    for (std::size_t i = 0; i < k; ++i) {
        input.names[atom(i)] = d.atoms[i];
        input.names[coatom(i)] = d.atoms[i] + "'";
        input.ortho[atom(i)] = coatom(i);
        input.ortho[coatom(i)] = atom(i);
        input.order_pairs.emplace_back(0, atom(i));
        input.order_pairs.emplace_back(coatom(i), top);
    }
    // a <= ~b exactly when a and b are distinct atoms of a common block.
    for (const auto &block : d.blocks)
        for (std::size_t a : block)
            for (std::size_t b : block)
                if (a != b)
                    input.order_pairs.emplace_back(atom(a), coatom(b));
    return build_lattice(std::move(input));
}

OrthoHypergraph to_hypergraph(const GreechieDiagram &d)
{
    OrthoHypergraph h;
    h.vertices = d.atoms;
    for (const auto &b : d.blocks)
        h.edges.emplace_back(b.begin(), b.end());
    return h;
}

} // namespace omlkit
