#ifndef OMLKIT_GREECHIE_HPP
#define OMLKIT_GREECHIE_HPP

#include <array>
#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "omlkit/error.hpp"
#include "omlkit/lattice.hpp"

namespace omlkit {

/// Rank-3 Greechie diagram. Atoms are numbered by first appearance; each
/// block stores atom indices in the order written.
struct GreechieDiagram {
    std::vector<std::string> atoms;
    std::vector<std::array<std::size_t, 3>> blocks;
    /// 1-based source line of each block.
    std::vector<std::size_t> lines;
};

/// Orthogonality hypergraph: edges of any size >= 2, used for colorability only.
struct OrthoHypergraph {
    std::vector<std::string> vertices;
    std::vector<std::vector<std::size_t>> edges;
};

enum class GreechieErrorKind {
    BadIdentifier,
    WrongBlockSize,
    DuplicateAtomInBlock,
    BlocksShareTwoAtoms,
    ShortLoop,
    Empty,
};

const char *to_string(GreechieErrorKind kind);

class GreechieError : public FormatError {
public:
    /// `where` holds source line numbers (for ShortLoop: the lines of the blocks on the loop, in loop order).
    GreechieError(GreechieErrorKind kind, std::vector<std::size_t> where, const std::string &detail);

    GreechieErrorKind kind() const { return kind_; }
    const std::vector<std::size_t> &where() const { return where_; }

private:
    GreechieErrorKind kind_;
    std::vector<std::size_t> where_;
};

GreechieDiagram parse_greechie(std::istream &in);
GreechieDiagram parse_greechie(std::string_view text);

/// Same line format with edges of any size >= 2; no pasting conditions are checked.
OrthoHypergraph parse_hypergraph(std::istream &in);
OrthoHypergraph parse_hypergraph(std::string_view text);

/// Atomic pasting. Ids: 0 = bottom, 1..k atoms, k+1..2k complements of the atoms (same order), 2k+1 = top.
Lattice paste(const GreechieDiagram &d);

OrthoHypergraph to_hypergraph(const GreechieDiagram &d);

} // namespace omlkit

#endif // OMLKIT_GREECHIE_HPP
