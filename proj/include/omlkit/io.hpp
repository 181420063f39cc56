#ifndef OMLKIT_IO_HPP
#define OMLKIT_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "omlkit/greechie.hpp"
#include "omlkit/lattice.hpp"

namespace omlkit {

inline constexpr std::string_view lattice_schema = "omlkit.lattice/1";

/// Lattice document (JSON):
///   {"schema": "omlkit.lattice/1", "n": 4,
///    "leq": [[0,1], ...] or ["1111", "0101", ...],
///    "ortho": [3, 2, 1, 0], "names": ["0", "a", "a'", "1"]}
/// Pairs are closed reflexively and transitively; row i of the bitstring form
/// has '1' at column j iff i <= j. "names" is optional.
Lattice parse_lattice_document(std::string_view json_text);
/// Always writes the full order as row bitstrings.
std::string to_lattice_document(const Lattice &L);

/// Hasse diagram: one node per element, covering edges, dashed edges between
/// each element and its orthocomplement.
std::string to_dot(const Lattice &L);

enum class InputKind { LatticeDocument, Greechie, Hypergraph };

struct LoadedInput {
    InputKind kind;
    /// Lattice for .json and .gd, OrthoHypergraph for .hg.
    std::variant<Lattice, OrthoHypergraph> value;
};

/// Dispatch on extension: .json lattice document, .gd Greechie diagram
/// (pasted), .hg orthogonality hypergraph. Format problems throw FormatError;
/// axiom violations throw LatticeError.
LoadedInput load_input(const std::filesystem::path &path);

} // namespace omlkit

#endif // OMLKIT_IO_HPP
