#include "omlkit/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace omlkit {

using nlohmann::json;

namespace {

template <typename T>
T field(const json &doc, const char *key)
{
    if (!doc.contains(key))
        throw FormatError(std::string("lattice document is missing \"") + key + "\"");
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception &) {
        throw FormatError(std::string("lattice document field \"") + key + "\" has the wrong type");
    }
}

std::string read_file(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FormatError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string dot_quote(const std::string &s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace

Lattice parse_lattice_document(std::string_view json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw FormatError("lattice document must be a JSON object");
    if (doc.contains("schema") && (!doc["schema"].is_string() || doc["schema"].get<std::string>() != lattice_schema))
        throw FormatError("unsupported schema " + doc["schema"].dump());

    LatticeInput input;
    input.n = field<std::size_t>(doc, "n");
    input.ortho = field<std::vector<ElementId>>(doc, "ortho");
    if (doc.contains("names"))
        input.names = field<std::vector<std::string>>(doc, "names");

    if (!doc.contains("leq"))
        throw FormatError("lattice document is missing \"leq\"");
    const json &leq = doc["leq"];
    if (!leq.is_array())
        throw FormatError("\"leq\" must be an array");
    if (!leq.empty() && leq.front().is_string()) {
        auto rows = field<std::vector<std::string>>(doc, "leq");
        if (rows.size() != input.n)
            throw FormatError("\"leq\" has " + std::to_string(rows.size()) + " rows, expected " +
                              std::to_string(input.n));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != input.n)
                throw FormatError("\"leq\" row " + std::to_string(i) + " has the wrong length");
            for (std::size_t j = 0; j < input.n; ++j) {
                if (rows[i][j] == '1')
                    input.order_pairs.emplace_back(static_cast<ElementId>(i), static_cast<ElementId>(j));
                else if (rows[i][j] != '0')
                    throw FormatError("\"leq\" row " + std::to_string(i) + " has a character other than 0/1");
            }
        }
    } else {
        for (const auto &pair : leq) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
                !pair[1].is_number_unsigned())
                throw FormatError("\"leq\" entries must be [i, j] pairs of element ids");
            input.order_pairs.emplace_back(pair[0].get<ElementId>(), pair[1].get<ElementId>());
        }
    }
    return build_lattice(std::move(input));
}

std::string to_lattice_document(const Lattice &L)
{
    const auto n = static_cast<ElementId>(L.size());
    json doc;
    doc["schema"] = lattice_schema;
    doc["n"] = n;
    std::vector<std::string> rows(n, std::string(n, '0'));
    for (ElementId i = 0; i < n; ++i)
        for (ElementId j = 0; j < n; ++j)
            if (L.leq(i, j))
                rows[i][j] = '1';
    doc["leq"] = rows;
    doc["ortho"] = L.ortho_map();
    doc["names"] = L.names();
    return doc.dump(1) + "\n";
}

std::string to_dot(const Lattice &L)
{
    std::ostringstream out;
    out << "graph lattice {\n  rankdir=BT;\n  node [shape=plaintext];\n";
    for (ElementId x = 0; x < L.size(); ++x)
        out << "  n" << x << " [label=" << dot_quote(L.name(x)) << "];\n";
    for (auto [a, b] : L.covers())
        out << "  n" << a << " -- n" << b << ";\n";
    for (ElementId x = 0; x < L.size(); ++x)
        if (x < L.ortho(x))
            out << "  n" << x << " -- n" << L.ortho(x) << " [style=dashed, constraint=false, color=gray];\n";
    out << "}\n";
    return out.str();
}

LoadedInput load_input(const std::filesystem::path &path)
{
    auto ext = path.extension().string();
    if (ext == ".json")
        return {InputKind::LatticeDocument, parse_lattice_document(read_file(path))};
    if (ext == ".gd")
        return {InputKind::Greechie, paste(parse_greechie(read_file(path)))};
    if (ext == ".hg")
        return {InputKind::Hypergraph, parse_hypergraph(read_file(path))};
    throw FormatError("unknown input extension '" + ext + "' (expected .json, .gd or .hg)");
}

} // namespace omlkit
