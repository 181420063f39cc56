#include "omlkit/report.hpp"

#include <chrono>
#include <sstream>

#include "omlkit/contexts.hpp"
#include "omlkit/modal.hpp"
#include "omlkit/valuations.hpp"

namespace omlkit {

using nlohmann::ordered_json;

namespace {

ordered_json names_of(const Lattice &L, const std::vector<ElementId> &ids)
{
    ordered_json out = ordered_json::array();
    for (ElementId x : ids)
        out.push_back(L.name(x));
    return out;
}

double millis(std::chrono::nanoseconds d)
{
    return std::chrono::duration<double, std::milli>(d).count();
}

ordered_json flags_of(const AnalyzeOptions &o)
{
    ordered_json f = ordered_json::array();
    if (o.center)
        f.push_back("--center");
    if (o.blocks)
        f.push_back("--blocks");
    if (o.diamond)
        f.push_back("--diamond");
    if (o.ks)
        f.push_back("--ks");
    if (o.mks)
        f.push_back("--mks");
    if (o.cons)
        f.push_back("--cons=" + *o.cons);
    f.push_back("--budget=" + std::to_string(o.search.node_budget));
    return f;
}

ordered_json outcome_json(const Lattice &L, const ValuationOutcome &o, bool timings)
{
    ordered_json j;
    j["verdict"] = to_string(o.verdict);
    j["nodes_explored"] = o.nodes_explored;
    if (o.witness) {
        std::vector<ElementId> true_atoms;
        for (const auto &v : o.witness->per_block)
            true_atoms.push_back(v.atom);
        std::sort(true_atoms.begin(), true_atoms.end());
        true_atoms.erase(std::unique(true_atoms.begin(), true_atoms.end()), true_atoms.end());
        j["actual_state_of_affairs"] = names_of(L, true_atoms);
    }
    if (timings)
        j["wall_time_ms"] = millis(o.wall_time);
    return j;
}

void analyze_hypergraph(const OrthoHypergraph &h, const AnalyzeOptions &options, AnalyzeResult &result)
{
    auto &r = result.report;
    r["input_kind"] = "hypergraph";
    r["hypergraph"] = {{"vertices", h.vertices.size()}, {"edges", h.edges.size()}};
    if (options.center || options.blocks || options.diamond || options.mks || options.cons)
        throw FormatError("hypergraph input supports only --ks");
    if (!options.ks)
        return;
    auto o = check_coloring(h, options.search);
    ordered_json ks;
    ks["verdict"] = to_string(o.verdict);
    ks["nodes_explored"] = o.nodes_explored;
    if (o.witness) {
        ordered_json ones = ordered_json::array();
        for (std::size_t v = 0; v < h.vertices.size(); ++v)
            if ((*o.witness)[v])
                ones.push_back(h.vertices[v]);
        ks["true_vertices"] = ones;
    }
    if (options.timings)
        ks["wall_time_ms"] = millis(o.wall_time);
    r["ks"] = ks;
}

void analyze_lattice(const Lattice &L, const AnalyzeOptions &options, AnalyzeResult &result)
{
    auto &r = result.report;
    auto start = std::chrono::steady_clock::now();
    ModalLayer layer(L);
    const Lattice &lat = layer.lattice();

    r["lattice"] = {
        {"n", lat.size()},
        {"atoms", lat.atoms().size()},
        {"center_size", layer.center().size()},
        {"contexts", layer.contexts().size()},
        {"boolean", layer.center().size() == lat.size()},
    };
    if (options.timings)
        r["lattice"]["setup_ms"] = millis(std::chrono::steady_clock::now() - start);

    if (options.center)
        r["center"] = names_of(lat, layer.center());
    if (options.blocks) {
        ordered_json contexts = ordered_json::array();
        for (const auto &W : layer.contexts())
            contexts.push_back({{"atoms", names_of(lat, W.atoms)}, {"elements", names_of(lat, W.elements)}});
        r["contexts"] = contexts;
    }
    if (options.diamond) {
        ordered_json table = ordered_json::object();
        for (ElementId x = 0; x < lat.size(); ++x)
            table[lat.name(x)] = lat.name(layer.diamond(x));
        r["diamond"] = table;
        r["quantum_possibilities"] = names_of(lat, layer.image());
        r["possibility_space"] = names_of(lat, layer.possibility_space().elements);
    }
    if (options.cons) {
        ElementId p = find_element(lat, *options.cons);
        r["classical_consequences"] = {
            {"element", lat.name(p)},
            {"diamond", lat.name(layer.diamond(p))},
            {"consequences", names_of(lat, classical_consequences(layer, p))},
        };
    }
    if (options.ks || options.mks) {
        try {
            r["ks"] = outcome_json(lat, global_valuation(lat, layer.contexts(), options.search), options.timings);
        } catch (const BudgetExceeded &e) {
            r["ks"] = {{"verdict", "BudgetExceeded"}, {"nodes_explored", e.nodes()}};
            result.exit_code = 3;
            return;
        }
    }
    if (options.mks) {
        try {
            auto m = mks_check(layer, options.search);
            auto homs = possibility_homomorphisms(layer);
            ordered_json per = ordered_json::array();
            for (std::size_t i = 0; i < homs.size(); ++i) {
                ordered_json entry;
                entry["atom"] = lat.name(homs[i].atom);
                entry.update(outcome_json(lat, m.per_homomorphism[i], options.timings));
                per.push_back(entry);
            }
            r["mks"] = {
                {"side_a", m.side_a},
                {"side_b", m.side_b},
                {"agreement", m.agreement},
                {"possibility_homomorphisms", per},
            };
            if (!m.agreement)
                result.exit_code = 1;
        } catch (const Inconclusive &e) {
            r["mks"] = {{"verdict", "Inconclusive"}, {"error", e.what()}};
            result.exit_code = 3;
        }
    }
}

std::string join_names(const ordered_json &arr)
{
    std::string s;
    for (const auto &x : arr)
        s += (s.empty() ? "" : ", ") + x.get<std::string>();
    return "{" + s + "}";
}

} // namespace

AnalyzeResult analyze(const LoadedInput &input, const std::string &source, const AnalyzeOptions &options)
{
    AnalyzeResult result;
    auto &r = result.report;
    r["command"] = "analyze";
    r["input"] = source;
    r["flags"] = flags_of(options);
    if (const auto *h = std::get_if<OrthoHypergraph>(&input.value)) {
        analyze_hypergraph(*h, options, result);
    } else {
        r["input_kind"] = input.kind == InputKind::Greechie ? "greechie" : "lattice";
        analyze_lattice(std::get<Lattice>(input.value), options, result);
    }
    return result;
}

std::string render_text(const ordered_json &r)
{
    std::ostringstream out;
    out << "omlkit analyze " << r["input"].get<std::string>() << "\n";
    if (r.contains("hypergraph")) {
        out << "hypergraph: " << r["hypergraph"]["vertices"] << " vertices, " << r["hypergraph"]["edges"]
            << " edges\n";
    }
    if (r.contains("lattice")) {
        const auto &l = r["lattice"];
        out << "lattice: " << l["n"] << " elements, " << l["atoms"] << " atoms"
            << (l["boolean"].get<bool>() ? " (Boolean)" : "") << "\n";
        out << "center Z(L): " << l["center_size"] << " elements\n";
        out << "contexts (maximal Boolean sublattices): " << l["contexts"] << "\n";
    }
    if (r.contains("center"))
        out << "center: " << join_names(r["center"]) << "\n";
    if (r.contains("contexts")) {
        std::size_t i = 0;
        for (const auto &W : r["contexts"])
            out << "context " << i++ << ": atoms " << join_names(W["atoms"]) << ", " << W["elements"].size()
                << " elements\n";
    }
    if (r.contains("diamond")) {
        for (const auto &[x, d] : r["diamond"].items())
            out << "quantum possibility of " << x << ": <>" << x << " = " << d.get<std::string>() << "\n";
        out << "set of quantum possibilities: " << join_names(r["quantum_possibilities"]) << "\n";
        out << "possibility space <>L: " << join_names(r["possibility_space"]) << "\n";
    }
    if (r.contains("classical_consequences")) {
        const auto &c = r["classical_consequences"];
        out << "classical consequences of " << c["element"].get<std::string>() << " (<>P = "
            << c["diamond"].get<std::string>() << "): " << join_names(c["consequences"]) << "\n";
    }
    if (r.contains("ks")) {
        const auto &k = r["ks"];
        out << "global valuation (Kochen-Specker): " << k["verdict"].get<std::string>() << " after "
            << k["nodes_explored"] << " nodes\n";
        if (k.contains("actual_state_of_affairs"))
            out << "  actual state of affairs (atoms valued 1): " << join_names(k["actual_state_of_affairs"])
                << "\n";
        if (k.contains("true_vertices"))
            out << "  vertices valued 1: " << join_names(k["true_vertices"]) << "\n";
    }
    if (r.contains("mks")) {
        const auto &m = r["mks"];
        if (m.contains("verdict")) {
            out << "modal Kochen-Specker: " << m["verdict"].get<std::string>() << " ("
                << m["error"].get<std::string>() << ")\n";
        } else {
            out << "modal Kochen-Specker:\n";
            out << "  side A, a global valuation exists: " << (m["side_a"].get<bool>() ? "true" : "false") << "\n";
            for (const auto &h : m["possibility_homomorphisms"])
                out << "  f with atom " << h["atom"].get<std::string>()
                    << " -> compatible actualization: " << h["verdict"].get<std::string>() << "\n";
            out << "  side B, some f: <>L -> 2 admits a compatible actualization: "
                << (m["side_b"].get<bool>() ? "true" : "false") << "\n";
            out << "  agreement: " << (m["agreement"].get<bool>() ? "true" : "false") << "\n";
        }
    }
    return out.str();
}

} // namespace omlkit
