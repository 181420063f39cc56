#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "omlkit/contexts.hpp"
#include "omlkit/greechie.hpp"
#include "omlkit/io.hpp"
#include "omlkit/lattice.hpp"
#include "omlkit/modal.hpp"
#include "omlkit/report.hpp"
#include "omlkit/valuations.hpp"

namespace py = pybind11;
using namespace omlkit;

namespace {

SearchOptions search_options(std::uint64_t budget, bool parallel)
{
    SearchOptions o;
    o.node_budget = budget;
    o.parallel = parallel;
    return o;
}

py::dict outcome_dict(const ValuationOutcome &o)
{
    py::dict d;
    d["verdict"] = to_string(o.verdict);
    d["nodes_explored"] = o.nodes_explored;
    if (o.witness) {
        std::vector<ElementId> atoms;
        for (const auto &v : o.witness->per_block)
            atoms.push_back(v.atom);
        d["block_atoms"] = atoms;
        d["total"] = o.witness->total;
    } else {
        d["block_atoms"] = py::none();
        d["total"] = py::none();
    }
    return d;
}

Lattice load_lattice(const std::filesystem::path &path)
{
    auto input = load_input(path);
    if (auto *L = std::get_if<Lattice>(&input.value))
        return *L;
    throw FormatError(path.string() + " is a hypergraph, not a lattice");
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Finite orthomodular lattices: validation, center, contexts, valuations, possibility operator";

    auto base = py::register_exception<OmlError>(m, "OmlError");
    auto format = py::register_exception<FormatError>(m, "FormatError", base.ptr());
    py::register_exception<LatticeError>(m, "LatticeError", base.ptr());
    py::register_exception<DefinitionMismatch>(m, "DefinitionMismatch", base.ptr());
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
    py::register_exception<Inconclusive>(m, "Inconclusive", base.ptr());
    py::register_exception<NotBoolean>(m, "NotBoolean", base.ptr());
    (void)format;

    py::class_<Lattice>(m, "Lattice")
        .def_property_readonly("size", &Lattice::size)
        .def_property_readonly("bottom", &Lattice::bottom)
        .def_property_readonly("top", &Lattice::top)
        .def_property_readonly("names", &Lattice::names)
        .def("__len__", &Lattice::size)
        .def("leq", &Lattice::leq)
        .def("meet", &Lattice::meet)
        .def("join", &Lattice::join)
        .def("ortho", &Lattice::ortho)
        .def("name", &Lattice::name)
        .def("atoms", &Lattice::atoms)
        .def("covers", &Lattice::covers)
        .def("__eq__", &Lattice::operator==)
        .def("__repr__", [](const Lattice &L) {
            return "<omlkit.Lattice with " + std::to_string(L.size()) + " elements>";
        });

    m.def(
        "build_lattice",
        [](std::size_t n, std::vector<std::pair<ElementId, ElementId>> leq, std::vector<ElementId> ortho,
           std::vector<std::string> names) {
            return build_lattice({n, std::move(leq), std::move(ortho), std::move(names)});
        },
        py::arg("n"), py::arg("leq"), py::arg("ortho"), py::arg("names") = std::vector<std::string>{});
    m.def("load", &load_lattice, py::arg("path"), "Load a .json lattice document or a .gd Greechie diagram.");
    m.def("parse_lattice_document", &parse_lattice_document);
    m.def("to_lattice_document", &to_lattice_document);
    m.def("paste_greechie", [](const std::string &text) { return paste(parse_greechie(text)); });
    m.def("boolean_algebra", &boolean_algebra, py::arg("k"));
    m.def("mo", &mo, py::arg("k"));
    m.def("product", &product);

    m.def("center", &center);
    m.def("is_boolean", &is_boolean);
    m.def("check_triple", [](const Lattice &L, ElementId a, ElementId b, ElementId c) {
        auto r = check_triple(L, a, b, c);
        py::dict d;
        d["d"] = r.holds_d;
        d["dstar"] = r.holds_dstar;
        d["t"] = r.holds_t;
        return d;
    });
    m.def("blocks", [](const Lattice &L) {
        std::vector<std::vector<ElementId>> out;
        for (const auto &W : blocks(L))
            out.push_back(W.elements);
        return out;
    });

    m.def(
        "global_valuation",
        [](const Lattice &L, std::uint64_t budget, bool parallel) {
            return outcome_dict(global_valuation(L, search_options(budget, parallel)));
        },
        py::arg("lattice"), py::arg("budget") = 10'000'000, py::arg("parallel") = false);
    m.def(
        "check_coloring",
        [](const std::string &text, std::uint64_t budget) {
            auto o = check_coloring(parse_hypergraph(text), search_options(budget, false));
            py::dict d;
            d["verdict"] = to_string(o.verdict);
            d["nodes_explored"] = o.nodes_explored;
            d["coloring"] = o.witness ? py::cast(*o.witness) : py::none();
            return d;
        },
        py::arg("text"), py::arg("budget") = 10'000'000);
    m.def("to_cnf", py::overload_cast<const Lattice &>(&to_cnf));
    m.def("to_dot", &to_dot);

    m.def("diamond", [](const Lattice &L) {
        ModalLayer layer(L);
        std::vector<ElementId> out;
        for (ElementId x = 0; x < L.size(); ++x)
            out.push_back(layer.diamond(x));
        return out;
    });
    m.def("possibility_space", [](const Lattice &L) { return ModalLayer(L).possibility_space().elements; });
    m.def("modal_axioms", [](const Lattice &L) {
        py::dict d;
        for (const auto &a : verify_modal_axioms(ModalLayer(L)).axioms)
            d[py::str(a.name)] = a.holds;
        return d;
    });
    m.def(
        "mks_check",
        [](const Lattice &L, std::uint64_t budget) {
            auto r = mks_check(ModalLayer(L), search_options(budget, false));
            py::dict d;
            d["side_a"] = r.side_a;
            d["side_b"] = r.side_b;
            d["agreement"] = r.agreement;
            return d;
        },
        py::arg("lattice"), py::arg("budget") = 10'000'000);
    m.def("classical_consequences",
          [](const Lattice &L, ElementId p) { return classical_consequences(ModalLayer(L), p); });

    m.def(
        "analyze_json",
        [](const std::string &path, bool center, bool blocks, bool diamond, bool ks, bool mks,
           std::optional<std::string> cons, std::uint64_t budget) {
            AnalyzeOptions o;
            o.center = center;
            o.blocks = blocks;
            o.diamond = diamond;
            o.ks = ks;
            o.mks = mks;
            o.cons = std::move(cons);
            o.search.node_budget = budget;
            auto r = analyze(load_input(path), path, o);
            return py::make_tuple(r.report.dump(), r.exit_code);
        },
        py::arg("path"), py::arg("center") = false, py::arg("blocks") = false, py::arg("diamond") = false,
        py::arg("ks") = false, py::arg("mks") = false, py::arg("cons") = py::none(),
        py::arg("budget") = 10'000'000);
}
