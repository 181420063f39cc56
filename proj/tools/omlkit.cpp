// omlkit: validate, analyze and export finite orthomodular lattices.
//
//   omlkit validate <file>
//   omlkit analyze <file> [--center] [--blocks] [--diamond] [--ks] [--mks] [--cons <id>] [--budget <n>]
//   omlkit export <file> (--dot | --cnf) -o <out>
//
// Inputs: .json lattice documents, .gd Greechie diagrams, .hg orthogonality hypergraphs.
// Exit codes: 0 ok, 1 axiom/verdict failure, 2 format error, 3 budget exceeded.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "omlkit/error.hpp"
#include "omlkit/greechie.hpp"
#include "omlkit/io.hpp"
#include "omlkit/report.hpp"
#include "omlkit/valuations.hpp"

namespace {

enum Exit { Ok = 0, Semantic = 1, Format = 2, Budget = 3 };

int cmd_validate(const std::string &path)
{
    auto input = omlkit::load_input(path);
    if (const auto *h = std::get_if<omlkit::OrthoHypergraph>(&input.value)) {
        std::cout << "accepted: " << path << ": hypergraph with " << h->vertices.size() << " vertices, "
                  << h->edges.size() << " edges\n";
        return Ok;
    }
    const auto &L = std::get<omlkit::Lattice>(input.value);
    std::cout << "accepted: " << path << ": orthomodular lattice with " << L.size() << " elements, "
              << L.atoms().size() << " atoms\n";
    return Ok;
}

int cmd_analyze(const std::string &path, const omlkit::AnalyzeOptions &options, bool as_json)
{
    auto input = omlkit::load_input(path);
    auto result = omlkit::analyze(input, path, options);
    if (as_json)
        std::cout << result.report.dump(2) << "\n";
    else
        std::cout << omlkit::render_text(result.report);
    return result.exit_code;
}

int cmd_export(const std::string &path, bool dot, const std::string &out_path)
{
    auto input = omlkit::load_input(path);
    std::string text;
    if (const auto *h = std::get_if<omlkit::OrthoHypergraph>(&input.value)) {
        if (dot)
            throw omlkit::FormatError("--dot needs a lattice; hypergraph input supports only --cnf");
        text = omlkit::to_cnf(*h);
    } else {
        const auto &L = std::get<omlkit::Lattice>(input.value);
        text = dot ? omlkit::to_dot(L) : omlkit::to_cnf(L);
    }
    if (out_path == "-") {
        std::cout << text;
        return Ok;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw omlkit::FormatError("cannot write " + out_path);
    out << text;
    return Ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Finite orthomodular lattice toolkit"};
    app.require_subcommand(1);

    std::string path;
    auto *validate = app.add_subcommand("validate", "Check every orthomodular lattice axiom");
    validate->add_option("file", path, "Input (.json, .gd or .hg)")->required();

    omlkit::AnalyzeOptions options;
    bool as_json = false;
    std::uint64_t budget = options.search.node_budget;
    std::string cons;
    auto *analyze = app.add_subcommand("analyze", "Center, contexts, possibility operator and valuation verdicts");
    analyze->add_option("file", path, "Input (.json, .gd or .hg)")->required();
    analyze->add_flag("--center", options.center, "List the center Z(L)");
    analyze->add_flag("--blocks", options.blocks, "List the contexts (maximal Boolean sublattices)");
    analyze->add_flag("--diamond", options.diamond, "Tabulate the possibility operator and possibility space");
    analyze->add_flag("--ks", options.ks, "Search for a global valuation");
    analyze->add_flag("--mks", options.mks, "Check the modal Kochen-Specker equivalence (implies --ks)");
    auto *cons_opt = analyze->add_option("--cons", cons, "Classical consequences of an element (name or id)");
    analyze->add_option("--budget", budget, "Search node budget")->check(CLI::PositiveNumber);
    analyze->add_flag("--parallel", options.search.parallel, "Split each search across two threads");
    analyze->add_flag("--json", as_json, "Emit the machine-readable report");
    analyze->add_flag("--timings", options.timings, "Include wall-clock timings in the report");

    bool dot = false, cnf = false;
    std::string out_path = "-";
    auto *exporter = app.add_subcommand("export", "Write a DOT Hasse diagram or a DIMACS CNF");
    exporter->add_option("file", path, "Input (.json, .gd or .hg)")->required();
    auto *dot_flag = exporter->add_flag("--dot", dot, "Hasse diagram");
    auto *cnf_flag = exporter->add_flag("--cnf", cnf, "Global valuation / coloring CNF");
    dot_flag->excludes(cnf_flag);
    exporter->add_option("-o,--output", out_path, "Output file ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? Ok : Format;
    }

    try {
        if (validate->parsed())
            return cmd_validate(path);
        if (analyze->parsed()) {
            if (!cons_opt->empty())
                options.cons = cons;
            options.search.node_budget = budget;
            return cmd_analyze(path, options, as_json);
        }
        if (!dot && !cnf) {
            std::cerr << "export: one of --dot or --cnf is required\n";
            return Format;
        }
        return cmd_export(path, dot, out_path);
    } catch (const omlkit::LatticeError &e) {
        std::cout << "rejected: " << path << ": " << e.what() << "\n";
        return Semantic;
    } catch (const omlkit::FormatError &e) {
        std::cerr << "format error: " << path << ": " << e.what() << "\n";
        return Format;
    } catch (const omlkit::DefinitionMismatch &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return Semantic;
    } catch (const omlkit::BudgetExceeded &e) {
        std::cerr << e.what() << "\n";
        return Budget;
    } catch (const omlkit::OmlError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return Semantic;
    }
}
