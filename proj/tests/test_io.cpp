#include "doctest.h"

#include <fstream>
#include <regex>

#include "corpus.hpp"
#include "oracles.hpp"
#include "omlkit/greechie.hpp"
#include "omlkit/io.hpp"

using namespace omlkit;

namespace {

std::size_t count_matches(const std::string &text, const std::regex &re)
{
    return std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator());
}

} // namespace

TEST_CASE("lattice documents round-trip")
{
    for (const auto &entry : corpus::lattices()) {
        CAPTURE(entry.name);
        auto doc = to_lattice_document(entry.lattice);
        auto back = parse_lattice_document(doc);
        CHECK(back == entry.lattice);
        CHECK(back.names() == entry.lattice.names());
        CHECK(to_lattice_document(back) == doc);
    }
}

TEST_CASE("lattice documents accept pairs or rows")
{
    auto pairs = parse_lattice_document(
        R"({"schema":"omlkit.lattice/1","n":4,"leq":[[0,1],[0,2],[1,3],[2,3]],"ortho":[3,2,1,0]})");
    auto rows = parse_lattice_document(
        R"({"schema":"omlkit.lattice/1","n":4,"leq":["1111","0101","0011","0001"],"ortho":[3,2,1,0]})");
    CHECK(pairs == rows);
    CHECK(pairs.name(1) == "1");
}

TEST_CASE("malformed lattice documents are FormatErrors")
{
    CHECK_THROWS_AS(parse_lattice_document("{"), FormatError);
    CHECK_THROWS_AS(parse_lattice_document(R"({"schema":"other","n":1,"leq":[],"ortho":[0]})"), FormatError);
    CHECK_THROWS_AS(parse_lattice_document(R"({"schema":"omlkit.lattice/1","n":2,"ortho":[1,0]})"), FormatError);
    CHECK_THROWS_AS(
        parse_lattice_document(R"({"schema":"omlkit.lattice/1","n":2,"leq":["11"],"ortho":[1,0]})"),
        FormatError);
    CHECK_THROWS_AS(
        parse_lattice_document(R"({"schema":"omlkit.lattice/1","n":2,"leq":["1x","01"],"ortho":[1,0]})"),
        FormatError);
    CHECK_THROWS_AS(load_input(oracle::corpus("bad_malformed.json")), FormatError);
    CHECK_THROWS_AS(load_input(oracle::corpus("does_not_exist.json")), FormatError);
    CHECK_THROWS_AS(load_input(oracle::corpus("../README.unknown")), FormatError);
}

TEST_CASE("corrupted fixtures are rejected with the right axiom")
{
    auto kind_of = [](const char *file) {
        try {
            load_input(oracle::corpus(file));
        } catch (const LatticeError &e) {
            return std::string(to_string(e.kind()));
        }
        return std::string("accepted");
    };
    CHECK(kind_of("bad_cycle.json") == "NotAPoset");
    CHECK(kind_of("bad_bowtie.json") == "NotALattice");
    CHECK(kind_of("bad_involution.json") == "InvolutionViolation");
    CHECK(kind_of("bad_chain4.json") == "ComplementLawViolation");
    CHECK(kind_of("bad_hexagon.json") == "OrthomodularityViolation");
    CHECK_THROWS_AS(load_input(oracle::corpus("bad_loop3.gd")), GreechieError);
}

TEST_CASE("to_dot: nodes, covering edges and ortho edges")
{
    const std::regex node(R"(^\s*n\d+ \[label=)", std::regex::multiline);
    const std::regex cover(R"(^\s*n\d+ -- n\d+;$)", std::regex::multiline);
    const std::regex dashed(R"(style=dashed)");

    auto b2 = to_dot(boolean_algebra(2));
    CHECK(count_matches(b2, node) == 4);
    CHECK(count_matches(b2, cover) == 4);
    CHECK(count_matches(b2, dashed) == 2);

    auto c = paste(parse_greechie("a b c\nc d e"));
    auto dc = to_dot(c);
    CHECK(count_matches(dc, node) == 12);
    CHECK(count_matches(dc, cover) == c.covers().size());
    CHECK(dc.find("graph") != std::string::npos);
}

TEST_CASE("load_input dispatches on extension")
{
    CHECK(load_input(oracle::corpus("mo2.json")).kind == InputKind::LatticeDocument);
    CHECK(load_input(oracle::corpus("chain2.gd")).kind == InputKind::Greechie);
    auto h = load_input(oracle::corpus("parity18.hg"));
    CHECK(h.kind == InputKind::Hypergraph);
    CHECK(std::holds_alternative<OrthoHypergraph>(h.value));
}

TEST_CASE("mo2 fixture matches the built-in constructor")
{
    CHECK(corpus::load("mo2.json") == mo(2));
    CHECK(corpus::load("mo3.json") == mo(3));
    CHECK(corpus::load("bool3.json") == boolean_algebra(3));
    CHECK(corpus::load("mo2_x_mo2.json") == product(mo(2), mo(2)));
}
