#include "doctest.h"

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "omlkit/greechie.hpp"

using namespace omlkit;

namespace {

GreechieError parse_error(const std::string &text)
{
    try {
        parse_greechie(text);
    } catch (const GreechieError &e) {
        return e;
    }
    FAIL("expected a GreechieError for: " << text);
    throw std::logic_error("unreachable");
}

} // namespace

TEST_CASE("parse_greechie reads blocks, comments and blank lines")
{
    auto d = parse_greechie("# comment\n\na b c   # trailing\nc d e\n");
    CHECK(d.atoms == std::vector<std::string>{"a", "b", "c", "d", "e"});
    REQUIRE(d.blocks.size() == 2);
    CHECK(d.blocks[1] == std::array<std::size_t, 3>{2, 3, 4});
    CHECK(d.lines == std::vector<std::size_t>{3, 4});
}

TEST_CASE("parse_greechie errors carry a kind and source lines")
{
    CHECK(parse_error("a b\n").kind() == GreechieErrorKind::WrongBlockSize);
    CHECK(parse_error("a b c d\n").kind() == GreechieErrorKind::WrongBlockSize);
    CHECK(parse_error("a a b\n").kind() == GreechieErrorKind::DuplicateAtomInBlock);
    CHECK(parse_error("a b c\n1x y z\n").kind() == GreechieErrorKind::BadIdentifier);
    CHECK(parse_error("a b c\n1x y z\n").where() == std::vector<std::size_t>{2});
    CHECK(parse_error("# nothing\n").kind() == GreechieErrorKind::Empty);

    auto two = parse_error("a b c\nx y z\na b d\n");
    CHECK(two.kind() == GreechieErrorKind::BlocksShareTwoAtoms);
    CHECK(two.where() == std::vector<std::size_t>{1, 3});

    auto loop3 = parse_error("a b c\nc d e\ne f a\n");
    CHECK(loop3.kind() == GreechieErrorKind::ShortLoop);
    CHECK(loop3.where().size() == 3);

    auto loop4 = parse_error("a b c\nc d e\ne f g\ng h a\n");
    CHECK(loop4.kind() == GreechieErrorKind::ShortLoop);
    CHECK(loop4.where().size() == 4);

    // a GreechieError is a FormatError
    CHECK_THROWS_AS(parse_greechie("a b\n"), FormatError);
}

TEST_CASE("three blocks through one atom are a star, not a loop")
{
    auto d = parse_greechie("a b c\na d e\na f g\n");
    CHECK(d.blocks.size() == 3);
    CHECK(paste(d).size() == 2 * 7 + 2);
}

TEST_CASE("paste: element counts")
{
    CHECK(paste(parse_greechie("a b c")).size() == 8);
    CHECK(paste(parse_greechie("a b c\nc d e")).size() == 12);
    CHECK(paste(parse_greechie("a b c\nc d e\ne f g\ng h i\ni j a")).size() == 22);
    CHECK(paste(parse_greechie("a b c\nx y z")).size() == 14);
}

TEST_CASE("paste: id layout and order")
{
    auto L = paste(parse_greechie("a b c\nc d e"));
    CHECK(L.bottom() == 0);
    CHECK(L.top() == 11);
    CHECK(L.name(1) == "a");
    CHECK(L.name(6) == "a'");
    CHECK(L.ortho(1) == 6);
    // a and d share no block, so they are not orthogonal; both lie below c'
    CHECK_FALSE(L.leq(1, L.ortho(4)));
    CHECK(L.leq(1, L.ortho(2)));
    CHECK(L.join(1, 2) == L.ortho(3));
    CHECK(L.join(1, 4) == L.ortho(3));
    CHECK(L.join(3, 4) == L.ortho(5));
    CHECK(L.atoms() == std::vector<ElementId>{1, 2, 3, 4, 5});
}

TEST_CASE("parse_hypergraph accepts edges of any size >= 2")
{
    auto h = parse_hypergraph("u v\nu w x y\n");
    CHECK(h.vertices.size() == 5);
    CHECK(h.edges.size() == 2);
    CHECK(h.edges[1].size() == 4);
    CHECK_THROWS_AS(parse_hypergraph("u\n"), FormatError);
    CHECK_THROWS_AS(parse_hypergraph("u u v\n"), FormatError);
}

TEST_CASE("to_hypergraph keeps the block structure")
{
    auto d = parse_greechie("a b c\nc d e");
    auto h = to_hypergraph(d);
    CHECK(h.vertices == d.atoms);
    REQUIRE(h.edges.size() == 2);
    CHECK(h.edges[0] == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("property: random valid diagrams paste to orthomodular lattices")
{
    std::mt19937 rng(20261016);
    for (int trial = 0; trial < 60; ++trial) {
        int atoms = 6 + static_cast<int>(rng() % 10);
        int blocks = 1 + static_cast<int>(rng() % 5);
        auto d = oracle::random_valid_diagram(rng, atoms, blocks);
        CAPTURE(trial);
        // paste() runs every axiom check in build_lattice and throws on failure
        Lattice L = paste(d);
        CHECK(L.size() == 2 * d.atoms.size() + 2);
        CHECK(L.atoms().size() == d.atoms.size());
    }
}

TEST_CASE("property: every diagram that parse_greechie rejects as a short loop contains one")
{
    // cross-check the loop detector with a direct search for 3- and 4-cycles of blocks
    std::mt19937 rng(7);
    int rejected = 0;
    for (int trial = 0; trial < 300; ++trial) {
        auto text = oracle::random_diagram(rng, 9, 4);
        std::vector<std::set<std::string>> blocks;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            std::set<std::string> b;
            std::string a;
            while (ls >> a)
                b.insert(a);
            if (!b.empty())
                blocks.push_back(b);
        }
        auto shared = [&](std::size_t i, std::size_t j) {
            std::vector<std::string> s;
            std::set_intersection(blocks[i].begin(), blocks[i].end(), blocks[j].begin(), blocks[j].end(),
                                  std::back_inserter(s));
            return s;
        };
        bool two_shared = false;
        for (std::size_t i = 0; i < blocks.size(); ++i)
            for (std::size_t j = i + 1; j < blocks.size(); ++j)
                two_shared = two_shared || shared(i, j).size() >= 2;
        if (two_shared)
            continue;
        // loop: cyclic sequence of distinct blocks, consecutive ones meeting in
        // an atom, the connecting atoms pairwise distinct
        bool loop = false;
        const std::size_t m = blocks.size();
        for (std::size_t k : {3u, 4u}) {
            if (m < k)
                continue;
            std::vector<std::size_t> perm(m);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                std::vector<std::string> links;
                bool ok = true;
                for (std::size_t t = 0; t < k && ok; ++t) {
                    auto s = shared(perm[t], perm[(t + 1) % k]);
                    ok = s.size() == 1;
                    if (ok)
                        links.push_back(s[0]);
                }
                if (ok) {
                    std::set<std::string> distinct(links.begin(), links.end());
                    loop = loop || distinct.size() == k;
                }
            } while (!loop && std::next_permutation(perm.begin(), perm.end()));
        }
        bool parsed = true;
        try {
            parse_greechie(text);
        } catch (const GreechieError &e) {
            parsed = false;
            CHECK(e.kind() == GreechieErrorKind::ShortLoop);
            ++rejected;
        }
        CAPTURE(text);
        CHECK(parsed == !loop);
    }
    CHECK(rejected > 0);
}
