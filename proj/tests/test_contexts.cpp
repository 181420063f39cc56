#include "doctest.h"

#include "corpus.hpp"
#include "oracles.hpp"
#include "omlkit/contexts.hpp"
#include "omlkit/greechie.hpp"

using namespace omlkit;

TEST_CASE("commutes")
{
    auto m = mo(2);
    CHECK(commutes(m, 1, 2));
    CHECK_FALSE(commutes(m, 1, 3));
    for (ElementId x = 0; x < m.size(); ++x) {
        CHECK(commutes(m, x, 0));
        CHECK(commutes(m, x, 5));
        CHECK(commutes(m, x, x));
    }
    auto b = boolean_algebra(3);
    for (ElementId x = 0; x < 8; ++x)
        for (ElementId y = 0; y < 8; ++y)
            CHECK(commutes(b, x, y));
}

TEST_CASE("blocks of small lattices")
{
    auto bm = blocks(mo(2));
    REQUIRE(bm.size() == 2);
    CHECK(bm[0].elements == std::vector<ElementId>{0, 1, 2, 5});
    CHECK(bm[0].atoms == std::vector<ElementId>{1, 2});
    CHECK(bm[1].elements == std::vector<ElementId>{0, 3, 4, 5});

    CHECK(blocks(mo(3)).size() == 3);
    CHECK(blocks(boolean_algebra(3)).size() == 1);

    auto c = paste(parse_greechie("a b c\nc d e"));
    auto bc = blocks(c);
    REQUIRE(bc.size() == 2);
    std::vector<ElementId> shared;
    std::set_intersection(bc[0].elements.begin(), bc[0].elements.end(), bc[1].elements.begin(),
                          bc[1].elements.end(), std::back_inserter(shared));
    CHECK(bc[0].elements.size() == 8);
    CHECK(bc[1].elements.size() == 8);
    CHECK(shared == std::vector<ElementId>{0, 3, 8, 11}); // 0, c, c', 1
}

TEST_CASE("make_block rejects non-Boolean sets")
{
    auto m = mo(2);
    CHECK(make_block(m, {1, 2}).atoms == std::vector<ElementId>{1, 2});
    CHECK_THROWS_AS(make_block(m, {1, 3}), OmlError);
    CHECK_THROWS_AS(make_block(m, {1}), OmlError);
}

TEST_CASE("homomorphisms: one per atom, each a homomorphism")
{
    auto b = boolean_algebra(3);
    auto W = blocks(b).front();
    auto hs = homomorphisms(b, W);
    CHECK(hs.size() == 3);
    for (const auto &v : hs) {
        CHECK(is_homomorphism(b, v));
        CHECK(v.value(v.atom) == 1);
    }
    Valuation broken = hs[0];
    broken.values[0] ^= 1;
    CHECK_FALSE(is_homomorphism(b, broken));
}

TEST_CASE("property: blocks are exactly the maximal Boolean subalgebras")
{
    for (const auto &entry : corpus::lattices()) {
        const auto &L = entry.lattice;
        if (L.size() > 16)
            continue;
        CAPTURE(entry.name);
        auto subs = oracle::all_boolean_subalgebras(L);
        std::vector<std::vector<ElementId>> maximal;
        for (const auto &s : subs) {
            bool is_max = std::none_of(subs.begin(), subs.end(), [&](const auto &t) {
                return t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end());
            });
            if (is_max)
                maximal.push_back(s);
        }
        std::sort(maximal.begin(), maximal.end());
        std::vector<std::vector<ElementId>> got;
        for (const auto &W : blocks(L))
            got.push_back(W.elements);
        CHECK(got == maximal);

        // homomorphism count on each block equals its atom count, and the
        // oracle agrees: maps preserving the operations on W
        for (const auto &W : blocks(L)) {
            std::size_t brute = 0;
            const std::size_t m = W.elements.size();
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
                std::vector<int> t(L.size(), 0);
                for (std::size_t i = 0; i < m; ++i)
                    t[W.elements[i]] = mask >> i & 1;
                brute += oracle::homomorphic_on(L, t, W.elements);
            }
            CHECK(brute == homomorphisms(L, W).size());
        }
    }
}

TEST_CASE("property: blocks cover the lattice and are pairwise incomparable")
{
    for (const auto &entry : corpus::lattices()) {
        CAPTURE(entry.name);
        const auto &L = entry.lattice;
        auto bs = blocks(L);
        std::vector<bool> covered(L.size(), false);
        for (const auto &W : bs) {
            for (ElementId x : W.elements)
                covered[x] = true;
            CHECK(make_block(L, W.elements) == W);
        }
        CHECK(std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }));
        for (std::size_t i = 0; i < bs.size(); ++i)
            for (std::size_t j = 0; j < bs.size(); ++j)
                if (i != j)
                    CHECK_FALSE(std::includes(bs[j].elements.begin(), bs[j].elements.end(),
                                              bs[i].elements.begin(), bs[i].elements.end()));
    }
}
