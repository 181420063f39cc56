#include "doctest.h"

#include "corpus.hpp"
#include "oracles.hpp"
#include "omlkit/greechie.hpp"
#include "omlkit/modal.hpp"

using namespace omlkit;

TEST_CASE("diamond on Boolean lattices is the identity")
{
    for (unsigned k = 1; k <= 4; ++k) {
        ModalLayer layer(boolean_algebra(k));
        for (ElementId x = 0; x < layer.lattice().size(); ++x)
            CHECK(layer.diamond(x) == x);
        CHECK(layer.possibility_space().elements.size() == layer.lattice().size());
    }
}

TEST_CASE("diamond on MO2 sends every nonzero element to 1")
{
    ModalLayer layer(mo(2));
    CHECK(layer.diamond(0) == 0);
    for (ElementId x = 1; x < 6; ++x)
        CHECK(layer.diamond(x) == 5);
    CHECK(layer.image() == std::vector<ElementId>{0, 5});
    CHECK(layer.possibility_space().elements == std::vector<ElementId>{0, 5});
}

TEST_CASE("diamond on 2 x MO2 projects onto the Boolean factor")
{
    ModalLayer layer(product(boolean_algebra(1), mo(2)));
    // (0, a0) -> (0, 1), (1, 0) -> (1, 0), (1, a0) -> (1, 1)
    CHECK(layer.diamond(1) == 5);
    CHECK(layer.diamond(6) == 6);
    CHECK(layer.diamond(7) == 11);
    CHECK(layer.possibility_space().elements == std::vector<ElementId>{0, 5, 6, 11});
}

TEST_CASE("S1-S7 hold on the corpus")
{
    for (const auto &entry : corpus::lattices()) {
        CAPTURE(entry.name);
        ModalLayer layer(entry.lattice);
        auto rep = verify_modal_axioms(layer);
        CHECK(rep.all_hold());
        for (std::size_t i = 0; i < 7; ++i) {
            CHECK(rep.axioms[i].name == "S" + std::to_string(i + 1));
            CHECK(rep.axioms[i].holds);
        }
    }
}

TEST_CASE("property: diamond is the least central upper bound and the image is the center")
{
    for (const auto &entry : corpus::lattices()) {
        CAPTURE(entry.name);
        ModalLayer layer(entry.lattice);
        const auto &L = layer.lattice();
        auto z = center_by_decomposition(L);
        for (ElementId x = 0; x < L.size(); ++x)
            CHECK(layer.diamond(x) == oracle::least_central_above(L, z, x));
        // in a finite OML every central z is its own diamond, so image = center
        CHECK(layer.image() == z);
        CHECK(layer.possibility_space().elements == generated_subalgebra(L, layer.image()));
        for (ElementId x : layer.possibility_space().elements)
            CHECK(layer.is_central(x));
    }
}

TEST_CASE("generated_subalgebra")
{
    auto b = boolean_algebra(3);
    CHECK(generated_subalgebra(b, {}) == std::vector<ElementId>{0, 7});
    CHECK(generated_subalgebra(b, {1}) == std::vector<ElementId>{0, 1, 6, 7});
    CHECK(generated_subalgebra(b, {1, 2}).size() == 8);
}

TEST_CASE("possibility homomorphisms")
{
    ModalLayer m(mo(2));
    auto fs = possibility_homomorphisms(m);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].atom == 5);

    ModalLayer p(product(boolean_algebra(1), mo(2)));
    auto gs = possibility_homomorphisms(p);
    REQUIRE(gs.size() == 2);
    CHECK(gs[0].atom == 5);
    CHECK(gs[1].atom == 6);
    for (const auto &f : gs)
        CHECK(is_homomorphism(p.lattice(), f));
}

TEST_CASE("actualization_compatible on 2 x MO2")
{
    ModalLayer layer(product(boolean_algebra(1), mo(2)));
    for (const auto &f : possibility_homomorphisms(layer)) {
        auto o = actualization_compatible(layer, f);
        CAPTURE(f.atom);
        REQUIRE(o.verdict == Verdict::Found);
        CHECK(agrees_with(layer, *o.witness, f));
        // the actual state sits under f's atom
        CHECK(o.witness->total[f.atom] == 1);
    }
}

TEST_CASE("agrees_with detects disagreement")
{
    ModalLayer layer(product(boolean_algebra(1), mo(2)));
    auto fs = possibility_homomorphisms(layer);
    auto o = actualization_compatible(layer, fs[0]);
    REQUIRE(o.witness);
    CHECK_FALSE(agrees_with(layer, *o.witness, fs[1]));
}

TEST_CASE("mks_check on the corpus: both sides agree with the fixture label")
{
    for (const auto &entry : corpus::lattices()) {
        CAPTURE(entry.name);
        ModalLayer layer(entry.lattice);
        auto r = mks_check(layer);
        CHECK(r.side_a == entry.colorable);
        CHECK(r.side_b == entry.colorable);
        CHECK(r.agreement);
        CHECK(r.per_homomorphism.size() == possibility_homomorphisms(layer).size());
        CHECK(r.witness_homomorphism.has_value() == r.side_b);
    }
}

TEST_CASE("mks_check: budget exhaustion is Inconclusive")
{
    ModalLayer layer(corpus::load("harries35.gd"));
    SearchOptions tiny;
    tiny.node_budget = 1;
    CHECK_THROWS_AS(mks_check(layer, tiny), Inconclusive);
}

TEST_CASE("property: mks side B matches a brute-force search for compatible global maps")
{
    for (const auto &entry : corpus::lattices()) {
        const auto &L = entry.lattice;
        if (L.size() > 16)
            continue;
        CAPTURE(entry.name);
        ModalLayer layer(L);
        const auto &ps = layer.possibility_space().elements;
        for (const auto &f : possibility_homomorphisms(layer)) {
            // a global map agrees with f iff it matches f on the possibility space,
            // since every element of the space lies in some block
            bool brute = oracle::any_global_map(L, [&](const std::vector<int> &t) {
                for (ElementId x : ps)
                    if (t[x] != f.value(x))
                        return false;
                return true;
            });
            CHECK((actualization_compatible(layer, f).verdict == Verdict::Found) == brute);
        }
    }
}

TEST_CASE("classical consequences")
{
    ModalLayer b(boolean_algebra(2));
    // <>{e0} = {e0}; consequences are the elements above it
    CHECK(classical_consequences(b, 1) == std::vector<ElementId>{1, 3});

    ModalLayer m(mo(2));
    CHECK(classical_consequences(m, 1) == std::vector<ElementId>{5});
    CHECK(classical_consequences(m, 0) == std::vector<ElementId>{0, 5});

    ModalLayer p(product(boolean_algebra(1), mo(2)));
    CHECK(classical_consequences(p, 1) == std::vector<ElementId>{5, 11});
}

TEST_CASE("property: consequences are the up-set of diamond(P) within the possibility space")
{
    for (const auto &entry : corpus::lattices()) {
        CAPTURE(entry.name);
        ModalLayer layer(entry.lattice);
        const auto &L = layer.lattice();
        for (ElementId p = 0; p < L.size(); ++p) {
            auto c = classical_consequences(layer, p);
            std::vector<ElementId> brute;
            for (ElementId x : layer.possibility_space().elements)
                if (L.leq(layer.diamond(p), x))
                    brute.push_back(x);
            CHECK(c == brute);
            // P itself entails each consequence
            for (ElementId x : c)
                CHECK(L.leq(p, x));
        }
    }
}

TEST_CASE("classical correspondence")
{
    for (unsigned k = 1; k <= 4; ++k) {
        auto r = classical_correspondence_check(ModalLayer(boolean_algebra(k)));
        CHECK(r.holds);
        CHECK(r.homomorphisms_checked == k);
    }
    CHECK_THROWS_AS(classical_correspondence_check(ModalLayer(mo(2))), NotBoolean);
}
