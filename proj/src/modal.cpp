#include "omlkit/modal.hpp"

#include <algorithm>

namespace omlkit {

ModalLayer::ModalLayer(Lattice L) : lattice_(std::move(L))
{
    const auto &lat = lattice_;
    center_ = omlkit::center(lat);
    diamond_.resize(lat.size());
    for (ElementId x = 0; x < lat.size(); ++x) {
        // The center is closed under meets, so the meet of the central upper bounds is central.
        ElementId least = lat.top();
        for (ElementId z : center_)
            if (lat.leq(x, z))
                least = lat.meet(least, z);
        if (!is_central(least))
            throw OmlError("internal error: meet of central upper bounds of " + lat.name(x) + " is not central");
        diamond_[x] = least;
    }
    blocks_ = blocks(lat);
    possibility_space_ = make_block(lat, generated_subalgebra(lat, image()));
}

std::vector<ElementId> ModalLayer::image() const
{
    std::vector<ElementId> out(diamond_);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool ModalLayer::is_central(ElementId x) const
{
    return std::binary_search(center_.begin(), center_.end(), x);
}

std::vector<ElementId> generated_subalgebra(const Lattice &L, std::vector<ElementId> generators)
{
    std::vector<bool> in(L.size(), false);
    std::vector<ElementId> members;
    auto add = [&](ElementId x) {
        if (!in[x]) {
            in[x] = true;
            members.push_back(x);
        }
    };
    add(L.bottom());
    add(L.top());
    for (ElementId g : generators)
        add(g);
    for (std::size_t i = 0; i < members.size(); ++i) {
        ElementId x = members[i];
        add(L.ortho(x));
        for (std::size_t j = 0; j <= i; ++j) {
            add(L.meet(x, members[j]));
            add(L.join(x, members[j]));
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

bool ModalAxiomReport::all_hold() const
{
    return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult &a) { return a.holds; });
}

ModalAxiomReport verify_modal_axioms(const ModalLayer &layer)
{
    const Lattice &L = layer.lattice();
    const auto n = static_cast<ElementId>(L.size());
    auto d = [&](ElementId x) { return layer.diamond(x); };
    auto neg = [&](ElementId x) { return L.ortho(x); };
    auto meet = [&](ElementId x, ElementId y) { return L.meet(x, y); };
    auto join = [&](ElementId x, ElementId y) { return L.join(x, y); };

    ModalAxiomReport r;
    r.axioms = {{
        {"S1", "x <= <>x", true, {}},
        {"S2", "<>0 = 0", true, {}},
        {"S3", "<><>x = <>x", true, {}},
        {"S4", "<>(x v y) = <>x v <>y", true, {}},
        {"S5", "y = (y ^ <>x) v (y ^ ~<>x)", true, {}},
        {"S6", "<>(x ^ <>y) = <>x ^ <>y", true, {}},
        {"S7", "~<>x ^ <>y <= <>(~x ^ (y v x))", true, {}},
    }};
    auto fail = [&](std::size_t i, std::vector<ElementId> w) {
        if (r.axioms[i].holds) {
            r.axioms[i].holds = false;
            r.axioms[i].witness = std::move(w);
        }
    };

    if (d(L.bottom()) != L.bottom())
        fail(1, {L.bottom()});
    for (ElementId x = 0; x < n; ++x) {
        if (!L.leq(x, d(x)))
            fail(0, {x});
        if (d(d(x)) != d(x))
            fail(2, {x});
        for (ElementId y = 0; y < n; ++y) {
            if (d(join(x, y)) != join(d(x), d(y)))
                fail(3, {x, y});
            if (y != join(meet(y, d(x)), meet(y, neg(d(x)))))
                fail(4, {x, y});
            if (d(meet(x, d(y))) != meet(d(x), d(y)))
                fail(5, {x, y});
            if (!L.leq(meet(neg(d(x)), d(y)), d(meet(neg(x), join(y, x)))))
                fail(6, {x, y});
        }
    }
    return r;
}

std::vector<PossibilityHomomorphism> possibility_homomorphisms(const ModalLayer &layer)
{
    return homomorphisms(layer.lattice(), layer.possibility_space());
}

ValuationOutcome actualization_compatible(const ModalLayer &layer, const PossibilityHomomorphism &f,
                                          const SearchOptions &options)
{
    const Lattice &L = layer.lattice();
    const Block &space = layer.possibility_space();
    if (f.domain != space.elements || !is_homomorphism(L, f))
        throw OmlError("f is not a Boolean homomorphism on the possibility space");

    // Agreement with f on W ^ <>L, expressed as atoms of W that must stay 0.
    std::vector<ElementId> forced_zero;
    for (const Block &W : layer.contexts()) {
        for (ElementId x : W.elements) {
            if (!space.contains(x))
                continue;
            bool one = f.value(x) == 1;
            for (ElementId p : W.atoms)
                if (L.leq(p, x) != one)
                    forced_zero.push_back(p);
        }
    }
    std::sort(forced_zero.begin(), forced_zero.end());
    forced_zero.erase(std::unique(forced_zero.begin(), forced_zero.end()), forced_zero.end());

    auto out = global_valuation_excluding(L, layer.contexts(), forced_zero, options);
    if (out.witness && !agrees_with(layer, *out.witness, f))
        throw OmlError("internal error: actualization does not agree with f");
    return out;
}

bool agrees_with(const ModalLayer &layer, const GlobalValuation &g, const PossibilityHomomorphism &f)
{
    const Block &space = layer.possibility_space();
    const auto &contexts = layer.contexts();
    if (g.per_block.size() != contexts.size())
        return false;
    for (std::size_t i = 0; i < contexts.size(); ++i)
        for (ElementId x : contexts[i].elements)
            if (space.contains(x) && g.per_block[i].value(x) != f.value(x))
                return false;
    return true;
}

MksReport mks_check(const ModalLayer &layer, const SearchOptions &options)
{
    MksReport r;
    try {
        r.global = global_valuation(layer.lattice(), layer.contexts(), options);
        r.side_a = r.global.verdict == Verdict::Found;
        auto homs = possibility_homomorphisms(layer);
        for (std::size_t i = 0; i < homs.size(); ++i) {
            r.per_homomorphism.push_back(actualization_compatible(layer, homs[i], options));
            if (r.per_homomorphism.back().verdict == Verdict::Found && !r.witness_homomorphism)
                r.witness_homomorphism = i;
        }
    } catch (const BudgetExceeded &e) {
        throw Inconclusive(std::string("modal Kochen-Specker check inconclusive: ") + e.what());
    }
    r.side_b = r.witness_homomorphism.has_value();
    r.agreement = r.side_a == r.side_b;
    return r;
}

std::vector<ElementId> classical_consequences(const ModalLayer &layer, ElementId p)
{
    const Lattice &L = layer.lattice();
    std::vector<ElementId> out;
    for (ElementId x : layer.possibility_space().elements)
        if (L.leq(layer.diamond(p), x))
            out.push_back(x);
    return out;
}

CorrespondenceReport classical_correspondence_check(const ModalLayer &layer)
{
    const Lattice &L = layer.lattice();
    if (!is_boolean(L))
        throw NotBoolean("classical correspondence requires a Boolean lattice");
    CorrespondenceReport r;
    for (const Block &W : layer.contexts()) {
        for (const auto &v : homomorphisms(L, W)) {
            ++r.homomorphisms_checked;
            for (ElementId x : W.elements) {
                if (v.value(layer.diamond(x)) != v.value(x) && r.holds) {
                    r.holds = false;
                    r.witness = std::make_pair(v.atom, x);
                }
            }
        }
    }
    return r;
}

} // namespace omlkit
