#include "omlkit/contexts.hpp"

#include <algorithm>

namespace omlkit {

bool Block::contains(ElementId x) const
{
    return std::binary_search(elements.begin(), elements.end(), x);
}

int Valuation::value(ElementId x) const
{
    auto it = std::lower_bound(domain.begin(), domain.end(), x);
    if (it == domain.end() || *it != x)
        throw OmlError("element " + std::to_string(x) + " is outside the valuation's domain");
    return values[static_cast<std::size_t>(it - domain.begin())];
}

bool commutes(const Lattice &L, ElementId a, ElementId b)
{
    return L.join(L.meet(a, b), L.meet(a, L.ortho(b))) == a;
}

Block make_block(const Lattice &L, std::vector<ElementId> elements)
{
    elements.push_back(L.bottom());
    elements.push_back(L.top());
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

    Block W;
    W.elements = std::move(elements);
    for (ElementId x : W.elements) {
        if (!W.contains(L.ortho(x)))
            throw OmlError("subset is not closed under complement at " + L.name(x));
        for (ElementId y : W.elements) {
            if (!W.contains(L.meet(x, y)) || !W.contains(L.join(x, y)))
                throw OmlError("subset is not closed at " + L.name(x) + ", " + L.name(y));
            for (ElementId z : W.elements)
                if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z)))
                    throw OmlError("subset is not distributive at " + L.name(x) + ", " + L.name(y) + ", " +
                                   L.name(z));
        }
    }
    for (ElementId x : W.elements) {
        if (x == L.bottom())
            continue;
        bool minimal = std::none_of(W.elements.begin(), W.elements.end(), [&](ElementId y) {
            return y != L.bottom() && y != x && L.leq(y, x);
        });
        if (minimal)
            W.atoms.push_back(x);
    }
    return W;
}

namespace {

// Bron-Kerbosch with Tomita pivoting over the commutation graph.
class CliqueEnumerator {
public:
    explicit CliqueEnumerator(const Lattice &L) : n_(L.size()), adj_(n_ * n_, 0)
    {
        for (ElementId a = 0; a < n_; ++a)
            for (ElementId b = 0; b < n_; ++b)
                adj_[a * n_ + b] = a != b && commutes(L, a, b);
    }

    std::vector<std::vector<ElementId>> run()
    {
        std::vector<ElementId> r, p(n_), x;
        for (ElementId i = 0; i < n_; ++i)
            p[i] = i;
        expand(r, p, x);
        return std::move(found_);
    }

private:
    bool adjacent(ElementId a, ElementId b) const { return adj_[a * n_ + b] != 0; }

    std::vector<ElementId> neighbours_in(ElementId v, const std::vector<ElementId> &set) const
    {
        std::vector<ElementId> out;
        for (ElementId u : set)
            if (adjacent(v, u))
                out.push_back(u);
        return out;
    }

    void expand(std::vector<ElementId> &r, std::vector<ElementId> p, std::vector<ElementId> x)
    {
        if (p.empty()) {
            if (x.empty())
                found_.push_back(r);
            return;
        }
        ElementId pivot = p.front();
        std::size_t best = 0;
        for (const auto *set : {&p, &x}) {
            for (ElementId u : *set) {
                std::size_t degree = neighbours_in(u, p).size();
                if (degree > best) {
                    best = degree;
                    pivot = u;
                }
            }
        }
        std::vector<ElementId> candidates;
        for (ElementId v : p)
            if (!adjacent(pivot, v))
                candidates.push_back(v);
        for (ElementId v : candidates) {
            r.push_back(v);
            expand(r, neighbours_in(v, p), neighbours_in(v, x));
            r.pop_back();
            p.erase(std::find(p.begin(), p.end(), v));
            x.push_back(v);
        }
    }

    std::size_t n_;
    std::vector<unsigned char> adj_;
    std::vector<std::vector<ElementId>> found_;
};

} // namespace

std::vector<Block> blocks(const Lattice &L)
{
    std::vector<Block> out;
    for (auto &clique : CliqueEnumerator(L).run())
        out.push_back(make_block(L, std::move(clique)));
    std::sort(out.begin(), out.end(), [](const Block &a, const Block &b) { return a.elements < b.elements; });
    return out;
}

std::vector<Valuation> homomorphisms(const Lattice &L, const Block &W)
{
    std::vector<Valuation> out;
    for (ElementId p : W.atoms) {
        Valuation v;
        v.domain = W.elements;
        v.atom = p;
        for (ElementId x : W.elements)
            v.values.push_back(L.leq(p, x) ? 1 : 0);
        out.push_back(std::move(v));
    }
    return out;
}

bool is_homomorphism(const Lattice &L, const Valuation &v)
{
    auto in_domain = [&](ElementId x) { return std::binary_search(v.domain.begin(), v.domain.end(), x); };
    if (!in_domain(L.bottom()) || !in_domain(L.top()) || v.value(L.bottom()) != 0 || v.value(L.top()) != 1)
        return false;
    for (ElementId x : v.domain) {
        if (!in_domain(L.ortho(x)) || v.value(L.ortho(x)) != 1 - v.value(x))
            return false;
        for (ElementId y : v.domain) {
            if (!in_domain(L.meet(x, y)) || !in_domain(L.join(x, y)))
                return false;
            if (v.value(L.meet(x, y)) != (v.value(x) & v.value(y)))
                return false;
            if (v.value(L.join(x, y)) != (v.value(x) | v.value(y)))
                return false;
        }
    }
    return true;
}

} // namespace omlkit
