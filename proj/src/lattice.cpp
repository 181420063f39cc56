#include "omlkit/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <optional>

namespace omlkit {

namespace {

std::string label(const std::vector<std::string> &names, ElementId a)
{
    return names[a];
}

// Greatest element of the candidate set that dominates all candidates, if any.
// `below(c, m)` must answer c <= m for the order being searched.
template <typename Below>
std::optional<ElementId> extremum(const std::vector<ElementId> &candidates, Below below)
{
    for (ElementId m : candidates) {
        bool dominates = true;
        for (ElementId c : candidates) {
            if (!below(c, m)) {
                dominates = false;
                break;
            }
        }
        if (dominates)
            return m;
    }
    return std::nullopt;
}

} // namespace

std::vector<ElementId> Lattice::atoms() const
{
    std::vector<ElementId> out;
    for (ElementId a = 0; a < n_; ++a) {
        if (a == bottom_)
            continue;
        bool covers_bottom = true;
        for (ElementId c = 0; c < n_ && covers_bottom; ++c)
            if (c != bottom_ && c != a && leq(c, a))
                covers_bottom = false;
        if (covers_bottom)
            out.push_back(a);
    }
    return out;
}

std::vector<std::pair<ElementId, ElementId>> Lattice::covers() const
{
    std::vector<std::pair<ElementId, ElementId>> out;
    for (ElementId a = 0; a < n_; ++a) {
        for (ElementId b = 0; b < n_; ++b) {
            if (a == b || !leq(a, b))
                continue;
            bool direct = true;
            for (ElementId c = 0; c < n_ && direct; ++c)
                if (c != a && c != b && leq(a, c) && leq(c, b))
                    direct = false;
            if (direct)
                out.emplace_back(a, b);
        }
    }
    return out;
}

bool Lattice::operator==(const Lattice &other) const
{
    return n_ == other.n_ && leq_ == other.leq_ && ortho_ == other.ortho_;
}

Lattice build_lattice(LatticeInput input)
{
    const std::size_t n = input.n;
    if (n == 0)
        throw FormatError("lattice must have at least one element");
    if (input.ortho.size() != n)
        throw FormatError("ortho map has " + std::to_string(input.ortho.size()) + " entries, expected " +
                          std::to_string(n));
    for (ElementId x : input.ortho)
        if (x >= n)
            throw FormatError("ortho map refers to element " + std::to_string(x) + " out of range");
    for (auto [a, b] : input.order_pairs)
        if (a >= n || b >= n)
            throw FormatError("order pair (" + std::to_string(a) + ", " + std::to_string(b) + ") out of range");
    if (input.names.empty()) {
        input.names.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            input.names[i] = std::to_string(i);
    } else if (input.names.size() != n) {
        throw FormatError("names has " + std::to_string(input.names.size()) + " entries, expected " +
                          std::to_string(n));
    }

    Lattice L;
    L.n_ = n;
    L.names_ = std::move(input.names);
    L.ortho_ = std::move(input.ortho);
    const auto &names = L.names_;

    auto &leq = L.leq_;
    leq.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        leq[i * n + i] = 1;
    for (auto [a, b] : input.order_pairs)
        leq[a * n + b] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (leq[i * n + k])
                for (std::size_t j = 0; j < n; ++j)
                    if (leq[k * n + j])
                        leq[i * n + j] = 1;

    for (ElementId a = 0; a < n; ++a)
        for (ElementId b = a + 1; b < n; ++b)
            if (leq[a * n + b] && leq[b * n + a])
                throw LatticeError(LatticeErrorKind::NotAPoset, {a, b},
                                   label(names, a) + " <= " + label(names, b) + " and " + label(names, b) +
                                       " <= " + label(names, a));

    auto le = [&](ElementId x, ElementId y) { return leq[x * n + y] != 0; };
    L.meet_.assign(n * n, 0);
    L.join_.assign(n * n, 0);
    std::vector<ElementId> lower, upper;
    for (ElementId a = 0; a < n; ++a) {
        for (ElementId b = a; b < n; ++b) {
            lower.clear();
            upper.clear();
            for (ElementId c = 0; c < n; ++c) {
                if (le(c, a) && le(c, b))
                    lower.push_back(c);
                if (le(a, c) && le(b, c))
                    upper.push_back(c);
            }
            auto m = extremum(lower, [&](ElementId c, ElementId x) { return le(c, x); });
            if (!m)
                throw LatticeError(LatticeErrorKind::NotALattice, {a, b},
                                   "no greatest lower bound (meet) of " + label(names, a) + " and " + label(names, b));
            auto j = extremum(upper, [&](ElementId c, ElementId x) { return le(x, c); });
            if (!j)
                throw LatticeError(LatticeErrorKind::NotALattice, {a, b},
                                   "no least upper bound (join) of " + label(names, a) + " and " + label(names, b));
            L.meet_[a * n + b] = L.meet_[b * n + a] = *m;
            L.join_[a * n + b] = L.join_[b * n + a] = *j;
        }
    }

    // Finite lattices are bounded.
    ElementId bottom = 0, top = 0;
    for (ElementId x = 1; x < n; ++x) {
        bottom = L.meet_[bottom * n + x];
        top = L.join_[top * n + x];
    }
    L.bottom_ = bottom;
    L.top_ = top;

    const auto &ortho = L.ortho_;
    for (ElementId x = 0; x < n; ++x)
        if (ortho[ortho[x]] != x)
            throw LatticeError(LatticeErrorKind::InvolutionViolation, {x},
                               "~~" + label(names, x) + " = " + label(names, ortho[ortho[x]]) + ", expected " +
                                   label(names, x));
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y)
            if (ortho[L.join(x, y)] != L.meet(ortho[x], ortho[y]))
                throw LatticeError(LatticeErrorKind::InvolutionViolation, {x, y},
                                   "~(" + label(names, x) + " v " + label(names, y) + ") != ~" + label(names, x) +
                                       " ^ ~" + label(names, y));

    for (ElementId x = 0; x < n; ++x)
        if (L.meet(x, ortho[x]) != bottom)
            throw LatticeError(LatticeErrorKind::ComplementLawViolation, {x},
                               label(names, x) + " ^ ~" + label(names, x) + " = " +
                                   label(names, L.meet(x, ortho[x])) + ", expected bottom");

    for (ElementId x = 0; x < n; ++x) {
        for (ElementId y = 0; y < n; ++y) {
            ElementId xy = L.join(x, y);
            if (L.join(x, L.meet(ortho[x], xy)) != xy)
                throw LatticeError(LatticeErrorKind::OrthomodularityViolation, {x, y},
                                   label(names, x) + " v (~" + label(names, x) + " ^ (" + label(names, x) + " v " +
                                       label(names, y) + ")) != " + label(names, x) + " v " + label(names, y));
        }
    }
    return L;
}

bool distributes(const Lattice &L, ElementId a, ElementId b, ElementId c)
{
    return L.meet(L.join(a, b), c) == L.join(L.meet(a, c), L.meet(b, c));
}

bool codistributes(const Lattice &L, ElementId a, ElementId b, ElementId c)
{
    return L.join(L.meet(a, b), c) == L.meet(L.join(a, c), L.join(b, c));
}

namespace {

bool triple_holds(const Lattice &L, ElementId a, ElementId b, ElementId c)
{
    const ElementId perms[6][3] = {{a, b, c}, {a, c, b}, {b, a, c}, {b, c, a}, {c, a, b}, {c, b, a}};
    for (const auto &p : perms)
        if (!distributes(L, p[0], p[1], p[2]) || !codistributes(L, p[0], p[1], p[2]))
            return false;
    return true;
}

} // namespace

TripleReport check_triple(const Lattice &L, ElementId a, ElementId b, ElementId c)
{
    return {a, b, c, distributes(L, a, b, c), codistributes(L, a, b, c), triple_holds(L, a, b, c)};
}

std::vector<ElementId> center_by_triples(const Lattice &L)
{
    const auto n = static_cast<ElementId>(L.size());
    std::vector<ElementId> out;
    for (ElementId z = 0; z < n; ++z) {
        bool central = true;
        for (ElementId a = 0; a < n && central; ++a)
            for (ElementId b = 0; b < n && central; ++b)
                central = triple_holds(L, a, b, z);
        if (central)
            out.push_back(z);
    }
    return out;
}

std::vector<ElementId> center_by_decomposition(const Lattice &L)
{
    const auto n = static_cast<ElementId>(L.size());
    std::vector<ElementId> out;
    for (ElementId z = 0; z < n; ++z) {
        bool central = true;
        for (ElementId a = 0; a < n && central; ++a)
            central = L.join(L.meet(a, z), L.meet(a, L.ortho(z))) == a;
        if (central)
            out.push_back(z);
    }
    return out;
}

std::vector<ElementId> center(const Lattice &L)
{
    auto by_triples = center_by_triples(L);
    auto by_decomposition = center_by_decomposition(L);
    if (by_triples != by_decomposition)
        throw DefinitionMismatch("center via T-triples (" + std::to_string(by_triples.size()) +
                                 " elements) differs from center via decomposition (" +
                                 std::to_string(by_decomposition.size()) + " elements)");
    return by_triples;
}

bool is_boolean(const Lattice &L)
{
    const auto n = static_cast<ElementId>(L.size());
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y)
            for (ElementId z = 0; z < n; ++z)
                if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z)))
                    return false;
    return true;
}

Lattice product(const Lattice &left, const Lattice &right)
{
    const auto n1 = static_cast<ElementId>(left.size());
    const auto n2 = static_cast<ElementId>(right.size());
    auto id = [n2](ElementId i, ElementId j) { return i * n2 + j; };

    LatticeInput input;
    input.n = std::size_t{n1} * n2;
    input.ortho.resize(input.n);
    input.names.resize(input.n);
    for (ElementId i = 0; i < n1; ++i) {
        for (ElementId j = 0; j < n2; ++j) {
            input.ortho[id(i, j)] = id(left.ortho(i), right.ortho(j));
            input.names[id(i, j)] = "(" + left.name(i) + "," + right.name(j) + ")";
        }
    }
    // Covering pairs of each factor generate the product order.
    for (auto [a, b] : left.covers())
        for (ElementId j = 0; j < n2; ++j)
            input.order_pairs.emplace_back(id(a, j), id(b, j));
    for (auto [a, b] : right.covers())
        for (ElementId i = 0; i < n1; ++i)
            input.order_pairs.emplace_back(id(i, a), id(i, b));
    return build_lattice(std::move(input));
}

Lattice boolean_algebra(unsigned k)
{
    if (k > 8)
        throw FormatError("boolean_algebra: k > 8 is beyond desk scale");
    const ElementId n = ElementId{1} << k;
    LatticeInput input;
    input.n = n;
    input.ortho.resize(n);
    input.names.resize(n);
    for (ElementId s = 0; s < n; ++s) {
        input.ortho[s] = (n - 1) ^ s;
        std::string name = "{";
        for (unsigned bit = 0; bit < k; ++bit) {
            if (!(s >> bit & 1))
                continue;
            if (name.size() > 1)
                name += ",";
            name += "e" + std::to_string(bit);
        }
        input.names[s] = name + "}";
        for (unsigned bit = 0; bit < k; ++bit)
            if (!(s >> bit & 1))
                input.order_pairs.emplace_back(s, s | (ElementId{1} << bit));
    }
    return build_lattice(std::move(input));
}

Lattice mo(unsigned k)
{
    const ElementId top = 2 * k + 1;
    LatticeInput input;
    input.n = top + 1;
    input.ortho.resize(input.n);
    input.names.resize(input.n);
    input.names[0] = "0";
    input.names[top] = "1";
    input.ortho[0] = top;
    input.ortho[top] = 0;
    for (unsigned i = 0; i < k; ++i) {
        ElementId a = 2 * i + 1;
        input.names[a] = "a" + std::to_string(i);
        input.names[a + 1] = "a" + std::to_string(i) + "'";
        input.ortho[a] = a + 1;
        input.ortho[a + 1] = a;
    }
    for (ElementId x = 1; x < top; ++x) {
        input.order_pairs.emplace_back(0, x);
        input.order_pairs.emplace_back(x, top);
    }
    if (k == 0)
        input.order_pairs.emplace_back(0, top);
    return build_lattice(std::move(input));
}

ElementId find_element(const Lattice &L, const std::string &name_or_id)
{
    const auto &names = L.names();
    auto it = std::find(names.begin(), names.end(), name_or_id);
    if (it != names.end())
        return static_cast<ElementId>(it - names.begin());
    ElementId id = 0;
    auto [end, ec] = std::from_chars(name_or_id.data(), name_or_id.data() + name_or_id.size(), id);
    if (ec == std::errc{} && end == name_or_id.data() + name_or_id.size() && id < L.size())
        return id;
    throw FormatError("no element named '" + name_or_id + "'");
}

} // namespace omlkit
