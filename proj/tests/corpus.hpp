#ifndef OMLKIT_TESTS_CORPUS_HPP
#define OMLKIT_TESTS_CORPUS_HPP

#include <string>
#include <utility>
#include <vector>

#include "omlkit/io.hpp"
#include "omlkit/lattice.hpp"
#include "oracles.hpp"

namespace corpus {

struct Entry {
    std::string name;
    omlkit::Lattice lattice;
    bool colorable;
};

inline omlkit::Lattice load(const std::string &file)
{
    return std::get<omlkit::Lattice>(omlkit::load_input(oracle::corpus(file)).value);
}

/// Every shipped lattice fixture plus products built in code. `with_large`
/// adds 2 x harries35 (144 elements).
inline std::vector<Entry> lattices(bool with_large = false)
{
    std::vector<Entry> out;
    for (const char *f : {"bool1.json", "bool2.json", "bool3.json", "bool4.json", "mo2.json", "mo3.json",
                          "bool1_x_mo2.json", "mo2_x_mo2.json", "single.gd", "chain2.gd", "chain3.gd", "chain4.gd",
                          "chain5.gd", "pentagon.gd"})
        out.push_back({f, load(f), true});
    out.push_back({"harries35.gd", load("harries35.gd"), false});
    out.push_back({"mo3 x chain2", omlkit::product(omlkit::mo(3), load("chain2.gd")), true});
    if (with_large)
        out.push_back({"bool1 x harries35", omlkit::product(omlkit::boolean_algebra(1), load("harries35.gd")), true});
    return out;
}

} // namespace corpus

#endif // OMLKIT_TESTS_CORPUS_HPP
