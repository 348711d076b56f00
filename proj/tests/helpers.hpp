#pragma once

#include <string>
#include <vector>

#include "cayley/element_set.hpp"
#include "cayley/io.hpp"
#include "oracle.hpp"

namespace testing {

inline cayley::ElementSet set(const cayley::FiniteGroup& g, const std::string& literal) {
    return cayley::parse_set(g, literal);
}

inline cayley::ElementSet from_vec(const cayley::FiniteGroup& g, const std::vector<int>& xs) {
    cayley::ElementSet out(g);
    for (int x : xs)
        out.insert(x);
    return out;
}

inline std::vector<int> to_vec(const cayley::ElementSet& x) {
    std::vector<int> out;
    x.for_each([&](cayley::Element e) { out.push_back(e); });
    return out;
}

// Oracle twin of a library group, built from the same family parameters.
inline oracle::Group twin(const cayley::FiniteGroup& g) {
    if (auto c = std::get_if<cayley::CyclicTag>(&g.tag()))
        return oracle::cyclic(c->n);
    if (auto d = std::get_if<cayley::DihedralTag>(&g.tag()))
        return oracle::dihedral(d->n);
    if (auto p = std::get_if<cayley::ProductTag>(&g.tag())) {
        oracle::Group out = twin(p->parts.front());
        for (std::size_t k = 1; k < p->parts.size(); ++k)
            out = oracle::product(out, twin(p->parts[k]));
        return out;
    }
    oracle::Group out{g.order(), [g](int a, int b) { return g.mul(a, b); }, g.identity()};
    return out;
}

}  // namespace testing
