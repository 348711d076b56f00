#include "cayley/structure.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "cayley/error.hpp"

namespace cayley {

std::vector<Element> conjugacy_class_of(const FiniteGroup& g, Element x) {
    ElementSet cls(g);
    for (Element h = 0; h < g.order(); ++h)
        cls.insert(g.mul(g.mul(h, x), g.inv(h)));
    return cls.elements();
}

std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g) {
    std::vector<std::vector<Element>> classes;
    std::vector<bool> seen(g.order(), false);
    for (Element x = 0; x < g.order(); ++x) {
        if (seen[x])
            continue;
        auto cls = conjugacy_class_of(g, x);
        for (Element y : cls)
            seen[y] = true;
        classes.push_back(std::move(cls));
    }
    return classes;
}

ElementSet Subgroup::right_coset(Element x) const { return elements.right_translate(x); }
ElementSet Subgroup::left_coset(Element x) const { return elements.left_translate(x); }

namespace {

std::vector<Element> coset_reps(const ElementSet& h) {
    const auto& g = h.group();
    std::vector<bool> covered(g.order(), false);
    std::vector<Element> reps;
    for (Element x = 0; x < g.order(); ++x) {
        if (covered[x])
            continue;
        reps.push_back(x);
        h.for_each([&](Element k) { covered[g.mul(k, x)] = true; });
    }
    return reps;
}

}  // namespace

Subgroup subgroup_generated(const ElementSet& x) {
    const auto& g = x.group();
    ElementSet closure(g, {g.identity()});
    std::deque<Element> frontier{g.identity()};
    const auto gens = x.elements();
    while (!frontier.empty()) {
        const Element a = frontier.front();
        frontier.pop_front();
        for (Element s : gens) {
            for (Element b : {g.mul(a, s), g.mul(a, g.inv(s))}) {
                if (!closure.contains(b)) {
                    closure.insert(b);
                    frontier.push_back(b);
                }
            }
        }
    }
    return Subgroup{closure, coset_reps(closure)};
}

Subgroup make_subgroup(const ElementSet& h) {
    const auto& g = h.group();
    if (!h.contains(g.identity()))
        throw InvalidArgument("subgroup must contain the identity");
    bool closed = true;
    h.for_each([&](Element a) {
        closed = closed && h.contains(g.inv(a));
        h.for_each([&](Element b) { closed = closed && h.contains(g.mul(a, b)); });
    });
    if (!closed)
        throw InvalidArgument("set is not closed under the group operation");
    return Subgroup{h, coset_reps(h)};
}

bool is_normal(const Subgroup& h) {
    const auto& g = h.group();
    for (Element x = 0; x < g.order(); ++x)
        if (!(conjugate_set(x, h.elements) == h.elements))
            return false;
    return true;
}

std::vector<Subgroup> cyclic_subgroups(const FiniteGroup& g) {
    std::vector<ElementSet> found;
    for (Element x = 0; x < g.order(); ++x) {
        auto h = subgroup_generated(ElementSet(g, {x})).elements;
        if (std::find(found.begin(), found.end(), h) == found.end())
            found.push_back(h);
    }
    std::sort(found.begin(), found.end(), [](const ElementSet& a, const ElementSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<Subgroup> out;
    for (auto& h : found)
        out.push_back(Subgroup{h, coset_reps(h)});
    return out;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
    std::vector<ElementSet> found;
    for (auto& c : cyclic_subgroups(g))
        found.push_back(c.elements);
    // Every subgroup is a join of cyclic subgroups; iterate joins to a fixpoint.
    for (bool grew = true; grew;) {
        grew = false;
        const std::size_t count = found.size();
        for (std::size_t i = 0; i < count; ++i) {
            for (std::size_t j = i + 1; j < count; ++j) {
                auto h = subgroup_generated(found[i] | found[j]).elements;
                if (std::find(found.begin(), found.end(), h) == found.end()) {
                    found.push_back(h);
                    grew = true;
                }
            }
        }
    }
    std::sort(found.begin(), found.end(), [](const ElementSet& a, const ElementSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<Subgroup> out;
    for (auto& h : found)
        out.push_back(Subgroup{h, coset_reps(h)});
    return out;
}

Automorphism::Automorphism(FiniteGroup group, std::vector<Element> perm, Unchecked)
    : group_(std::move(group)), perm_(std::move(perm)) {}

Automorphism::Automorphism(FiniteGroup group, std::vector<Element> perm)
    : group_(std::move(group)), perm_(std::move(perm)) {
    const int n = group_.order();
    if (static_cast<int>(perm_.size()) != n)
        throw InvalidArgument("automorphism permutation has wrong length");
    std::vector<bool> hit(n, false);
    for (Element x : perm_) {
        if (x < 0 || x >= n || hit[x])
            throw InvalidArgument("automorphism is not a bijection");
        hit[x] = true;
    }
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if (perm_[group_.mul(a, b)] != group_.mul(perm_[a], perm_[b]))
                throw InvalidArgument("map is not a homomorphism");
}

Automorphism Automorphism::identity(const FiniteGroup& group) {
    std::vector<Element> perm(group.order());
    std::iota(perm.begin(), perm.end(), 0);
    return Automorphism(group, std::move(perm), Unchecked{});
}

ElementSet Automorphism::apply(const ElementSet& x) const {
    ElementSet out(group_);
    x.for_each([&](Element a) { out.insert(perm_[a]); });
    return out;
}

Automorphism Automorphism::compose(const Automorphism& inner) const {
    std::vector<Element> perm(perm_.size());
    for (std::size_t a = 0; a < perm.size(); ++a)
        perm[a] = perm_[inner.perm_[a]];
    return Automorphism(group_, std::move(perm), Unchecked{});
}

Automorphism Automorphism::inverse() const {
    std::vector<Element> perm(perm_.size());
    for (std::size_t a = 0; a < perm.size(); ++a)
        perm[perm_[a]] = static_cast<Element>(a);
    return Automorphism(group_, std::move(perm), Unchecked{});
}

std::vector<Element> greedy_generators(const FiniteGroup& g) {
    std::vector<Element> gens;
    ElementSet span(g, {g.identity()});
    for (Element x = 0; x < g.order() && span.size() < g.order(); ++x) {
        if (span.contains(x))
            continue;
        gens.push_back(x);
        span = subgroup_generated(ElementSet(g, gens)).elements;
    }
    return gens;
}

namespace {

// Extends generator images to a map g -> h; empty when inconsistent or not a
// homomorphism.
std::optional<std::vector<Element>> extend_homomorphism(const FiniteGroup& g, const FiniteGroup& h,
                                                        const std::vector<Element>& gens,
                                                        const std::vector<Element>& images) {
    std::vector<Element> map(g.order(), -1);
    map[g.identity()] = h.identity();
    std::deque<Element> frontier{g.identity()};
    while (!frontier.empty()) {
        const Element x = frontier.front();
        frontier.pop_front();
        for (std::size_t k = 0; k < gens.size(); ++k) {
            const Element y = g.mul(x, gens[k]);
            const Element img = h.mul(map[x], images[k]);
            if (map[y] < 0) {
                map[y] = img;
                frontier.push_back(y);
            } else if (map[y] != img) {
                return std::nullopt;
            }
        }
    }
    for (Element a = 0; a < g.order(); ++a)
        for (Element b = 0; b < g.order(); ++b)
            if (map[g.mul(a, b)] != h.mul(map[a], map[b]))
                return std::nullopt;
    return map;
}

bool is_bijection(const std::vector<Element>& map, int n) {
    std::vector<bool> hit(n, false);
    for (Element x : map) {
        if (x < 0 || x >= n || hit[x])
            return false;
        hit[x] = true;
    }
    return true;
}

std::vector<std::vector<Element>> all_isomorphisms(const FiniteGroup& g, const FiniteGroup& h, bool first_only) {
    std::vector<std::vector<Element>> out;
    if (g.order() != h.order())
        return out;
    const auto gens = greedy_generators(g);
    std::vector<std::vector<Element>> candidates(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const int ord = g.element_order(gens[k]);
        for (Element y = 0; y < h.order(); ++y)
            if (h.element_order(y) == ord)
                candidates[k].push_back(y);
    }
    std::vector<Element> images(gens.size());
    auto recurse = [&](auto&& self, std::size_t k) -> void {
        if (first_only && !out.empty())
            return;
        if (k == gens.size()) {
            auto map = extend_homomorphism(g, h, gens, images);
            if (map && is_bijection(*map, h.order()))
                out.push_back(std::move(*map));
            return;
        }
        for (Element y : candidates[k]) {
            images[k] = y;
            self(self, k + 1);
        }
    };
    recurse(recurse, 0);
    std::sort(out.begin(), out.end());
    return out;
}

int gcd_int(int a, int b) { return std::gcd(a, b); }

}  // namespace

Automorphism cyclic_multiplier(const FiniteGroup& z, int u) {
    auto c = std::get_if<CyclicTag>(&z.tag());
    if (!c)
        throw InvalidArgument("cyclic_multiplier needs a cyclic group");
    const int n = c->n;
    u = ((u % n) + n) % n;
    if (gcd_int(u, n) != 1 && n > 1)
        throw InvalidArgument("multiplier " + std::to_string(u) + " is not a unit mod " + std::to_string(n));
    std::vector<Element> perm(n);
    for (int x = 0; x < n; ++x)
        perm[x] = static_cast<Element>((static_cast<long long>(u) * x) % n);
    return Automorphism(z, std::move(perm));
}

Automorphism dihedral_automorphism(const FiniteGroup& d, int u, int v) {
    const int n = d.dihedral_n();
    if (n == 0)
        throw InvalidArgument("dihedral_automorphism needs a dihedral group");
    u = ((u % n) + n) % n;
    v = ((v % n) + n) % n;
    std::vector<Element> perm(2 * n);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < n; ++j)
            perm[i * n + j] = static_cast<Element>(i * n + (static_cast<long long>(u) * j + i * v) % n);
    return Automorphism(d, std::move(perm));
}

std::vector<Automorphism> automorphisms(const FiniteGroup& g) {
    std::vector<Automorphism> out;
    if (auto c = std::get_if<CyclicTag>(&g.tag())) {
        // gcd(0, 1) == 1, so Z_1 yields exactly the identity map.
        for (int u = 0; u < c->n; ++u)
            if (gcd_int(u, c->n) == 1)
                out.push_back(cyclic_multiplier(g, u));
        return out;
    }
    if (auto d = std::get_if<DihedralTag>(&g.tag()); d && d->n % 2 == 1 && d->n >= 3) {
        for (int u = 1; u < d->n; ++u)
            if (gcd_int(u, d->n) == 1)
                for (int v = 0; v < d->n; ++v)
                    out.push_back(dihedral_automorphism(g, u, v));
        return out;
    }
    if (g.order() > kGenericAutomorphismCutoff)
        throw Unsupported("automorphism enumeration unsupported for " + g.name() + " (order " +
                          std::to_string(g.order()) + " above generic cutoff " +
                          std::to_string(kGenericAutomorphismCutoff) + ")");
    for (auto& perm : all_isomorphisms(g, g, false))
        out.emplace_back(Automorphism(g, std::move(perm), Automorphism::Unchecked{}));
    return out;
}

ElementSet apply_automorphism(const Automorphism& a, const ElementSet& x) { return a.apply(x); }

ElementSet conjugate_set(Element g, const ElementSet& x) {
    const auto& grp = x.group();
    ElementSet out(grp);
    const Element gi = grp.inv(g);
    x.for_each([&](Element a) { out.insert(grp.mul(grp.mul(g, a), gi)); });
    return out;
}

std::optional<std::vector<Element>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h) {
    auto all = all_isomorphisms(g, h, true);
    if (all.empty())
        return std::nullopt;
    return all.front();
}

}  // namespace cayley
