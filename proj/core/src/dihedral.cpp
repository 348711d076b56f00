#include "cayley/dihedral.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cayley/error.hpp"

namespace cayley {

namespace {

int require_dihedral(const FiniteGroup& g, const char* op) {
    const int n = g.dihedral_n();
    if (n == 0)
        throw InvalidArgument(std::string(op) + " needs a dihedral group, got " + g.name());
    return n;
}

ElementSet product_set(const ElementSet& a, const ElementSet& b) {
    const auto& g = a.group();
    ElementSet out(g);
    a.for_each([&](Element x) { b.for_each([&](Element y) { out.insert(g.mul(x, y)); }); });
    return out;
}

std::string num(int x) { return std::to_string(x); }

}  // namespace

DihedralSplit split_rm(const ElementSet& x) {
    const int n = require_dihedral(x.group(), "split_rm");
    DihedralSplit out{ElementSet(x.group()), ElementSet(x.group())};
    x.for_each([&](Element g) { (g < n ? out.rotations : out.reflections).insert(g); });
    return out;
}

UrUmDecomposition ur_um_decomposition(const FactorTriple& t) {
    require_dihedral(t.group(), "ur_um_decomposition");
    if (!t.verified)
        throw PreconditionViolation("ur_um_decomposition needs a verified triple");
    const auto s = split_rm(t.S);
    const auto tt = split_rm(t.T);
    const auto u = split_rm(t.U);
    UrUmDecomposition d{product_set(s.rotations, tt.rotations), product_set(s.reflections, tt.reflections),
                        product_set(s.rotations, tt.reflections), product_set(s.reflections, tt.rotations)};
    if (d.rr.intersects(d.mm) || !((d.rr | d.mm) == u.rotations))
        throw TheoremViolation("U ∩ R is not the disjoint union S_R T_R ⊔ S_M T_M");
    if (d.rm.intersects(d.mr) || !((d.rm | d.mr) == u.reflections))
        throw TheoremViolation("U ∩ M is not the disjoint union S_R T_M ⊔ S_M T_R");
    return d;
}

bool is_strongly_symmetric(const ElementSet& x) {
    const int n = require_dihedral(x.group(), "is_strongly_symmetric");
    bool ok = true;
    x.for_each([&](Element g) {
        const int i = g / n, j = g % n;
        ok = ok && x.contains(i * n + (n - j) % n);
    });
    return ok;
}

PecherCorrespondence::PecherCorrespondence(int n) : n_(n) {
    if (n < 3 || n % 2 == 0)
        throw InvalidArgument("Pecher correspondence needs odd n >= 3, got " + num(n));
    cyclic_ = FiniteGroup::cyclic(2 * n);
    dihedral_ = FiniteGroup::dihedral(n);
    forward_.resize(2 * n);
    inverse_.resize(2 * n);
    for (int x = 0; x < 2 * n; ++x) {
        const Element y = (x % 2) * n + x % n;
        forward_[x] = y;
        inverse_[y] = x;
    }
}

ElementSet PecherCorrespondence::forward(const ElementSet& x) const {
    if (!(x.group() == cyclic_))
        throw InvalidArgument("Pecher forward needs a subset of " + cyclic_.name());
    ElementSet out(dihedral_);
    x.for_each([&](Element a) { out.insert(forward_[a]); });
    return out;
}

ElementSet PecherCorrespondence::inverse(const ElementSet& y) const {
    if (!(y.group() == dihedral_))
        throw InvalidArgument("Pecher inverse needs a subset of " + dihedral_.name());
    ElementSet out(cyclic_);
    y.for_each([&](Element a) { out.insert(inverse_[a]); });
    return out;
}

FactorTriple transfer_forward(const PecherCorrespondence& pc, const FactorTriple& t) {
    if (!t.verified)
        throw PreconditionViolation("transfer_forward needs a verified triple");
    auto image = make_triple(pc.forward(t.S), pc.forward(t.T), pc.forward(t.U));
    if (!image.verified)
        throw TheoremViolation("Pecher image of a verified triple of " + pc.cyclic().name() +
                               " fails verification: " + verify_triple(image.S, image.T, image.U).describe());
    for (const auto* x : {&image.S, &image.T, &image.U})
        if (!is_strongly_symmetric(*x))
            throw TheoremViolation("Pecher image of a symmetric set is not strongly symmetric");
    return image;
}

FactorTriple transfer_backward(const PecherCorrespondence& pc, const FactorTriple& t) {
    if (!t.verified)
        throw PreconditionViolation("transfer_backward needs a verified triple");
    auto s = pc.inverse(t.S), tt = pc.inverse(t.T), u = pc.inverse(t.U);
    for (auto [name, x] : {std::pair{"S", &s}, std::pair{"T", &tt}, std::pair{"U", &u}})
        if (!is_symmetric(*x))
            throw PreconditionViolation(std::string("Pecher preimage of ") + name + " is not symmetric in " +
                                        pc.cyclic().name());
    auto pre = make_triple(std::move(s), std::move(tt), std::move(u));
    if (!pre.verified)
        throw TheoremViolation("Pecher preimage of a verified triple of " + pc.dihedral().name() +
                               " fails verification: " + verify_triple(pre.S, pre.T, pre.U).describe());
    return pre;
}

bool pullback_gcd_condition(int n, const FactorTriple& t) {
    const int k = t.S.size(), l = t.T.size();
    if (k % 2 == 0 || l % 2 == 0)
        return false;
    return std::gcd(n, (k + 1) / 2) == 1 && std::gcd(n, (l + 1) / 2) == 1;
}

FactorTriple table2_family(int row, int n, const Table2Params& p) {
    const std::string tag = "table2 row " + num(row) + ": ";
    if (row < 1 || row > 8)
        throw PreconditionViolation("table2: row must be 1..8, got " + num(row));
    if (n < 3)
        throw PreconditionViolation(tag + "needs n >= 3, got " + num(n));
    const auto d = FiniteGroup::dihedral(n);
    auto rot = [n](long long j) { return static_cast<Element>(((j % n) + n) % n); };
    auto ref = [n](long long j) { return static_cast<Element>(n + ((j % n) + n) % n); };
    // r^j s = s r^{-j}
    auto rot_s = [&](long long j) { return ref(-j); };
    auto coprime = [n](int x) { return std::gcd(((x % n) + n) % n, n) == 1; };

    ElementSet s(d), t(d), u(d);
    switch (row) {
        case 1:
            if (n % 2 == 0)
                throw PreconditionViolation(tag + "needs odd n");
            s = ElementSet(d, {ref(0)});
            t = ElementSet(d, {rot(-1), rot(1)});
            u = ElementSet(d, {ref(1), ref(-1)});
            break;
        case 2:
            s = ElementSet(d, {ref(0)});
            t = ElementSet(d, {rot_s(1), rot_s(-1), rot(-1), rot(1)});
            u = ElementSet(d, {rot(1), rot(-1), ref(1), ref(-1)});
            break;
        case 3:
            s = ElementSet(d, {ref(0)});
            for (int k = 1; k < n; ++k) {
                t.insert(rot(-k));
                u.insert(ref(k));
            }
            break;
        case 4:
            if (!coprime(p.m))
                throw PreconditionViolation(tag + "needs gcd(m,n)=1, m=" + num(p.m));
            if (rot(p.u) == 0)
                throw PreconditionViolation(tag + "u=" + num(p.u) + " puts e in T");
            s = ElementSet(d, {ref(0)});
            t = ElementSet(d, {rot_s(p.m), rot_s(-p.m), rot(-p.u), rot(p.u)});
            u = ElementSet(d, {rot(p.m), rot(-p.m), ref(p.u), ref(-p.u)});
            break;
        case 5:
            if (n % 2)
                throw PreconditionViolation(tag + "needs even n");
            s = ElementSet(d, {ref(0)});
            for (int k = 1; k < n; k += 2) {
                t.insert(rot(-k));
                u.insert(ref(k));
            }
            t.insert(rot_s(1));
            t.insert(rot_s(-1));
            u.insert(rot(1));
            u.insert(rot(-1));
            break;
        case 6:
            s = ElementSet(d, {ref(0)});
            t = ElementSet(d, {rot_s(1), rot_s(-1), rot(-2), rot(2)});
            u = ElementSet(d, {rot(1), rot(-1), ref(2), ref(-2)});
            break;
        case 7:
            if (n % 2 == 0)
                throw PreconditionViolation(tag + "needs odd n");
            if (!coprime(p.u))
                throw PreconditionViolation(tag + "needs gcd(u,n)=1, u=" + num(p.u));
            s = ElementSet(d, {ref(p.a)});
            t = ElementSet(d, {rot(-p.u), rot(p.u)});
            u = ElementSet(d, {ref(p.a + p.u), ref(p.a - p.u)});
            break;
        case 8:
            if (!coprime(p.m))
                throw PreconditionViolation(tag + "needs gcd(m,n)=1, m=" + num(p.m));
            if (p.us.empty())
                throw PreconditionViolation(tag + "needs at least one u_i");
            s = ElementSet(d, {ref(p.a)});
            t = ElementSet(d, {ref(p.a - p.m), ref(p.a + p.m)});
            u = ElementSet(d, {rot(p.m), rot(-p.m)});
            for (int ui : p.us) {
                if (rot(ui) == 0)
                    throw PreconditionViolation(tag + "u_i=" + num(ui) + " puts e in T");
                t.insert(rot(-ui));
                t.insert(rot(ui));
                u.insert(ref(p.a + ui));
                u.insert(ref(p.a - ui));
            }
            break;
    }
    auto triple = make_triple(s, t, u);
    if (!triple.verified)
        throw PreconditionViolation(tag + "construction failed verification: " + verify_triple(s, t, u).describe());
    return triple;
}

FactorTriple involution_equivalent(const FactorTriple& t, Element x) {
    const auto& g = t.group();
    if (!t.verified)
        throw PreconditionViolation("involution_equivalent needs a verified triple");
    if (!g.contains(x))
        throw InvalidArgument("element " + num(x) + " out of range");
    if (!g.is_involution(x))
        throw PreconditionViolation("x=" + num(x) + " is not an involution");
    if (t.S.contains(x))
        throw PreconditionViolation("x lies in S");
    if (t.T.contains(x))
        throw PreconditionViolation("x lies in T");
    if (!(conjugate_set(x, t.S) == t.S))
        throw PreconditionViolation("xSx != S");
    if (!(conjugate_set(x, t.T) == t.T))
        throw PreconditionViolation("xTx != T");
    auto image = make_triple(t.S.right_translate(x), t.T.left_translate(x), t.U);
    if (!is_symmetric(image.S) || !is_symmetric(image.T))
        throw TheoremViolation("Sx or xT is not symmetric");
    if (!image.verified)
        throw TheoremViolation("involution-equivalent triple fails verification");
    return image;
}

namespace {

bool triple_less(const FactorTriple& a, const FactorTriple& b) {
    if (auto c = a.S <=> b.S; c != 0)
        return c < 0;
    if (auto c = a.T <=> b.T; c != 0)
        return c < 0;
    return (a.U <=> b.U) < 0;
}

}  // namespace

FactorTriple canonical_form(const FactorTriple& t, std::span<const Automorphism> auts) {
    FactorTriple best = t;
    for (const auto& a : auts) {
        FactorTriple image{a.apply(t.S), a.apply(t.T), a.apply(t.U), t.verified};
        if (triple_less(image, best))
            best = std::move(image);
    }
    return best;
}

std::vector<EquivalenceClass> equivalence_classes(std::span<const FactorTriple> triples, const FiniteGroup& g) {
    const auto auts = automorphisms(g);
    std::vector<EquivalenceClass> classes;
    for (const auto& t : triples) {
        if (!(t.group() == g))
            throw InvalidArgument("triple does not belong to " + g.name());
        auto rep = canonical_form(t, auts);
        auto it = std::find_if(classes.begin(), classes.end(),
                               [&rep](const EquivalenceClass& c) { return c.representative == rep; });
        if (it == classes.end())
            classes.push_back(EquivalenceClass{std::move(rep), {t}});
        else
            it->members.push_back(t);
    }
    std::sort(classes.begin(), classes.end(), [](const EquivalenceClass& a, const EquivalenceClass& b) {
        return triple_less(a.representative, b.representative);
    });
    return classes;
}

bool are_equivalent(const FactorTriple& t1, const FactorTriple& t2) {
    if (!(t1.group() == t2.group()))
        return false;
    if (t1 == t2)
        return true;
    for (const auto& a : automorphisms(t1.group()))
        if (a.apply(t1.S) == t2.S && a.apply(t1.T) == t2.T && a.apply(t1.U) == t2.U)
            return true;
    return false;
}

}  // namespace cayley
