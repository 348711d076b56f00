#include "cayley/factor.hpp"

#include <algorithm>
#include <numeric>

#include "cayley/error.hpp"

namespace cayley {

long long RepCountVector::total() const { return std::accumulate(counts.begin(), counts.end(), 0LL); }

int RepCountVector::max() const { return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end()); }

bool RepCountVector::is_indicator_of(const ElementSet& u) const {
    for (Element g = 0; g < static_cast<Element>(counts.size()); ++g)
        if (counts[g] != (u.contains(g) ? 1 : 0))
            return false;
    return true;
}

namespace {

void require_same_group(const ElementSet& a, const ElementSet& b) {
    if (!(a.group() == b.group()))
        throw InvalidArgument("sets belong to different groups: " + a.group().name() + " vs " + b.group().name());
}

}  // namespace

RepCountVector rep_counts(const ElementSet& s, const ElementSet& t) {
    require_same_group(s, t);
    const auto& g = s.group();
    RepCountVector out{g, std::vector<int>(g.order(), 0)};
    s.for_each([&](Element a) { t.for_each([&](Element b) { ++out.counts[g.mul(a, b)]; }); });
    return out;
}

std::string to_string(Violation v) {
    switch (v) {
        case Violation::none: return "none";
        case Violation::mixed_groups: return "mixed groups";
        case Violation::not_symmetric: return "not symmetric";
        case Violation::identity_in_set: return "identity in set";
        case Violation::identity_in_product: return "identity in ST";
        case Violation::repeated_product: return "repeated product";
        case Violation::missing_from_product: return "missing from ST";
        case Violation::extra_in_product: return "extra product";
        case Violation::size_law: return "size law |U|=|S||T| fails";
        case Violation::overlap: return "S and T intersect";
    }
    return "unknown";
}

std::string VerificationReport::describe() const {
    if (ok)
        return "verified";
    std::string out = to_string(kind);
    if (set)
        out += std::string(" (") + set + ")";
    if (element)
        out += " at element " + std::to_string(*element);
    if (kind == Violation::repeated_product)
        out += " with " + std::to_string(count) + " representations";
    return out;
}

VerificationReport verify_triple(const ElementSet& s, const ElementSet& t, const ElementSet& u) {
    VerificationReport r;
    if (!(s.group() == t.group()) || !(s.group() == u.group())) {
        r.kind = Violation::mixed_groups;
        return r;
    }
    const auto& g = s.group();
    for (auto [name, x] : {std::pair{'S', &s}, std::pair{'T', &t}, std::pair{'U', &u}}) {
        std::optional<Element> bad;
        x->for_each([&](Element a) {
            if (!bad && !x->contains(g.inv(a)))
                bad = a;
        });
        if (bad) {
            r.kind = Violation::not_symmetric;
            r.set = name;
            r.element = bad;
            return r;
        }
    }
    for (auto [name, x] : {std::pair{'S', &s}, std::pair{'T', &t}, std::pair{'U', &u}}) {
        if (x->contains(g.identity())) {
            r.kind = Violation::identity_in_set;
            r.set = name;
            r.element = g.identity();
            return r;
        }
    }
    const auto counts = rep_counts(s, t);
    if (counts[g.identity()] > 0) {
        r.kind = Violation::identity_in_product;
        r.element = g.identity();
        r.count = counts[g.identity()];
        return r;
    }
    for (Element x = 0; x < g.order(); ++x) {
        const int c = counts[x];
        if (c >= 2) {
            r.kind = Violation::repeated_product;
            r.element = x;
            r.count = c;
            return r;
        }
        if (u.contains(x) && c == 0) {
            r.kind = Violation::missing_from_product;
            r.element = x;
            return r;
        }
        if (!u.contains(x) && c == 1) {
            r.kind = Violation::extra_in_product;
            r.element = x;
            r.count = 1;
            return r;
        }
    }
    if (u.size() != s.size() * t.size()) {
        r.kind = Violation::size_law;
        return r;
    }
    if (s.intersects(t)) {
        r.kind = Violation::overlap;
        return r;
    }
    r.ok = true;
    return r;
}

FactorTriple make_triple(ElementSet s, ElementSet t, ElementSet u) {
    const bool ok = verify_triple(s, t, u).ok;
    return FactorTriple{std::move(s), std::move(t), std::move(u), ok};
}

bool is_factorable(const ElementSet& s, const ElementSet& t, const ElementSet& u) {
    require_same_group(s, u);
    return rep_counts(s, t).is_indicator_of(u);
}

std::optional<ElementSet> product_if_unique(const ElementSet& s, const ElementSet& t) {
    const auto counts = rep_counts(s, t);
    const auto& g = s.group();
    if (counts[g.identity()] != 0 || counts.max() > 1)
        return std::nullopt;
    ElementSet u(g);
    for (Element x = 0; x < g.order(); ++x)
        if (counts[x])
            u.insert(x);
    return u;
}

bool IntMatrix::is_symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if ((*this)(i, j) != (*this)(j, i))
                return false;
    return true;
}

bool IntMatrix::has_zero_diagonal() const {
    for (int i = 0; i < n_; ++i)
        if ((*this)(i, i) != 0)
            return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.n_ != b.n_)
        throw InvalidArgument("matrix dimensions differ");
    const int n = a.n_;
    IntMatrix c(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const auto aik = a(i, k);
            if (aik == 0)
                continue;
            for (int j = 0; j < n; ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

IntMatrix adjacency(const ElementSet& x) {
    const auto& g = x.group();
    const int n = g.order();
    IntMatrix a(n);
    for (int i = 0; i < n; ++i) {
        const Element gi = g.inv(i);
        for (int j = 0; j < n; ++j)
            a(i, j) = x.contains(g.mul(gi, j)) ? 1 : 0;
    }
    return a;
}

bool matrix_cross_check(const ElementSet& s, const ElementSet& t, const ElementSet& u) {
    if (!(s.group() == t.group()) || !(s.group() == u.group()))
        return false;
    const auto as = adjacency(s);
    const auto at = adjacency(t);
    const auto au = adjacency(u);
    for (const auto* m : {&as, &at, &au})
        if (!m->is_symmetric() || !m->has_zero_diagonal())
            return false;
    return as * at == au;
}

namespace {

FactorTriple checked_image(const FactorTriple& t, ElementSet s, ElementSet tt, ElementSet u, const char* how) {
    if (!t.verified)
        throw PreconditionViolation("transform_triple needs a verified triple");
    auto image = make_triple(std::move(s), std::move(tt), std::move(u));
    if (!image.verified)
        throw TheoremViolation(std::string("image of a verified triple under ") + how + " failed verification");
    return image;
}

}  // namespace

FactorTriple transform_triple(const FactorTriple& t, const Automorphism& a) {
    return checked_image(t, a.apply(t.S), a.apply(t.T), a.apply(t.U), "an automorphism");
}

FactorTriple transform_triple(const FactorTriple& t, Element conjugator) {
    return checked_image(t, conjugate_set(conjugator, t.S), conjugate_set(conjugator, t.T),
                         conjugate_set(conjugator, t.U), "conjugation");
}

TransversalReport transversal_identity(const Subgroup& h, const ElementSet& s, const ElementSet& t,
                                       const ElementSet& u) {
    const auto& g = h.group();
    TransversalReport report;
    for (Element y : h.right_coset_reps) {
        const auto hy = h.right_coset(y);
        long long lhs = (u & hy).size();
        long long rhs = 0;
        for (Element x : h.right_coset_reps) {
            const auto hx = h.right_coset(x);
            const long long s_part = (s & hx).size();
            if (s_part == 0)
                continue;
            rhs += s_part * (t & hy.left_translate(g.inv(x))).size();
        }
        if (lhs != rhs) {
            report.ok = false;
            report.coset_rep = y;
            report.lhs = lhs;
            report.rhs = rhs;
            return report;
        }
    }
    return report;
}

Parity parity_check(const FactorTriple& t) {
    if (t.group().order() % 4 != 2)
        return Parity::not_applicable;
    return involution_count(t.U) % 2 == 0 ? Parity::even : Parity::odd;
}

bool is_near_factorization(const ElementSet& s, const ElementSet& t) {
    const auto u = product_if_unique(s, t);
    return u && !u->empty() && *u == ElementSet::nonidentity(s.group());
}

}  // namespace cayley
