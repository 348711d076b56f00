#include "cayley/abelian.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <thread>

#include "cayley/error.hpp"

namespace cayley {

namespace {

int cyclic_order(const ElementSet& x, const char* op) {
    auto c = std::get_if<CyclicTag>(&x.group().tag());
    if (!c)
        throw InvalidArgument(std::string(op) + " needs a cyclic group, got " + x.group().name());
    return c->n;
}

std::string elem(int x) { return std::to_string(x); }

}  // namespace

RepCountVector convolution(const ElementSet& s, const ElementSet& t) {
    const int n = cyclic_order(s, "convolution");
    if (!(s.group() == t.group()))
        throw InvalidArgument("convolution operands belong to different groups");
    RepCountVector out{s.group(), std::vector<int>(n, 0)};
    for (int u = 0; u < n; ++u)
        s.for_each([&](Element x) { out.counts[u] += t.contains((u - x + n) % n) ? 1 : 0; });
    return out;
}

bool sidon_pair(const ElementSet& s, const ElementSet& t) {
    const auto& g = s.group();
    if (!g.is_abelian())
        throw InvalidArgument("sidon_pair needs an abelian group");
    if (!(g == t.group()))
        throw InvalidArgument("sidon_pair operands belong to different groups");
    if (s.empty() || t.empty())
        throw PreconditionViolation("sidon_pair needs nonempty sets");
    auto differences = [&g](const ElementSet& x) {
        ElementSet d(g);
        x.for_each([&](Element a) { x.for_each([&](Element b) { d.insert(g.mul(a, g.inv(b))); }); });
        return d;
    };
    return (differences(s) & differences(t)) == ElementSet(g, {g.identity()});
}

MaskPolynomial::MaskPolynomial(int n) : coeffs_(n, 0) {
    if (n < 1)
        throw InvalidArgument("mask polynomial modulus must be positive");
}

MaskPolynomial MaskPolynomial::of(const ElementSet& x) {
    MaskPolynomial p(cyclic_order(x, "mask_poly"));
    x.for_each([&p](Element a) { p.coeffs_[a] = 1; });
    return p;
}

bool MaskPolynomial::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto c) { return c == 0; });
}

MaskPolynomial operator*(const MaskPolynomial& a, const MaskPolynomial& b) {
    const int n = a.modulus();
    if (n != b.modulus())
        throw InvalidArgument("mask polynomials have different moduli");
    MaskPolynomial c(n);
    for (int i = 0; i < n; ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (int j = 0; j < n; ++j) {
            if (b.coeffs_[j] == 0)
                continue;
            std::uint64_t term = 0;
            auto& slot = c.coeffs_[(i + j) % n];
            if (__builtin_mul_overflow(a.coeffs_[i], b.coeffs_[j], &term) ||
                __builtin_add_overflow(slot, term, &slot))
                throw Error("mask polynomial coefficient overflow");
        }
    }
    return c;
}

std::string MaskPolynomial::to_string() const {
    std::string out;
    for (int k = 0; k < modulus(); ++k) {
        if (coeffs_[k] == 0)
            continue;
        if (!out.empty())
            out += " + ";
        if (coeffs_[k] != 1)
            out += std::to_string(coeffs_[k]) + "*";
        out += "X^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

bool verify_via_mask(const ElementSet& s, const ElementSet& t, const ElementSet& u) {
    cyclic_order(s, "verify_via_mask");
    if (!(s.group() == t.group()) || !(s.group() == u.group()))
        return false;
    for (const auto* x : {&s, &t, &u})
        if (!is_symmetric(*x) || x->contains(0))
            return false;
    return MaskPolynomial::of(s) * MaskPolynomial::of(t) == MaskPolynomial::of(u);
}

CrtIso::CrtIso(int n) : n_(n) {
    if (n < 2)
        throw InvalidArgument("CRT split needs n >= 2, got " + std::to_string(n));
    int rest = n;
    for (int p = 2; p * p <= rest; ++p) {
        if (rest % p)
            continue;
        int q = 1;
        while (rest % p == 0) {
            rest /= p;
            q *= p;
        }
        moduli_.push_back(q);
    }
    if (rest > 1)
        moduli_.push_back(rest);
    cyclic_ = FiniteGroup::cyclic(n);
    for (int m : moduli_)
        components_.push_back(FiniteGroup::cyclic(m));
    residues_.resize(n);
    table_.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        int index = 0;
        for (int m : moduli_) {
            residues_[x].push_back(x % m);
            index = index * m + x % m;
        }
        table_[index] = x;
    }
}

std::vector<int> CrtIso::forward(int x) const {
    if (x < 0 || x >= n_)
        throw InvalidArgument("residue " + std::to_string(x) + " out of range for Z_" + std::to_string(n_));
    return residues_[x];
}

int CrtIso::inverse(std::span<const int> residues) const {
    if (residues.size() != moduli_.size())
        throw InvalidArgument("CRT component count mismatch: expected " + std::to_string(moduli_.size()) +
                              ", got " + std::to_string(residues.size()));
    int index = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        const int m = moduli_[i];
        index = index * m + ((residues[i] % m) + m) % m;
    }
    return table_[index];
}

ElementSet CrtIso::compose_sets(std::span<const ElementSet> parts) const {
    if (parts.size() != moduli_.size())
        throw InvalidArgument("CRT component count mismatch: expected " + std::to_string(moduli_.size()) +
                              ", got " + std::to_string(parts.size()));
    std::vector<std::vector<Element>> lists;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!(parts[i].group() == components_[i]))
            throw InvalidArgument("CRT component " + std::to_string(i) + " must live in Z_" +
                                  std::to_string(moduli_[i]) + ", got " + parts[i].group().name());
        lists.push_back(parts[i].elements());
    }
    ElementSet out(cyclic_);
    std::vector<int> digits(parts.size());
    auto recurse = [&](auto&& self, std::size_t k) -> void {
        if (k == lists.size()) {
            out.insert(inverse(digits));
            return;
        }
        for (Element x : lists[k]) {
            digits[k] = x;
            self(self, k + 1);
        }
    };
    recurse(recurse, 0);
    return out;
}

std::optional<std::vector<ElementSet>> CrtIso::product_form_components(const ElementSet& x) const {
    if (!(x.group() == cyclic_))
        throw InvalidArgument("set does not live in Z_" + std::to_string(n_));
    std::vector<ElementSet> parts;
    for (const auto& c : components_)
        parts.emplace_back(c);
    x.for_each([&](Element a) {
        for (std::size_t i = 0; i < moduli_.size(); ++i)
            parts[i].insert(residues_[a][i]);
    });
    long long product = 1;
    for (const auto& p : parts)
        product *= p.size();
    if (product != x.size())
        return std::nullopt;
    return parts;
}

CrtIso crt_split(int n) { return CrtIso(n); }

FactorTriple crt_compose(const CrtIso& crt, std::span<const FactorTriple> components) {
    if (components.size() != crt.moduli().size())
        throw InvalidArgument("CRT component count mismatch: expected " + std::to_string(crt.moduli().size()) +
                              ", got " + std::to_string(components.size()));
    std::vector<ElementSet> s, t, u;
    for (const auto& c : components) {
        s.push_back(c.S);
        t.push_back(c.T);
        u.push_back(c.U);
    }
    return make_triple(crt.compose_sets(s), crt.compose_sets(t), crt.compose_sets(u));
}

std::optional<FactorTriple> antipode_augment(const ElementSet& s0, const ElementSet& t, const ElementSet& u0) {
    const int n = cyclic_order(s0, "antipode_augment");
    if (n % 2)
        throw PreconditionViolation("antipode_augment needs even n, got " + std::to_string(n));
    if (auto r = verify_triple(s0, t, u0); !r)
        throw PreconditionViolation("antipode_augment needs a verified triple: " + r.describe());
    const Element a = n / 2;
    if (s0.contains(a))
        throw PreconditionViolation("antipode " + std::to_string(a) + " already lies in S0");
    const auto shifted = t.left_translate(a);
    if (shifted.contains(0) || shifted.intersects(u0))
        return std::nullopt;
    auto s = s0;
    s.insert(a);
    auto result = make_triple(std::move(s), t, u0 | shifted);
    if (!result.verified)
        throw TheoremViolation("antipode augmentation produced an unverified triple");
    return result;
}

int additive_order(int n, int d) {
    d = ((d % n) + n) % n;
    return n / std::gcd(n, d);
}

namespace {

FactorTriple finish_table1(const char* row, ElementSet s, ElementSet t, ElementSet u) {
    auto triple = make_triple(s, t, u);
    if (!triple.verified)
        throw PreconditionViolation(std::string("table1 ") + row +
                                    ": construction failed verification: " + verify_triple(s, t, u).describe());
    return triple;
}

}  // namespace

FactorTriple table1_multiplier(int g, const FactorTriple& base) {
    const int n = cyclic_order(base.S, "table1 multiplier");
    if (!base.verified)
        throw PreconditionViolation("table1 multiplier: base triple is not verified");
    const int unit = ((g % n) + n) % n;
    if (std::gcd(unit, n) != 1)
        throw PreconditionViolation("table1 multiplier: g=" + elem(g) + " is not a unit mod " + elem(n));
    const auto phi = cyclic_multiplier(base.group(), unit);
    return finish_table1("multiplier", phi.apply(base.S), phi.apply(base.T), phi.apply(base.U));
}

FactorTriple table1_half_shift(int n, const ElementSet& u) {
    if (n % 2 || n < 2)
        throw PreconditionViolation("table1 half-shift: n must be even, got " + elem(n));
    if (cyclic_order(u, "table1 half-shift") != n)
        throw InvalidArgument("table1 half-shift: U does not live in Z_" + elem(n));
    const Element a = n / 2;
    if (u.contains(0))
        throw PreconditionViolation("table1 half-shift: U contains 0");
    if (u.contains(a))
        throw PreconditionViolation("table1 half-shift: U contains n/2=" + elem(a));
    if (u.empty())
        throw PreconditionViolation("table1 half-shift: U is empty");
    if (!is_symmetric(u)) {
        Element bad = 0;
        u.for_each([&](Element x) {
            if (!u.contains((n - x) % n))
                bad = x;
        });
        throw PreconditionViolation("table1 half-shift: U not symmetric at " + elem(bad));
    }
    return finish_table1("half-shift", ElementSet(u.group(), {a}), u.left_translate(a), u);
}

FactorTriple table1_pm_d(int n, int d) {
    if (n < 1)
        throw PreconditionViolation("table1 pm_d: n must be positive");
    d = ((d % n) + n) % n;
    const int ord = additive_order(n, d);
    if (ord < 5)
        throw PreconditionViolation("table1 pm_d: ord(" + elem(d) + ")=" + elem(ord) + " < 5");
    if (ord == 6)
        throw PreconditionViolation("table1 pm_d: ord(" + elem(d) + ")=6 makes 3d and -3d coincide");
    const auto z = FiniteGroup::cyclic(n);
    auto m = [n](long long x) { return static_cast<Element>(((x % n) + n) % n); };
    return finish_table1("pm_d", ElementSet(z, {m(d), m(-d)}), ElementSet(z, {m(2 * d), m(-2 * d)}),
                         ElementSet(z, {m(d), m(-d), m(3 * d), m(-3 * d)}));
}

FactorTriple table1_index_sets(int n, std::span<const int> i_set, std::span<const int> j_set) {
    if (n < 3)
        throw PreconditionViolation("table1 index_sets: n must be at least 3");
    if (i_set.empty() || j_set.empty())
        throw PreconditionViolation("table1 index_sets: I and J must be nonempty");
    const int half = (n - 1) / 2;
    std::vector<int> is(i_set.begin(), i_set.end()), js(j_set.begin(), j_set.end());
    std::sort(is.begin(), is.end());
    std::sort(js.begin(), js.end());
    is.erase(std::unique(is.begin(), is.end()), is.end());
    js.erase(std::unique(js.begin(), js.end()), js.end());
    for (int x : is)
        if (x < 1 || x > half)
            throw PreconditionViolation("table1 index_sets: i=" + elem(x) + " outside 1.." + elem(half));
    for (int x : js)
        if (x < 1 || x > half)
            throw PreconditionViolation("table1 index_sets: j=" + elem(x) + " outside 1.." + elem(half));
    // Build the multiset {±(i±j)} and count repetitions directly.
    std::vector<int> multiplicity(n, 0);
    for (int i : is)
        for (int j : js)
            for (int v : {i + j, i - j, -(i + j), -(i - j)})
                ++multiplicity[((v % n) + n) % n];
    if (multiplicity[0])
        throw PreconditionViolation("table1 index_sets: multiset contains 0");
    if (n % 2 == 0 && multiplicity[n / 2])
        throw PreconditionViolation("table1 index_sets: multiset contains n/2=" + elem(n / 2));
    for (int x = 0; x < n; ++x)
        if (multiplicity[x] > 1)
            throw PreconditionViolation("table1 index_sets: " + elem(x) + " repeated " + elem(multiplicity[x]) +
                                        " times mod " + elem(n));
    const auto z = FiniteGroup::cyclic(n);
    ElementSet s(z), t(z), u(z);
    for (int i : is) {
        s.insert(i);
        s.insert(n - i);
    }
    for (int j : js) {
        t.insert(j);
        t.insert(n - j);
    }
    for (int x = 0; x < n; ++x)
        if (multiplicity[x])
            u.insert(x);
    return finish_table1("index_sets", std::move(s), std::move(t), std::move(u));
}

namespace {

struct DStarSearch {
    const FiniteGroup& g;
    std::vector<std::vector<Element>> atoms;
    long long budget;
    std::atomic<long long>& nodes;

    void tick() {
        if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > budget)
            throw BudgetExceeded("dstar: node budget of " + std::to_string(budget) + " exceeded on " + g.name());
    }

    Element diff(Element a, Element b) const { return g.mul(a, g.inv(b)); }

    // Picks T atoms from index `from` so that T - T misses forbidden \ {0}.
    bool grow_t(std::vector<Element>& t, std::vector<char>& t_diffs, std::size_t from, int remaining,
                const std::vector<char>& forbidden) {
        tick();
        if (remaining == 0)
            return true;
        for (std::size_t k = from; k < atoms.size(); ++k) {
            const auto& atom = atoms[k];
            if (static_cast<int>(atom.size()) > remaining)
                continue;
            std::vector<Element> added;
            bool ok = true;
            for (std::size_t p = 0; p < atom.size() && ok; ++p) {
                const Element a = atom[p];
                auto check = [&](Element other) {
                    for (Element d : {diff(a, other), diff(other, a)}) {
                        if (d == g.identity())
                            continue;
                        if (forbidden[d]) {
                            ok = false;
                            return;
                        }
                        if (!t_diffs[d]) {
                            t_diffs[d] = 1;
                            added.push_back(d);
                        }
                    }
                };
                // t already holds atom[0..p).
                for (Element other : t)
                    if (ok)
                        check(other);
                if (ok)
                    t.push_back(a);
                else
                    for (std::size_t q = 0; q < p; ++q)
                        t.pop_back();
            }
            if (ok) {
                if (grow_t(t, t_diffs, k + 1, remaining - static_cast<int>(atom.size()), forbidden))
                    return true;
                for (std::size_t q = 0; q < atom.size(); ++q)
                    t.pop_back();
            }
            for (Element d : added)
                t_diffs[d] = 0;
        }
        return false;
    }

    // Enumerates S atoms from index `from`; for each complete S tries to find T.
    bool grow_s(std::vector<Element>& s, std::size_t from, int remaining, int d, std::vector<Element>& t_out) {
        tick();
        if (remaining == 0) {
            std::vector<char> forbidden(g.order(), 0);
            for (Element a : s)
                for (Element b : s)
                    forbidden[diff(a, b)] = 1;
            forbidden[g.identity()] = 0;
            std::vector<Element> t;
            std::vector<char> t_diffs(g.order(), 0);
            if (grow_t(t, t_diffs, 0, d, forbidden)) {
                t_out = t;
                return true;
            }
            return false;
        }
        for (std::size_t k = from; k < atoms.size(); ++k) {
            const auto& atom = atoms[k];
            if (static_cast<int>(atom.size()) > remaining)
                continue;
            s.insert(s.end(), atom.begin(), atom.end());
            if (grow_s(s, k + 1, remaining - static_cast<int>(atom.size()), d, t_out))
                return true;
            s.resize(s.size() - atom.size());
        }
        return false;
    }
};

std::vector<std::vector<Element>> inverse_atoms(const FiniteGroup& g) {
    std::vector<std::vector<Element>> atoms;
    for (Element x = 0; x < g.order(); ++x) {
        if (x == g.identity())
            continue;
        const Element xi = g.inv(x);
        if (xi == x)
            atoms.push_back({x});
        else if (x < xi)
            atoms.push_back({x, xi});
    }
    return atoms;
}

}  // namespace

DStarResult dstar(const FiniteGroup& g, long long budget, int threads) {
    if (!g.is_abelian())
        throw InvalidArgument("dstar needs an abelian group, got " + g.name());
    if (g.order() < 3)
        throw PreconditionViolation("dstar needs |G| >= 3");
    if (threads <= 0)
        threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    const auto atoms = inverse_atoms(g);
    std::atomic<long long> nodes{0};
    const int top = static_cast<int>(std::sqrt(static_cast<double>(g.order()) + 0.5));
    for (int d = top; d >= 1; --d) {
        // Partition on the first (lexicographically smallest) atom of S; the
        // witness comes from the lowest partition that has one.
        const std::size_t parts = atoms.size();
        std::vector<std::optional<std::pair<std::vector<Element>, std::vector<Element>>>> found(parts);
        std::atomic<std::size_t> next{0};
        std::atomic<std::size_t> best{parts};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            try {
                for (std::size_t k; (k = next.fetch_add(1)) < parts;) {
                    if (k > best.load())
                        continue;
                    const auto& first = atoms[k];
                    if (static_cast<int>(first.size()) > d)
                        continue;
                    DStarSearch search{g, atoms, budget, nodes};
                    std::vector<Element> s(first.begin(), first.end()), t;
                    if (search.grow_s(s, k + 1, d - static_cast<int>(first.size()), d, t)) {
                        found[k] = std::pair{s, t};
                        for (auto cur = best.load(); k < cur && !best.compare_exchange_weak(cur, k);) {
                        }
                    }
                }
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next.store(parts);
            }
        };
        if (threads == 1) {
            worker();
        } else {
            std::vector<std::jthread> pool;
            for (int i = 0; i < threads; ++i)
                pool.emplace_back(worker);
        }
        if (failure)
            std::rethrow_exception(failure);
        for (auto& f : found) {
            if (!f)
                continue;
            DStarResult r{d, ElementSet(g, f->first), ElementSet(g, f->second), nodes.load()};
            if (d * d > g.order())
                throw TheoremViolation("dstar exceeds floor(sqrt(n))");
            return r;
        }
    }
    return DStarResult{0, ElementSet(g), ElementSet(g), nodes.load()};
}

DStarResult dstar(int n, long long budget, int threads) {
    if (n < 3)
        throw PreconditionViolation("dstar needs n >= 3, got " + std::to_string(n));
    return dstar(FiniteGroup::cyclic(n), budget, threads);
}

}  // namespace cayley
