#include "cayley/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>

#include "cayley/dihedral.hpp"
#include "cayley/error.hpp"
#include "cayley/structure.hpp"

namespace cayley {

int default_thread_count() {
    if (const char* env = std::getenv("CAYLEY_FACTOR_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 1024)
            return static_cast<int>(v);
    }
    return 1;
}

std::vector<std::vector<Element>> symmetric_atoms(const FiniteGroup& g) {
    std::vector<std::vector<Element>> atoms;
    for (Element x = 0; x < g.order(); ++x) {
        if (x == g.identity())
            continue;
        const Element y = g.inv(x);
        if (y == x)
            atoms.push_back({x});
        else if (x < y)
            atoms.push_back({x, y});
    }
    return atoms;
}

bool is_connected(const ElementSet& u) {
    return subgroup_generated(u).order() == u.group().order();
}

namespace {

using Atoms = std::vector<std::vector<Element>>;

struct Shared {
    long long budget;
    std::atomic<long long> nodes{0};
    std::atomic<bool> exhausted{false};
};

struct Partial {
    std::vector<FactorTriple> triples;
    SearchStats stats;
};

bool canonical_less(const FactorTriple& a, const FactorTriple& b) {
    if (a.S.size() != b.S.size())
        return a.S.size() < b.S.size();
    if (auto c = a.S <=> b.S; c != 0)
        return c < 0;
    if (auto c = a.T <=> b.T; c != 0)
        return c < 0;
    return (a.U <=> b.U) < 0;
}

// Runs fn(k) for k in [0, count) on a worker pool and returns the results in
// index order, so the merge does not depend on scheduling.
std::vector<Partial> run_partitions(std::size_t count, int threads, const std::function<Partial(std::size_t)>& fn) {
    std::vector<Partial> parts(count);
    if (threads <= 0)
        threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = static_cast<int>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    if (threads == 1) {
        for (std::size_t k = 0; k < count; ++k)
            parts[k] = fn(k);
        return parts;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([&] {
            for (std::size_t k; (k = next++) < count;) {
                try {
                    parts[k] = fn(k);
                } catch (...) {
                    errors[k] = std::current_exception();
                }
            }
        });
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return parts;
}

SearchReport merge(std::vector<Partial> parts, const Shared& shared) {
    SearchReport report;
    for (auto& p : parts) {
        report.triples.insert(report.triples.end(), std::make_move_iterator(p.triples.begin()),
                              std::make_move_iterator(p.triples.end()));
        report.stats.nodes += p.stats.nodes;
        report.stats.prunes_size += p.stats.prunes_size;
        report.stats.prunes_sidon += p.stats.prunes_sidon;
        report.stats.prunes_parity += p.stats.prunes_parity;
        report.stats.audit_violations += p.stats.audit_violations;
    }
    std::sort(report.triples.begin(), report.triples.end(), canonical_less);
    report.exhaustive = !shared.exhausted.load();
    return report;
}

ElementSet set_of(const FiniteGroup& g, const std::vector<Element>& xs) {
    return ElementSet(g, std::span<const Element>(xs));
}

// Calls fn on every union of atoms[from..] chosen so that the total size,
// starting from `base`, equals `target` (or any size when target < 0).
void for_each_extension(const Atoms& atoms, std::size_t from, std::vector<Element>& base, int target,
                        const std::function<void(const std::vector<Element>&)>& fn) {
    const int size = static_cast<int>(base.size());
    if (target < 0 || size == target)
        fn(base);
    if (target >= 0 && size >= target)
        return;
    for (std::size_t j = from; j < atoms.size(); ++j) {
        base.insert(base.end(), atoms[j].begin(), atoms[j].end());
        for_each_extension(atoms, j + 1, base, target, fn);
        base.resize(size);
    }
}

class PairSearch {
  public:
    PairSearch(const ElementSet& u, const SearchOptions& opts, const Atoms& atoms, Shared& shared)
        : g_(u.group()), u_(u), opts_(opts), atoms_(atoms), shared_(shared), usize_(u.size()) {}

    Partial run_first(std::size_t first) {
        std::vector<Element> s;
        extend_s(first, s, ElementSet::full(g_));
        return std::move(out_);
    }

    // Brute force over every (S, T) with no pruning; used to audit a pruned
    // root. Counts verified triples.
    long long brute_count() {
        long long found = 0;
        std::vector<Element> s;
        for_each_extension(atoms_, 0, s, -1, [&](const std::vector<Element>& ss) {
            if (!ss.empty())
                found += count_t_for(ss);
        });
        return found;
    }

  private:
    bool tick() {
        ++out_.stats.nodes;
        if (shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1 > shared_.budget) {
            shared_.exhausted = true;
            return false;
        }
        return true;
    }

    bool size_ok_s(int s) const { return opts_.max_s <= 0 || s <= opts_.max_s; }
    bool size_ok_t(int t) const { return opts_.max_t <= 0 || t <= opts_.max_t; }

    // pool(S ∪ atom) = pool(S) ∩ a^{-1}U for each a in the atom.
    ElementSet narrow(const ElementSet& pool, const std::vector<Element>& atom) const {
        ElementSet out = pool;
        for (Element a : atom)
            out &= u_.left_translate(g_.inv(a));
        return out;
    }

    void extend_s(std::size_t j, std::vector<Element>& s, const ElementSet& pool) {
        if (shared_.exhausted || !tick())
            return;
        const int before = static_cast<int>(s.size());
        const auto& atom = atoms_[j];
        if (before + static_cast<int>(atom.size()) > usize_) {
            ++out_.stats.prunes_size;
            if (opts_.audit)
                audit_s(j, s);
            return;
        }
        if (!size_ok_s(before + static_cast<int>(atom.size())))
            return;
        const ElementSet narrowed = narrow(pool, atom);
        s.insert(s.end(), atom.begin(), atom.end());
        if (narrowed.empty()) {
            ++out_.stats.prunes_size;
            if (opts_.audit)
                audit_s_from(j + 1, s);
            s.resize(before);
            return;
        }
        const int size = static_cast<int>(s.size());
        if (usize_ % size == 0 && size_ok_t(usize_ / size))
            search_t(s, narrowed, usize_ / size);
        for (std::size_t k = j + 1; k < atoms_.size() && !shared_.exhausted; ++k)
            extend_s(k, s, narrowed);
        s.resize(before);
    }

    void search_t(const std::vector<Element>& s, const ElementSet& pool, int need) {
        ElementSet sset = set_of(g_, s);
        std::vector<std::size_t> cand;
        for (std::size_t k = 0; k < atoms_.size(); ++k) {
            const auto& atom = atoms_[k];
            if (std::all_of(atom.begin(), atom.end(), [&](Element x) { return pool.contains(x) && !sset.contains(x); }))
                cand.push_back(k);
        }
        std::vector<char> covered(g_.order(), 0);
        std::vector<Element> t;
        extend_t(s, cand, 0, t, covered, need);
    }

    // Products of S with the atom, or nothing on a collision.
    std::optional<std::vector<Element>> products(const std::vector<Element>& s, const std::vector<Element>& atom,
                                                 const std::vector<char>& covered) const {
        std::vector<Element> prods;
        for (Element x : s)
            for (Element y : atom) {
                const Element p = g_.mul(x, y);
                if (covered[p] || p == g_.identity() || std::find(prods.begin(), prods.end(), p) != prods.end())
                    return std::nullopt;
                prods.push_back(p);
            }
        return prods;
    }

    void extend_t(const std::vector<Element>& s, const std::vector<std::size_t>& cand, std::size_t from,
                  std::vector<Element>& t, std::vector<char>& covered, int need) {
        if (shared_.exhausted || !tick())
            return;
        if (static_cast<int>(t.size()) == need) {
            auto triple = make_triple(set_of(g_, s), set_of(g_, t), u_);
            if (!triple.verified)
                throw TheoremViolation("pair search produced an unverified triple");
            out_.triples.push_back(std::move(triple));
            return;
        }
        for (std::size_t c = from; c < cand.size(); ++c) {
            const auto& atom = atoms_[cand[c]];
            if (static_cast<int>(t.size() + atom.size()) > need)
                continue;
            auto prods = products(s, atom, covered);
            if (!prods) {
                ++out_.stats.prunes_sidon;
                if (opts_.audit)
                    audit_t(s, cand, c, t, need);
                continue;
            }
            for (Element p : *prods)
                covered[p] = 1;
            const auto before = t.size();
            t.insert(t.end(), atom.begin(), atom.end());
            extend_t(s, cand, c + 1, t, covered, need);
            t.resize(before);
            for (Element p : *prods)
                covered[p] = 0;
        }
    }

    long long count_t_for(const std::vector<Element>& s) const {
        const int size = static_cast<int>(s.size());
        if (size == 0 || usize_ % size != 0)
            return 0;
        long long found = 0;
        const ElementSet sset = set_of(g_, s);
        std::vector<Element> t;
        for_each_extension(atoms_, 0, t, usize_ / size, [&](const std::vector<Element>& tt) {
            if (verify_triple(sset, set_of(g_, tt), u_).ok)
                ++found;
        });
        return found;
    }

    // Re-expansion of S ∪ atoms[j] and every superset drawn from later atoms.
    void audit_s(std::size_t j, const std::vector<Element>& s) {
        std::vector<Element> base = s;
        base.insert(base.end(), atoms_[j].begin(), atoms_[j].end());
        audit_s_from(j + 1, base);
    }

    void audit_s_from(std::size_t from, std::vector<Element> base) {
        for_each_extension(atoms_, from, base, -1, [&](const std::vector<Element>& ss) {
            out_.stats.audit_violations += count_t_for(ss);
        });
    }

    void audit_t(const std::vector<Element>& s, const std::vector<std::size_t>& cand, std::size_t c,
                 const std::vector<Element>& t, int need) {
        Atoms rest;
        for (std::size_t k = c + 1; k < cand.size(); ++k)
            rest.push_back(atoms_[cand[k]]);
        std::vector<Element> base = t;
        base.insert(base.end(), atoms_[cand[c]].begin(), atoms_[cand[c]].end());
        const ElementSet sset = set_of(g_, s);
        for_each_extension(rest, 0, base, need, [&](const std::vector<Element>& tt) {
            if (verify_triple(sset, set_of(g_, tt), u_).ok)
                ++out_.stats.audit_violations;
        });
    }

    const FiniteGroup& g_;
    const ElementSet& u_;
    const SearchOptions& opts_;
    const Atoms& atoms_;
    Shared& shared_;
    int usize_;
    Partial out_;
};

class TripleSearch {
  public:
    TripleSearch(const FiniteGroup& g, const SearchOptions& opts, const Atoms& atoms, Shared& shared)
        : g_(g), opts_(opts), atoms_(atoms), shared_(shared) {}

    Partial run_first(std::size_t first) {
        std::vector<Element> s;
        extend_s(first, s);
        return std::move(out_);
    }

  private:
    bool tick() {
        ++out_.stats.nodes;
        if (shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1 > shared_.budget) {
            shared_.exhausted = true;
            return false;
        }
        return true;
    }

    void extend_s(std::size_t j, std::vector<Element>& s) {
        if (shared_.exhausted || !tick())
            return;
        const auto before = s.size();
        const auto& atom = atoms_[j];
        if (opts_.max_s > 0 && static_cast<int>(before + atom.size()) > opts_.max_s)
            return;
        s.insert(s.end(), atom.begin(), atom.end());
        std::vector<char> covered(g_.order(), 0);
        std::vector<Element> t, prods;
        const ElementSet sset = set_of(g_, s);
        extend_t(s, sset, 0, t, covered, prods);
        for (std::size_t k = j + 1; k < atoms_.size() && !shared_.exhausted; ++k)
            extend_s(k, s);
        s.resize(before);
    }

    void extend_t(const std::vector<Element>& s, const ElementSet& sset, std::size_t from, std::vector<Element>& t,
                  std::vector<char>& covered, std::vector<Element>& prods) {
        for (std::size_t k = from; k < atoms_.size() && !shared_.exhausted; ++k) {
            const auto& atom = atoms_[k];
            if (opts_.max_t > 0 && static_cast<int>(t.size() + atom.size()) > opts_.max_t)
                continue;
            if (std::any_of(atom.begin(), atom.end(), [&](Element x) { return sset.contains(x); }))
                continue;
            if (!tick())
                return;
            const auto mark = prods.size();
            bool clash = false;
            for (Element x : s) {
                for (Element y : atom) {
                    const Element p = g_.mul(x, y);
                    if (p == g_.identity() || covered[p]) {
                        clash = true;
                        break;
                    }
                    covered[p] = 1;
                    prods.push_back(p);
                }
                if (clash)
                    break;
            }
            if (!clash) {
                const auto before = t.size();
                t.insert(t.end(), atom.begin(), atom.end());
                emit(sset, t, prods);
                extend_t(s, sset, k + 1, t, covered, prods);
                t.resize(before);
            } else {
                ++out_.stats.prunes_sidon;
            }
            for (auto i = mark; i < prods.size(); ++i)
                covered[prods[i]] = 0;
            prods.resize(mark);
        }
    }

    void emit(const ElementSet& sset, const std::vector<Element>& t, const std::vector<Element>& prods) {
        ElementSet u = set_of(g_, prods);
        if (opts_.require_connected && !is_connected(u))
            return;
        auto triple = make_triple(sset, set_of(g_, t), std::move(u));
        // U = ST need not be symmetric outside abelian groups.
        if (!triple.verified)
            return;
        if (g_.order() % 4 == 2 && parity_check(triple) == Parity::odd)
            throw TheoremViolation("verified triple with an odd number of involutions in U for |G| = 2 mod 4");
        out_.triples.push_back(std::move(triple));
    }

    const FiniteGroup& g_;
    const SearchOptions& opts_;
    const Atoms& atoms_;
    Shared& shared_;
    Partial out_;
};

}  // namespace

SearchReport find_factor_pairs(const ElementSet& u, const SearchOptions& opts) {
    if (!is_symmetric(u))
        throw PreconditionViolation("find_factor_pairs: U is not symmetric");
    if (contains_identity(u))
        throw PreconditionViolation("find_factor_pairs: U contains the identity");
    if (opts.node_budget <= 0)
        throw InvalidArgument("node budget must be positive");
    const auto& g = u.group();
    Shared shared{opts.node_budget};
    const Atoms atoms = symmetric_atoms(g);
    if (u.empty() || (opts.require_connected && !is_connected(u)))
        return {};

    // An odd number of involutions in U rules out every factorization when
    // |G| = 2 mod 4.
    if (g.order() % 4 == 2 && involution_count(u) % 2 == 1) {
        SearchReport report;
        report.stats.prunes_parity = 1;
        if (opts.audit) {
            PairSearch brute(u, opts, atoms, shared);
            report.stats.audit_violations = brute.brute_count();
        }
        return report;
    }

    auto parts = run_partitions(atoms.size(), opts.threads, [&](std::size_t k) {
        PairSearch search(u, opts, atoms, shared);
        return search.run_first(k);
    });
    auto report = merge(std::move(parts), shared);
    if (opts.dedup && !report.triples.empty()) {
        std::vector<FactorTriple> reps;
        for (auto& cls : equivalence_classes(report.triples, g))
            reps.push_back(std::move(cls.representative));
        std::sort(reps.begin(), reps.end(), canonical_less);
        report.triples = std::move(reps);
    }
    return report;
}

SearchReport enumerate_triples(const FiniteGroup& g, const SearchOptions& opts) {
    if (g.order() < 2)
        throw PreconditionViolation("enumerate_triples needs |G| >= 2");
    if (opts.node_budget <= 0)
        throw InvalidArgument("node budget must be positive");
    Shared shared{opts.node_budget};
    const Atoms atoms = symmetric_atoms(g);
    auto parts = run_partitions(atoms.size(), opts.threads, [&](std::size_t k) {
        TripleSearch search(g, opts, atoms, shared);
        return search.run_first(k);
    });
    auto report = merge(std::move(parts), shared);
    if (opts.dedup && !report.triples.empty()) {
        std::vector<FactorTriple> reps;
        for (auto& cls : equivalence_classes(report.triples, g))
            reps.push_back(std::move(cls.representative));
        std::sort(reps.begin(), reps.end(), canonical_less);
        report.triples = std::move(reps);
    }
    return report;
}

SearchReport near_factorization_census(const FiniteGroup& g, const SearchOptions& opts) {
    return find_factor_pairs(ElementSet::nonidentity(g), opts);
}

}  // namespace cayley
