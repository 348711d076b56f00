#pragma once

#include <vector>

#include "cayley/element_set.hpp"
#include "cayley/factor.hpp"

namespace cayley {

/// CAYLEY_FACTOR_THREADS if set to a positive integer, otherwise 1.
int default_thread_count();

struct SearchOptions {
    int max_s = 0;  // 0 = no bound
    int max_t = 0;
    /// Keep only triples whose U generates G.
    bool require_connected = false;
    /// One canonical representative per Aut(G)-orbit.
    bool dedup = false;
    /// <= 0 uses hardware concurrency.
    int threads = default_thread_count();
    long long node_budget = 50'000'000;
    /// Re-expand every pruned branch and count verified triples found there.
    bool audit = false;
};

struct SearchStats {
    long long nodes = 0;
    long long prunes_size = 0;
    long long prunes_sidon = 0;
    long long prunes_parity = 0;
    /// Verified triples found inside pruned branches (audit mode only).
    long long audit_violations = 0;
};

struct SearchReport {
    /// Sorted by (|S|, S, T).
    std::vector<FactorTriple> triples;
    SearchStats stats;
    bool exhaustive = true;
};

/// Involutions as singletons and inverse pairs {g, g^{-1}}, ordered by least
/// element; the identity is excluded.
std::vector<std::vector<Element>> symmetric_atoms(const FiniteGroup& g);

/// All symmetric identity-free (S, T) with A(U) = A(S) A(T). Throws
/// PreconditionViolation unless U is symmetric and identity-free. Running out
/// of budget returns what was found with exhaustive = false.
SearchReport find_factor_pairs(const ElementSet& u, const SearchOptions& opts = {});

/// Every verified triple with nonempty S and T within the size bounds.
SearchReport enumerate_triples(const FiniteGroup& g, const SearchOptions& opts = {});

/// find_factor_pairs for U = G \ {e}.
SearchReport near_factorization_census(const FiniteGroup& g, const SearchOptions& opts = {});

/// Whether U generates G, i.e. Cay(G;U) is connected.
bool is_connected(const ElementSet& u);

}  // namespace cayley
