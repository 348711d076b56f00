#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cayley/element_set.hpp"
#include "cayley/factor.hpp"

namespace cayley {

/// (1_S * 1_T)(u) = sum_x 1_S(x) 1_T(u - x) on Z_n.
RepCountVector convolution(const ElementSet& s, const ElementSet& t);

/// (S - S) ∩ (T - T) = {0}, computed from difference sets. Works in any
/// abelian group; throws InvalidArgument for a non-abelian one.
bool sidon_pair(const ElementSet& s, const ElementSet& t);

/// F_X(X) = sum_{x in X} X^x in Z[X]/(X^n - 1).
class MaskPolynomial {
  public:
    explicit MaskPolynomial(int n);
    static MaskPolynomial of(const ElementSet& x);

    int modulus() const { return static_cast<int>(coeffs_.size()); }
    std::uint64_t operator[](int k) const { return coeffs_[k]; }
    const std::vector<std::uint64_t>& coefficients() const { return coeffs_; }
    bool is_zero() const;

    /// Product reduced mod X^n - 1; throws Error on coefficient overflow.
    friend MaskPolynomial operator*(const MaskPolynomial& a, const MaskPolynomial& b);
    bool operator==(const MaskPolynomial&) const = default;

    /// Sparse "X^1 + X^3 + 2*X^5"; the zero polynomial prints as "0".
    std::string to_string() const;

  private:
    std::vector<std::uint64_t> coeffs_;
};

/// F_S F_T == F_U mod X^n - 1, plus symmetry and 0 exclusion of all three sets.
bool verify_via_mask(const ElementSet& s, const ElementSet& t, const ElementSet& u);

/// Z_n -> prod Z_{p_i^{e_i}}, x -> (x mod p_i^{e_i}).
class CrtIso {
  public:
    explicit CrtIso(int n);

    int n() const { return n_; }
    const std::vector<int>& moduli() const { return moduli_; }
    std::vector<int> forward(int x) const;
    int inverse(std::span<const int> residues) const;

    const FiniteGroup& cyclic() const { return cyclic_; }
    /// Z_{p_i^{e_i}}
    const std::vector<FiniteGroup>& components() const { return components_; }

    /// phi^{-1}(X_1 x ... x X_k)
    ElementSet compose_sets(std::span<const ElementSet> parts) const;
    /// The X_i when X = phi^{-1}(prod X_i), nothing otherwise.
    std::optional<std::vector<ElementSet>> product_form_components(const ElementSet& x) const;

  private:
    int n_;
    std::vector<int> moduli_;
    std::vector<std::vector<int>> residues_;  // residues_[x][i]
    std::vector<int> table_;                  // mixed-radix residues -> x
    FiniteGroup cyclic_;
    std::vector<FiniteGroup> components_;
};

CrtIso crt_split(int n);

/// Composes one triple per prime-power component into a triple of Z_n. The
/// verified flag of the result comes from verify_triple on the composite.
FactorTriple crt_compose(const CrtIso& crt, std::span<const FactorTriple> components);

/// (S0 ∪ {a}, T, U0 ∪ (a + T)) with a = n/2, when a + T misses U0.
/// Throws PreconditionViolation for odd n, an unverified input, or a in S0.
std::optional<FactorTriple> antipode_augment(const ElementSet& s0, const ElementSet& t, const ElementSet& u0);

/// Circulant family constructors. Each checks its side condition, builds the triple,
/// verifies it, and throws PreconditionViolation naming the failing element
/// or condition.
FactorTriple table1_multiplier(int g, const FactorTriple& base);
FactorTriple table1_half_shift(int n, const ElementSet& u);
FactorTriple table1_pm_d(int n, int d);
FactorTriple table1_index_sets(int n, std::span<const int> i_set, std::span<const int> j_set);

/// Additive order n / gcd(n, d).
int additive_order(int n, int d);

struct DStarResult {
    int d = 0;
    ElementSet S;
    ElementSet T;
    long long nodes = 0;
};

/// Largest d with symmetric S, T in G \ {0}, |S| = |T| = d and every
/// representation count at most 1, with a witness pair. Exhaustive with
/// difference-set pruning; throws BudgetExceeded when more than `budget`
/// search nodes are needed. `threads` <= 0 uses hardware concurrency.
DStarResult dstar(const FiniteGroup& g, long long budget = 50'000'000, int threads = 1);
DStarResult dstar(int n, long long budget = 50'000'000, int threads = 1);

}  // namespace cayley
