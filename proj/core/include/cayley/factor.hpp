#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayley/element_set.hpp"
#include "cayley/structure.hpp"

namespace cayley {

/// g -> N_{S,T}(g) = |{(s,t) in S x T : st = g}|, the coefficient vector of
/// (sum S)(sum T) in the group algebra.
struct RepCountVector {
    FiniteGroup group;
    std::vector<int> counts;

    int operator[](Element g) const { return counts[g]; }
    long long total() const;
    int max() const;
    /// True iff the vector is the 0/1 indicator of u.
    bool is_indicator_of(const ElementSet& u) const;
};

/// Exact counts by a double loop over S x T.
RepCountVector rep_counts(const ElementSet& s, const ElementSet& t);

/// (S, T, U) over one group; verified means A(U) = A(S) A(T) as simple graphs.
struct FactorTriple {
    ElementSet S;
    ElementSet T;
    ElementSet U;
    bool verified = false;

    const FiniteGroup& group() const { return S.group(); }
    bool operator==(const FactorTriple& o) const { return S == o.S && T == o.T && U == o.U; }
};

enum class Violation {
    none,
    mixed_groups,
    not_symmetric,         // `set` names S, T or U; `element` lacks its inverse
    identity_in_set,       // e in S, T or U
    identity_in_product,   // N_{S,T}(e) > 0
    repeated_product,      // N_{S,T}(g) >= 2
    missing_from_product,  // g in U, N_{S,T}(g) = 0
    extra_in_product,      // g not in U, N_{S,T}(g) = 1
    size_law,              // |U| != |S||T| on an accepted triple
    overlap,               // S and T intersect on an accepted triple
};

struct VerificationReport {
    bool ok = false;
    Violation kind = Violation::none;
    char set = 0;
    std::optional<Element> element;
    int count = 0;

    explicit operator bool() const { return ok; }
    /// "identity in ST", "repeated product at 3 (2 representations)", ...
    std::string describe() const;
};

std::string to_string(Violation v);

/// Symmetry, identity exclusion and the unique-product condition, in that
/// order; reports the first failure. On success also checks |U| = |S||T| and
/// S and T disjoint.
VerificationReport verify_triple(const ElementSet& s, const ElementSet& t, const ElementSet& u);

/// Builds a FactorTriple with its verified flag set by verify_triple.
FactorTriple make_triple(ElementSet s, ElementSet t, ElementSet u);

/// The bare matrix identity A(U) = A(S) A(T) for arbitrary subsets, i.e.
/// N_{S,T} equals the indicator of U. No symmetry or identity requirement.
bool is_factorable(const ElementSet& s, const ElementSet& t, const ElementSet& u);

/// U = ST when every count is at most 1 and e is not a product.
std::optional<ElementSet> product_if_unique(const ElementSet& s, const ElementSet& t);

/// Dense n x n matrix with exact 64-bit entries.
class IntMatrix {
  public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}

    int size() const { return n_; }
    std::int64_t& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
    std::int64_t operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

    bool is_symmetric() const;
    bool has_zero_diagonal() const;
    bool operator==(const IntMatrix&) const = default;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

  private:
    int n_ = 0;
    std::vector<std::int64_t> data_;
};

/// a_{ij} = 1 iff g_i^{-1} g_j in X.
IntMatrix adjacency(const ElementSet& x);

/// Matrix route: A(S), A(T), A(U) symmetric with zero diagonal and
/// A(U) = A(S) A(T). Agrees with verify_triple on every input.
bool matrix_cross_check(const ElementSet& s, const ElementSet& t, const ElementSet& u);

/// Image of a verified triple under an automorphism; throws TheoremViolation
/// if the image fails verification.
FactorTriple transform_triple(const FactorTriple& t, const Automorphism& a);
/// Image under conjugation x -> g x g^{-1}.
FactorTriple transform_triple(const FactorTriple& t, Element conjugator);

struct TransversalReport {
    bool ok = true;
    Element coset_rep = 0;  // first violating y
    long long lhs = 0;
    long long rhs = 0;
};

/// Coset-counting identity for a factorization and a subgroup H:
///   |U ∩ Hy| = sum over right cosets Hx of |S ∩ Hx| * |T ∩ x^{-1}Hy|
/// checked for every y in the right transversal. For normal H, Hy = yH.
TransversalReport transversal_identity(const Subgroup& h, const ElementSet& s, const ElementSet& t,
                                       const ElementSet& u);

enum class Parity { even, odd, not_applicable };

/// For |G| = 2 mod 4: whether U holds an even number of involutions.
Parity parity_check(const FactorTriple& t);

/// ST = G \ {e} with unique representations.
bool is_near_factorization(const ElementSet& s, const ElementSet& t);

}  // namespace cayley
