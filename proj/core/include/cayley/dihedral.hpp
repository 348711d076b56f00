#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cayley/element_set.hpp"
#include "cayley/factor.hpp"
#include "cayley/structure.hpp"

namespace cayley {

/// Rotation and reflection parts of a subset of D_{2n}.
struct DihedralSplit {
    ElementSet rotations;
    ElementSet reflections;
};

/// Throws InvalidArgument for a non-dihedral group.
DihedralSplit split_rm(const ElementSet& x);

/// The four partial product sets of a factorization of D_{2n}.
struct UrUmDecomposition {
    ElementSet rr;  // S_R T_R
    ElementSet mm;  // S_M T_M
    ElementSet rm;  // S_R T_M
    ElementSet mr;  // S_M T_R
};

/// U ∩ R = S_R T_R ⊔ S_M T_M and U ∩ M = S_R T_M ⊔ S_M T_R. Both identities
/// are checked; a failure throws TheoremViolation.
UrUmDecomposition ur_um_decomposition(const FactorTriple& t);

/// Rotation part and reflection part each closed under j -> -j.
bool is_strongly_symmetric(const ElementSet& x);

/// The set bijection Z_{2n} -> D_{2n} for odd n:
/// x -> (x mod 2, x mod n) -> s^{x mod 2} r^{x mod n}. Not a homomorphism.
class PecherCorrespondence {
  public:
    /// Throws InvalidArgument unless n is odd and at least 3.
    explicit PecherCorrespondence(int n);

    int n() const { return n_; }
    const FiniteGroup& cyclic() const { return cyclic_; }
    const FiniteGroup& dihedral() const { return dihedral_; }

    Element forward(Element x) const { return forward_[x]; }
    Element inverse(Element y) const { return inverse_[y]; }
    ElementSet forward(const ElementSet& x) const;
    ElementSet inverse(const ElementSet& y) const;

  private:
    int n_;
    FiniteGroup cyclic_;
    FiniteGroup dihedral_;
    std::vector<Element> forward_;
    std::vector<Element> inverse_;
};

/// Image of a verified triple of Z_{2n}. The result must verify and, for
/// symmetric input, be strongly symmetric; otherwise TheoremViolation.
FactorTriple transfer_forward(const PecherCorrespondence& pc, const FactorTriple& t);

/// Preimage of a verified triple of D_{2n}. PreconditionViolation when the
/// preimage sets are not symmetric; TheoremViolation when the preimage does
/// not verify.
FactorTriple transfer_backward(const PecherCorrespondence& pc, const FactorTriple& t);

/// gcd(n, (k+1)/2) = gcd(n, (l+1)/2) = 1 with k = |S|, l = |T|, both odd.
/// The hypothesis under which dihedral equivalence pulls back to Z_{2n}.
bool pullback_gcd_condition(int n, const FactorTriple& t);

struct Table2Params {
    int m = 1;
    int u = 1;
    int a = 0;
    std::vector<int> us;  // row 8
};

/// Rows 1-8 of the dihedral family table; conditions checked, output verified.
/// Throws PreconditionViolation with the row id on any failure.
FactorTriple table2_family(int row, int n, const Table2Params& params = {});

/// (Sx, xT, U) for an involution x outside S ∪ T with xSx = S and xTx = T.
/// Each failed precondition throws PreconditionViolation with its own message.
FactorTriple involution_equivalent(const FactorTriple& t, Element x);

/// Lexicographically least image (S, T, U) over the automorphisms.
FactorTriple canonical_form(const FactorTriple& t, std::span<const Automorphism> auts);

/// Orbits of `triples` under Aut(G), each listed once by its canonical
/// representative. Orbits are returned in canonical order; members in input order.
struct EquivalenceClass {
    FactorTriple representative;
    std::vector<FactorTriple> members;
};
std::vector<EquivalenceClass> equivalence_classes(std::span<const FactorTriple> triples, const FiniteGroup& g);

/// Whether some automorphism maps t1 onto t2 componentwise.
bool are_equivalent(const FactorTriple& t1, const FactorTriple& t2);

}  // namespace cayley
