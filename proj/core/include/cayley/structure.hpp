#pragma once

#include <optional>
#include <vector>

#include "cayley/element_set.hpp"
#include "cayley/group.hpp"

namespace cayley {

/// Conjugacy classes, each sorted, ordered by minimal element.
std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g);

/// {h g h^{-1} : h in G}
std::vector<Element> conjugacy_class_of(const FiniteGroup& g, Element x);

struct Subgroup {
    ElementSet elements;
    /// Minimal-index representative of each right coset Hx, ascending.
    std::vector<Element> right_coset_reps;

    const FiniteGroup& group() const { return elements.group(); }
    int order() const { return elements.size(); }
    int index() const { return static_cast<int>(right_coset_reps.size()); }
    /// The right coset Hx.
    ElementSet right_coset(Element x) const;
    /// The left coset xH.
    ElementSet left_coset(Element x) const;
};

/// Closure of x together with the identity. The empty set yields {e}.
Subgroup subgroup_generated(const ElementSet& x);

/// Throws InvalidArgument when h is not a subgroup.
Subgroup make_subgroup(const ElementSet& h);

bool is_normal(const Subgroup& h);

/// Every subgroup, ordered by (order, elements). Intended for small groups.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

/// Only the cyclic subgroups, deduplicated.
std::vector<Subgroup> cyclic_subgroups(const FiniteGroup& g);

/// A group automorphism stored as a permutation of element indices.
class Automorphism {
  public:
    /// Throws InvalidArgument unless perm is a bijective homomorphism.
    Automorphism(FiniteGroup group, std::vector<Element> perm);
    static Automorphism identity(const FiniteGroup& group);

    const FiniteGroup& group() const { return group_; }
    Element operator()(Element x) const { return perm_[x]; }
    const std::vector<Element>& permutation() const { return perm_; }
    ElementSet apply(const ElementSet& x) const;
    Automorphism compose(const Automorphism& inner) const;
    Automorphism inverse() const;

    bool operator==(const Automorphism& other) const { return perm_ == other.perm_; }

  private:
    struct Unchecked {};
    Automorphism(FiniteGroup group, std::vector<Element> perm, Unchecked);

    FiniteGroup group_;
    std::vector<Element> perm_;

    friend std::vector<Automorphism> automorphisms(const FiniteGroup& g);
};

/// Groups of at most this order use generic backtracking in automorphisms().
inline constexpr int kGenericAutomorphismCutoff = 12;

/// Deterministic list of all automorphisms.
///
/// Cyclic: x -> ux for u a unit, ordered by u. Odd dihedral: f_{u,v} with
/// r -> r^u, s -> s r^v, ordered by (u, v). Any other group of order at most
/// kGenericAutomorphismCutoff: exhaustive search over generator images, sorted
/// by permutation. Everything else throws Unsupported.
std::vector<Automorphism> automorphisms(const FiniteGroup& g);

/// f_{u,v} on D_{2n}: s^i r^j -> s^i r^{u j + i v}.
Automorphism dihedral_automorphism(const FiniteGroup& d, int u, int v);
/// x -> u x on Z_n.
Automorphism cyclic_multiplier(const FiniteGroup& z, int u);

ElementSet apply_automorphism(const Automorphism& a, const ElementSet& x);
/// {g x g^{-1} : x in X}
ElementSet conjugate_set(Element g, const ElementSet& x);

/// Small generating set chosen greedily by index.
std::vector<Element> greedy_generators(const FiniteGroup& g);

/// An isomorphism g -> h as a map of element indices, if one exists.
/// Exhaustive over generator images; intended for small orders.
std::optional<std::vector<Element>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h);

}  // namespace cayley
