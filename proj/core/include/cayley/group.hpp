#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace cayley {

/// Dense element index in 0..n-1.
using Element = std::int32_t;

class FiniteGroup;

struct CyclicTag {
    int n;
    bool operator==(const CyclicTag&) const = default;
};

/// D_{2n}: element s^i r^j has index i*n + j.
struct DihedralTag {
    int n;
    bool operator==(const DihedralTag&) const = default;
};

struct ProductTag {
    std::vector<FiniteGroup> parts;
};

struct TableTag {};

using GroupTag = std::variant<CyclicTag, DihedralTag, ProductTag, TableTag>;

/// Finite group on dense indices with identity/inverse tables.
///
/// A FiniteGroup is a cheap handle onto immutable shared data, so copies are
/// O(1) and safe to share across threads. The full multiplication table is
/// materialized up to order kMaterializeLimit; above it the structured tags
/// compute products on the fly.
class FiniteGroup {
  public:
    static constexpr int kMaterializeLimit = 4096;

    static FiniteGroup cyclic(int n);
    /// Dihedral group of order 2n.
    static FiniteGroup dihedral(int n);
    /// Index (a, b) maps to a * |h| + b.
    static FiniteGroup product(const FiniteGroup& g, const FiniteGroup& h);
    static FiniteGroup product(const std::vector<FiniteGroup>& parts);
    static FiniteGroup from_table(std::vector<std::vector<int>> mul);

    FiniteGroup();

    int order() const;
    Element identity() const;
    Element mul(Element a, Element b) const;
    Element inv(Element a) const;
    const GroupTag& tag() const;

    bool is_abelian() const;
    bool is_cyclic_tag() const;
    bool is_dihedral_tag() const;
    /// n for Dihedral(n), 0 otherwise.
    int dihedral_n() const;

    int element_order(Element g) const;
    bool is_involution(Element g) const;
    bool contains(Element g) const { return g >= 0 && g < order(); }

    /// Human-readable name: "Z_10", "D_10", "Z_2 x Z_4", "G_8".
    std::string name() const;

    /// Structural equality: same family and parameters, or identical tables.
    bool operator==(const FiniteGroup& other) const;

  private:
    struct Data;
    explicit FiniteGroup(std::shared_ptr<const Data> data);
    static FiniteGroup finish(std::shared_ptr<Data> data);

    std::shared_ptr<const Data> data_;
};

/// Exhaustive group-axiom check up to order 256, sampled above.
/// Throws InvalidArgument naming the first failing axiom.
void check_group_axioms(const FiniteGroup& g);

}  // namespace cayley
