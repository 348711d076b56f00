#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "cayley/group.hpp"

namespace cayley {

/// Subset of a finite group stored as a bitset over element indices.
///
/// Symmetry and identity exclusion are not enforced; callers check them with
/// is_symmetric() / contains(identity) where a factorization context needs it.
class ElementSet {
  public:
    ElementSet() = default;
    explicit ElementSet(FiniteGroup group);
    ElementSet(FiniteGroup group, std::initializer_list<Element> elements);
    ElementSet(FiniteGroup group, std::span<const Element> elements);

    static ElementSet full(const FiniteGroup& group);
    /// G \ {e}
    static ElementSet nonidentity(const FiniteGroup& group);

    const FiniteGroup& group() const { return group_; }
    int universe() const { return group_.order(); }

    bool contains(Element g) const {
        return g >= 0 && g < universe() && ((words_[g >> 6] >> (g & 63)) & 1U);
    }
    void insert(Element g);
    void erase(Element g);

    int size() const;
    bool empty() const;
    std::vector<Element> elements() const;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1)
                f(static_cast<Element>(w * 64 + std::countr_zero(bits)));
        }
    }

    std::span<const std::uint64_t> words() const { return words_; }

    ElementSet& operator|=(const ElementSet& other);
    ElementSet& operator&=(const ElementSet& other);
    ElementSet& operator-=(const ElementSet& other);
    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
    friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

    bool intersects(const ElementSet& other) const;
    bool is_subset_of(const ElementSet& other) const;

    bool operator==(const ElementSet& other) const;
    /// Lexicographic order on the ascending element lists.
    std::strong_ordering operator<=>(const ElementSet& other) const;

    /// {x^{-1} : x in X}
    ElementSet inverse() const;
    /// gX and Xg
    ElementSet left_translate(Element g) const;
    ElementSet right_translate(Element g) const;

  private:
    void require_same_group(const ElementSet& other) const;

    FiniteGroup group_;
    std::vector<std::uint64_t> words_ = std::vector<std::uint64_t>(1, 0);
};

bool is_symmetric(const ElementSet& x);
bool contains_identity(const ElementSet& x);
/// True iff x is a union of conjugacy classes.
bool is_class_closed(const ElementSet& x);
/// Number of involutions in x.
int involution_count(const ElementSet& x);

}  // namespace cayley
