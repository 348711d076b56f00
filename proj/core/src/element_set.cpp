#include "cayley/element_set.hpp"

#include <algorithm>

#include "cayley/error.hpp"

namespace cayley {

namespace {

std::size_t word_count(int n) { return static_cast<std::size_t>((n + 63) / 64); }

}  // namespace

ElementSet::ElementSet(FiniteGroup group)
    : group_(std::move(group)), words_(word_count(group_.order()), 0) {}

ElementSet::ElementSet(FiniteGroup group, std::initializer_list<Element> elements)
    : ElementSet(std::move(group)) {
    for (Element g : elements)
        insert(g);
}

ElementSet::ElementSet(FiniteGroup group, std::span<const Element> elements)
    : ElementSet(std::move(group)) {
    for (Element g : elements)
        insert(g);
}

ElementSet ElementSet::full(const FiniteGroup& group) {
    ElementSet x(group);
    for (Element g = 0; g < group.order(); ++g)
        x.insert(g);
    return x;
}

ElementSet ElementSet::nonidentity(const FiniteGroup& group) {
    ElementSet x = full(group);
    x.erase(group.identity());
    return x;
}

void ElementSet::insert(Element g) {
    if (g < 0 || g >= universe())
        throw InvalidArgument("element index " + std::to_string(g) + " out of range for " + group_.name());
    words_[g >> 6] |= std::uint64_t{1} << (g & 63);
}

void ElementSet::erase(Element g) {
    if (g < 0 || g >= universe())
        throw InvalidArgument("element index " + std::to_string(g) + " out of range for " + group_.name());
    words_[g >> 6] &= ~(std::uint64_t{1} << (g & 63));
}

int ElementSet::size() const {
    int total = 0;
    for (auto w : words_)
        total += std::popcount(w);
    return total;
}

bool ElementSet::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

std::vector<Element> ElementSet::elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for_each([&out](Element g) { out.push_back(g); });
    return out;
}

void ElementSet::require_same_group(const ElementSet& other) const {
    if (!(group_ == other.group_))
        throw InvalidArgument("sets belong to different groups: " + group_.name() + " vs " + other.group_.name());
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
    require_same_group(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] |= other.words_[w];
    return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
    require_same_group(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] &= other.words_[w];
    return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
    require_same_group(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] &= ~other.words_[w];
    return *this;
}

bool ElementSet::intersects(const ElementSet& other) const {
    require_same_group(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & other.words_[w])
            return true;
    return false;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
    require_same_group(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & ~other.words_[w])
            return false;
    return true;
}

bool ElementSet::operator==(const ElementSet& other) const {
    return group_ == other.group_ && words_ == other.words_;
}

std::strong_ordering ElementSet::operator<=>(const ElementSet& other) const {
    const auto a = elements();
    const auto b = other.elements();
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

ElementSet ElementSet::inverse() const {
    ElementSet out(group_);
    for_each([&](Element g) { out.insert(group_.inv(g)); });
    return out;
}

ElementSet ElementSet::left_translate(Element g) const {
    ElementSet out(group_);
    for_each([&](Element x) { out.insert(group_.mul(g, x)); });
    return out;
}

ElementSet ElementSet::right_translate(Element g) const {
    ElementSet out(group_);
    for_each([&](Element x) { out.insert(group_.mul(x, g)); });
    return out;
}

bool is_symmetric(const ElementSet& x) {
    bool ok = true;
    const auto& g = x.group();
    x.for_each([&](Element a) { ok = ok && x.contains(g.inv(a)); });
    return ok;
}

bool contains_identity(const ElementSet& x) { return x.contains(x.group().identity()); }

bool is_class_closed(const ElementSet& x) {
    const auto& g = x.group();
    if (g.is_abelian())
        return true;
    bool ok = true;
    x.for_each([&](Element a) {
        for (Element h = 0; h < g.order() && ok; ++h)
            ok = x.contains(g.mul(g.mul(h, a), g.inv(h)));
    });
    return ok;
}

int involution_count(const ElementSet& x) {
    int count = 0;
    x.for_each([&](Element a) { count += x.group().is_involution(a) ? 1 : 0; });
    return count;
}

}  // namespace cayley
