#include "cayley/group.hpp"

#include <numeric>
#include <random>
#include <sstream>

#include "cayley/error.hpp"

namespace cayley {

struct FiniteGroup::Data {
    int n = 1;
    Element e = 0;
    std::vector<Element> table;  // n*n, empty when computed on the fly
    std::vector<Element> inverse;
    GroupTag tag = CyclicTag{1};
    std::vector<int> radices;  // Product: part orders, most significant first
    bool abelian = true;

    Element compute(Element a, Element b) const;
};

Element FiniteGroup::Data::compute(Element a, Element b) const {
    if (!table.empty())
        return table[static_cast<std::size_t>(a) * n + b];
    if (auto c = std::get_if<CyclicTag>(&tag))
        return static_cast<Element>((static_cast<long long>(a) + b) % c->n);
    if (auto d = std::get_if<DihedralTag>(&tag)) {
        const int m = d->n;
        const int i = a / m, j = a % m, i2 = b / m, j2 = b % m;
        const int rot = ((i2 ? -j : j) + j2 % m + 2 * m) % m;
        return static_cast<Element>(((i + i2) % 2) * m + rot);
    }
    if (auto p = std::get_if<ProductTag>(&tag)) {
        Element result = 0;
        int rest_a = a, rest_b = b;
        std::vector<Element> digits(p->parts.size());
        for (std::size_t k = p->parts.size(); k-- > 0;) {
            const int r = radices[k];
            digits[k] = p->parts[k].mul(rest_a % r, rest_b % r);
            rest_a /= r;
            rest_b /= r;
        }
        for (std::size_t k = 0; k < digits.size(); ++k)
            result = result * radices[k] + digits[k];
        return result;
    }
    throw Error("table group without table");
}

FiniteGroup::FiniteGroup() : FiniteGroup(cyclic(1)) {}

FiniteGroup::FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

FiniteGroup FiniteGroup::finish(std::shared_ptr<Data> data) {
    const int n = data->n;
    if (data->table.empty() && n <= kMaterializeLimit) {
        std::vector<Element> table(static_cast<std::size_t>(n) * n);
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b)
                table[static_cast<std::size_t>(a) * n + b] = data->compute(a, b);
        data->table = std::move(table);
    }
    if (data->inverse.empty()) {
        data->inverse.assign(n, -1);
        for (Element a = 0; a < n; ++a) {
            if (data->inverse[a] >= 0)
                continue;
            for (Element b = 0; b < n; ++b) {
                if (data->compute(a, b) == data->e) {
                    data->inverse[a] = b;
                    data->inverse[b] = a;
                    break;
                }
            }
            if (data->inverse[a] < 0)
                throw InvalidArgument("element " + std::to_string(a) + " has no inverse");
        }
    }
    FiniteGroup g{std::shared_ptr<const Data>(data)};
    check_group_axioms(g);
    return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1)
        throw InvalidArgument("cyclic group order must be positive, got " + std::to_string(n));
    auto d = std::make_shared<Data>();
    d->n = n;
    d->tag = CyclicTag{n};
    d->inverse.resize(n);
    for (int a = 0; a < n; ++a)
        d->inverse[a] = (n - a) % n;
    return finish(std::move(d));
}

FiniteGroup FiniteGroup::dihedral(int n) {
    if (n < 1)
        throw InvalidArgument("dihedral parameter must be positive, got " + std::to_string(n));
    auto d = std::make_shared<Data>();
    d->n = 2 * n;
    d->tag = DihedralTag{n};
    d->abelian = n <= 2;
    d->inverse.resize(2 * n);
    for (int j = 0; j < n; ++j) {
        d->inverse[j] = (n - j) % n;
        d->inverse[n + j] = n + j;
    }
    return finish(std::move(d));
}

FiniteGroup FiniteGroup::product(const FiniteGroup& g, const FiniteGroup& h) {
    return product(std::vector<FiniteGroup>{g, h});
}

FiniteGroup FiniteGroup::product(const std::vector<FiniteGroup>& parts) {
    if (parts.empty())
        throw InvalidArgument("direct product needs at least one factor");
    long long n = 1;
    for (const auto& p : parts)
        n *= p.order();
    if (n > (1LL << 24))
        throw InvalidArgument("direct product order too large");
    auto d = std::make_shared<Data>();
    d->n = static_cast<int>(n);
    d->tag = ProductTag{parts};
    d->abelian = true;
    for (const auto& p : parts) {
        d->radices.push_back(p.order());
        d->abelian = d->abelian && p.is_abelian();
    }
    d->inverse.resize(d->n);
    for (Element a = 0; a < d->n; ++a) {
        Element rest = a, result = 0, scale = 1;
        for (std::size_t k = parts.size(); k-- > 0;) {
            const int r = d->radices[k];
            result += scale * parts[k].inv(rest % r);
            rest /= r;
            scale *= r;
        }
        d->inverse[a] = result;
    }
    return finish(std::move(d));
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> mul) {
    const int n = static_cast<int>(mul.size());
    if (n < 1)
        throw InvalidArgument("multiplication table is empty");
    auto d = std::make_shared<Data>();
    d->n = n;
    d->tag = TableTag{};
    d->table.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(mul[a].size()) != n)
            throw InvalidArgument("multiplication table row " + std::to_string(a) + " has wrong length");
        for (int b = 0; b < n; ++b) {
            if (mul[a][b] < 0 || mul[a][b] >= n)
                throw InvalidArgument("multiplication table entry out of range");
            d->table[static_cast<std::size_t>(a) * n + b] = mul[a][b];
        }
    }
    // Latin square first; the identity search below relies on it.
    for (int a = 0; a < n; ++a) {
        std::vector<bool> row(n), col(n);
        for (int b = 0; b < n; ++b) {
            row[mul[a][b]] = true;
            col[mul[b][a]] = true;
        }
        for (int b = 0; b < n; ++b)
            if (!row[b] || !col[b])
                throw InvalidArgument("multiplication table is not a Latin square");
    }
    d->e = -1;
    for (int a = 0; a < n && d->e < 0; ++a) {
        bool ok = true;
        for (int b = 0; b < n && ok; ++b)
            ok = mul[a][b] == b && mul[b][a] == b;
        if (ok)
            d->e = a;
    }
    if (d->e < 0)
        throw InvalidArgument("multiplication table has no identity");
    for (int a = 0; a < n && d->abelian; ++a)
        for (int b = 0; b < n && d->abelian; ++b)
            d->abelian = mul[a][b] == mul[b][a];
    return finish(std::move(d));
}

int FiniteGroup::order() const { return data_->n; }
Element FiniteGroup::identity() const { return data_->e; }

Element FiniteGroup::mul(Element a, Element b) const {
    if (!data_->table.empty())
        return data_->table[static_cast<std::size_t>(a) * data_->n + b];
    return data_->compute(a, b);
}

Element FiniteGroup::inv(Element a) const { return data_->inverse[a]; }
const GroupTag& FiniteGroup::tag() const { return data_->tag; }
bool FiniteGroup::is_abelian() const { return data_->abelian; }
bool FiniteGroup::is_cyclic_tag() const { return std::holds_alternative<CyclicTag>(data_->tag); }
bool FiniteGroup::is_dihedral_tag() const { return std::holds_alternative<DihedralTag>(data_->tag); }

int FiniteGroup::dihedral_n() const {
    if (auto d = std::get_if<DihedralTag>(&data_->tag))
        return d->n;
    return 0;
}

int FiniteGroup::element_order(Element g) const {
    int k = 1;
    for (Element x = g; x != identity(); x = mul(x, g))
        ++k;
    return k;
}

bool FiniteGroup::is_involution(Element g) const { return g != identity() && inv(g) == g; }

std::string FiniteGroup::name() const {
    return std::visit(
        [this](const auto& t) -> std::string {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, CyclicTag>)
                return "Z_" + std::to_string(t.n);
            else if constexpr (std::is_same_v<T, DihedralTag>)
                return "D_" + std::to_string(2 * t.n);
            else if constexpr (std::is_same_v<T, ProductTag>) {
                std::string out;
                for (std::size_t k = 0; k < t.parts.size(); ++k) {
                    const auto& part = t.parts[k];
                    const bool nested = std::holds_alternative<ProductTag>(part.tag());
                    if (k)
                        out += " x ";
                    out += nested ? "(" + part.name() + ")" : part.name();
                }
                return out;
            } else
                return "G_" + std::to_string(order());
        },
        data_->tag);
}

bool FiniteGroup::operator==(const FiniteGroup& other) const {
    if (data_ == other.data_)
        return true;
    if (order() != other.order() || tag().index() != other.tag().index())
        return false;
    if (auto c = std::get_if<CyclicTag>(&tag()))
        return *c == std::get<CyclicTag>(other.tag());
    if (auto d = std::get_if<DihedralTag>(&tag()))
        return *d == std::get<DihedralTag>(other.tag());
    if (auto p = std::get_if<ProductTag>(&tag()))
        return p->parts == std::get<ProductTag>(other.tag()).parts;
    return data_->table == other.data_->table;
}

void check_group_axioms(const FiniteGroup& g) {
    const int n = g.order();
    const Element e = g.identity();
    auto fail = [&g](const std::string& what) {
        throw InvalidArgument(g.name() + ": " + what);
    };
    for (Element a = 0; a < n; ++a) {
        if (g.mul(e, a) != a || g.mul(a, e) != a)
            fail("identity law fails at " + std::to_string(a));
        if (g.mul(a, g.inv(a)) != e || g.mul(g.inv(a), a) != e)
            fail("inverse law fails at " + std::to_string(a));
    }
    if (n <= 256) {
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b) {
                const Element ab = g.mul(a, b);
                for (Element c = 0; c < n; ++c)
                    if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
                        fail("associativity fails");
            }
        return;
    }
    std::mt19937_64 rng(0x5eedULL + static_cast<unsigned>(n));
    std::uniform_int_distribution<Element> pick(0, n - 1);
    for (int k = 0; k < 100000; ++k) {
        const Element a = pick(rng), b = pick(rng), c = pick(rng);
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            fail("associativity fails (sampled)");
    }
}

}  // namespace cayley
