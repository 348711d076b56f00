#include "cayley/characters.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>

#include "cayley/error.hpp"
#include "cayley/factor.hpp"
#include "cayley/structure.hpp"

namespace cayley {

namespace {

Complex root_of_unity(long long k, int n) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k % n) / n;
    return {std::cos(angle), std::sin(angle)};
}

// Per-element values of each irreducible character of an abelian group built
// from cyclic factors. Returns labels and one value row per character.
struct AbelianChars {
    std::vector<std::string> labels;
    std::vector<std::vector<Complex>> values;  // values[chi][g]
};

AbelianChars abelian_characters(const FiniteGroup& g) {
    if (auto c = std::get_if<CyclicTag>(&g.tag())) {
        AbelianChars out;
        for (int k = 0; k < c->n; ++k) {
            out.labels.push_back("chi_" + std::to_string(k));
            std::vector<Complex> row(c->n);
            for (int x = 0; x < c->n; ++x)
                row[x] = root_of_unity(static_cast<long long>(k) * x, c->n);
            out.values.push_back(std::move(row));
        }
        return out;
    }
    if (auto p = std::get_if<ProductTag>(&g.tag())) {
        std::vector<AbelianChars> parts;
        for (const auto& part : p->parts)
            parts.push_back(abelian_characters(part));
        // Tensor characters; part 0 is the most significant digit.
        AbelianChars out{{""}, {std::vector<Complex>(1, Complex{1.0, 0.0})}};
        int size = 1;
        for (std::size_t k = 0; k < parts.size(); ++k) {
            const int r = p->parts[k].order();
            AbelianChars next;
            for (std::size_t a = 0; a < out.values.size(); ++a) {
                for (std::size_t b = 0; b < parts[k].values.size(); ++b) {
                    next.labels.push_back(out.labels[a] + (k ? "," : "") + parts[k].labels[b]);
                    std::vector<Complex> row(static_cast<std::size_t>(size) * r);
                    for (int x = 0; x < size; ++x)
                        for (int y = 0; y < r; ++y)
                            row[static_cast<std::size_t>(x) * r + y] = out.values[a][x] * parts[k].values[b][y];
                    next.values.push_back(std::move(row));
                }
            }
            out = std::move(next);
            size *= r;
        }
        for (auto& label : out.labels)
            label = "(" + label + ")";
        return out;
    }
    throw Unsupported("character table unsupported for " + g.name() +
                      " (cyclic, products of cyclic, and dihedral groups only)");
}

CharacterTable build_table(const FiniteGroup& g) {
    CharacterTable table{g, conjugacy_classes(g), std::vector<int>(g.order()), {}};
    for (std::size_t c = 0; c < table.classes.size(); ++c)
        for (Element x : table.classes[c])
            table.class_of[x] = static_cast<int>(c);

    std::vector<std::pair<std::string, std::vector<Complex>>> per_element;
    std::vector<int> degrees;
    if (const int n = g.dihedral_n(); n > 0) {
        auto linear = [&](const std::string& label, auto rot_value, auto ref_value) {
            std::vector<Complex> row(2 * n);
            for (int j = 0; j < n; ++j) {
                row[j] = rot_value(j);
                row[n + j] = ref_value(j);
            }
            per_element.emplace_back(label, std::move(row));
            degrees.push_back(1);
        };
        auto alt = [](int j) { return j % 2 ? -1.0 : 1.0; };
        linear("trivial", [](int) { return 1.0; }, [](int) { return 1.0; });
        linear("sign", [](int) { return 1.0; }, [](int) { return -1.0; });
        if (n % 2 == 0) {
            linear("alt", alt, alt);
            linear("alt_sign", alt, [&](int j) { return -alt(j); });
        }
        for (int h = 1; 2 * h < n; ++h) {
            std::vector<Complex> row(2 * n, Complex{0.0, 0.0});
            for (int j = 0; j < n; ++j)
                row[j] = 2.0 * std::cos(2.0 * std::numbers::pi * h * j / n);
            per_element.emplace_back("rho_" + std::to_string(h), std::move(row));
            degrees.push_back(2);
        }
    } else {
        auto chars = abelian_characters(g);
        for (std::size_t k = 0; k < chars.labels.size(); ++k) {
            per_element.emplace_back(chars.labels[k], std::move(chars.values[k]));
            degrees.push_back(1);
        }
    }
    for (std::size_t k = 0; k < per_element.size(); ++k) {
        Character chi{per_element[k].first, degrees[k], {}};
        for (const auto& cls : table.classes)
            chi.values.push_back(per_element[k].second[cls.front()]);
        table.characters.push_back(std::move(chi));
    }
    return table;
}

std::optional<Element> first_not_class_closed(const ElementSet& x) {
    const auto& g = x.group();
    std::optional<Element> bad;
    x.for_each([&](Element a) {
        if (bad)
            return;
        for (Element h = 0; h < g.order(); ++h)
            if (!x.contains(g.mul(g.mul(h, a), g.inv(h)))) {
                bad = a;
                return;
            }
    });
    return bad;
}

}  // namespace

std::shared_ptr<const CharacterTable> character_table(const FiniteGroup& g) {
    static std::shared_mutex mutex;
    static std::map<std::string, std::shared_ptr<const CharacterTable>> cache;
    const auto key = g.name();
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(key); it != cache.end() && it->second->group == g)
            return it->second;
    }
    auto table = std::make_shared<const CharacterTable>(build_table(g));
    std::unique_lock lock(mutex);
    cache[key] = table;
    return table;
}

Complex char_sum(const CharacterTable& table, const Character& chi, const ElementSet& x) {
    Complex total{0.0, 0.0};
    x.for_each([&](Element g) { total += table.value(chi, g); });
    return total;
}

CharacterCriterionReport criterion_check(const ElementSet& s, const ElementSet& t, const ElementSet& u) {
    if (!(s.group() == t.group()) || !(s.group() == u.group()))
        throw InvalidArgument("criterion_check: sets belong to different groups");
    for (auto [name, x] : {std::pair{'S', &s}, std::pair{'T', &t}, std::pair{'U', &u}})
        if (auto bad = first_not_class_closed(*x))
            throw PreconditionViolation(std::string(1, name) + " is not a union of conjugacy classes at element " +
                                        std::to_string(*bad));
    CharacterCriterionReport report;
    for (auto [name, x] : {std::pair{'S', &s}, std::pair{'T', &t}, std::pair{'U', &u}}) {
        if (!is_symmetric(*x)) {
            report.rejected = std::string(1, name) + " is not symmetric";
            return report;
        }
        if (contains_identity(*x)) {
            report.rejected = std::string(1, name) + " contains the identity";
            return report;
        }
    }
    const auto table = character_table(s.group());
    report.holds = true;
    for (const auto& chi : table->characters) {
        CharacterRow row{chi.label, chi.degree, char_sum(*table, chi, s), char_sum(*table, chi, t),
                         char_sum(*table, chi, u), 0.0};
        row.residual = std::abs(row.chi_u * static_cast<double>(chi.degree) - row.chi_s * row.chi_t);
        report.holds = report.holds && row.residual <= kCharacterTolerance;
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::vector<Eigenvalue> cayley_eigenvalues(const ElementSet& x) {
    if (auto bad = first_not_class_closed(x))
        throw PreconditionViolation("eigenvalues need a class-closed set; fails at element " + std::to_string(*bad));
    const auto table = character_table(x.group());
    std::vector<Eigenvalue> out;
    for (const auto& chi : table->characters)
        out.push_back(Eigenvalue{char_sum(*table, chi, x) / static_cast<double>(chi.degree), chi.degree * chi.degree});
    return out;
}

std::vector<double> sorted_spectrum(const std::vector<Eigenvalue>& eigenvalues) {
    std::vector<double> out;
    for (const auto& e : eigenvalues)
        out.insert(out.end(), e.multiplicity, e.value.real());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> numeric_spectrum(const ElementSet& x) {
    if (!is_symmetric(x))
        throw PreconditionViolation("numeric spectrum needs a symmetric set");
    const auto a = adjacency(x);
    const int n = a.size();
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = static_cast<double>(a(i, j));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(out.begin(), out.end());
    return out;
}

double spectrum_discrepancy(const ElementSet& x) {
    const auto by_characters = sorted_spectrum(cayley_eigenvalues(x));
    const auto by_matrix = numeric_spectrum(x);
    if (by_characters.size() != by_matrix.size())
        throw TheoremViolation("character spectrum has the wrong number of eigenvalues");
    double worst = 0.0;
    for (std::size_t k = 0; k < by_matrix.size(); ++k)
        worst = std::max(worst, std::abs(by_characters[k] - by_matrix[k]));
    return worst;
}

}  // namespace cayley
