#include "cayley/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include "cayley/error.hpp"

namespace cayley {

namespace {

std::string strip_spaces(std::string_view text) {
    std::string out;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out.push_back(c);
    return out;
}

// Splits on commas that are not inside parentheses or brackets.
std::vector<std::string> split_top_level(std::string_view text) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : text) {
        if (c == '(' || c == '[')
            ++depth;
        else if (c == ')' || c == ']')
            --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (depth != 0)
        throw InvalidArgument("unbalanced parentheses in '" + std::string(text) + "'");
    out.push_back(cur);
    return out;
}

std::optional<long long> parse_int(std::string_view s) {
    long long v = 0;
    if (s.empty())
        return std::nullopt;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        return std::nullopt;
    return v;
}

int positive_param(std::string_view s, std::string_view what) {
    auto v = parse_int(s);
    if (!v || *v < 1 || *v > (1 << 20))
        throw InvalidArgument("bad " + std::string(what) + " parameter '" + std::string(s) + "'");
    return static_cast<int>(*v);
}

FiniteGroup parse_simple_group(std::string_view spec) {
    const auto colon = spec.find(':');
    const auto tag = spec.substr(0, colon);
    if (colon == std::string_view::npos)
        throw InvalidArgument("group spec '" + std::string(spec) + "' needs the form kind:n");
    const auto arg = spec.substr(colon + 1);
    if (tag == "cyclic")
        return FiniteGroup::cyclic(positive_param(arg, "cyclic"));
    if (tag == "dihedral")
        return FiniteGroup::dihedral(positive_param(arg, "dihedral"));
    throw Unsupported("unsupported group tag '" + std::string(tag) + "'");
}

const std::vector<FiniteGroup>* product_parts(const FiniteGroup& g) {
    if (auto p = std::get_if<ProductTag>(&g.tag()))
        return &p->parts;
    return nullptr;
}

}  // namespace

Json group_to_json(const FiniteGroup& g) {
    return std::visit(
        [&](const auto& tag) -> Json {
            using T = std::decay_t<decltype(tag)>;
            if constexpr (std::is_same_v<T, CyclicTag>) {
                return {{"kind", "cyclic"}, {"n", tag.n}};
            } else if constexpr (std::is_same_v<T, DihedralTag>) {
                return {{"kind", "dihedral"}, {"n", tag.n}};
            } else if constexpr (std::is_same_v<T, ProductTag>) {
                Json parts = Json::array();
                for (const auto& part : tag.parts)
                    parts.push_back(group_to_json(part));
                return {{"kind", "product"}, {"parts", parts}};
            } else {
                Json rows = Json::array();
                for (Element a = 0; a < g.order(); ++a) {
                    Json row = Json::array();
                    for (Element b = 0; b < g.order(); ++b)
                        row.push_back(g.mul(a, b));
                    rows.push_back(row);
                }
                return {{"kind", "table"}, {"mul", rows}};
            }
        },
        g.tag());
}

FiniteGroup group_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw InvalidArgument("group descriptor needs a string \"kind\"");
    const auto kind = j["kind"].get<std::string>();
    auto need_n = [&] {
        if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 1)
            throw InvalidArgument("group descriptor '" + kind + "' needs a positive integer \"n\"");
        return j["n"].get<int>();
    };
    if (kind == "cyclic")
        return FiniteGroup::cyclic(need_n());
    if (kind == "dihedral")
        return FiniteGroup::dihedral(need_n());
    if (kind == "product") {
        if (!j.contains("parts") || !j["parts"].is_array() || j["parts"].empty())
            throw InvalidArgument("product descriptor needs a nonempty \"parts\" array");
        std::vector<FiniteGroup> parts;
        for (const auto& p : j["parts"])
            parts.push_back(group_from_json(p));
        return FiniteGroup::product(parts);
    }
    if (kind == "table") {
        if (!j.contains("mul") || !j["mul"].is_array())
            throw InvalidArgument("table descriptor needs a \"mul\" array");
        try {
            return FiniteGroup::from_table(j["mul"].get<std::vector<std::vector<int>>>());
        } catch (const Json::exception& e) {
            throw InvalidArgument(std::string("table descriptor: ") + e.what());
        }
    }
    throw Unsupported("unsupported group tag '" + kind + "'");
}

FiniteGroup parse_group(std::string_view spec) {
    const std::string s = strip_spaces(spec);
    if (!s.empty() && s.front() == '{') {
        Json j;
        try {
            j = Json::parse(s);
        } catch (const Json::exception& e) {
            throw InvalidArgument(std::string("malformed group JSON: ") + e.what());
        }
        return group_from_json(j);
    }
    const std::string_view view = s;
    if (view.starts_with("product:")) {
        std::vector<FiniteGroup> parts;
        for (const auto& part : split_top_level(view.substr(8)))
            parts.push_back(parse_simple_group(part));
        return FiniteGroup::product(parts);
    }
    return parse_simple_group(view);
}

std::string format_group(const FiniteGroup& g) {
    if (auto c = std::get_if<CyclicTag>(&g.tag()))
        return "cyclic:" + std::to_string(c->n);
    if (auto d = std::get_if<DihedralTag>(&g.tag()))
        return "dihedral:" + std::to_string(d->n);
    if (auto parts = product_parts(g)) {
        const bool flat = std::all_of(parts->begin(), parts->end(), [](const FiniteGroup& p) {
            return p.is_cyclic_tag() || p.is_dihedral_tag();
        });
        if (flat) {
            std::string out = "product:";
            for (std::size_t k = 0; k < parts->size(); ++k)
                out += (k ? "," : "") + format_group((*parts)[k]);
            return out;
        }
    }
    return group_to_json(g).dump();
}

Element parse_element(const FiniteGroup& g, std::string_view text) {
    const std::string s = strip_spaces(text);
    auto bad = [&](const std::string& why) {
        return InvalidArgument("malformed element literal '" + s + "' for " + g.name() + ": " + why);
    };
    if (const int n = g.dihedral_n(); n > 0) {
        if (s == "e")
            return 0;
        std::string_view v = s;
        int i = 0;
        if (v.starts_with("s")) {
            i = 1;
            v.remove_prefix(1);
        }
        if (v.empty()) {
            if (i == 1)
                return n;
            throw bad("empty");
        }
        if (!v.starts_with("r"))
            throw bad("expected e, r^j, s or sr^j");
        v.remove_prefix(1);
        long long j = 1;
        if (!v.empty()) {
            if (!v.starts_with("^"))
                throw bad("expected '^' after r");
            auto parsed = parse_int(v.substr(1));
            if (!parsed)
                throw bad("exponent is not an integer");
            j = *parsed;
        }
        j %= n;
        if (j < 0)
            j += n;
        return static_cast<Element>(i * n + j);
    }
    if (auto parts = product_parts(g)) {
        if (s.size() < 2 || s.front() != '(' || s.back() != ')')
            throw bad("product elements are written (a,b,...)");
        const auto fields = split_top_level(std::string_view(s).substr(1, s.size() - 2));
        if (fields.size() != parts->size())
            throw bad("expected " + std::to_string(parts->size()) + " components");
        Element index = 0;
        for (std::size_t k = 0; k < parts->size(); ++k)
            index = index * (*parts)[k].order() + parse_element((*parts)[k], fields[k]);
        return index;
    }
    auto v = parse_int(s);
    if (!v)
        throw bad("not an integer");
    long long x = *v;
    if (g.is_cyclic_tag()) {
        x %= g.order();
        if (x < 0)
            x += g.order();
    }
    if (x < 0 || x >= g.order())
        throw bad("out of range");
    return static_cast<Element>(x);
}

std::string format_element(const FiniteGroup& g, Element x) {
    if (!g.contains(x))
        throw InvalidArgument("element " + std::to_string(x) + " outside " + g.name());
    if (const int n = g.dihedral_n(); n > 0) {
        const int i = x / n, j = x % n;
        if (i == 0 && j == 0)
            return "e";
        std::string out = i ? "s" : "";
        if (j == 1)
            out += "r";
        else if (j > 1)
            out += "r^" + std::to_string(j);
        return out;
    }
    if (auto parts = product_parts(g)) {
        std::vector<std::string> fields(parts->size());
        for (std::size_t k = parts->size(); k-- > 0;) {
            const int r = (*parts)[k].order();
            fields[k] = format_element((*parts)[k], x % r);
            x /= r;
        }
        std::string out = "(";
        for (std::size_t k = 0; k < fields.size(); ++k)
            out += (k ? "," : "") + fields[k];
        return out + ")";
    }
    return std::to_string(x);
}

ElementSet parse_set(const FiniteGroup& g, std::string_view text) {
    std::string s = strip_spaces(text);
    if (!s.empty() && s.front() == '{') {
        if (s.back() != '}')
            throw InvalidArgument("malformed set literal '" + s + "': missing '}'");
        s = s.substr(1, s.size() - 2);
    }
    ElementSet out(g);
    if (s.empty())
        return out;
    for (const auto& field : split_top_level(s)) {
        if (field.empty())
            throw InvalidArgument("malformed set literal '" + std::string(text) + "': empty entry");
        out.insert(parse_element(g, field));
    }
    return out;
}

std::string format_set(const ElementSet& x) {
    std::string out = "{";
    bool first = true;
    x.for_each([&](Element e) {
        out += (first ? "" : ",") + format_element(x.group(), e);
        first = false;
    });
    return out + "}";
}

Json element_to_json(const FiniteGroup& g, Element x) {
    if (g.is_dihedral_tag())
        return format_element(g, x);
    if (auto parts = product_parts(g)) {
        Json fields = Json::array();
        std::vector<Element> digits(parts->size());
        for (std::size_t k = parts->size(); k-- > 0;) {
            digits[k] = x % (*parts)[k].order();
            x /= (*parts)[k].order();
        }
        for (std::size_t k = 0; k < parts->size(); ++k)
            fields.push_back(element_to_json((*parts)[k], digits[k]));
        return fields;
    }
    return x;
}

Element element_from_json(const FiniteGroup& g, const Json& j) {
    if (j.is_string())
        return parse_element(g, j.get<std::string>());
    if (auto parts = product_parts(g)) {
        if (!j.is_array() || j.size() != parts->size())
            throw InvalidArgument("product element must be an array of " + std::to_string(parts->size()) +
                                  " components: " + j.dump());
        Element index = 0;
        for (std::size_t k = 0; k < parts->size(); ++k)
            index = index * (*parts)[k].order() + element_from_json((*parts)[k], j[k]);
        return index;
    }
    if (j.is_number_integer())
        return parse_element(g, std::to_string(j.get<long long>()));
    throw InvalidArgument("malformed element " + j.dump() + " for " + g.name());
}

Json set_to_json(const ElementSet& x) {
    Json out = Json::array();
    x.for_each([&](Element e) { out.push_back(element_to_json(x.group(), e)); });
    return out;
}

ElementSet set_from_json(const FiniteGroup& g, const Json& j) {
    if (!j.is_array())
        throw InvalidArgument("set must be a JSON array: " + j.dump());
    ElementSet out(g);
    for (const auto& e : j)
        out.insert(element_from_json(g, e));
    return out;
}

Json triple_to_json(const FactorTriple& t) {
    return {{"group", group_to_json(t.group())},
            {"S", set_to_json(t.S)},
            {"T", set_to_json(t.T)},
            {"U", set_to_json(t.U)},
            {"verified", t.verified}};
}

FactorTriple triple_from_json(const Json& j) {
    for (const char* key : {"group", "S", "T", "U"})
        if (!j.contains(key))
            throw InvalidArgument(std::string("triple JSON lacks \"") + key + "\"");
    const auto g = group_from_json(j["group"]);
    return make_triple(set_from_json(g, j["S"]), set_from_json(g, j["T"]), set_from_json(g, j["U"]));
}

Json report_to_json(const FiniteGroup& g, const SearchReport& r) {
    Json triples = Json::array();
    for (const auto& t : r.triples)
        triples.push_back({{"S", set_to_json(t.S)},
                           {"T", set_to_json(t.T)},
                           {"U", set_to_json(t.U)},
                           {"verified", t.verified}});
    return {{"group", group_to_json(g)},
            {"exhaustive", r.exhaustive},
            {"count", r.triples.size()},
            {"stats",
             {{"nodes", r.stats.nodes},
              {"prunes_size", r.stats.prunes_size},
              {"prunes_sidon", r.stats.prunes_sidon},
              {"prunes_parity", r.stats.prunes_parity},
              {"audit_violations", r.stats.audit_violations}}},
            {"triples", triples}};
}

std::string report_table(const SearchReport& r) {
    std::vector<std::array<std::string, 7>> rows;
    rows.push_back({"#", "|S|", "|T|", "|U|", "S", "T", "U"});
    for (std::size_t k = 0; k < r.triples.size(); ++k) {
        const auto& t = r.triples[k];
        rows.push_back({std::to_string(k + 1), std::to_string(t.S.size()), std::to_string(t.T.size()),
                        std::to_string(t.U.size()), format_set(t.S), format_set(t.T), format_set(t.U)});
    }
    std::array<std::size_t, 7> width{};
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    std::ostringstream out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::string cell = row[c];
            cell.resize(width[c], ' ');
            line += (c ? "  " : "") + cell;
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        out << line << '\n';
    }
    out << "triples: " << r.triples.size() << "  exhaustive: " << (r.exhaustive ? "yes" : "no")
        << "  nodes: " << r.stats.nodes << "  prunes(size/sidon/parity): " << r.stats.prunes_size << '/'
        << r.stats.prunes_sidon << '/' << r.stats.prunes_parity << '\n';
    return out.str();
}

}  // namespace cayley
