#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>

#include "cayley/element_set.hpp"
#include "cayley/factor.hpp"
#include "cayley/search.hpp"

namespace cayley {

using Json = nlohmann::json;

/// {"kind":"cyclic","n":10}, {"kind":"dihedral","n":5},
/// {"kind":"product","parts":[...]}, {"kind":"table","mul":[[...]]}.
Json group_to_json(const FiniteGroup& g);
/// Throws Unsupported for an unknown kind, InvalidArgument for bad fields.
FiniteGroup group_from_json(const Json& j);

/// "cyclic:10", "dihedral:5", "product:cyclic:2,cyclic:4", or a JSON
/// descriptor. Throws Unsupported for an unknown tag.
FiniteGroup parse_group(std::string_view spec);
/// Inverse of parse_group for structured groups; table groups print as JSON.
std::string format_group(const FiniteGroup& g);

/// Cyclic and table groups: integer (negative values wrap for cyclic).
/// Dihedral: e, r, r^j, s, sr, sr^j. Product: (a,b) with part literals.
/// Throws InvalidArgument naming the literal.
Element parse_element(const FiniteGroup& g, std::string_view text);
std::string format_element(const FiniteGroup& g, Element x);

/// Comma-separated literals, optionally wrapped in braces; spaces ignored.
ElementSet parse_set(const FiniteGroup& g, std::string_view text);
/// "{a,b,c}" in ascending index order.
std::string format_set(const ElementSet& x);

Json element_to_json(const FiniteGroup& g, Element x);
Element element_from_json(const FiniteGroup& g, const Json& j);
Json set_to_json(const ElementSet& x);
ElementSet set_from_json(const FiniteGroup& g, const Json& j);

/// {"group":..., "S":[...], "T":[...], "U":[...], "verified":bool}
Json triple_to_json(const FactorTriple& t);
/// Re-verifies; the stored flag is ignored.
FactorTriple triple_from_json(const Json& j);

/// {"group", "exhaustive", "stats":{...}, "triples":[{"S","T","U","verified"}]}
Json report_to_json(const FiniteGroup& g, const SearchReport& r);
/// Fixed-width text table, one row per triple, then a stats line.
std::string report_table(const SearchReport& r);

}  // namespace cayley
