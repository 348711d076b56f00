#include <doctest.h>

#include <set>

#include "cayley/error.hpp"
#include "cayley/group.hpp"
#include "cayley/structure.hpp"
#include "helpers.hpp"

using namespace cayley;
using testing::set;

TEST_CASE("cyclic constructor") {
    const auto z1 = FiniteGroup::cyclic(1);
    CHECK(z1.order() == 1);
    CHECK(z1.identity() == 0);

    const auto z5 = FiniteGroup::cyclic(5);
    CHECK(z5.mul(2, 4) == 1);
    CHECK(z5.inv(2) == 3);

    const auto z10 = FiniteGroup::cyclic(10);
    CHECK(z10.inv(5) == 5);
    int involutions = 0;
    for (Element x = 0; x < 10; ++x)
        involutions += z10.is_involution(x);
    CHECK(involutions == 1);

    CHECK_THROWS_AS(FiniteGroup::cyclic(0), InvalidArgument);
    CHECK_THROWS_AS(FiniteGroup::dihedral(0), InvalidArgument);
}

TEST_CASE("dihedral constructor and relations") {
    const auto d10 = FiniteGroup::dihedral(5);
    CHECK(d10.order() == 10);
    const Element r = parse_element(d10, "r"), s = parse_element(d10, "s");
    CHECK(d10.mul(r, s) == parse_element(d10, "sr^4"));
    CHECK(format_element(d10, d10.mul(r, s)) == "sr^4");

    const auto d8 = FiniteGroup::dihedral(4);
    CHECK(d8.mul(parse_element(d8, "r"), parse_element(d8, "sr")) == parse_element(d8, "s"));
    for (int j = 0; j < 4; ++j)
        CHECK(d8.inv(4 + j) == 4 + j);
}

TEST_CASE("multiplication agrees with the independent oracle") {
    for (const auto& g : {FiniteGroup::cyclic(7), FiniteGroup::dihedral(3), FiniteGroup::dihedral(6),
                          FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4)),
                          FiniteGroup::product(FiniteGroup::cyclic(3), FiniteGroup::dihedral(2))}) {
        const auto o = testing::twin(g);
        for (int a = 0; a < g.order(); ++a)
            for (int b = 0; b < g.order(); ++b)
                REQUIRE(g.mul(a, b) == o.mul(a, b));
    }
}

TEST_CASE("products") {
    const auto z2 = FiniteGroup::cyclic(2);
    const auto klein = FiniteGroup::product(z2, z2);
    CHECK(klein.order() == 4);
    int involutions = 0;
    for (Element x = 0; x < 4; ++x)
        involutions += klein.is_involution(x);
    CHECK(involutions == 3);

    const auto z3z5 = FiniteGroup::product(FiniteGroup::cyclic(3), FiniteGroup::cyclic(5));
    CHECK(z3z5.mul(parse_element(z3z5, "(1,2)"), parse_element(z3z5, "(2,4)")) == parse_element(z3z5, "(0,1)"));

    const auto z2z5 = FiniteGroup::product(z2, FiniteGroup::cyclic(5));
    CHECK(find_isomorphism(z2z5, FiniteGroup::cyclic(10)).has_value());
    CHECK_FALSE(find_isomorphism(FiniteGroup::dihedral(5), FiniteGroup::cyclic(10)).has_value());
}

TEST_CASE("group axioms hold for every constructed group up to order 64") {
    for (int n = 1; n <= 64; ++n)
        CHECK_NOTHROW(check_group_axioms(FiniteGroup::cyclic(n)));
    for (int n = 1; n <= 32; ++n)
        CHECK_NOTHROW(check_group_axioms(FiniteGroup::dihedral(n)));
    CHECK_NOTHROW(check_group_axioms(FiniteGroup::product(FiniteGroup::dihedral(4), FiniteGroup::cyclic(6))));
}

TEST_CASE("from_table validates input") {
    CHECK_NOTHROW(FiniteGroup::from_table({{0, 1}, {1, 0}}));
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {0, 1}}), InvalidArgument);
    // Latin square without associativity: a loop of order 5.
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1, 2, 3, 4},
                                             {1, 0, 3, 4, 2},
                                             {2, 4, 0, 1, 3},
                                             {3, 2, 4, 0, 1},
                                             {4, 3, 1, 2, 0}}),
                    InvalidArgument);
}

TEST_CASE("conjugacy classes") {
    const auto z6 = FiniteGroup::cyclic(6);
    const auto zc = conjugacy_classes(z6);
    CHECK(zc.size() == 6);
    for (const auto& c : zc)
        CHECK(c.size() == 1);

    const auto d10 = FiniteGroup::dihedral(5);
    const auto dc = conjugacy_classes(d10);
    REQUIRE(dc.size() == 4);
    CHECK(ElementSet(d10, std::span<const Element>(dc[0])) == set(d10, "e"));
    CHECK(ElementSet(d10, std::span<const Element>(dc[1])) == set(d10, "r,r^4"));
    CHECK(ElementSet(d10, std::span<const Element>(dc[2])) == set(d10, "r^2,r^3"));
    CHECK(ElementSet(d10, std::span<const Element>(dc[3])) == set(d10, "s,sr,sr^2,sr^3,sr^4"));

    const auto d8 = FiniteGroup::dihedral(4);
    std::set<std::vector<Element>> classes;
    for (const auto& c : conjugacy_classes(d8))
        classes.insert(c);
    CHECK(classes.count(testing::to_vec(set(d8, "s,sr^2"))) == 1);
    CHECK(classes.count(testing::to_vec(set(d8, "sr,sr^3"))) == 1);
    CHECK(classes.count(testing::to_vec(set(d8, "r^2"))) == 1);
}

TEST_CASE("conjugacy classes partition the group and have sizes dividing |G|") {
    for (const auto& g : {FiniteGroup::dihedral(6), FiniteGroup::dihedral(7), FiniteGroup::cyclic(9),
                          FiniteGroup::product(FiniteGroup::dihedral(3), FiniteGroup::cyclic(2))}) {
        std::vector<int> seen(g.order(), 0);
        Element last_min = -1;
        for (const auto& c : conjugacy_classes(g)) {
            CHECK(g.order() % static_cast<int>(c.size()) == 0);
            CHECK(c.front() > last_min);
            last_min = c.front();
            for (Element x : c)
                ++seen[x];
        }
        for (int v : seen)
            CHECK(v == 1);
    }
}

TEST_CASE("symmetry and class closure predicates") {
    const auto z5 = FiniteGroup::cyclic(5);
    CHECK(is_symmetric(set(z5, "1,4")));
    const auto d10 = FiniteGroup::dihedral(5);
    CHECK_FALSE(is_symmetric(set(d10, "r")));
    CHECK(is_class_closed(set(d10, "r,r^4")));
    CHECK_FALSE(is_class_closed(set(d10, "s")));
}

TEST_CASE("subgroup generation") {
    const auto z10 = FiniteGroup::cyclic(10);
    CHECK(subgroup_generated(set(z10, "2")).elements == set(z10, "0,2,4,6,8"));
    const auto d8 = FiniteGroup::dihedral(4);
    CHECK(subgroup_generated(set(d8, "s,sr")).order() == 8);
    CHECK(subgroup_generated(ElementSet(d8)).elements == set(d8, "e"));

    const auto h = subgroup_generated(set(z10, "5"));
    CHECK(h.index() == 5);
    CHECK(h.right_coset_reps == std::vector<Element>{0, 1, 2, 3, 4});
}

TEST_CASE("all subgroups of small groups") {
    // D_8 has 10 subgroups, D_6 has 6, Z_12 has 6.
    CHECK(all_subgroups(FiniteGroup::dihedral(4)).size() == 10);
    CHECK(all_subgroups(FiniteGroup::dihedral(3)).size() == 6);
    CHECK(all_subgroups(FiniteGroup::cyclic(12)).size() == 6);
}

TEST_CASE("automorphism counts") {
    CHECK(automorphisms(FiniteGroup::cyclic(5)).size() == 4);
    CHECK(automorphisms(FiniteGroup::dihedral(5)).size() == 20);
    const auto z2 = FiniteGroup::cyclic(2);
    CHECK(automorphisms(FiniteGroup::product(z2, z2)).size() == 6);
    // Aut(D_8) = D_8 and Aut(Z_2 x Z_4) has order 8 (generic search).
    CHECK(automorphisms(FiniteGroup::dihedral(4)).size() == 8);
    CHECK(automorphisms(FiniteGroup::product(z2, FiniteGroup::cyclic(4))).size() == 8);
    CHECK(automorphisms(FiniteGroup::dihedral(6)).size() == 12);
    CHECK_THROWS_WITH_AS(automorphisms(FiniteGroup::dihedral(8)),
                         doctest::Contains("automorphism enumeration unsupported"), Unsupported);
}

TEST_CASE("every enumerated automorphism is a homomorphism") {
    for (const auto& g : {FiniteGroup::cyclic(12), FiniteGroup::dihedral(5), FiniteGroup::dihedral(4),
                          FiniteGroup::dihedral(9)}) {
        for (const auto& a : automorphisms(g)) {
            CHECK(a(g.identity()) == g.identity());
            for (Element x = 0; x < g.order(); ++x)
                for (Element y = 0; y < g.order(); ++y)
                    REQUIRE(a(g.mul(x, y)) == g.mul(a(x), a(y)));
        }
    }
}

TEST_CASE("apply automorphism and conjugation") {
    const auto z5 = FiniteGroup::cyclic(5);
    const auto x = set(z5, "1,4");
    CHECK(apply_automorphism(Automorphism::identity(z5), x) == x);
    CHECK(apply_automorphism(cyclic_multiplier(z5, 2), x) == set(z5, "2,3"));

    const auto d10 = FiniteGroup::dihedral(5);
    CHECK(conjugate_set(parse_element(d10, "s"), set(d10, "r,r^4")) == set(d10, "r,r^4"));
    CHECK_THROWS_AS(Automorphism(z5, {0, 2, 1, 3, 4}), InvalidArgument);
}

TEST_CASE("dihedral closure table R R in R, M M in R, R M in M, M R in M") {
    for (int n = 1; n <= 12; ++n) {
        const auto d = FiniteGroup::dihedral(n);
        for (Element a = 0; a < 2 * n; ++a)
            for (Element b = 0; b < 2 * n; ++b) {
                const bool ra = a < n, rb = b < n, rp = d.mul(a, b) < n;
                REQUIRE(rp == (ra == rb));
            }
    }
}

TEST_CASE("element sets") {
    const auto z8 = FiniteGroup::cyclic(8);
    auto a = set(z8, "1,2,3");
    const auto b = set(z8, "3,4");
    CHECK((a | b) == set(z8, "1,2,3,4"));
    CHECK((a & b) == set(z8, "3"));
    CHECK((a - b) == set(z8, "1,2"));
    CHECK(a.inverse() == set(z8, "5,6,7"));
    CHECK(a.left_translate(2) == set(z8, "3,4,5"));
    CHECK(set(z8, "1,2") < set(z8, "1,3"));
    CHECK(set(z8, "1,2") < set(z8, "1,2,3"));
    CHECK_THROWS_AS(a.insert(8), InvalidArgument);
    CHECK_THROWS_AS(a |= ElementSet(FiniteGroup::cyclic(9)), InvalidArgument);
    CHECK(involution_count(set(z8, "1,4,7")) == 1);
    CHECK(ElementSet::nonidentity(z8).size() == 7);
}
