#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cayley/error.hpp"
#include "cayley/io.hpp"
#include "cli.hpp"
#include "helpers.hpp"

using namespace cayley;
using testing::set;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli_run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// Compares against tests/golden/<name>; CAYLEY_UPDATE_GOLDEN=1 rewrites it.
void check_golden(const std::string& name, const std::string& actual) {
    const auto path = std::filesystem::path(CAYLEY_GOLDEN_DIR) / name;
    if (const char* env = std::getenv("CAYLEY_UPDATE_GOLDEN"); env && std::string(env) == "1") {
        std::ofstream(path) << actual;
        MESSAGE("rewrote " << path.string());
        return;
    }
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "missing golden file " << path.string());
    std::stringstream want;
    want << in.rdbuf();
    CHECK(want.str() == actual);
}

}  // namespace

TEST_CASE("group spec round trips") {
    for (const std::string spec : {"cyclic:10", "dihedral:5", "product:cyclic:2,cyclic:4",
                                   "product:cyclic:3,dihedral:4"}) {
        const auto g = parse_group(spec);
        CHECK(format_group(g) == spec);
        CHECK(group_from_json(group_to_json(g)) == g);
    }
    const auto j = parse_group(R"({"kind":"dihedral","n":6})");
    CHECK(j == FiniteGroup::dihedral(6));
    const auto t = FiniteGroup::from_table({{0, 1}, {1, 0}});
    CHECK(group_from_json(group_to_json(t)).order() == 2);
    CHECK_THROWS_WITH_AS(parse_group("bogus:3"), doctest::Contains("unsupported group tag"), Unsupported);
    CHECK_THROWS_AS(group_from_json(Json{{"kind", "weird"}}), Unsupported);
    CHECK_THROWS_AS(parse_group("cyclic:x"), InvalidArgument);
    CHECK_THROWS_AS(parse_group("cyclic:0"), InvalidArgument);
}

TEST_CASE("element literals") {
    const auto z10 = FiniteGroup::cyclic(10);
    CHECK(parse_element(z10, "-1") == 9);
    CHECK(parse_element(z10, "13") == 3);
    CHECK(format_element(z10, 9) == "9");

    const auto d10 = FiniteGroup::dihedral(5);
    for (Element x = 0; x < 10; ++x)
        CHECK(parse_element(d10, format_element(d10, x)) == x);
    CHECK(format_element(d10, 0) == "e");
    CHECK(format_element(d10, 1) == "r");
    CHECK(format_element(d10, 5) == "s");
    CHECK(format_element(d10, 6) == "sr");
    CHECK(format_element(d10, 8) == "sr^3");
    CHECK_THROWS_WITH_AS(parse_element(d10, "q"), doctest::Contains("malformed element literal"), InvalidArgument);
    CHECK_THROWS_AS(parse_element(d10, "r^x"), InvalidArgument);

    const auto p = FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::dihedral(3));
    for (Element x = 0; x < p.order(); ++x)
        CHECK(parse_element(p, format_element(p, x)) == x);
    CHECK_THROWS_AS(parse_element(p, "(1,r,2)"), InvalidArgument);
}

TEST_CASE("set literals and JSON") {
    const auto d10 = FiniteGroup::dihedral(5);
    const auto x = parse_set(d10, "{ r, r^4 , sr^2 }");
    CHECK(format_set(x) == "{r,r^4,sr^2}");
    CHECK(parse_set(d10, "{}").empty());
    CHECK(parse_set(d10, "").empty());
    CHECK(set_from_json(d10, set_to_json(x)) == x);
    CHECK(set_to_json(x) == Json::parse(R"(["r","r^4","sr^2"])"));

    const auto p = FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4));
    const auto y = parse_set(p, "(0,1),(0,3)");
    CHECK(set_to_json(y) == Json::parse("[[0,1],[0,3]]"));
    CHECK(set_from_json(p, set_to_json(y)) == y);

    const auto t = make_triple(set(d10, "r,r^4"), set(d10, "r^2,r^3"), set(d10, "r,r^2,r^3,r^4"));
    const auto back = triple_from_json(triple_to_json(t));
    CHECK(back == t);
    CHECK(back.verified);
    auto lie = triple_to_json(t);
    lie["U"] = Json::parse(R"(["r"])");
    lie["verified"] = true;
    CHECK_FALSE(triple_from_json(lie).verified);
}

TEST_CASE("report formats") {
    const auto z5 = FiniteGroup::cyclic(5);
    const auto r = near_factorization_census(z5);
    const auto j = report_to_json(z5, r);
    CHECK(j["count"] == 2);
    CHECK(j["exhaustive"] == true);
    CHECK(j["stats"].contains("nodes"));
    CHECK(j["triples"].size() == 2);
    const auto table = report_table(r);
    CHECK(table.find("{1,4}") != std::string::npos);
    CHECK(table.find("triples: 2  exhaustive: yes") != std::string::npos);
}

TEST_CASE("cli exit codes") {
    auto r = cli_run({"verify", "--group", "cyclic:10", "--S", "5", "--T", "4,6", "--U", "1,9"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out == "verified: true\n");

    r = cli_run({"verify", "--group", "cyclic:4", "--S", "1,3", "--T", "1,3", "--U", "2"});
    CHECK(r.code == cli::kExitFalse);
    CHECK(r.out.find("verified: false") != std::string::npos);
    CHECK(r.out.find("identity") != std::string::npos);

    r = cli_run({"table2", "--row", "1", "--n", "5"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out == "S={s}, T={r,r^4}, U={sr,sr^4}, verified\n");

    r = cli_run({"verify", "--group", "bogus:3", "--S", "1", "--T", "1", "--U", "1"});
    CHECK(r.code == cli::kExitError);
    CHECK(r.err.find("unsupported group tag") != std::string::npos);

    r = cli_run({"verify", "--group", "dihedral:5", "--S", "q", "--T", "r", "--U", "r"});
    CHECK(r.code == cli::kExitError);
    CHECK(r.err.find("malformed element literal") != std::string::npos);

    r = cli_run({"frobnicate"});
    CHECK(r.code == cli::kExitError);
    r = cli_run({});
    CHECK(r.code == cli::kExitError);
    r = cli_run({"--help"});
    CHECK(r.code == cli::kExitOk);

    r = cli_run({"table1", "--row", "pm-d", "--n", "6", "--d", "1"});
    CHECK(r.code == cli::kExitError);
    CHECK(r.err.find("ord(1)=6") != std::string::npos);

    r = cli_run({"enumerate", "--group", "cyclic:16", "--budget", "10"});
    CHECK(r.code == cli::kExitError);
    CHECK(r.err.find("budget") != std::string::npos);

    r = cli_run({"dstar", "--n", "24", "--budget", "1"});
    CHECK(r.code == cli::kExitError);
    CHECK(r.err.find("budget exhausted") != std::string::npos);

    r = cli_run({"sidon", "--group", "cyclic:5", "--S", "1,2", "--T", "1,2"});
    CHECK(r.code == cli::kExitFalse);
    r = cli_run({"sidon", "--group", "dihedral:3", "--S", "r", "--T", "s"});
    CHECK(r.code == cli::kExitError);

    r = cli_run({"char-check", "--group", "cyclic:5", "--S", "1,4", "--T", "2,3", "--U", "1,2,3,4"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("holds: true") != std::string::npos);
    r = cli_run({"char-check", "--group", "dihedral:5", "--S", "s", "--T", "r,r^4", "--U", "sr,sr^4"});
    CHECK(r.code == cli::kExitError);

    r = cli_run({"antipode", "--n", "8", "--S", "1,7", "--T", "2,6", "--U", "1,3,5,7"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out == "S={1,4,7}, T={2,6}, U={1,2,3,5,6,7}, verified\n");

    r = cli_run({"mask", "--n", "5", "--S", "1,4", "--T", "2,3", "--U", "1,2,3,4"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("F_S*F_T = X^1 + X^2 + X^3 + X^4") != std::string::npos);

    r = cli_run({"pecher", "--n", "5", "--S", "5", "--T", "4,6", "--U", "1,9"});
    CHECK(r.out == "S={s}, T={r,r^4}, U={sr,sr^4}, verified\n");
    r = cli_run({"pecher", "--n", "5", "--S", "s", "--T", "r,r^4", "--U", "sr,sr^4", "--backward"});
    CHECK(r.out == "S={5}, T={4,6}, U={1,9}, verified\n");
    r = cli_run({"pecher", "--n", "4", "--S", "1"});
    CHECK(r.code == cli::kExitError);

    r = cli_run({"eigen", "--group", "dihedral:5", "--U", "r,r^4"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("numeric check: ok") != std::string::npos);

    r = cli_run({"classes", "--group", "dihedral:5"});
    CHECK(r.out == "{e}\n{r,r^4}\n{r^2,r^3}\n{s,sr,sr^2,sr^3,sr^4}\n");
}

TEST_CASE("cli search output is independent of thread count") {
    const auto one = cli_run({"enumerate", "--group", "dihedral:6", "--max-size", "3", "--threads", "1", "--json"});
    const auto four = cli_run({"enumerate", "--group", "dihedral:6", "--max-size", "3", "--threads", "4", "--json"});
    CHECK(one.code == cli::kExitOk);
    CHECK(one.out == four.out);
}

TEST_CASE("golden reports") {
    check_golden("verify_z10.json",
                 cli_run({"verify", "--group", "cyclic:10", "--S", "5", "--T", "4,6", "--U", "1,9", "--json"}).out);
    check_golden("search_d10.json",
                 cli_run({"search", "--group", "dihedral:5", "--U", "r,r^2,r^3,r^4", "--json"}).out);
    check_golden("nearfact_z13.json", cli_run({"nearfact", "--group", "cyclic:13", "--json"}).out);
    check_golden("enumerate_klein.json",
                 cli_run({"enumerate", "--group", "product:cyclic:2,cyclic:2", "--json"}).out);
    check_golden("table2_row1_n5.json", cli_run({"table2", "--row", "1", "--n", "5", "--json"}).out);
    check_golden("dstar_16.json", cli_run({"dstar", "--n", "16", "--json"}).out);
    check_golden("nearfact_z5.txt", cli_run({"nearfact", "--group", "cyclic:5"}).out);
}
