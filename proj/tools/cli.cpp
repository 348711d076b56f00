#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <vector>

#include "cayley/abelian.hpp"
#include "cayley/characters.hpp"
#include "cayley/dihedral.hpp"
#include "cayley/error.hpp"
#include "cayley/factor.hpp"
#include "cayley/io.hpp"
#include "cayley/search.hpp"
#include "cayley/structure.hpp"

namespace cayley::cli {

namespace {

struct Options {
    std::string group;
    std::optional<std::string> s, t, u;
    bool json = false;
    int threads = default_thread_count();
    long long budget = 50'000'000;
    int max_size = 0;
    bool connected = false;
    bool dedup = false;
    int n = 0;
    std::string row;
    int d = 0, g = 1, m = 1, uu = 1, a = 0;
    std::string i_list, j_list, us_list;
    bool backward = false;
};

std::string triple_line(const FactorTriple& t) {
    return "S=" + format_set(t.S) + ", T=" + format_set(t.T) + ", U=" + format_set(t.U) + ", " +
           (t.verified ? "verified" : "not verified");
}

std::vector<int> parse_ints(const std::string& text, const char* what) {
    std::vector<int> out;
    std::string field;
    std::string body = text;
    if (!body.empty() && body.front() == '{' && body.back() == '}')
        body = body.substr(1, body.size() - 2);
    std::stringstream ss(body);
    while (std::getline(ss, field, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(field, &used));
            if (used != field.size())
                throw std::invalid_argument(field);
        } catch (const std::exception&) {
            throw InvalidArgument(std::string("malformed integer list for ") + what + ": '" + text + "'");
        }
    }
    return out;
}

std::string fmt_double(double x) {
    if (std::abs(x) < 5e-7)
        x = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

std::string fmt_complex(Complex z) {
    if (std::abs(z.imag()) < 5e-7)
        return fmt_double(z.real());
    return fmt_double(z.real()) + (z.imag() < 0 ? "-" : "+") + fmt_double(std::abs(z.imag())) + "i";
}

Json complex_json(Complex z) {
    auto clean = [](double x) { return std::abs(x) < 5e-7 ? 0.0 : std::round(x * 1e9) / 1e9; };
    return Json::array({clean(z.real()), clean(z.imag())});
}

class Runner {
  public:
    Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

    FiniteGroup group() const {
        if (o_.group.empty())
            throw InvalidArgument("--group is required");
        return parse_group(o_.group);
    }
    ElementSet set(const FiniteGroup& g, const std::optional<std::string>& text, const char* flag) const {
        if (!text)
            throw InvalidArgument(std::string(flag) + " is required");
        return parse_set(g, *text);
    }
    int need_n() const {
        if (o_.n < 1)
            throw InvalidArgument("--n is required");
        return o_.n;
    }
    void print_json(const Json& j) { out_ << j.dump(2) << '\n'; }

    SearchOptions search_options() const {
        SearchOptions opts;
        opts.max_s = opts.max_t = o_.max_size;
        opts.require_connected = o_.connected;
        opts.dedup = o_.dedup;
        opts.threads = o_.threads;
        opts.node_budget = o_.budget;
        return opts;
    }

    int print_report(const FiniteGroup& g, const SearchReport& r) {
        if (o_.json)
            print_json(report_to_json(g, r));
        else
            out_ << report_table(r);
        if (!r.exhaustive) {
            err_ << "error: node budget exhausted after " << r.stats.nodes << " nodes; the report is partial\n";
            return kExitError;
        }
        return kExitOk;
    }

    int print_triple(const FactorTriple& t) {
        if (o_.json)
            print_json(triple_to_json(t));
        else
            out_ << triple_line(t) << '\n';
        return t.verified ? kExitOk : kExitFalse;
    }

    int verify() {
        const auto g = group();
        const auto s = set(g, o_.s, "--S"), t = set(g, o_.t, "--T"), u = set(g, o_.u, "--U");
        const auto report = verify_triple(s, t, u);
        if (o_.json) {
            Json j = triple_to_json(make_triple(s, t, u));
            j["violation"] = report.ok ? Json(nullptr) : Json(report.describe());
            print_json(j);
        } else {
            out_ << "verified: " << (report.ok ? "true" : "false") << '\n';
            if (!report.ok)
                out_ << "violation: " << report.describe() << '\n';
        }
        return report.ok ? kExitOk : kExitFalse;
    }

    int search() {
        const auto g = group();
        const auto u = set(g, o_.u, "--U");
        return print_report(g, find_factor_pairs(u, search_options()));
    }

    int enumerate() {
        const auto g = group();
        return print_report(g, enumerate_triples(g, search_options()));
    }

    int nearfact() {
        const auto g = group();
        return print_report(g, near_factorization_census(g, search_options()));
    }

    int sidon() {
        const auto g = group();
        const auto s = set(g, o_.s, "--S"), t = set(g, o_.t, "--T");
        const bool ok = sidon_pair(s, t);
        const int max = rep_counts(s, t).max();
        if (o_.json)
            print_json({{"sidon", ok}, {"max_count", max}});
        else
            out_ << "sidon: " << (ok ? "true" : "false") << "\nmax count: " << max << '\n';
        return ok ? kExitOk : kExitFalse;
    }

    int mask() {
        const auto z = FiniteGroup::cyclic(need_n());
        const auto s = set(z, o_.s, "--S"), t = set(z, o_.t, "--T");
        const auto fs = MaskPolynomial::of(s), ft = MaskPolynomial::of(t);
        const auto prod = fs * ft;
        std::optional<bool> matches;
        if (o_.u)
            matches = verify_via_mask(s, t, parse_set(z, *o_.u));
        if (o_.json) {
            Json j = {{"F_S", fs.to_string()}, {"F_T", ft.to_string()}, {"product", prod.to_string()}};
            if (matches)
                j["matches"] = *matches;
            print_json(j);
        } else {
            out_ << "F_S = " << fs.to_string() << "\nF_T = " << ft.to_string() << "\nF_S*F_T = " << prod.to_string()
                 << '\n';
            if (matches)
                out_ << "matches U: " << (*matches ? "true" : "false") << '\n';
        }
        return matches.value_or(true) ? kExitOk : kExitFalse;
    }

    int crt() {
        const auto crt = crt_split(need_n());
        Json j = {{"n", crt.n()}, {"moduli", crt.moduli()}};
        std::string text = "moduli:";
        for (int q : crt.moduli())
            text += " " + std::to_string(q);
        text += '\n';
        std::vector<std::optional<std::vector<ElementSet>>> forms;
        std::vector<ElementSet> sets;
        for (auto [name, src] : {std::pair{"S", &o_.s}, std::pair{"T", &o_.t}, std::pair{"U", &o_.u}}) {
            if (!*src)
                continue;
            sets.push_back(parse_set(crt.cyclic(), **src));
            forms.push_back(crt.product_form_components(sets.back()));
            text += std::string(name) + ": ";
            if (forms.back()) {
                Json parts = Json::array();
                for (std::size_t k = 0; k < forms.back()->size(); ++k) {
                    text += (k ? " x " : "") + format_set((*forms.back())[k]);
                    parts.push_back(set_to_json((*forms.back())[k]));
                }
                j[name] = parts;
            } else {
                text += "not of product form";
                j[name] = nullptr;
            }
            text += '\n';
        }
        int code = kExitOk;
        if (sets.size() == 3) {
            const bool composite = verify_triple(sets[0], sets[1], sets[2]).ok;
            j["composite_verified"] = composite;
            text += std::string("composite verified: ") + (composite ? "true" : "false") + '\n';
            if (forms[0] && forms[1] && forms[2]) {
                Json comps = Json::array();
                text += "components verified:";
                for (std::size_t k = 0; k < crt.moduli().size(); ++k) {
                    const bool ok = verify_triple((*forms[0])[k], (*forms[1])[k], (*forms[2])[k]).ok;
                    comps.push_back(ok);
                    text += ok ? " true" : " false";
                }
                text += '\n';
                j["components_verified"] = comps;
            }
            code = composite ? kExitOk : kExitFalse;
        }
        if (o_.json)
            print_json(j);
        else
            out_ << text;
        return code;
    }

    int antipode() {
        const auto z = FiniteGroup::cyclic(need_n());
        auto result = antipode_augment(set(z, o_.s, "--S"), set(z, o_.t, "--T"), set(z, o_.u, "--U"));
        if (!result) {
            if (o_.json)
                print_json({{"augmented", nullptr}});
            else
                out_ << "no augmentation: a+T meets U0\n";
            return kExitFalse;
        }
        return print_triple(*result);
    }

    int table1() {
        const int n = need_n();
        const auto z = FiniteGroup::cyclic(n);
        FactorTriple t;
        if (o_.row == "multiplier" || o_.row == "1") {
            t = table1_multiplier(o_.g, make_triple(set(z, o_.s, "--S"), set(z, o_.t, "--T"), set(z, o_.u, "--U")));
        } else if (o_.row == "half-shift" || o_.row == "2") {
            t = table1_half_shift(n, set(z, o_.u, "--U"));
        } else if (o_.row == "pm-d" || o_.row == "3") {
            t = table1_pm_d(n, o_.d);
        } else if (o_.row == "index-sets" || o_.row == "4") {
            const auto i = parse_ints(o_.i_list, "--I"), j = parse_ints(o_.j_list, "--J");
            t = table1_index_sets(n, i, j);
        } else {
            throw InvalidArgument("--row must be multiplier, half-shift, pm-d or index-sets");
        }
        return print_triple(t);
    }

    int table2() {
        int row = 0;
        try {
            row = std::stoi(o_.row);
        } catch (const std::exception&) {
            throw InvalidArgument("--row must be 1..8");
        }
        Table2Params p;
        p.m = o_.m;
        p.u = o_.uu;
        p.a = o_.a;
        if (!o_.us_list.empty())
            p.us = parse_ints(o_.us_list, "--us");
        return print_triple(table2_family(row, need_n(), p));
    }

    int pecher() {
        const PecherCorrespondence pc(need_n());
        const auto& from = o_.backward ? pc.dihedral() : pc.cyclic();
        auto image = [&](const ElementSet& x) { return o_.backward ? pc.inverse(x) : pc.forward(x); };
        if (o_.s && o_.t && o_.u) {
            const auto t = make_triple(parse_set(from, *o_.s), parse_set(from, *o_.t), parse_set(from, *o_.u));
            if (!t.verified)
                throw PreconditionViolation("input triple is not verified: " +
                                            verify_triple(t.S, t.T, t.U).describe());
            return print_triple(o_.backward ? transfer_backward(pc, t) : transfer_forward(pc, t));
        }
        Json j = Json::object();
        bool any = false;
        for (auto [name, src] : {std::pair{"S", &o_.s}, std::pair{"T", &o_.t}, std::pair{"U", &o_.u}}) {
            if (!*src)
                continue;
            any = true;
            const auto x = parse_set(from, **src);
            const auto y = image(x);
            j[name] = set_to_json(y);
            if (!o_.json)
                out_ << name << ": " << format_set(x) << " -> " << format_set(y) << '\n';
        }
        if (!any)
            throw InvalidArgument("pecher needs at least one of --S, --T, --U");
        if (o_.json)
            print_json(j);
        return kExitOk;
    }

    int char_check() {
        const auto g = group();
        const auto report = criterion_check(set(g, o_.s, "--S"), set(g, o_.t, "--T"), set(g, o_.u, "--U"));
        if (o_.json) {
            Json rows = Json::array();
            for (const auto& r : report.rows)
                rows.push_back({{"character", r.label},
                                {"degree", r.degree},
                                {"chi_S", complex_json(r.chi_s)},
                                {"chi_T", complex_json(r.chi_t)},
                                {"chi_U", complex_json(r.chi_u)},
                                {"ok", r.residual <= kCharacterTolerance}});
            Json j = {{"holds", report.holds}, {"rows", rows}};
            if (!report.rejected.empty())
                j["rejected"] = report.rejected;
            print_json(j);
        } else {
            for (const auto& r : report.rows)
                out_ << r.label << "  deg " << r.degree << "  chi(S)=" << fmt_complex(r.chi_s)
                     << "  chi(T)=" << fmt_complex(r.chi_t) << "  chi(U)=" << fmt_complex(r.chi_u)
                     << "  residual=" << fmt_double(r.residual) << '\n';
            out_ << "holds: " << (report.holds ? "true" : "false");
            if (!report.rejected.empty())
                out_ << " (" << report.rejected << ")";
            out_ << '\n';
        }
        return report.holds ? kExitOk : kExitFalse;
    }

    int eigen() {
        const auto g = group();
        const auto x = set(g, o_.u, "--U");
        const auto table = character_table(g);
        const auto values = cayley_eigenvalues(x);
        const bool agrees = !is_symmetric(x) || spectrum_discrepancy(x) <= kCharacterTolerance;
        if (o_.json) {
            Json rows = Json::array();
            for (std::size_t k = 0; k < values.size(); ++k)
                rows.push_back({{"character", table->characters[k].label},
                                {"value", complex_json(values[k].value)},
                                {"multiplicity", values[k].multiplicity}});
            print_json({{"eigenvalues", rows}, {"numeric_agreement", agrees}});
        } else {
            for (std::size_t k = 0; k < values.size(); ++k)
                out_ << table->characters[k].label << "  " << fmt_complex(values[k].value) << "  x"
                     << values[k].multiplicity << '\n';
            out_ << "numeric check: " << (agrees ? "ok" : "MISMATCH") << '\n';
        }
        return agrees ? kExitOk : kExitFalse;
    }

    int dstar_cmd() {
        const auto r = dstar(need_n(), o_.budget, o_.threads);
        if (o_.json)
            print_json({{"n", o_.n},
                        {"dstar", r.d},
                        {"S", set_to_json(r.S)},
                        {"T", set_to_json(r.T)},
                        {"nodes", r.nodes}});
        else
            out_ << "dstar(" << o_.n << ") = " << r.d << "\nS=" << format_set(r.S) << "\nT=" << format_set(r.T)
                 << "\nnodes: " << r.nodes << '\n';
        return kExitOk;
    }

    int classes() {
        const auto g = group();
        Json j = Json::array();
        for (const auto& cls : conjugacy_classes(g)) {
            const ElementSet x(g, std::span<const Element>(cls));
            j.push_back(set_to_json(x));
            if (!o_.json)
                out_ << format_set(x) << '\n';
        }
        if (o_.json)
            print_json({{"group", group_to_json(g)}, {"classes", j}});
        return kExitOk;
    }

  private:
    const Options& o_;
    std::ostream& out_;
    std::ostream& err_;
};

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cayley-graph factorization toolkit", "cayley-factor"};
    app.require_subcommand(1);
    Options o;
    Runner runner(o, out, err);
    std::function<int()> action;

    auto group_opt = [&](CLI::App* c) { c->add_option("--group", o.group, "cyclic:N, dihedral:N, product:...,... or JSON"); };
    auto sets = [&](CLI::App* c) {
        c->add_option("--S", o.s, "set literal");
        c->add_option("--T", o.t, "set literal");
        c->add_option("--U", o.u, "set literal");
    };
    auto json = [&](CLI::App* c) { c->add_flag("--json", o.json, "JSON output"); };
    auto search_flags = [&](CLI::App* c) {
        c->add_option("--threads", o.threads, "worker threads (0 = all cores)");
        c->add_option("--budget", o.budget, "node budget")->check(CLI::PositiveNumber);
        c->add_option("--max-size", o.max_size, "bound on |S| and |T|")->check(CLI::NonNegativeNumber);
        c->add_flag("--connected", o.connected, "keep only connected Cay(G;U)");
        c->add_flag("--dedup", o.dedup, "one representative per automorphism orbit");
    };
    auto n_opt = [&](CLI::App* c) { c->add_option("--n", o.n, "modulus or dihedral parameter"); };
    auto add = [&](const std::string& name, const std::string& help, auto setup, int (Runner::*fn)()) {
        CLI::App* c = app.add_subcommand(name, help);
        setup(c);
        json(c);
        c->callback([&action, &runner, fn] { action = [&runner, fn] { return (runner.*fn)(); }; });
    };

    add("verify", "check a triple", [&](CLI::App* c) { group_opt(c); sets(c); }, &Runner::verify);
    add("search", "all factor pairs of U", [&](CLI::App* c) { group_opt(c); sets(c); search_flags(c); },
        &Runner::search);
    add("enumerate", "all factorable triples", [&](CLI::App* c) { group_opt(c); search_flags(c); },
        &Runner::enumerate);
    add("nearfact", "near-factorization census", [&](CLI::App* c) { group_opt(c); search_flags(c); },
        &Runner::nearfact);
    add("sidon", "Sidon pair test", [&](CLI::App* c) { group_opt(c); sets(c); }, &Runner::sidon);
    add("mask", "mask polynomial product", [&](CLI::App* c) { n_opt(c); sets(c); }, &Runner::mask);
    add("crt", "CRT decomposition", [&](CLI::App* c) { n_opt(c); sets(c); }, &Runner::crt);
    add("antipode", "antipode augmentation", [&](CLI::App* c) { n_opt(c); sets(c); }, &Runner::antipode);
    add("table1", "circulant families",
        [&](CLI::App* c) {
            n_opt(c);
            sets(c);
            c->add_option("--row", o.row, "multiplier, half-shift, pm-d or index-sets")->required();
            c->add_option("--d", o.d, "d for pm-d");
            c->add_option("--g", o.g, "unit for multiplier");
            c->add_option("--I", o.i_list, "index set I");
            c->add_option("--J", o.j_list, "index set J");
        },
        &Runner::table1);
    add("table2", "dihedral families",
        [&](CLI::App* c) {
            n_opt(c);
            c->add_option("--row", o.row, "row 1..8")->required();
            c->add_option("--m", o.m, "m");
            c->add_option("--u", o.uu, "u");
            c->add_option("--a", o.a, "a");
            c->add_option("--us", o.us_list, "u_1,...,u_k for row 8");
        },
        &Runner::table2);
    add("pecher", "Pecher correspondence Z_2n <-> D_2n",
        [&](CLI::App* c) {
            n_opt(c);
            sets(c);
            c->add_flag("--backward", o.backward, "map D_2n sets back to Z_2n");
        },
        &Runner::pecher);
    add("char-check", "character criterion", [&](CLI::App* c) { group_opt(c); sets(c); }, &Runner::char_check);
    add("eigen", "Cayley graph eigenvalues of U", [&](CLI::App* c) { group_opt(c); sets(c); }, &Runner::eigen);
    add("dstar", "d*(Z_n)",
        [&](CLI::App* c) {
            n_opt(c);
            c->add_option("--threads", o.threads, "worker threads");
            c->add_option("--budget", o.budget, "node budget")->check(CLI::PositiveNumber);
        },
        &Runner::dstar_cmd);
    add("classes", "conjugacy classes", [&](CLI::App* c) { group_opt(c); }, &Runner::classes);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitError;
    }
    try {
        return action();
    } catch (const BudgetExceeded& e) {
        err << "error: budget exhausted: " << e.what() << '\n';
    } catch (const Unsupported& e) {
        err << "error: unsupported: " << e.what() << '\n';
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitError;
}

}  // namespace cayley::cli
