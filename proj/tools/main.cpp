// Command-line interface: weight-set queries, type and Jordan-Holder
// computations, the integer-quantity tables, and the verification suites.
// Exit codes: 0 success (no violations), 1 violations found, 2 bad input.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "sw/verify.hpp"

using json = nlohmann::ordered_json;
using namespace sw;

namespace {

std::vector<std::int64_t> parse_int_list(const std::string& s) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw input_error("empty entry in list: " + s);
        out.push_back(std::stoll(tok));
    }
    if (out.empty()) throw input_error("empty list");
    return out;
}

std::vector<int> parse_vec(const std::string& s, int expect) {
    const auto xs = parse_int_list(s);
    if (static_cast<int>(xs.size()) != expect)
        throw input_error("expected " + std::to_string(expect) + " entries, got " +
                          std::to_string(xs.size()));
    return std::vector<int>(xs.begin(), xs.end());
}

// Niveau-1 subsets print 1-based indices tau_1..tau_r (index 0 is tau_r);
// niveau-2 subsets print 0-based indices sigma_0..sigma_{2r-1}.
json mask_json(std::uint32_t mask, int n, bool one_based) {
    json idx = json::array();
    if (one_based) {
        for (int j = 1; j <= n; ++j)
            if (delta(mask, j % n, n)) idx.push_back(j);
    } else {
        for (int j = 0; j < n; ++j)
            if (delta(mask, j, n)) idx.push_back(j);
    }
    return json{{"mask", mask}, {"indices", idx}};
}

json weight_json(const SerreWeight& w) {
    return json{{"a", to_printed(w.a)}, {"b", to_printed(w.b)}};
}

const char* class_name(RegularityClass c) {
    switch (c) {
        case RegularityClass::Regular: return "regular";
        case RegularityClass::WeaklyRegularOnly: return "weakly-regular-only";
        default: return "not-weakly-regular";
    }
}

struct CharFlags {
    std::string name;
    std::int64_t value = -1;
    std::string digits;
    int niveau = 1;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--" + name, value, name + " as a residue");
        cmd->add_option("--" + name + "-digits", digits,
                        name + " as a comma digit list in the omega basis");
    }
    bool given() const { return value >= 0 || !digits.empty(); }
    CharExp get(const FieldContext& ctx) const {
        if (!digits.empty()) {
            auto printed = parse_vec(digits, ctx.n(niveau));
            return encode_char(
                ctx, DigitVector{niveau, niveau == 1 ? from_printed(printed) : printed});
        }
        if (value < 0) throw input_error("missing --" + name);
        return make_char(ctx, niveau, value);
    }
};

struct Output {
    bool table = false;
    std::string out_file;

    void emit(const json& j, const std::string& table_text) const {
        std::ostringstream os;
        if (table)
            os << table_text;
        else
            os << j.dump(2) << "\n";
        if (out_file.empty()) {
            std::cout << os.str();
        } else {
            std::ofstream f(out_file);
            if (!f) throw input_error("cannot open output file: " + out_file);
            f << os.str();
        }
    }
};

json data_json(const FieldContext& ctx, const LocalGaloisData& data) {
    json j{{"p", ctx.p}, {"r", ctx.r}};
    if (const auto* red = std::get_if<ReducibleData>(&data)) {
        j["kind"] = "reducible";
        j["psi1"] = red->psi1.exp;
        j["psi2"] = red->psi2.exp;
    } else {
        j["kind"] = "irreducible";
        j["theta"] = std::get<IrreducibleData>(data).theta.exp;
    }
    return j;
}

LocalGaloisData parse_data(const FieldContext& ctx, bool reducible, bool irreducible,
                           const CharFlags& psi1, const CharFlags& psi2,
                           const CharFlags& theta) {
    if (reducible == irreducible)
        throw input_error("specify exactly one of --reducible / --irreducible");
    if (reducible) {
        if (!psi1.given() || !psi2.given())
            throw input_error("--reducible requires --psi1 and --psi2");
        return ReducibleData{psi1.get(ctx), psi2.get(ctx)};
    }
    if (!theta.given()) throw input_error("--irreducible requires --theta");
    return make_irreducible(ctx, theta.get(ctx).exp);
}

int run_cli(int argc, char** argv) {
    CLI::App app{"Serre-weight sets, inertial types and mod-p Jordan-Holder "
                 "decompositions for two-dimensional tame local data"};
    app.require_subcommand(1);
    app.fallthrough();  // --table/--json/--out may follow the subcommand

    Output out;
    app.add_flag("--table", out.table, "human-readable output instead of JSON");
    bool json_flag = false;
    app.add_flag("--json", json_flag, "JSON output (default)");
    app.add_option("--out", out.out_file, "write output to a file");

    std::int64_t p = 0;
    int r = 0;
    std::string a_str, b_str;
    std::int64_t J_mask = -1, fullJ_mask = -1;
    bool regular_only = false, reducible = false, irreducible = false;
    CharFlags psi1{"psi1"}, psi2{"psi2"}, theta{"theta"};
    theta.niveau = 2;
    CharFlags chi1{"chi1"}, chi2{"chi2"};

    auto add_pr = [&](CLI::App* cmd) {
        cmd->add_option("--p", p, "prime p")->required();
        cmd->add_option("--r", r, "residue degree r")->required();
    };

    // weights ---------------------------------------------------------
    auto* w_cmd = app.add_subcommand("weights", "enumerate canonical weights");
    add_pr(w_cmd);
    std::string class_filter;
    w_cmd->add_flag("--regular", regular_only, "only regular weights");
    w_cmd->add_option("--class", class_filter,
                      "regular | weakly-regular-only | not-weakly-regular");

    // weight-set ------------------------------------------------------
    auto* ws_cmd = app.add_subcommand("weight-set", "predicted weight set of local data");
    ws_cmd->add_option("--p", p, "prime p");
    ws_cmd->add_option("--r", r, "residue degree r");
    ws_cmd->add_flag("--reducible", reducible, "reducible local data");
    ws_cmd->add_flag("--irreducible", irreducible, "irreducible local data");
    psi1.add_to(ws_cmd);
    psi2.add_to(ws_cmd);
    theta.add_to(ws_cmd);
    ws_cmd->add_flag("--regular", regular_only, "restrict to regular weights");
    std::vector<std::string> places;
    ws_cmd->add_option("--place", places,
                       "multi-place mode; repeatable spec p=5,r=1,psi1=2,psi2=0 or "
                       "p=5,r=1,theta=10");

    // type ------------------------------------------------------------
    auto* t_cmd = app.add_subcommand("type", "inertial type attached to a weight and subset");
    add_pr(t_cmd);
    t_cmd->add_option("--a", a_str, "determinant exponents a_1,..,a_r")->required();
    t_cmd->add_option("--b", b_str, "weight exponents b_1,..,b_r")->required();
    t_cmd->add_option("--J", J_mask, "subset of S as a bitmask (bit j = tau_j)");
    t_cmd->add_option("--full-J", fullJ_mask, "full subset of S' as a bitmask (bit j = sigma_j)");

    // jh --------------------------------------------------------------
    auto* jh_cmd = app.add_subcommand("jh", "Jordan-Holder factors of a type reduction");
    add_pr(jh_cmd);
    chi1.add_to(jh_cmd);
    chi2.add_to(jh_cmd);
    jh_cmd->add_option("--a", a_str, "weight route: determinant exponents");
    jh_cmd->add_option("--b", b_str, "weight route: weight exponents");
    jh_cmd->add_option("--J", J_mask, "weight route: subset (principal series)");
    jh_cmd->add_option("--full-J", fullJ_mask, "weight route: full subset (cuspidal)");

    // compat ----------------------------------------------------------
    auto* c_cmd = app.add_subcommand("compat", "compatibility witnesses / J-regularity");
    add_pr(c_cmd);
    c_cmd->add_flag("--reducible", reducible, "reducible local data");
    c_cmd->add_flag("--irreducible", irreducible, "irreducible local data");
    psi1.add_to(c_cmd);
    psi2.add_to(c_cmd);
    theta.add_to(c_cmd);
    c_cmd->add_option("--a", a_str, "weight determinant exponents");
    c_cmd->add_option("--b", b_str, "weight exponents");
    bool jreg = false;
    c_cmd->add_flag("--jreg", jreg, "test J-regularity of the pair instead");
    c_cmd->add_option("--J", J_mask, "subset for --jreg");

    // fl ----------------------------------------------------------------
    auto* fl_cmd = app.add_subcommand("fl", "integer quantities and crystalline lift tables");
    add_pr(fl_cmd);
    fl_cmd->add_option("--b", b_str, "weight exponents b_1,..,b_r")->required();
    fl_cmd->add_option("--J", J_mask, "subset of S")->required();

    // verify ------------------------------------------------------------
    auto* v_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    v_cmd->add_option("suite", suite, "one of: typeswts typeswts2 tau-identity fl-properties "
                                      "rank1-oracle jhcompat-witness lift-model lemma-compat "
                                      "weak-regularity dimension")
        ->required();
    std::string p_list = "5", r_list = "1";
    v_cmd->add_option("--p", p_list, "comma list of primes");
    v_cmd->add_option("--r", r_list, "comma list of residue degrees");
    VerifyOptions vopt;
    v_cmd->add_option("--jobs", vopt.jobs, "worker threads (default: cores)");
    v_cmd->add_option("--max-seconds", vopt.max_seconds, "soft time budget");

    CLI11_PARSE(app, argc, argv);

    // ------------------------------------------------------------------
    if (w_cmd->parsed()) {
        const FieldContext ctx = make_context(p, r);
        std::optional<RegularityClass> filter;
        if (regular_only || class_filter == "regular") filter = RegularityClass::Regular;
        else if (class_filter == "weakly-regular-only") filter = RegularityClass::WeaklyRegularOnly;
        else if (class_filter == "not-weakly-regular") filter = RegularityClass::NotWeaklyRegular;
        else if (!class_filter.empty()) throw input_error("unknown --class: " + class_filter);
        const auto ws = enumerate_weights(ctx, filter);
        json jw = json::array();
        std::ostringstream tab;
        for (const auto& w : ws) {
            json e = weight_json(w);
            e["class"] = class_name(classify_weight(ctx, w));
            jw.push_back(e);
            tab << e["a"].dump() << " " << e["b"].dump() << " " << e["class"].get<std::string>()
                << "\n";
        }
        out.emit(json{{"p", p}, {"r", r}, {"count", ws.size()}, {"weights", jw}},
                 tab.str() + std::to_string(ws.size()) + " weights\n");
        return 0;
    }

    if (ws_cmd->parsed()) {
        if (!places.empty()) {
            std::vector<Place> pl;
            for (const std::string& spec : places) {
                std::int64_t pp = 0, psi1v = -1, psi2v = -1, thetav = -1;
                int rr = 0;
                std::stringstream ss(spec);
                std::string tok;
                while (std::getline(ss, tok, ',')) {
                    const auto eq = tok.find('=');
                    if (eq == std::string::npos) throw input_error("bad --place entry: " + tok);
                    const std::string key = tok.substr(0, eq);
                    const std::int64_t val = std::stoll(tok.substr(eq + 1));
                    if (key == "p") pp = val;
                    else if (key == "r") rr = static_cast<int>(val);
                    else if (key == "psi1") psi1v = val;
                    else if (key == "psi2") psi2v = val;
                    else if (key == "theta") thetav = val;
                    else throw input_error("bad --place key: " + key);
                }
                const FieldContext ctx = make_context(pp, rr);
                if (thetav >= 0)
                    pl.push_back(Place{ctx, make_irreducible(ctx, thetav)});
                else if (psi1v >= 0 && psi2v >= 0)
                    pl.push_back(Place{ctx, make_reducible(ctx, psi1v, psi2v)});
                else
                    throw input_error("--place needs theta or psi1+psi2: " + spec);
            }
            const auto prod = global_weight_set(pl, regular_only);
            json jw = json::array();
            for (const auto& gw : prod) {
                json fs = json::array();
                for (const auto& f : gw.factors) fs.push_back(weight_json(f));
                json ord = json::array();
                for (std::size_t v = 0; v < pl.size(); ++v)
                    if ((gw.ordinary_places >> v) & 1u) ord.push_back(v);
                jw.push_back(json{{"factors", fs}, {"ordinary_places", ord}});
            }
            out.emit(json{{"places", places.size()}, {"count", prod.size()}, {"weights", jw}},
                     std::to_string(prod.size()) + " product weights\n");
            return 0;
        }
        if (p == 0 || r == 0) throw input_error("weight-set needs --p and --r (or --place)");
        const FieldContext ctx = make_context(p, r);
        const LocalGaloisData data = parse_data(ctx, reducible, irreducible, psi1, psi2, theta);
        const auto ws = local_weight_set(ctx, data, regular_only);
        json jw = json::array();
        std::ostringstream tab;
        for (const auto& e : ws) {
            json w = weight_json(e.weight);
            json wit = json::array();
            for (std::uint32_t m : e.witnesses)
                wit.push_back(mask_json(m, std::holds_alternative<ReducibleData>(data) ? r : 2 * r,
                                        std::holds_alternative<ReducibleData>(data)));
            w["witnesses"] = wit;
            w["ordinary"] = classify_ordinary(ctx, data, e.weight) == Ordinarity::Ordinary;
            jw.push_back(w);
            tab << w["a"].dump() << " " << w["b"].dump()
                << (w["ordinary"].get<bool>() ? " ordinary" : "") << "\n";
        }
        out.emit(json{{"data", data_json(ctx, data)}, {"count", ws.size()}, {"weights", jw}},
                 tab.str() + std::to_string(ws.size()) + " weights\n");
        return 0;
    }

    if (t_cmd->parsed()) {
        const FieldContext ctx = make_context(p, r);
        const SerreWeight w = weight_from_printed(ctx, parse_vec(a_str, r), parse_vec(b_str, r));
        if ((J_mask >= 0) == (fullJ_mask >= 0))
            throw input_error("specify exactly one of --J / --full-J");
        json j;
        std::ostringstream tab;
        if (J_mask >= 0) {
            const ReducibleType t = type_reducible(ctx, w, static_cast<std::uint32_t>(J_mask));
            j = json{{"kind", "ps"},
                     {"J", mask_json(static_cast<std::uint32_t>(J_mask), r, true)},
                     {"c", to_printed(t.c.c)},
                     {"chi", t.chi.exp},
                     {"chi1", t.type.first.exp},
                     {"chi2", t.type.second.exp}};
            tab << "principal series {" << t.type.first.exp << ", " << t.type.second.exp << "}\n";
        } else {
            const std::uint32_t J = static_cast<std::uint32_t>(fullJ_mask);
            const IrreducibleType t = type_irreducible(ctx, w, J);
            const InertialType simple = type_irreducible_simple(ctx, w, J);
            j = json{{"kind", "cusp"},
                     {"full_J", mask_json(J, 2 * r, false)},
                     {"K_J", mask_json(t.K_J, r, true)},
                     {"c", to_printed(t.c.c)},
                     {"psi", t.psi.exp},
                     {"theta", t.type.first.exp},
                     {"theta_conj", t.type.second.exp},
                     {"simple_route_agrees", t.type == simple}};
            tab << "cuspidal {" << t.type.first.exp << ", " << t.type.second.exp << "}\n";
        }
        out.emit(j, tab.str());
        return 0;
    }

    if (jh_cmd->parsed()) {
        const FieldContext ctx = make_context(p, r);
        std::vector<JhFactor> factors;
        json head;
        if (chi1.given() || chi2.given()) {
            const CharExp x1 = chi1.get(ctx), x2 = chi2.get(ctx);
            factors = jh_principal(ctx, x1, x2);
            head = json{{"kind", "ps"}, {"chi1", x1.exp}, {"chi2", x2.exp}};
        } else {
            const SerreWeight w =
                weight_from_printed(ctx, parse_vec(a_str, r), parse_vec(b_str, r));
            if (fullJ_mask >= 0) {
                const IrreducibleType t =
                    type_irreducible(ctx, w, static_cast<std::uint32_t>(fullJ_mask));
                factors = jh_cuspidal(ctx, t.c, t.psi);
                head = json{{"kind", "cusp"}, {"theta", t.type.first.exp}};
            } else if (J_mask >= 0) {
                const ReducibleType t = type_reducible(ctx, w, static_cast<std::uint32_t>(J_mask));
                factors = jh_principal(ctx, t.type.first, t.type.second);
                head = json{{"kind", "ps"},
                            {"chi1", t.type.first.exp},
                            {"chi2", t.type.second.exp}};
            } else {
                throw input_error("jh needs --chi1/--chi2, or --a/--b with --J or --full-J");
            }
        }
        json jf = json::array();
        std::ostringstream tab;
        for (const auto& f : factors) {
            json e{{"K", f.K}};
            if (f.weight) {
                e["a"] = to_printed(f.weight->a);
                e["b"] = to_printed(f.weight->b);
            } else {
                e["zero"] = true;
            }
            e["dim"] = f.dim;
            jf.push_back(e);
            tab << "K=" << f.K << " " << (f.weight ? e["a"].dump() + " " + e["b"].dump() : "zero")
                << " dim " << f.dim << "\n";
        }
        head["factors"] = jf;
        head["total_dim"] = jh_total_dim(factors);
        out.emit(head, tab.str());
        return 0;
    }

    if (c_cmd->parsed()) {
        const FieldContext ctx = make_context(p, r);
        if (jreg) {
            if (J_mask < 0) throw input_error("--jreg requires --J");
            if (!psi1.given() || !psi2.given()) throw input_error("--jreg requires --psi1, --psi2");
            const ReducibleData d{psi1.get(ctx), psi2.get(ctx)};
            const auto wit = is_J_regular(ctx, d, static_cast<std::uint32_t>(J_mask));
            json j{{"J", mask_json(static_cast<std::uint32_t>(J_mask), r, true)},
                   {"j_regular", wit.has_value()}};
            if (wit) j["b"] = to_printed(*wit);
            out.emit(j, wit ? "J-regular\n" : "not J-regular\n");
            return 0;
        }
        const LocalGaloisData data = parse_data(ctx, reducible, irreducible, psi1, psi2, theta);
        const SerreWeight w = weight_from_printed(ctx, parse_vec(a_str, r), parse_vec(b_str, r));
        const auto wit = compatible_witnesses(ctx, data, w);
        const bool red = std::holds_alternative<ReducibleData>(data);
        json jw = json::array();
        for (std::uint32_t m : wit) jw.push_back(mask_json(m, red ? r : 2 * r, red));
        const Ordinarity o = classify_ordinary(ctx, data, w);
        json j{{"data", data_json(ctx, data)},
               {"weight", weight_json(w)},
               {"compatible", !wit.empty()},
               {"witnesses", jw},
               {"ordinary", o == Ordinarity::Ordinary}};
        out.emit(j, std::string(wit.empty() ? "incompatible" : "compatible") + "\n");
        return 0;
    }

    if (fl_cmd->parsed()) {
        const FieldContext ctx = make_context(p, r);
        const std::vector<int> b = from_printed(parse_vec(b_str, r));
        const std::uint32_t J = static_cast<std::uint32_t>(J_mask);
        const FlQuantities q = fl_quantities(ctx, b, J);
        const FlReport rep = fl_check_properties(ctx, b, J);
        const CrystalLiftSpec spec = crystalline_spec(ctx, b, J);
        json fails = json::array();
        for (const auto& c : rep.checks)
            if (!c.pass)
                fails.push_back(json{{"property", c.property}, {"index", c.index}});
        json j{{"p", p},
               {"r", r},
               {"b", to_printed(b)},
               {"J", mask_json(J, r, true)},
               {"alpha", to_printed(q.alpha)},
               {"beta", to_printed(q.beta)},
               {"i", to_printed(q.ivals)},
               {"n", to_printed(q.nvals)},
               {"n_prime", to_printed(q.nprime)},
               {"properties", json{{"pass", rep.all_pass}, {"failures", fails}}},
               {"crystalline", json{{"ht1", to_printed(spec.ht1)}, {"ht2", to_printed(spec.ht2)}}}};
        std::ostringstream tab;
        tab << "alpha " << j["alpha"].dump() << "\nbeta " << j["beta"].dump() << "\ni "
            << j["i"].dump() << "\nn " << j["n"].dump() << "\nn' " << j["n_prime"].dump()
            << "\nproperties " << (rep.all_pass ? "pass" : "FAIL") << "\n";
        out.emit(j, tab.str());
        return rep.all_pass ? 0 : 1;
    }

    if (v_cmd->parsed()) {
        const auto ps = parse_int_list(p_list);
        std::vector<int> rs;
        for (std::int64_t v : parse_int_list(r_list)) rs.push_back(static_cast<int>(v));
        const Report rep = run_suite(suite, ps, rs, vopt);
        std::ostringstream tab;
        tab << rep.suite << " " << rep.params << ": " << rep.cases_done << " cases, "
            << rep.violations.size() << " violations"
            << (rep.truncated ? " (truncated)" : "") << ", " << rep.wall_seconds << "s\n";
        for (const auto& v : rep.violations) tab << "  " << v.params << ": " << v.detail << "\n";
        if (out.table) {
            out.emit(json{}, tab.str());
        } else {
            // canonical report body; wall time goes to stderr only
            std::ostringstream os;
            os << report_to_json(rep) << "\n";
            if (out.out_file.empty()) {
                std::cout << os.str();
            } else {
                std::ofstream f(out.out_file);
                if (!f) throw input_error("cannot open output file: " + out.out_file);
                f << os.str();
            }
            std::cerr << "# " << rep.wall_seconds << "s\n";
        }
        return rep.ok() ? 0 : 1;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const unsupported_error& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
