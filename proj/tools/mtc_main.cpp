#include <CLI11.hpp>
#include <json.hpp>

#include "mtc/abelian.hpp"
#include "mtc/center.hpp"
#include "mtc/emit.hpp"
#include "mtc/eseries.hpp"
#include "mtc/fastcyc.hpp"
#include "mtc/forms.hpp"
#include "mtc/ty.hpp"
#include "mtc/verify.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace mtc;
using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long parse_long(const std::string& tok, const std::string& flag) {
    try {
        std::size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw UsageError(flag + ": '" + tok + "' is not an integer");
    }
}

std::vector<long> parse_long_list(const std::string& s, const std::string& flag) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_long(tok, flag));
    if (out.empty()) throw UsageError(flag + ": empty list");
    return out;
}

Group parse_group_spec(const std::string& s) {
    auto factors = parse_long_list(s, "--group");
    for (long f : factors)
        if (f < 1) throw UsageError("--group: factors must be positive");
    Group g = make_group(factors);
    const long bound = max_group_order_bound(1024);
    if (g.order() > bound)
        throw UsageError("--group: order " + std::to_string(g.order()) +
                         " exceeds the bound " + std::to_string(bound) +
                         " (set MTC_MAX_GROUP_ORDER to raise it)");
    return g;
}

Bicharacter parse_chi_spec(const Group& g, const std::string& s) {
    if (s == "hyperbolic") return hyperbolic_bicharacter(g);
    const std::size_t n = g.factors.size();
    if (s.rfind("gram:", 0) == 0) {
        auto flat = parse_long_list(s.substr(5), "--chi gram");
        if (flat.size() != n * n)
            throw UsageError("--chi gram: expected " + std::to_string(n * n) +
                             " entries for a rank-" + std::to_string(n) + " group");
        std::vector<std::vector<long>> rows(n, std::vector<long>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) rows[i][j] = flat[i * n + j];
        return bicharacter_from_exponents(g, rows);
    }
    if (s.rfind("diag:", 0) == 0) {
        auto a = parse_long_list(s.substr(5), "--chi diag");
        if (a.size() != n)
            throw UsageError("--chi diag: expected " + std::to_string(n) + " entries");
        return quadratic_from_diag(g, a).chi;
    }
    throw UsageError("--chi: expected gram:<entries>, diag:<entries> or hyperbolic");
}

QuadraticForm parse_q_spec(const Group& g, const std::string& s) {
    const std::size_t n = g.factors.size();
    if (s.rfind("diag:", 0) == 0) {
        auto a = parse_long_list(s.substr(5), "--q diag");
        if (a.size() != n)
            throw UsageError("--q diag: expected " + std::to_string(n) + " entries");
        return quadratic_from_diag(g, a);
    }
    if (s.rfind("gram:", 0) == 0) return quadratic_from_bicharacter(parse_chi_spec(g, s));
    throw UsageError("--q: expected diag:<entries> or gram:<entries>");
}

int parse_sign(const std::string& s, const std::string& flag) {
    if (s == "+" || s == "+1" || s == "1") return +1;
    if (s == "-" || s == "-1") return -1;
    throw UsageError(flag + ": expected + or -");
}

// --emit accepts either a format name or an output filename (format inferred
// from the extension); --output always redirects to a file.
struct EmitTarget {
    std::string format;
    std::string path;
};

EmitTarget resolve_emit(const std::string& emit, const std::string& output,
                        const std::string& def_format) {
    EmitTarget t;
    t.format = def_format;
    if (!emit.empty()) {
        if (emit == "json" || emit == "csv" || emit == "latex" || emit == "pretty") {
            t.format = emit;
        } else {
            t.path = emit;
            const auto dot = emit.rfind('.');
            const std::string ext = dot == std::string::npos ? "" : emit.substr(dot + 1);
            t.format = ext == "csv" ? "csv" : ext == "tex" ? "latex" : "json";
        }
    }
    if (!output.empty()) t.path = output;
    return t;
}

void deliver(const EmitTarget& t, const std::string& payload) {
    if (t.path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(t.path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + t.path);
    f << payload;
    std::cout << t.path << "\n";
}

std::string render_modular_data(const ModularData& md, const std::string& format, int digits) {
    if (format == "json") return modular_data_to_json(md).dump(2) + "\n";
    if (format == "csv") return modular_data_to_csv(md, digits);
    if (format == "latex") return modular_data_to_latex(md);
    return modular_data_to_pretty(md, digits);
}

std::string simple_name(const TYCategory& c, const TYSimple& s) {
    return s.is_m ? "m" : c.group.element_to_string(s.a);
}

int run_ty(const Group& g, const std::string& chi_spec, int tau, bool relcenter,
           const EmitTarget& emit, int /*digits*/) {
    TYCategory c = make_ty(g, parse_chi_spec(g, chi_spec), tau);

    if (!relcenter) {
        auto simples = ty_simples(c);
        json j;
        j["group"] = g.factors;
        j["tau"] = tau > 0 ? "+" : "-";
        j["n"] = c.n();
        j["fpdim_m"] = cyc_to_pretty(c.sqrt_n());
        j["simples"] = json::array();
        for (const auto& s : simples) j["simples"].push_back(simple_name(c, s));
        json fusion = json::array();
        for (const auto& s : simples)
            for (const auto& t : simples) {
                json row;
                row["left"] = simple_name(c, s);
                row["right"] = simple_name(c, t);
                json sum = json::array();
                for (const auto& u : ty_fusion(c, s, t)) sum.push_back(simple_name(c, u));
                row["sum"] = sum;
                fusion.push_back(row);
            }
        j["fusion"] = fusion;
        json assoc;
        {
            json ambm = json::array();
            for (long ia = 0; ia < c.n(); ++ia)
                for (long ib = 0; ib < c.n(); ++ib) {
                    auto sc = ty_associator(c, ty_invertible(g.element_at(ia)), ty_m(),
                                            ty_invertible(g.element_at(ib)));
                    ambm.push_back({{"a", g.element_to_string(g.element_at(ia))},
                                    {"b", g.element_to_string(g.element_at(ib))},
                                    {"value", cyc_to_pretty(sc.scalars[0])}});
                }
            assoc["a_m_b"] = ambm;
            json mam = json::array();
            for (long ia = 0; ia < c.n(); ++ia) {
                auto sc = ty_associator(c, ty_m(), ty_invertible(g.element_at(ia)), ty_m());
                json comps = json::array();
                for (std::size_t i = 0; i < sc.scalars.size(); ++i)
                    comps.push_back({{"at", sc.index[i]}, {"value", cyc_to_pretty(sc.scalars[i])}});
                mam.push_back({{"a", g.element_to_string(g.element_at(ia))}, {"components", comps}});
            }
            assoc["m_a_m"] = mam;
            auto sc = ty_associator(c, ty_m(), ty_m(), ty_m());
            json mmm = json::array();
            for (std::size_t i = 0; i < sc.scalars.size(); ++i)
                mmm.push_back({{"at", sc.index[i]}, {"value", cyc_to_pretty(sc.scalars[i])}});
            assoc["m_m_m"] = mmm;
        }
        j["associator"] = assoc;

        if (emit.format == "json" || emit.format == "csv" || emit.format == "latex") {
            deliver(emit, j.dump(2) + "\n");
        } else {
            std::ostringstream os;
            os << "TY(A, chi, " << (tau > 0 ? "+" : "-") << "1/sqrt(" << c.n() << ")), |A| = "
               << c.n() << "\n"
               << "simples: " << c.n() << " invertibles + m, FPdim(m) = "
               << cyc_to_pretty(c.sqrt_n()) << "\n"
               << "fusion: a*b = a+b, a*m = m*a = m, m*m = sum over A\n";
            deliver(emit, os.str());
        }
        return 0;
    }

    // relative-center dump: simples, fusion, T_delta, gamma, braiding
    auto rc = relcenter_simples(c);
    json j;
    j["group"] = g.factors;
    j["tau"] = tau > 0 ? "+" : "-";
    j["simples"] = json::array();
    for (const auto& u : rc) {
        json e;
        e["label"] = u.to_string(g);
        e["kind"] = u.is_z ? "Z" : "X";
        e["fpdim"] = cyc_to_pretty(u.is_z ? c.sqrt_n() : Cyc::from_int(1));
        e["t_delta"] = t_delta(c, u).to_string(g);
        e["gamma"] = cyc_to_pretty(gamma_scalar(c, u));
        j["simples"].push_back(e);
    }
    json fusion = json::array();
    json braiding = json::array();
    for (const auto& u : rc)
        for (const auto& v : rc) {
            json row;
            row["left"] = u.to_string(g);
            row["right"] = v.to_string(g);
            json sum = json::array();
            for (const auto& w : relcenter_fusion(c, u, v)) sum.push_back(w.to_string(g));
            row["sum"] = sum;
            fusion.push_back(row);

            auto sc = crossed_braiding(c, u, v);
            json comps = json::array();
            for (std::size_t i = 0; i < sc.scalars.size(); ++i) {
                json e;
                if (!sc.index.empty()) e["at"] = sc.index[i];
                e["value"] = cyc_to_pretty(sc.scalars[i]);
                comps.push_back(e);
            }
            braiding.push_back({{"left", u.to_string(g)},
                                {"right", v.to_string(g)},
                                {"components", comps}});
        }
    j["fusion"] = fusion;
    j["braiding"] = braiding;

    if (emit.format == "pretty") {
        std::ostringstream os;
        os << "relative center of TY over |A| = " << c.n() << ": " << rc.size()
           << " simples (" << c.n() * c.n() << " of dim 1, " << c.n() << " of dim "
           << cyc_to_pretty(c.sqrt_n()) << ")\n";
        for (const auto& u : rc)
            os << "  " << u.to_string(g) << "  T_delta -> " << t_delta(c, u).to_string(g)
               << "  gamma = " << cyc_to_pretty(gamma_scalar(c, u)) << "\n";
        deliver(emit, os.str());
    } else {
        deliver(emit, j.dump(2) + "\n");
    }
    return 0;
}

int run_center(const Group& g, const std::string& chi_spec, int tau, const EmitTarget& emit,
               int digits) {
    TYCategory c = make_ty(g, parse_chi_spec(g, chi_spec), tau);
    ModularData md = center_modular_data(c);
    deliver(emit, render_modular_data(md, emit.format, digits));
    return 0;
}

int run_eseries(const Group& g, const std::string& q_spec, int sign, const EmitTarget& emit,
                int digits) {
    if (g.order() % 2 == 0) throw UsageError("E(q,±) requires odd order");
    QuadraticForm q = parse_q_spec(g, q_spec);
    ModularData md = e_modular_data(q, sign);
    deliver(emit, render_modular_data(md, emit.format, digits));
    return 0;
}

json outcome_to_json(const CheckOutcome& c) {
    json j;
    j["passed"] = c.passed;
    if (c.skipped) j["skipped"] = true;
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
}

json cyc_exact_and_numeric(const Cyc& z, int digits) {
    json j;
    j["exact"] = cyc_to_json(z);
    j["pretty"] = cyc_to_pretty(z);
    j["numeric"] = cyc_to_numeric(z, digits);
    return j;
}

int run_verify(const std::string& input, const std::string& checks_csv, const EmitTarget& emit,
               int digits) {
    std::ifstream f(input);
    if (!f) throw UsageError("cannot read " + input);
    json parsed;
    try {
        f >> parsed;
    } catch (const json::exception& e) {
        throw UsageError(input + ": " + e.what());
    }
    ModularData md = modular_data_from_json(parsed);

    bool want_axioms = false, want_verlinde = false, want_zeros = false, want_prop62 = false,
         want_galois = false;
    {
        std::stringstream ss(checks_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok == "axioms") want_axioms = true;
            else if (tok == "verlinde") want_verlinde = true;
            else if (tok == "zeros") want_zeros = true;
            else if (tok == "prop62") want_prop62 = true;
            else if (tok == "galois") want_galois = true;
            else if (!tok.empty()) throw UsageError("--checks: unknown check '" + tok + "'");
        }
        if (!(want_axioms || want_verlinde || want_zeros || want_prop62 || want_galois))
            throw UsageError("--checks: empty selection");
    }

    VerificationReport ar = check_axioms(md, want_verlinde);

    std::vector<std::pair<std::string, CheckOutcome>> results;
    if (want_axioms) {
        results.emplace_back("s_symmetric", ar.s_symmetric);
        results.emplace_back("unitarity", ar.unitarity);
        results.emplace_back("gauss_product", ar.gauss_product);
        results.emplace_back("charge_modulus", ar.charge_modulus);
        results.emplace_back("weak_integrality", ar.weak_integrality);
    }
    if (want_verlinde) {
        results.emplace_back("verlinde_integral", ar.verlinde_integral);
        results.emplace_back("balancing", ar.balancing);
    }
    if (want_zeros) results.emplace_back("theorem_6_1", theorem_6_1_check(md));
    if (want_prop62) results.emplace_back("prop_6_2", prop_6_2_check(md));
    if (want_galois) {
        CheckOutcome agg;
        for (std::size_t x = 0; x < md.size(); ++x) {
            auto dd = (md.dims[x] * md.dims[x]).is_rational();
            if (dd && dd->get_den() == 1 && *dd == 1) continue;  // invertible
            CheckOutcome one = galois_product_check(md, x);
            if (one.skipped) agg = one;
            if (!one.passed) {
                agg = one;
                break;
            }
        }
        results.emplace_back("galois_product", agg);
    }

    bool all = true;
    for (const auto& [name, out] : results) all = all && out.passed;

    json rep;
    rep["input"] = input;
    rep["all_passed"] = all;
    rep["checks"] = json::object();
    for (const auto& [name, out] : results) rep["checks"][name] = outcome_to_json(out);
    rep["derived"]["global_dim"] = cyc_exact_and_numeric(ar.global_dim, digits);
    rep["derived"]["p_plus"] = cyc_exact_and_numeric(ar.p_plus, digits);
    rep["derived"]["p_minus"] = cyc_exact_and_numeric(ar.p_minus, digits);
    if (ar.has_charge)
        rep["derived"]["central_charge"] = cyc_exact_and_numeric(ar.central_charge, digits);

    if (want_zeros) {
        json zj = json::object();
        for (std::size_t x = 0; x < md.size(); ++x) {
            ZeroStructure zs;
            try {
                zs = zero_structure(md, x);
            } catch (const std::invalid_argument&) {
                break;  // not weakly integral; the skip notice is in the check outcome
            }
            json e;
            auto names = [&](const std::vector<std::size_t>& idx) {
                json a = json::array();
                for (auto i : idx) a.push_back(md.labels[i]);
                return a;
            };
            e["T"] = names(zs.t_set);
            e["D"] = names(zs.d_set);
            e["U"] = names(zs.u_set);
            e["dim_T"] = zs.dim_t;
            e["dim_D"] = zs.dim_d;
            e["dim_U"] = zs.dim_u;
            zj[md.labels[x]] = e;
        }
        rep["zero_structure"] = zj;
    }

    if (emit.format == "pretty" && emit.path.empty()) {
        std::ostringstream os;
        for (const auto& [name, out] : results) {
            os << (out.passed ? "PASS " : "FAIL ") << name;
            if (!out.detail.empty()) os << "  (" << out.detail << ")";
            os << "\n";
        }
        os << "global dim = " << cyc_to_pretty(ar.global_dim);
        if (ar.has_charge) os << ", central charge = " << cyc_to_pretty(ar.central_charge);
        os << "\n";
        deliver(emit, os.str());
    } else {
        deliver(emit, rep.dump(2) + "\n");
        if (!all)
            for (const auto& [name, out] : results)
                if (!out.passed) {
                    std::cout << "FAIL " << name << ": " << out.detail << "\n";
                    break;
                }
    }
    return all ? 0 : 1;
}

int run_reproduce(const std::string& case_name, const std::optional<int>& tau,
                  const EmitTarget& emit) {
    std::vector<std::string> cases;
    if (case_name == "all") {
        cases = reproduce_case_names();
    } else {
        reproduce_case_params(case_name);  // validates the name
        cases.push_back(case_name);
    }
    std::vector<int> taus = tau ? std::vector<int>{*tau} : std::vector<int>{+1, -1};

    bool all = true;
    json rows = json::array();
    std::ostringstream os;
    for (const auto& c : cases)
        for (int t : taus) {
            ReproduceReport rep = reproduce_example(c, t);
            all = all && rep.matched;
            os << c << " tau=" << (t > 0 ? "+" : "-") << "  "
               << (rep.matched ? "match" : "MISMATCH") << "  (z_swapped="
               << (rep.z_swapped ? "yes" : "no") << ", y_conjugated="
               << (rep.y_conjugated ? "yes" : "no") << ")\n";
            json row;
            row["case"] = c;
            row["tau"] = t > 0 ? "+" : "-";
            row["matched"] = rep.matched;
            row["z_swapped"] = rep.z_swapped;
            row["y_conjugated"] = rep.y_conjugated;
            row["notes"] = rep.notes;
            rows.push_back(row);
        }
    os << (all ? "all reproductions matched" : "reproduction mismatch") << "\n";

    if (emit.format == "json" || !emit.path.empty()) {
        json j;
        j["all_matched"] = all;
        j["cases"] = rows;
        deliver(emit, j.dump(2) + "\n");
    } else {
        deliver(emit, os.str());
    }
    return all ? 0 : 1;
}

int run_lagrangian(const Group& g, const std::string& chi_spec, const EmitTarget& emit) {
    Bicharacter chi = parse_chi_spec(g, chi_spec);
    auto subs = lagrangian_subgroups(chi);

    json j;
    j["group"] = g.factors;
    j["count"] = subs.size();
    j["group_theoretical"] = !subs.empty();
    j["subgroups"] = json::array();
    std::ostringstream os;
    os << subs.size() << " Lagrangian subgroup" << (subs.size() == 1 ? "" : "s") << "\n";
    for (const auto& sub : subs) {
        json e;
        e["members"] = json::array();
        e["generators"] = json::array();
        os << "  {";
        for (std::size_t i = 0; i < sub.members.size(); ++i) {
            e["members"].push_back(g.element_to_string(sub.members[i]));
            os << (i ? ", " : "") << g.element_to_string(sub.members[i]);
        }
        os << "}  generated by <";
        bool first = true;
        for (const auto& gen : sub.generators) {
            if (gen == g.zero() && sub.generators.size() > 1) continue;
            e["generators"].push_back(g.element_to_string(gen));
            os << (first ? "" : ", ") << g.element_to_string(gen);
            first = false;
        }
        os << ">\n";
        j["subgroups"].push_back(e);
    }
    os << "group-theoretical: " << (subs.empty() ? "no" : "yes") << "\n";

    if (emit.format == "json" || !emit.path.empty())
        deliver(emit, j.dump(2) + "\n");
    else
        deliver(emit, os.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact modular data for Drinfeld centers of Tambara-Yamagami categories "
                 "and the E(q,±) series"};
    app.require_subcommand(1);

    std::string group_spec, chi_spec, q_spec, tau_str = "+", sign_str = "+";
    std::string emit_str, output, input, case_name, checks = "axioms,verlinde";
    std::string tau_repro;  // reproduce: empty means both signs
    int digits = 12;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--emit", emit_str, "json|csv|latex|pretty, or an output filename");
        c->add_option("--output", output, "write the emission to a file");
        c->add_option("--digits", digits, "significant digits for numeric emission")
            ->capture_default_str();
    };

    CLI::App* ty_cmd = app.add_subcommand("ty", "construct TY(A, chi, tau)");
    ty_cmd->add_option("--group", group_spec, "comma-separated cyclic factors, e.g. 3,3")
        ->required();
    ty_cmd->add_option("--chi", chi_spec, "gram:<entries> | diag:<entries> | hyperbolic")
        ->required();
    ty_cmd->add_option("--tau", tau_str, "+ or -");
    add_common(ty_cmd);
    CLI::App* rel_cmd = ty_cmd->add_subcommand("relcenter", "dump the relative center data");
    rel_cmd->fallthrough();

    CLI::App* center_cmd = app.add_subcommand("center", "modular data of Z(TY(A, chi, tau))");
    center_cmd->add_option("--group", group_spec, "comma-separated cyclic factors")->required();
    center_cmd->add_option("--chi", chi_spec, "gram:<entries> | diag:<entries> | hyperbolic")
        ->required();
    center_cmd->add_option("--tau", tau_str, "+ or -");
    add_common(center_cmd);

    CLI::App* es_cmd = app.add_subcommand("eseries", "modular data of E(q,±), |A| odd");
    es_cmd->add_option("--group", group_spec, "comma-separated odd cyclic factors");
    es_cmd->add_option("--q", q_spec, "diag:<entries> | gram:<entries>");
    es_cmd->add_option("--sign", sign_str, "+ or -");
    add_common(es_cmd);
    CLI::App* es_repro_cmd =
        es_cmd->add_subcommand("reproduce", "compare against a stored reference table");
    es_repro_cmd->add_option("--case", case_name, "5.3a|5.3b|5.4a|5.4b|5.4c|5.4d|all");
    es_repro_cmd->add_option("--tau", tau_repro, "+ or - (default: both)");
    es_repro_cmd->fallthrough();

    CLI::App* verify_cmd = app.add_subcommand("verify", "run identity checks on stored data");
    verify_cmd->add_option("--input", input, "modular data JSON file")->required();
    verify_cmd->add_option("--checks", checks, "comma list: axioms,verlinde,zeros,prop62,galois")
        ->capture_default_str();
    add_common(verify_cmd);

    CLI::App* repro_cmd =
        app.add_subcommand("reproduce", "rebuild the stored reference tables and compare");
    repro_cmd->add_option("--case", case_name, "5.3a|5.3b|5.4a|5.4b|5.4c|5.4d|all")->required();
    repro_cmd->add_option("--tau", tau_repro, "+ or - (default: both)");
    add_common(repro_cmd);

    CLI::App* lag_cmd = app.add_subcommand("lagrangian", "Lagrangian subgroups of (A, chi)");
    lag_cmd->add_option("--group", group_spec, "comma-separated cyclic factors")->required();
    lag_cmd->add_option("--chi", chi_spec, "gram:<entries> | diag:<entries> | hyperbolic")
        ->required();
    add_common(lag_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (ty_cmd->parsed()) {
            EmitTarget emit = resolve_emit(emit_str, output, "pretty");
            return run_ty(parse_group_spec(group_spec), chi_spec,
                          parse_sign(tau_str, "--tau"), rel_cmd->parsed(), emit, digits);
        }
        if (center_cmd->parsed()) {
            EmitTarget emit = resolve_emit(emit_str, output, "pretty");
            return run_center(parse_group_spec(group_spec), chi_spec,
                              parse_sign(tau_str, "--tau"), emit, digits);
        }
        if (es_cmd->parsed()) {
            EmitTarget emit = resolve_emit(emit_str, output, "pretty");
            if (es_repro_cmd->parsed()) {
                if (case_name.empty()) throw UsageError("--case is required");
                std::optional<int> t;
                if (!tau_repro.empty()) t = parse_sign(tau_repro, "--tau");
                return run_reproduce(case_name, t, emit);
            }
            if (group_spec.empty() || q_spec.empty())
                throw UsageError("eseries requires --group and --q");
            return run_eseries(parse_group_spec(group_spec), q_spec,
                               parse_sign(sign_str, "--sign"), emit, digits);
        }
        if (verify_cmd->parsed()) {
            EmitTarget emit = resolve_emit(emit_str, output, "pretty");
            return run_verify(input, checks, emit, digits);
        }
        if (repro_cmd->parsed()) {
            EmitTarget emit = resolve_emit(emit_str, output, "pretty");
            std::optional<int> t;
            if (!tau_repro.empty()) t = parse_sign(tau_repro, "--tau");
            return run_reproduce(case_name, t, emit);
        }
        if (lag_cmd->parsed()) {
            EmitTarget emit = resolve_emit(emit_str, output, "pretty");
            return run_lagrangian(parse_group_spec(group_spec), chi_spec, emit);
        }
        throw UsageError("no command given");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
