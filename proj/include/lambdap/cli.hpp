#pragma once

#include <iostream>

#include <CLI11.hpp>

#include "lambdap/knots.hpp"

namespace lambdap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

namespace detail {

inline std::string poly_text(const LaurentPoly& f) { return f.to_string(); }

/// One-variable output in the conventional descending-power form,
/// e.g. "t - 1 + t^-1".
inline std::string alexander_text(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    auto terms = f.terms();
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.t_exp > b.t_exp; });
    std::string out;
    bool first = true;
    for (const auto& m : terms) {
        bool neg = m.coeff < 0;
        BigInt mag = neg ? BigInt(-m.coeff) : m.coeff;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string var;
        if (m.t_exp != 0) {
            var = "t";
            if (m.t_exp != 1) var += "^" + std::to_string(m.t_exp);
        }
        if (var.empty())
            out += mag.str();
        else if (mag == 1)
            out += var;
        else
            out += mag.str() + "*" + var;
    }
    return out;
}

inline void dump_operator_text(std::ostream& out, const Op& op) {
    for (const auto& [k, img] : op.columns())
        out << key_to_string(k) << " -> " << img.to_string() << "\n";
}

inline json structure_json(const BasisOrder& basis) {
    json j;
    j["dim"] = basis.n;
    j["product"] = product_op(basis).to_json();
    j["coproduct"] = coproduct_op(basis).to_json();
    j["antipode"] = antipode_op(basis).to_json();
    j["unit"] = unit_element().to_json();
    json counits = json::array();
    for (Mask m : all_subsets(basis.full()))
        counits.push_back(json{{"basis", mask_to_json(m)},
                               {"value", counit(Element::basis({m})).to_json()}});
    j["counit"] = counits;
    return j;
}

}  // namespace detail

/// Runs the command line; output is deterministic for identical inputs.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"braided exterior algebra structures, R-matrices and knot invariants"};
    app.require_subcommand(1);

    int dim = 2;
    std::string format = "json";
    bool channels = false;

    auto* dump_structure = app.add_subcommand("dump-structure", "structure map tables");
    dump_structure->add_option("--dim", dim, "dimension of V")->check(CLI::Range(1, 4));
    dump_structure->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* dump_braiding = app.add_subcommand("dump-braiding", "induced braiding on the square");
    dump_braiding->add_option("--dim", dim)->check(CLI::Range(1, 4));
    dump_braiding->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    dump_braiding->add_flag("--channels", channels, "add the per-size channel split");

    auto* dump_rmatrix = app.add_subcommand("dump-rmatrix", "two-parameter R-matrix");
    dump_rmatrix->add_option("--dim", dim)->check(CLI::Range(1, 4));
    dump_rmatrix->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    dump_rmatrix->add_flag("--channels", channels,
                           "add the scattering/reflection/annihilation split");

    int verify_dim = 2;
    std::string suite = "all";
    bool as_json = false;
    auto* verify = app.add_subcommand("verify", "run identity suites");
    verify->add_option("--dim", verify_dim)->check(CLI::Range(1, 3));
    verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"hopf", "ybe", "hecke", "lemmas", "nichols", "all"}));
    verify->add_flag("--json", as_json);

    int inv_dim = 1, strands = 2;
    std::string braid;
    bool raw = false, normalized = false;
    auto* invariant = app.add_subcommand("invariant", "braid-closure knot invariant");
    invariant->add_option("--dim", inv_dim)->check(CLI::Range(1, 3));
    invariant->add_option("--strands", strands)->required();
    invariant->add_option("--braid", braid, "comma-separated signed letters")->required();
    invariant->add_flag("--raw", raw);
    invariant->add_flag("--normalized", normalized);
    invariant->add_flag("--json", as_json);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kExitOk;
        }
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (dump_structure->parsed()) {
            BasisOrder basis(dim);
            if (format == "json") {
                out << detail::structure_json(basis).dump(2) << "\n";
            } else {
                out << "product:\n";
                detail::dump_operator_text(out, product_op(basis));
                out << "coproduct:\n";
                detail::dump_operator_text(out, coproduct_op(basis));
                out << "antipode:\n";
                detail::dump_operator_text(out, antipode_op(basis));
            }
            return kExitOk;
        }
        if (dump_braiding->parsed()) {
            BasisOrder basis(dim);
            Op tau = hat_tau_moy(basis);
            if (format == "json") {
                json j;
                j["dim"] = dim;
                j["braiding"] = tau.to_json();
                if (channels) {
                    json ch = json::object();
                    for (const auto& [k, op] : braiding_channels(basis))
                        ch[std::to_string(k)] = op.to_json();
                    j["channels"] = ch;
                }
                out << j.dump(2) << "\n";
            } else {
                detail::dump_operator_text(out, tau);
                if (channels) {
                    for (const auto& [k, op] : braiding_channels(basis)) {
                        out << "channel k=" << k << ":\n";
                        detail::dump_operator_text(out, op);
                    }
                }
            }
            return kExitOk;
        }
        if (dump_rmatrix->parsed()) {
            BasisOrder basis(dim);
            Op rho = rho_operator_form(basis);
            auto index = flat_index(basis);
            if (format == "json") {
                json j;
                j["dim"] = dim;
                j["rmatrix"] = rho.to_json();
                if (channels) j["channels"] = rho_channels(rho, basis).to_json();
                out << j.dump(2) << "\n";
            } else {
                // entries in the flat-index order of the small-dimension tables
                for (size_t i = 0; i < index.size(); ++i) {
                    for (size_t jj = 0; jj < index.size(); ++jj) {
                        BasisKey key{index[i], index[jj]};
                        out << "rho f" << i << "," << jj << " = ";
                        bool first = true;
                        std::string line;
                        for (const auto& [ko, c] : rho.apply(key)) {
                            size_t oi = std::find(index.begin(), index.end(), ko[0]) -
                                        index.begin();
                            size_t oj = std::find(index.begin(), index.end(), ko[1]) -
                                        index.begin();
                            if (!first) line += " + ";
                            first = false;
                            line += "(" + c.to_string() + ")*f" + std::to_string(oi) + "," +
                                    std::to_string(oj);
                        }
                        out << (line.empty() ? "0" : line) << "\n";
                    }
                }
                if (channels) {
                    auto rep = rho_channels(rho, basis);
                    out << "exponent matrix:\n";
                    for (const auto& row : rep.exponent_matrix) {
                        for (size_t c = 0; c < row.size(); ++c)
                            out << (c ? " " : "") << row[c];
                        out << "\n";
                    }
                    out << "reflection matrix (raw):\n";
                    for (const auto& row : rep.reflection_raw) {
                        for (size_t c = 0; c < row.size(); ++c)
                            out << (c ? " | " : "") << row[c].to_string();
                        out << "\n";
                    }
                }
            }
            return kExitOk;
        }
        if (verify->parsed()) {
            BasisOrder basis(verify_dim);
            std::vector<VerificationReport> reports;
            if (suite == "hopf" || suite == "all") {
                reports.push_back(verify_hopf(basis));
                if (verify_dim <= 2) reports.push_back(verify_naturality(basis));
                reports.push_back(verify_braiding_expression(basis));
            }
            if (suite == "ybe" || suite == "all") {
                reports.push_back(verify_ybe(elementary_tau_op(basis), basis, "tau"));
                reports.push_back(verify_ybe(hat_tau_moy(basis), basis, "hat_tau"));
                reports.push_back(verify_ybe(rho_operator_form(basis), basis, "rho"));
            }
            if (suite == "hecke" || suite == "all") reports.push_back(verify_hecke(basis));
            if (suite == "lemmas" || suite == "all") reports.push_back(verify_lemma_suite());
            if (suite == "nichols" || suite == "all")
                reports.push_back(verify_nichols_primitives(basis));
            bool all_pass = true;
            json jrep = json::array();
            for (const auto& r : reports) {
                all_pass = all_pass && r.pass;
                jrep.push_back(r.to_json());
                if (!as_json)
                    out << (r.pass ? "PASS " : "FAIL ") << r.name
                        << (r.pass ? "" : ": " + r.counterexample) << "\n";
            }
            if (as_json)
                out << json{{"dim", verify_dim}, {"reports", jrep},
                            {"status", all_pass ? "pass" : "fail"}}
                           .dump(2)
                    << "\n";
            return all_pass ? kExitOk : kExitVerifyFailed;
        }
        if (invariant->parsed()) {
            BasisOrder basis(inv_dim);
            BraidWord w(strands, parse_braid_letters(braid));
            ensure_within_budget(w, basis);
            Enhancement enh = solve_enhancement(basis);
            auto res = knot_invariant(w, basis, enh);
            bool show_normalized = normalized || !raw;
            LaurentPoly shown = res.value;
            std::string text;
            if (inv_dim == 1) {
                if (show_normalized) shown = normalize_alexander(res.value);
                text = detail::alexander_text(shown);
            } else {
                text = detail::poly_text(shown);
            }
            if (as_json) {
                json j{{"dim", inv_dim},
                       {"strands", strands},
                       {"braid", w.letters},
                       {"writhe", w.writhe()},
                       {"value", shown.to_json()},
                       {"text", text},
                       {"p_free", res.p_free}};
                out << j.dump(2) << "\n";
            } else {
                out << text << "\n";
            }
            return kExitOk;
        }
    } catch (const ResourceError& e) {
        err << "resource guard: " << e.what() << "\n";
        return kExitResource;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitUsage;
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace lambdap::cli
