#include "qonsager/cli.hpp"

#include "qonsager/hierarchy.hpp"
#include "qonsager/parse.hpp"
#include "qonsager/serialize.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <random>

namespace qonsager {

namespace {

struct CommonOpts {
    int k = 0;
    std::string format = "text";
    std::string out_file;
    std::vector<std::string> a_consts;
    std::string rho;
    std::vector<std::string> rep_specs;
    long seed = 12345;
};

void add_format(CLI::App* cmd, CommonOpts& o, std::initializer_list<std::string> allowed) {
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember(std::vector<std::string>(allowed)));
    cmd->add_option("--out", o.out_file, "write the output to a file");
}

void emit(const CommonOpts& o, std::ostream& out, const std::string& text) {
    if (o.out_file.empty()) {
        out << text;
        if (!text.empty() && text.back() != '\n') out << "\n";
        return;
    }
    std::ofstream f(o.out_file);
    if (!f) throw std::runtime_error("cannot open output file " + o.out_file);
    f << text;
}

BuildOptions build_options_from(const CommonOpts& o) {
    BuildOptions opts;
    for (const auto& item : o.a_consts) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--a-const", "expected the form k=rational");
        int level = std::stoi(item.substr(0, eq));
        if (level < 0) throw CLI::ValidationError("--a-const", "level must be nonnegative");
        if (static_cast<std::size_t>(level) >= opts.a_consts.size())
            opts.a_consts.resize(level + 1, ScalarFraction(0));
        opts.a_consts[level] = ScalarFraction(parse_rational(item.substr(eq + 1)));
    }
    return opts;
}

// "formal" keeps r symbolic; anything else must parse to a nonzero value.
std::optional<ScalarFraction> rho_policy_from(const CommonOpts& o) {
    std::string policy = o.rho;
    if (policy.empty()) {
        const char* env = std::getenv("QONSAGER_DEFAULT_RHO");
        policy = env ? env : "formal";
    }
    if (policy == "formal") return std::nullopt;
    ScalarFraction value = parse_scalar(policy);
    if (value.is_zero())
        throw CLI::ValidationError("--rho", "explicit rho must be nonzero");
    return value;
}

std::vector<MatrixRep> fleet_from(const CommonOpts& o) {
    if (o.rep_specs.empty()) return default_fleet();
    std::vector<MatrixRep> fleet;
    for (const auto& spec : o.rep_specs) fleet.push_back(parse_rep_spec(spec));
    return fleet;
}

std::string report_text(const RelationReport& report) {
    std::string out;
    for (const auto& e : report.entries) {
        out += e.relation + " k=" + std::to_string(e.k);
        if (e.l) out += " l=" + std::to_string(*e.l);
        out += " rep=" + e.rep + " : " + (e.passed ? "pass" : "FAIL") + "\n";
    }
    out += report.all_passed ? "all passed\n" : "FAILURES present\n";
    return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact engine for the current algebra of the q-Onsager generators"};
    app.require_subcommand(1);

    CommonOpts gen_o, coeffs_o, verify_o, hier_o, aw_o, export_o;

    auto* gen = app.add_subcommand("gen", "build the generator table and print it");
    gen->add_option("--k", gen_o.k, "top level K")->required()->check(CLI::NonNegativeNumber);
    gen->add_option("--a-const", gen_o.a_consts, "level constant, k=rational (repeatable)");
    gen->add_option("--rho", gen_o.rho, "rho policy: formal or an exact expression in q");
    add_format(gen, gen_o, {"text", "json", "latex"});

    auto* coeffs = app.add_subcommand("coeffs", "print the solved ansatz coefficients");
    coeffs->add_option("--k", coeffs_o.k, "top level K")->required()->check(CLI::NonNegativeNumber);
    add_format(coeffs, coeffs_o, {"text", "json"});

    auto* verify = app.add_subcommand("verify", "run the relation suite on a fleet");
    verify->add_option("--k", verify_o.k, "top level K")->check(CLI::NonNegativeNumber);
    verify->add_option("--rep", verify_o.rep_specs, "rep spec (repeatable)");
    int lmax = -1;
    verify->add_option("--lmax", lmax, "second index bound (defaults to K)");
    add_format(verify, verify_o, {"text", "json"});

    auto* hier = app.add_subcommand("hierarchy", "build charges and check commutation");
    hier->add_option("--k", hier_o.k, "top level K")->required()->check(CLI::NonNegativeNumber);
    std::string kap = "1", kap_star = "1", kap_plus = "0", kap_minus = "0";
    hier->add_option("--kappa", kap, "charge coefficient");
    hier->add_option("--kappa-star", kap_star, "charge coefficient");
    hier->add_option("--kappa-plus", kap_plus, "charge coefficient");
    hier->add_option("--kappa-minus", kap_minus, "charge coefficient");
    bool check_commute = false;
    hier->add_flag("--check-commute", check_commute, "verify pairwise commutators");
    hier->add_option("--rep", hier_o.rep_specs, "rep spec (repeatable)");
    hier->add_option("--seed", hier_o.seed, "seed for the random kappa samples");
    add_format(hier, hier_o, {"text", "json"});

    auto* aw = app.add_subcommand("aw-discover", "find the lowest-order common relation");
    aw->add_option("--rep", aw_o.rep_specs, "rep spec")->required();
    int max_order = 0;
    aw->add_option("--max-order", max_order, "highest order to try")->required();
    add_format(aw, aw_o, {"text", "json"});

    auto* exp = app.add_subcommand("export", "print a single generator");
    exp->add_option("--k", export_o.k, "top level K")->required()->check(CLI::NonNegativeNumber);
    std::string what = "wm";
    int index = 0;
    exp->add_option("--what", what, "family: wm, wp, g or gt")
        ->check(CLI::IsMember({"wm", "wp", "g", "gt"}));
    exp->add_option("--index", index, "element index")->check(CLI::NonNegativeNumber);
    exp->add_option("--rho", export_o.rho, "rho policy: formal or an exact expression in q");
    add_format(exp, export_o, {"text", "json", "latex"});

    std::vector<const char*> argv;
    argv.push_back("qonsager");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) {
            auto table = build_generator_table(gen_o.k, build_options_from(gen_o));
            if (auto rho = rho_policy_from(gen_o)) table = table.with_rho(*rho);
            if (gen_o.format == "text") emit(gen_o, out, generator_table_to_text(table));
            else if (gen_o.format == "latex") emit(gen_o, out, generator_table_to_latex(table));
            else emit(gen_o, out, generator_table_to_json(table).dump(2));
            return 0;
        }
        if (coeffs->parsed()) {
            json arr = json::array();
            std::string text;
            for (int k = 0; k <= coeffs_o.k; ++k) {
                auto t = solve_coefficients(k);
                if (coeffs_o.format == "json") {
                    arr.push_back(coeff_table_to_json(t));
                } else {
                    text += "level " + std::to_string(k) + ":\n";
                    for (const auto& [idx, v] : t.a)
                        text += "  a(" + std::to_string(idx.first) + "," +
                                std::to_string(idx.second) + ") = " + v.to_string() + "\n";
                    for (const auto& [idx, v] : t.b)
                        text += "  b(" + std::to_string(idx.first) + "," +
                                std::to_string(idx.second) + ") = " + v.to_string() + "\n";
                    for (const auto& [idx, v] : t.e)
                        text += "  e(" + std::to_string(idx.first) + "," +
                                std::to_string(idx.second) + ") = " + v.to_string() + "\n";
                }
            }
            emit(coeffs_o, out, coeffs_o.format == "json" ? arr.dump(2) : text);
            return 0;
        }
        if (verify->parsed()) {
            auto fleet = fleet_from(verify_o);
            auto table = build_generator_table(verify_o.k);
            auto report = check_relation_suite(table, fleet, verify_o.k,
                                               lmax < 0 ? verify_o.k : lmax);
            emit(verify_o, out,
                 verify_o.format == "json" ? report_to_json(report).dump(2)
                                           : report_text(report));
            return report.all_passed ? 0 : 2;
        }
        if (hier->parsed()) {
            auto table = build_generator_table(hier_o.k);
            auto fleet = fleet_from(hier_o);

            ChargeSpec base;
            base.kappa = parse_scalar(kap);
            base.kappa_star = parse_scalar(kap_star);
            base.kappa_plus = parse_scalar(kap_plus);
            base.kappa_minus = parse_scalar(kap_minus);

            std::string text;
            json charges = json::array();
            for (int k = 0; k <= hier_o.k; ++k) {
                ChargeSpec s = base;
                s.k = k;
                auto charge = build_charge(s, table);
                if (hier_o.format == "json") charges.push_back(poly_to_json(charge));
                else
                    text += "I_" + std::to_string(2 * k + 1) + " = " + charge.to_string() +
                            "\n";
            }

            bool ok = true;
            json reports = json::array();
            if (check_commute) {
                std::mt19937_64 rng(static_cast<std::uint64_t>(hier_o.seed));
                std::uniform_int_distribution<long> pick(-9, 9);
                std::vector<ChargeSpec> bases = {base};
                for (int t = 0; t < 3; ++t) {
                    ChargeSpec s;
                    s.kappa = ScalarFraction(pick(rng));
                    s.kappa_star = ScalarFraction(pick(rng));
                    s.kappa_plus = ScalarFraction(pick(rng));
                    s.kappa_minus = ScalarFraction(pick(rng));
                    if (!s.any_nonzero()) s.kappa = 1;
                    bases.push_back(s);
                }
                for (std::size_t bi = 0; bi < bases.size(); ++bi) {
                    std::vector<ChargeSpec> specs;
                    for (int k = 0; k <= hier_o.k; ++k) {
                        ChargeSpec s = bases[bi];
                        s.k = k;
                        specs.push_back(s);
                    }
                    // the structural cross-check covers arbitrary kappas once
                    auto report = check_commutation(specs, table, fleet, bi == 0);
                    ok = ok && report.all_passed;
                    if (hier_o.format == "json") reports.push_back(report_to_json(report));
                    else text += report_text(report);
                }
            }
            if (hier_o.format == "json") {
                json j;
                j["charges"] = std::move(charges);
                if (check_commute) j["commutation"] = std::move(reports);
                emit(hier_o, out, j.dump(2));
            } else {
                emit(hier_o, out, text);
            }
            return ok ? 0 : 2;
        }
        if (aw->parsed()) {
            if (max_order < 1) {
                err << "aw-discover: --max-order must be at least 1\n";
                return 1;
            }
            auto rep = parse_rep_spec(aw_o.rep_specs.front());
            auto table = build_generator_table(std::max(max_order - 1, 0));
            try {
                auto rel = discover_relations(rep, table, max_order);
                if (aw_o.format == "json") {
                    json j = aw_relation_to_json(rel);
                    j["witness"] = "ok";
                    emit(aw_o, out, j.dump(2));
                } else {
                    std::string text = "N = " + std::to_string(rel.N) + "\n";
                    for (int t = 0; t <= rel.N; ++t)
                        text += "alpha_" + std::to_string(t) + " = " +
                                rel.alphas[t].to_string() + "\n";
                    text += "witness: ok\n";
                    emit(aw_o, out, text);
                }
                return 0;
            } catch (const std::domain_error& e) {
                err << e.what() << "\n";
                return 4;
            }
        }
        if (exp->parsed()) {
            auto table = build_generator_table(export_o.k);
            if (auto rho = rho_policy_from(export_o)) table = table.with_rho(*rho);
            const std::vector<NCPolynomial>* fam =
                what == "wm" ? &table.Wm
                : what == "wp" ? &table.Wp
                : what == "g" ? &table.G
                               : &table.Gt;
            if (index >= static_cast<int>(fam->size())) {
                err << "export: index out of range\n";
                return 1;
            }
            const NCPolynomial& p = (*fam)[index];
            if (export_o.format == "json") emit(export_o, out, poly_to_json(p).dump(2));
            else if (export_o.format == "latex") emit(export_o, out, p.to_latex());
            else emit(export_o, out, p.to_string());
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << e.what() << "\n";
        return 3;
    } catch (const std::runtime_error& e) {
        err << e.what() << "\n";
        return 3;
    }
    return 1;
}

}  // namespace qonsager
