#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gwzeta/checks.hpp"
#include "gwzeta/format.hpp"
#include "gwzeta/json_io.hpp"
#include "gwzeta/spec_parser.hpp"
#include "gwzeta/zeta.hpp"

namespace {

using namespace gwzeta;

struct Options {
    std::string spec;
    long q = 0;
    int order = 12;
    std::string format = "text";
    std::string out;
};

void emit(const Options& opt, const std::string& text, const Json& json) {
    std::string payload = opt.format == "json" ? json.dump(2) + "\n" : text;
    if (opt.out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(opt.out);
        if (!f) throw Error("cannot write to " + opt.out);
        f << payload;
    }
}

std::string rank_disc_rows(const ZetaReport& report) {
    std::ostringstream os;
    os << "rank:";
    for (const auto& r : report.rank_series) os << " " << r.get_str();
    os << "\ndisc:";
    for (int d : report.disc_series) os << " " << d;
    os << "\n";
    if (report.sign_series) os << "sign: " << show_int_series(*report.sign_series) << "\n";
    return os.str();
}

int cmd_zeta(const Options& opt) {
    FqTag f = FqTag::make(opt.q);
    Variety v = parse_variety(opt.spec, f);
    ZetaReport report = dlog_zeta(v, opt.order);

    std::ostringstream os;
    os << "dlog zeta of " << v.label() << " over " << field_name(f) << ", order " << opt.order
       << "\n";
    os << show_series(report.enriched);
    os << rank_disc_rows(report);
    emit(opt, os.str(), report_to_json(v.label(), f, opt.order, report, {}));
    return 0;
}

int cmd_cellular(const Options& opt) {
    FqTag f = FqTag::make(opt.q);
    Variety v = parse_variety(opt.spec, f);
    if (!v.cells() && !v.is_res_p1())
        throw MissingCapability("no cell data for " + v.label());

    auto [factors, series] = v.cells() ? cellular_closed_form(f, *v.cells(), opt.order)
                                       : res_p1_closed_form(f, opt.order);
    ZetaReport report = dlog_zeta(v, opt.order);
    bool match = series == report.enriched;

    std::ostringstream os;
    os << "closed form of " << v.label() << " over " << field_name(f) << "\n";
    os << "  " << show_factor_list(factors) << "\n";
    os << "expansion to order " << opt.order << ":\n" << show_series(series);
    os << "pipeline comparison: " << (match ? "MATCH" : "MISMATCH") << "\n";
    emit(opt, os.str(),
         report_to_json(v.label(), f, opt.order, report,
                        {{"closed_form_matches_pipeline", match}}));
    return 0;
}

int cmd_fit(const Options& opt) {
    FqTag f = FqTag::make(opt.q);
    Variety v = parse_variety(opt.spec, f);
    ZetaReport report = dlog_zeta(v, opt.order);
    FactorList<GwFq> fitted = fit_dlog_rational(report.enriched);

    std::ostringstream os;
    os << "dlog-rational fit of " << v.label() << " over " << field_name(f) << " from " << opt.order
       << " coefficients (" << fitted.size() << " factors)\n";
    os << "  " << show_factor_list(fitted) << "\n";
    report.closed_form = fitted;
    emit(opt, os.str(),
         report_to_json(v.label(), f, opt.order, report, {{"fit_round_trips", true}}));
    return 0;
}

int cmd_euler(const Options& opt) {
    FqTag f = FqTag::make(opt.q);
    Variety v = parse_variety(opt.spec, f);
    if (!v.cells()) throw MissingCapability("no cell data for " + v.label());
    GwFq chi = euler_characteristic(*v.cells(), f);
    GwInt chi_int = euler_characteristic_int(*v.cells());

    std::ostringstream os;
    os << "chi_c of " << v.label() << " = " << show_gw_int(chi_int) << " = (" << chi.rank().get_str()
       << "," << chi.disc() << ") in GW(" << field_name(f) << ")\n";
    Json j;
    j["schema"] = "enriched-zeta/1";
    j["q"] = f.q;
    j["variety"] = v.label();
    j["euler_characteristic"] = gw_to_json(chi);
    emit(opt, os.str(), j);
    return 0;
}

int cmd_check(const std::string& suite, const std::string& q_list, int order) {
    std::vector<long> qs;
    std::stringstream ss(q_list);
    std::string tok;
    while (std::getline(ss, tok, ',')) qs.push_back(std::stol(tok));

    CheckResults results;
    if (suite == "all")
        results = run_all_suites(qs, order);
    else if (suite == "rings")
        results = run_rings_suite(qs);
    else if (suite == "newton")
        results = run_newton_suite(qs, std::min(order, 10));
    else if (suite == "motivic")
        results = run_motivic_suite(qs, std::min(order, 8));
    else if (suite == "signs")
        results = run_signs_suite(qs, order);
    else
        throw ParseError("unknown suite '" + suite + "' (expected all|rings|newton|motivic|signs)");

    bool all_ok = true;
    for (const auto& [name, ok] : results) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        all_ok = all_ok && ok;
    }
    std::cout << (all_ok ? "all checks passed" : "CHECK FAILURES") << "\n";
    return all_ok ? 0 : 1;
}

void add_common(CLI::App* cmd, Options& opt, bool needs_spec = true) {
    if (needs_spec)
        cmd->add_option("spec", opt.spec, "variety spec, e.g. Pn(2), ell(2,3), prod(Pn(1),Pn(1))")
            ->required();
    cmd->add_option("--q", opt.q, "prime power q of the base field")->required();
    cmd->add_option("--order", opt.order, "truncation order M")->check(CLI::PositiveNumber);
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", opt.out, "write output to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"enriched zeta functions of varieties over finite fields, with coefficients in "
                 "the Grothendieck-Witt ring"};
    app.require_subcommand(1);

    Options zeta_opt, cell_opt, fit_opt, euler_opt;
    std::string suite = "all", q_list = "3,5,7";
    int check_order = 12;

    add_common(app.add_subcommand("zeta", "enriched dlog zeta series from point counts"), zeta_opt);
    add_common(app.add_subcommand("cellular", "cellular closed form and pipeline cross-check"),
               cell_opt);
    add_common(app.add_subcommand("fit", "reconstruct a dlog-rational closed form"), fit_opt);
    auto* euler_cmd = app.add_subcommand("euler", "compactly supported Euler characteristic");
    add_common(euler_cmd, euler_opt);

    auto* check_cmd = app.add_subcommand("check", "run property suites");
    check_cmd->add_option("suite", suite, "all|rings|newton|motivic|signs");
    check_cmd->add_option("--q", q_list, "comma-separated list of prime powers");
    check_cmd->add_option("--order", check_order)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
        if (app.got_subcommand("zeta")) return cmd_zeta(zeta_opt);
        if (app.got_subcommand("cellular")) return cmd_cellular(cell_opt);
        if (app.got_subcommand("fit")) return cmd_fit(fit_opt);
        if (app.got_subcommand("euler")) return cmd_euler(euler_opt);
        if (app.got_subcommand("check")) return cmd_check(suite, q_list, check_order);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const gwzeta::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InconsistentData& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const MissingCapability& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const FitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
