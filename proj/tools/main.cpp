#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "deglag/poisson.hpp"
#include "deglag/rational.hpp"
#include "deglag/report.hpp"
#include "deglag/suites.hpp"
#include "deglag/tables.hpp"

namespace {

struct GlobalOpts {
    std::string out;
    std::string format = "csv";
    std::uint64_t seed = 42;
    double tol = 1e-8;
};

void emit(const GlobalOpts& g, const std::string& bytes) {
    if (g.out.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + g.out);
    f << bytes;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::optional<deglag::BigRat> parse_rat(const std::string& s, const char* flag) {
    if (s.empty()) return std::nullopt;
    try {
        return deglag::BigRat::from_string(s);
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError(std::string(flag) + ": expected an exact \"p/q\" value, got \"" +
                                   s + "\"");
    }
}

int run_verify(const std::string& suite, const deglag::suites::Options& opt,
               const GlobalOpts& g) {
    using deglag::suites::Options;
    namespace suites = deglag::suites;

    if (suite == "all") {
        const std::vector<deglag::VerifyReport> reports = suites::all(opt);
        nlohmann::json arr = nlohmann::json::array();
        std::size_t total = 0, passed = 0;
        bool ok = true;
        for (const auto& r : reports) {
            arr.push_back(r.to_json());
            total += r.cases.size();
            passed += r.passed();
            ok = ok && r.all_pass();
        }
        emit(g, dump({{"schema", 1},
                      {"suite", "all"},
                      {"reports", std::move(arr)},
                      {"summary", {{"total", total}, {"passed", passed}}}}));
        return ok ? 0 : 1;
    }

    deglag::VerifyReport rep;
    if (suite == "lah_ids") rep = suites::lah_ids(opt);
    else if (suite == "thm1_gf") rep = suites::thm1_gf(opt);
    else if (suite == "rodrigues") rep = suites::rodrigues(opt);
    else if (suite == "thm4") rep = suites::thm4(opt);
    else if (suite == "thm6") rep = suites::thm6(opt);
    else if (suite == "thm2") rep = suites::jets_suite(deglag::jets::TheoremId::thm2, opt);
    else if (suite == "thm3") rep = suites::jets_suite(deglag::jets::TheoremId::thm3, opt);
    else if (suite == "thm5") rep = suites::jets_suite(deglag::jets::TheoremId::thm5, opt);
    else throw CLI::ValidationError("unknown suite: " + suite);

    emit(g, dump(rep.to_json()));
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and numeric toolkit for a degenerate Laguerre family, "
                 "Lah numbers, and a degenerate Poisson law"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--out", g.out, "Write output to this file instead of stdout");
    app.add_option("--format", g.format, "Output format for tables")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--seed", g.seed, "Seed for randomized suites and sampling");
    app.add_option("--tol", g.tol, "Relative tolerance for numeric checks");

    // table
    auto* table = app.add_subcommand("table", "Emit coefficient tables");
    table->fallthrough();
    table->require_subcommand(1);

    unsigned lah_n_max = 8;
    auto* table_lah = table->add_subcommand("lah", "Lah number triangle");
    table_lah->fallthrough();
    table_lah->add_option("--n-max", lah_n_max, "Largest row");

    unsigned lag_n_max = 8;
    std::string lag_lambda, lag_alpha;
    auto* table_lag = table->add_subcommand("laguerre", "Polynomial coefficient table");
    table_lag->fallthrough();
    table_lag->add_option("--n-max", lag_n_max, "Largest degree");
    table_lag->add_option("--lambda", lag_lambda, "Exact p/q value to bind for lambda");
    table_lag->add_option("--alpha", lag_alpha, "Exact p/q value to bind for alpha");

    // verify
    std::string suite;
    deglag::suites::Options vopt;
    unsigned verify_n_max = 0, verify_alpha_max = 4, verify_draws = 200, verify_n = 0;
    auto* verify = app.add_subcommand("verify", "Run an identity-verification suite");
    verify->fallthrough();
    verify->add_option("suite", suite,
                       "One of: all, lah_ids, thm1_gf, rodrigues, thm4, thm6, thm2, thm3, thm5")
        ->required();
    auto* opt_nmax = verify->add_option("--n-max", verify_n_max, "Largest degree (exact suites)");
    verify->add_option("--alpha-max", verify_alpha_max, "Largest integer alpha (rodrigues)");
    verify->add_option("--draws", verify_draws, "Parameter draws (randomized suites)");
    auto* opt_n = verify->add_option("--n", verify_n, "Fix n (randomized suites)");

    // poisson
    auto* poisson = app.add_subcommand("poisson", "Degenerate Poisson distribution lab");
    poisson->fallthrough();
    poisson->require_subcommand(1);

    unsigned pm_n = 1;
    double pm_alpha = 1.0, pm_lambda = 0.0;
    std::uint64_t pm_mc = 0;
    auto* moments = poisson->add_subcommand("moments", "Falling-factorial moment, three routes");
    moments->fallthrough();
    moments->add_option("--n", pm_n, "Moment order");
    moments->add_option("--alpha", pm_alpha, "Rate parameter (> 0)");
    moments->add_option("--lambda", pm_lambda, "Degeneracy parameter");
    auto* opt_mc = moments->add_option("--mc", pm_mc, "Add a Monte Carlo route with this many draws");

    std::size_t sp_count = 10;
    double sp_alpha = 1.0, sp_lambda = 0.0;
    auto* samp = poisson->add_subcommand("sample", "Draw from the distribution");
    samp->fallthrough();
    samp->add_option("--count", sp_count, "Number of draws");
    samp->add_option("--alpha", sp_alpha, "Rate parameter (> 0)");
    samp->add_option("--lambda", sp_lambda, "Degeneracy parameter (<= 0)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (table_lah->parsed()) {
            emit(g, g.format == "json" ? dump(deglag::tables::lah_json(lah_n_max))
                                       : deglag::tables::lah_csv(lah_n_max));
            return 0;
        }
        if (table_lag->parsed()) {
            const auto lv = parse_rat(lag_lambda, "--lambda");
            const auto av = parse_rat(lag_alpha, "--alpha");
            emit(g, g.format == "json" ? dump(deglag::tables::laguerre_json(lag_n_max, lv, av))
                                       : deglag::tables::laguerre_csv(lag_n_max, lv, av));
            return 0;
        }
        if (verify->parsed()) {
            if (opt_nmax->count()) vopt.n_max = verify_n_max;
            vopt.alpha_max = verify_alpha_max;
            vopt.draws = verify_draws;
            if (opt_n->count()) vopt.fixed_n = verify_n;
            vopt.seed = g.seed;
            vopt.tol = g.tol;
            return run_verify(suite, vopt, g);
        }
        if (moments->parsed()) {
            const deglag::poisson::DegPoissonParams p{pm_alpha, pm_lambda};
            nlohmann::json out;
            out["schema"] = 1;
            out["exact"] = deglag::poisson::moment_exact(pm_n, p);
            out["series"] = deglag::poisson::moment_series(pm_n, p, g.tol);
            if (opt_mc->count()) {
                const auto mc = deglag::poisson::moment_mc(pm_n, p, pm_mc, g.seed);
                out["mc_estimate"] = mc.estimate;
                out["mc_stderr"] = mc.std_error;
            }
            emit(g, dump(out));
            return 0;
        }
        if (samp->parsed()) {
            const deglag::poisson::DegPoissonParams p{sp_alpha, sp_lambda};
            std::string lines;
            for (const std::uint64_t k : deglag::poisson::sample(p, g.seed, sp_count))
                lines += std::to_string(k) + "\n";
            emit(g, lines);
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(CLI::ExitCodes::ValidationError);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
