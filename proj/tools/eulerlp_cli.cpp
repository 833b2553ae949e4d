// Command-line front end: Euler numbers, p-adic l values, single checks and
// full verification grids. Exit status: 0 all checks match, 1 a mismatch,
// 2 usage or argument error.

#include <CLI11.hpp>

#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulerlp/character.hpp"
#include "eulerlp/euler.hpp"
#include "eulerlp/harness.hpp"
#include "eulerlp/lfunction.hpp"
#include "eulerlp/report.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct VerifyOptions {
    std::string check;
    unsigned long p = 3;
    unsigned long n = 2;
    unsigned long r = 1;
    long t = 0;
    long k = 1;
    unsigned long m = 1;
    long f = 3;
    std::string x = "0";
    long j = 1;
    int precision = 6;
    int extra_terms = 0;
    std::string format = "json";
};

int emit(const std::vector<eulerlp::CongruenceReport>& reports, eulerlp::OutputFormat format) {
    bool all_match = true;
    if (format == eulerlp::OutputFormat::csv) std::cout << eulerlp::csv_header() << '\n';
    for (const auto& report : reports) {
        if (format == eulerlp::OutputFormat::csv) std::cout << eulerlp::to_csv_row(report) << '\n';
        else std::cout << eulerlp::to_json_line(report) << '\n';
        all_match = all_match && report.match;
    }
    return all_match ? 0 : kExitMismatch;
}

std::vector<eulerlp::CongruenceReport> run_verify(const VerifyOptions& o) {
    using namespace eulerlp;
    if (o.check == "theorem6") return {verify_theorem6(o.p, o.n, o.r, o.precision, o.extra_terms)};
    if (o.check == "interpolation") {
        const PadicContext ctx(o.p, o.precision);
        return {interpolation_check(o.n, DirichletCharacter::teichmuller_power(o.t, ctx), o.precision, o.extra_terms)};
    }
    if (o.check == "kummer") return {kummer_check(o.k, o.t, PadicContext(o.p, o.precision), o.extra_terms)};
    if (o.check == "distribution") return {distribution_report(o.n, o.f, Rational::parse(o.x))};
    if (o.check == "powersum") return {powersum_check(o.n, o.m)};
    if (o.check == "binomial") {
        if (o.r < 1 || o.k < 0 || o.j < 0) throw std::invalid_argument("binomial: need r >= 1, k >= 0, j >= 0");
        const auto r = static_cast<long>(o.r);
        return {binomial_coefficient_check(r, o.k), binomial_product_check(r, o.k, o.j)};
    }
    throw std::invalid_argument("unknown check '" + o.check + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Euler numbers, p-adic l-functions and alternating harmonic sum congruences"};
    app.require_subcommand(1);

    std::size_t nmax = 10;
    auto* euler_cmd = app.add_subcommand("euler", "Print E_0..E_nmax as num/den strings");
    euler_cmd->add_option("--nmax", nmax, "Largest index")->required();

    unsigned long lp_p = 3;
    long lp_s = 1;
    long lp_t = 0;
    int lp_precision = 6;
    int lp_extra = 0;
    auto* lp_cmd = app.add_subcommand("lp", "Evaluate l_p(s, w^t)");
    lp_cmd->add_option("--p", lp_p, "Odd prime")->required();
    lp_cmd->add_option("--s", lp_s, "Integer argument s")->required();
    lp_cmd->add_option("--t", lp_t, "Teichmuller exponent");
    lp_cmd->add_option("--precision", lp_precision, "Digits M");
    lp_cmd->add_option("--extra-terms", lp_extra, "Extra series terms beyond M");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run one identity or congruence check");
    verify_cmd->add_option("--check", verify.check, "Which check")
        ->required()
        ->check(CLI::IsMember({"theorem6", "interpolation", "kummer", "distribution", "powersum", "binomial"}));
    verify_cmd->add_option("--p", verify.p, "Odd prime");
    verify_cmd->add_option("--n", verify.n, "n (even for theorem6/powersum)");
    verify_cmd->add_option("--r", verify.r, "r");
    verify_cmd->add_option("--t", verify.t, "Teichmuller exponent");
    verify_cmd->add_option("--k", verify.k, "k");
    verify_cmd->add_option("--m", verify.m, "Power m for powersum");
    verify_cmd->add_option("--f", verify.f, "Odd f for distribution");
    verify_cmd->add_option("--x", verify.x, "Rational x for distribution (num/den)");
    verify_cmd->add_option("--j", verify.j, "j for binomial");
    verify_cmd->add_option("--precision", verify.precision, "Digits M");
    verify_cmd->add_option("--extra-terms", verify.extra_terms, "Extra series terms beyond M");
    verify_cmd->add_option("--format", verify.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    std::string primes = "3,5,7";
    std::string r_range = "1..4";
    std::string n_range = "2,4,6";
    std::string suites;
    std::string grid_format = "json";
    eulerlp::GridConfig grid;
    auto* grid_cmd = app.add_subcommand("grid", "Run every suite over a parameter grid");
    grid_cmd->add_option("--primes", primes, "Odd primes, e.g. 3,5,7");
    grid_cmd->add_option("--r", r_range, "r values, e.g. 1..4");
    grid_cmd->add_option("--n", n_range, "Even n values, e.g. 2,4,6");
    grid_cmd->add_option("--precision", grid.precision, "Digits M");
    grid_cmd->add_option("--format", grid_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    grid_cmd->add_option("--threads", grid.threads, "Worker threads");
    grid_cmd->add_option("--suites", suites, "Comma-separated subset of suites");
    grid_cmd->add_option("--extra-terms", grid.extra_terms, "Extra series terms beyond M");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == static_cast<int>(CLI::ExitCodes::Success) ? 0 : kExitUsage;
    }

    try {
        if (*euler_cmd) {
            const auto numbers = eulerlp::euler_numbers_upto(nmax);
            for (std::size_t n = 0; n < numbers.size(); ++n) {
                nlohmann::ordered_json line;
                line["n"] = n;
                line["E"] = numbers[n].to_string();
                std::cout << line.dump() << '\n';
            }
            return 0;
        }
        if (*lp_cmd) {
            const eulerlp::PadicContext ctx(lp_p, lp_precision);
            const auto chi = eulerlp::DirichletCharacter::teichmuller_power(lp_t, ctx);
            const auto value =
                eulerlp::padic_l(lp_s, chi, eulerlp::TruncationPlan::for_precision(lp_precision, lp_extra));
            nlohmann::ordered_json out;
            out["s"] = lp_s;
            out["character"] = chi.descriptor();
            out["value"] = eulerlp::to_json(value);
            out["residue"] = value.residue().get_str();
            std::cout << out.dump() << '\n';
            return 0;
        }
        if (*verify_cmd) return emit(run_verify(verify), eulerlp::parse_format(verify.format));
        if (*grid_cmd) {
            grid.primes = eulerlp::parse_range(primes);
            grid.r_values = eulerlp::parse_range(r_range);
            grid.n_values = eulerlp::parse_range(n_range);
            grid.format = eulerlp::parse_format(grid_format);
            if (!suites.empty()) {
                grid.suites.clear();
                std::size_t start = 0;
                while (true) {
                    const auto comma = suites.find(',', start);
                    grid.suites.push_back(eulerlp::parse_suite(suites.substr(start, comma - start)));
                    if (comma == std::string::npos) break;
                    start = comma + 1;
                }
            }
            return emit(eulerlp::run_grid(grid), grid.format);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
