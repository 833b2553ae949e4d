#include "eulerlp/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "eulerlp/character.hpp"
#include "eulerlp/euler.hpp"
#include "eulerlp/lfunction.hpp"

namespace eulerlp {

namespace {

void check_theorem6_args(unsigned long p, unsigned long n, unsigned long r, int m) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("n must be even and >= 2, got " + std::to_string(n));
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    if (m < 1) throw std::invalid_argument("precision must be >= 1");
}

}  // namespace

Rational lhs_sum(unsigned long p, unsigned long n, unsigned long r) {
    Rational acc;
    for (unsigned long j = 1; j <= n * p; ++j) {
        if (j % p == 0) continue;
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), j, r);
        const Rational term(Integer(1), power);
        if (j % 2 == 0) acc += term;
        else acc -= term;
    }
    return acc;
}

PadicNumber rhs_series(unsigned long p, unsigned long n, unsigned long r, int m, int extra_terms) {
    check_theorem6_args(p, n, r, m);
    const PadicContext ctx(p, m);
    const auto plan = TruncationPlan::for_precision(m, extra_terms);
    const long rr = static_cast<long>(r);
    const Integer step(p * n);
    Integer step_power = 1;
    PadicNumber acc = PadicNumber::zero(ctx);
    for (long k = 1; k <= m + extra_terms; ++k) {
        step_power *= step;
        const Rational coefficient = binom_int(-rr, static_cast<unsigned long>(k)) * Rational(step_power);
        const auto chi = DirichletCharacter::teichmuller_power(-k - rr, ctx);
        acc += PadicNumber::from_rational(coefficient, ctx) * padic_l(rr + k, chi, plan);
    }
    return (-acc).reduced(m);
}

CongruenceReport verify_theorem6(unsigned long p, unsigned long n, unsigned long r, int m, int extra_terms) {
    check_theorem6_args(p, n, r, m);
    const PadicContext ctx(p, m);
    const Rational lhs_value = Rational(2) * lhs_sum(p, n, r);
    const PadicNumber lhs = PadicNumber::from_rational(lhs_value, ctx);
    const PadicNumber rhs = rhs_series(p, n, r, m, extra_terms);

    nlohmann::ordered_json params;
    params["n"] = n;
    params["r"] = r;
    params["lhs_rational"] = lhs_value.to_string();
    auto report = make_padic_report("theorem6", std::move(params), lhs, rhs, m);
    report.lhs_valuation = valuation(lhs_value, p);
    return report;
}

CongruenceReport powersum_check(unsigned long n, unsigned long m) {
    nlohmann::ordered_json params;
    params["n"] = n;
    params["m"] = m;
    return make_exact_report("powersum", std::move(params), alternating_power_sum_closed(n, m),
                             alternating_power_sum_direct(n, m));
}

CongruenceReport distribution_report(std::size_t n, long f, const Rational& x) {
    const auto sides = distribution_sides(n, f, x);
    nlohmann::ordered_json params;
    params["n"] = n;
    params["f"] = f;
    params["x"] = x.to_string();
    return make_exact_report("distribution", std::move(params), sides.lhs, sides.rhs);
}

CongruenceReport binomial_coefficient_check(long r, long k) {
    nlohmann::ordered_json params;
    params["r"] = r;
    params["k"] = k;
    const auto kk = static_cast<unsigned long>(k);
    return make_exact_report("binomial_coefficient", std::move(params),
                             Rational(r, r + k) * binom_int(-r - 1, kk), binom_int(-r, kk));
}

CongruenceReport binomial_product_check(long r, long k, long j) {
    nlohmann::ordered_json params;
    params["r"] = r;
    params["k"] = k;
    params["j"] = j;
    const auto kk = static_cast<unsigned long>(k);
    const auto jj = static_cast<unsigned long>(j);
    return make_exact_report("binomial_product", std::move(params), binom_int(-r, kk) * binom_int(-r - k, jj),
                             binom_int(-r, kk + jj) * binom_int(k + j, jj));
}

Suite parse_suite(std::string_view name) {
    if (name == "theorem6") return Suite::theorem6;
    if (name == "interpolation") return Suite::interpolation;
    if (name == "kummer") return Suite::kummer;
    if (name == "powersum") return Suite::powersum;
    if (name == "binomial") return Suite::binomial;
    if (name == "distribution") return Suite::distribution;
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::string_view suite_name(Suite suite) {
    switch (suite) {
        case Suite::theorem6: return "theorem6";
        case Suite::interpolation: return "interpolation";
        case Suite::kummer: return "kummer";
        case Suite::powersum: return "powersum";
        case Suite::binomial: return "binomial";
        case Suite::distribution: return "distribution";
    }
    return "";
}

OutputFormat parse_format(std::string_view name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

void GridConfig::validate() const {
    for (const auto p : primes)
        if (p < 3 || !is_prime(p)) throw std::invalid_argument("grid: " + std::to_string(p) + " is not an odd prime");
    for (const auto n : n_values)
        if (n == 0 || n % 2 != 0) throw std::invalid_argument("grid: n must be even and positive, got " + std::to_string(n));
    for (const auto r : r_values)
        if (r == 0) throw std::invalid_argument("grid: r must be >= 1");
    if (precision < 1) throw std::invalid_argument("grid: precision must be >= 1");
    if (threads == 0) throw std::invalid_argument("grid: threads must be >= 1");
    if (extra_terms < 0) throw std::invalid_argument("grid: extra_terms must be >= 0");
}

const std::vector<Rational>& distribution_sample_points() {
    static const std::vector<Rational> points = {Rational(0), Rational(1, 2), Rational(-7, 3), Rational(5, 11)};
    return points;
}

std::vector<CongruenceReport> run_grid(const GridConfig& config) {
    config.validate();
    std::vector<std::function<CongruenceReport()>> tasks;
    const int m = config.precision;
    const int extra = config.extra_terms;

    for (const Suite suite : config.suites) {
        switch (suite) {
            case Suite::theorem6:
                for (const auto p : config.primes)
                    for (const auto r : config.r_values)
                        for (const auto n : config.n_values)
                            tasks.emplace_back([=] { return verify_theorem6(p, n, r, m, extra); });
                break;
            case Suite::interpolation:
                for (const auto p : config.primes)
                    for (const auto n : config.r_values)
                        tasks.emplace_back([=] {
                            const PadicContext ctx(p, m);
                            return interpolation_check(
                                n, DirichletCharacter::teichmuller_power(static_cast<long>(n), ctx), m, extra);
                        });
                break;
            case Suite::kummer:
                for (const auto p : config.primes)
                    for (const auto k : config.r_values)
                        tasks.emplace_back(
                            [=] { return kummer_check(static_cast<long>(k), 0, PadicContext(p, m), extra); });
                break;
            case Suite::powersum:
                for (const auto n : config.n_values)
                    for (const auto mm : config.r_values) tasks.emplace_back([=] { return powersum_check(n, mm); });
                break;
            case Suite::binomial:
                for (const auto r : config.r_values)
                    for (const auto k : config.n_values) {
                        const auto rl = static_cast<long>(r);
                        const auto kl = static_cast<long>(k);
                        tasks.emplace_back([=] { return binomial_coefficient_check(rl, kl); });
                        for (const auto j : config.n_values) {
                            const auto jl = static_cast<long>(j);
                            tasks.emplace_back([=] { return binomial_product_check(rl, kl, jl); });
                        }
                    }
                break;
            case Suite::distribution:
                if (config.primes.empty() || config.r_values.empty()) break;
                for (const auto n : config.r_values) {
                    std::vector<long> fs = {1};
                    for (const auto p : config.primes) fs.push_back(static_cast<long>(p));
                    for (const long f : fs)
                        for (const auto& x : distribution_sample_points())
                            tasks.emplace_back([=] { return distribution_report(n, f, x); });
                }
                break;
        }
    }

    std::vector<CongruenceReport> reports(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                reports[i] = tasks[i]();
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const unsigned count = std::min<unsigned>(config.threads, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
    if (count <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(count);
        for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return reports;
}

std::vector<unsigned long> parse_range(std::string_view text) {
    auto parse_number = [&](std::string_view part) {
        unsigned long value = 0;
        const auto* first = part.data();
        const auto* last = part.data() + part.size();
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (part.empty() || ec != std::errc() || ptr != last)
            throw std::invalid_argument("malformed range '" + std::string(text) + "'");
        return value;
    };
    std::vector<unsigned long> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        const auto dots = item.find("..");
        if (dots == std::string_view::npos) {
            out.push_back(parse_number(item));
        } else {
            const auto lo = parse_number(item.substr(0, dots));
            const auto hi = parse_number(item.substr(dots + 2));
            if (lo > hi) throw std::invalid_argument("empty range '" + std::string(item) + "'");
            for (auto v = lo; v <= hi; ++v) out.push_back(v);
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace eulerlp
