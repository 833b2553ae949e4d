#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eulerlp/padic.hpp"
#include "eulerlp/rational.hpp"
#include "eulerlp/report.hpp"

namespace eulerlp {

/// sum_{j=1, p not dividing j}^{np} (-1)^j / j^r, exact. The congruence
/// compares twice this value with the series side.
Rational lhs_sum(unsigned long p, unsigned long n, unsigned long r);

/// -sum_{k=1}^{K} C(-r,k) (pn)^k l_p(r+k, w^{-k-r}) mod p^M, K = M + extra_terms.
PadicNumber rhs_series(unsigned long p, unsigned long n, unsigned long r, int m, int extra_terms = 0);

/// Main congruence: 2 * lhs_sum(p,n,r) against rhs_series(p,n,r,M) mod p^M.
/// The report's lhs_valuation is the exact valuation of the rational side.
/// Throws std::invalid_argument unless p is an odd prime, n even >= 2,
/// r >= 1 and M >= 1.
CongruenceReport verify_theorem6(unsigned long p, unsigned long n, unsigned long r, int m, int extra_terms = 0);

/// Closed even-n alternating power sum against direct summation.
CongruenceReport powersum_check(unsigned long n, unsigned long m);

/// Both sides of the Euler polynomial distribution relation.
CongruenceReport distribution_report(std::size_t n, long f, const Rational& x);

/// (r/(r+k)) C(-r-1,k) against C(-r,k).
CongruenceReport binomial_coefficient_check(long r, long k);

/// C(-r,k) C(-r-k,j) against C(-r,k+j) C(k+j,j).
CongruenceReport binomial_product_check(long r, long k, long j);

enum class Suite { theorem6, interpolation, kummer, powersum, binomial, distribution };
enum class OutputFormat { json, csv };

Suite parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);
OutputFormat parse_format(std::string_view name);

struct GridConfig {
    std::vector<unsigned long> primes;
    std::vector<unsigned long> r_values;
    std::vector<unsigned long> n_values;
    int precision = 6;
    OutputFormat format = OutputFormat::json;
    std::vector<Suite> suites = {Suite::theorem6,   Suite::interpolation, Suite::kummer,
                                 Suite::powersum,   Suite::binomial,      Suite::distribution};
    unsigned threads = 1;
    int extra_terms = 0;

    /// Throws std::invalid_argument on even or non-prime p, odd or zero n,
    /// r = 0, precision < 1, threads = 0 or negative extra_terms.
    void validate() const;
};

/// Sample points used by the distribution suite.
const std::vector<Rational>& distribution_sample_points();

/// Reports in canonical order: suites in config order, then primes, r, n
/// as listed. Independent of the thread count.
std::vector<CongruenceReport> run_grid(const GridConfig& config);

/// Parses "1..4", "2,4,6" or a mix such as "1,3..5". Throws
/// std::invalid_argument on malformed input.
std::vector<unsigned long> parse_range(std::string_view text);

}  // namespace eulerlp
