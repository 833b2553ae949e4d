#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "eulerlp/euler.hpp"

using namespace eulerlp;

namespace {

// Independent route: E_n = 2(1 - 2^{n+1}) B_{n+1} / (n+1), with Bernoulli
// numbers from sum_{k<=n} C(n+1,k) B_k = 0.
std::vector<Rational> bernoulli_upto(std::size_t nmax) {
    std::vector<Rational> b{Rational(1)};
    for (std::size_t n = 1; n <= nmax; ++n) {
        Rational acc;
        Integer c = 1;  // C(n+1, k)
        for (std::size_t k = 0; k < n; ++k) {
            acc += Rational(c) * b[k];
            c = c * (n + 1 - k) / (k + 1);
        }
        b.push_back(-acc / Rational(static_cast<long>(n + 1)));
    }
    return b;
}

Rational euler_via_bernoulli(std::size_t n, const std::vector<Rational>& b) {
    const Rational two_power = pow(Rational(2), static_cast<long>(n + 1));
    return Rational(2) * (Rational(1) - two_power) * b[n + 1] / Rational(static_cast<long>(n + 1));
}

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-50, 50), den(1, 50);
    return {num(rng), den(rng)};
}

}  // namespace

TEST_CASE("euler_numbers_upto small values") {
    CHECK(euler_numbers_upto(0) == std::vector<Rational>{Rational(1)});
    CHECK(euler_numbers_upto(3) == std::vector<Rational>{Rational(1), Rational(-1, 2), Rational(0), Rational(1, 4)});
    CHECK(euler_numbers_upto(7).at(7) == Rational(17, 8));
    CHECK(euler_number(5) == Rational(-1, 2));
}

TEST_CASE("euler numbers match the Bernoulli oracle and vanish at even index") {
    const auto b = bernoulli_upto(41);
    const auto e = euler_numbers_upto(40);
    for (std::size_t n = 0; n <= 40; ++n) {
        CAPTURE(n);
        CHECK(e[n] == euler_via_bernoulli(n, b));
        if (n >= 2 && n % 2 == 0) CHECK(e[n].is_zero());
        // Denominator is a power of two.
        Integer d = e[n].denominator();
        while (d % 2 == 0) d /= 2;
        CHECK(d == 1);
    }
}

TEST_CASE("euler_polynomial coefficients") {
    CHECK(euler_polynomial(0) == EulerPolynomial({Rational(1)}));
    CHECK(euler_polynomial(1) == EulerPolynomial({Rational(-1, 2), Rational(1)}));
    CHECK(euler_polynomial(2) == EulerPolynomial({Rational(0), Rational(-1), Rational(1)}));
    for (std::size_t n = 1; n <= 25; ++n) {
        const auto poly = euler_polynomial(n);
        CAPTURE(n);
        CHECK(poly.degree() == n);
        CHECK(poly[n] == Rational(1));
        CHECK(poly[n - 1] == Rational(-static_cast<long>(n), 2));
    }
}

TEST_CASE("eval_euler_poly spot values") {
    CHECK(eval_euler_poly(1, Rational(1, 3)) == Rational(-1, 6));
    CHECK(eval_euler_poly(2, Rational(2, 3)) == Rational(-2, 9));
    for (std::size_t n = 1; n <= 21; n += 2) CHECK(eval_euler_poly(n, Rational(1, 2)).is_zero());
}

TEST_CASE("functional equation and reflection on random rationals") {
    std::mt19937 rng(20261016);
    for (int trial = 0; trial < 50; ++trial) {
        const Rational x = random_rational(rng);
        for (std::size_t n = 0; n <= 20; ++n) {
            CAPTURE(n);
            CAPTURE(x.to_string());
            CHECK(eval_euler_poly(n, x + Rational(1)) + eval_euler_poly(n, x) ==
                  Rational(2) * pow(x, static_cast<long>(n)));
            const Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
            CHECK(eval_euler_poly(n, Rational(1) - x) == sign * eval_euler_poly(n, x));
        }
    }
}

TEST_CASE("alternating power sums") {
    CHECK(alternating_power_sum_direct(2, 1) == Rational(-2));
    CHECK(alternating_power_sum_direct(4, 2) == Rational(-12));
    CHECK(alternating_power_sum_direct(2, 0) == Rational(0));
    CHECK(alternating_power_sum_direct(0, 0) == Rational(0));
    CHECK(alternating_power_sum_direct(1, 0) == Rational(2));
    CHECK(alternating_power_sum_closed(2, 1) == Rational(-2));
    CHECK(alternating_power_sum_closed(4, 2) == Rational(-12));
    CHECK(alternating_power_sum_closed(2, 0) == Rational(0));
    CHECK_THROWS_AS(alternating_power_sum_closed(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(alternating_power_sum_closed(0, 2), std::invalid_argument);
    for (unsigned long n = 2; n <= 20; n += 2)
        for (unsigned long m = 0; m <= 12; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            CHECK(alternating_power_sum_closed(n, m) == alternating_power_sum_direct(n, m));
        }
}

TEST_CASE("closed form without C(m,l) disagrees with direct summation") {
    // The binomial factor is required: n=4, m=2 already separates the forms.
    const auto e = euler_numbers_upto(2);
    const Rational without_binomial = -(e[0] * Rational(16) + e[1] * Rational(4));
    CHECK(without_binomial != alternating_power_sum_direct(4, 2));
}

TEST_CASE("partial_zeta_neg") {
    CHECK(partial_zeta_neg(1, 1, 5) == Rational(3, 4));
    CHECK(partial_zeta_neg(0, 2, 3) == Rational(1, 2));
    CHECK(partial_zeta_neg(1, 1, 3) == Rational(1, 4));
    CHECK(partial_zeta_neg(2, 1, 3) == Rational(1));
    CHECK_THROWS_AS(partial_zeta_neg(1, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(partial_zeta_neg(1, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(partial_zeta_neg(1, 1, 4), std::invalid_argument);
}

TEST_CASE("distribution relation") {
    CHECK(distribution_check(1, 3, Rational(0)));
    CHECK(distribution_check(5, 5, Rational(1, 2)));
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Rational x = random_rational(rng);
        for (std::size_t n = 0; n <= 12; ++n)
            for (const long f : {1L, 3L, 5L, 7L}) {
                CAPTURE(n);
                CAPTURE(f);
                CHECK(distribution_check(n, f, x));
            }
    }
    CHECK_THROWS_AS(distribution_check(1, 2, Rational(0)), std::invalid_argument);
}

TEST_CASE("printed indexing of the distribution relation fails") {
    // a = 1..f with sign (-1)^n instead of a = 0..f-1 with (-1)^a.
    const std::size_t n = 1;
    const long f = 3;
    Rational printed;
    for (long a = 1; a <= f; ++a) printed += Rational(-1) * eval_euler_poly(n, Rational(a, f));
    printed *= Rational(f);
    CHECK(printed != eval_euler_poly(n, Rational(0)));
}
