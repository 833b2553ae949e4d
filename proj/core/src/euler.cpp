#include "eulerlp/euler.hpp"

#include <mutex>
#include <stdexcept>
#include <string>


namespace eulerlp {

namespace {

// Pascal row n: C(n,0..n).
std::vector<Integer> binomial_row(std::size_t n) {
    std::vector<Integer> row(n + 1);
    row[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) row[k] = row[k - 1] * (n - k + 1) / k;
    return row;
}

class EulerTable {
public:
    Rational at(std::size_t n) {
        std::lock_guard lock(mutex_);
        extend_to(n);
        return values_[n];
    }

    std::vector<Rational> prefix(std::size_t nmax) {
        std::lock_guard lock(mutex_);
        extend_to(nmax);
        return {values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(nmax + 1)};
    }

private:
    void extend_to(std::size_t n) {
        if (values_.empty()) values_.emplace_back(1);
        while (values_.size() <= n) {
            const std::size_t m = values_.size();
            const auto row = binomial_row(m);
            Rational acc;
            for (std::size_t k = 0; k < m; ++k) {
                if (!values_[k].is_zero()) acc += Rational(row[k]) * values_[k];
            }
            values_.push_back(acc * Rational(-1, 2));
        }
    }

    std::mutex mutex_;
    std::vector<Rational> values_;
};

EulerTable& table() {
    static EulerTable instance;
    return instance;
}

Rational integer_power(long base, unsigned long e) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), e);
    if (base < 0 && e % 2 == 1) out = -out;
    return Rational(out);
}

}  // namespace

EulerPolynomial::EulerPolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) throw std::invalid_argument("EulerPolynomial: no coefficients");
}

Rational EulerPolynomial::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<Rational> euler_numbers_upto(std::size_t nmax) { return table().prefix(nmax); }

Rational euler_number(std::size_t n) { return table().at(n); }

EulerPolynomial euler_polynomial(std::size_t n) {
    const auto numbers = euler_numbers_upto(n);
    const auto row = binomial_row(n);
    // x^{n-k} carries C(n,k) E_k.
    std::vector<Rational> coefficients(n + 1);
    for (std::size_t k = 0; k <= n; ++k) coefficients[n - k] = Rational(row[k]) * numbers[k];
    return EulerPolynomial(std::move(coefficients));
}

Rational eval_euler_poly(std::size_t n, const Rational& x) { return euler_polynomial(n)(x); }

Rational alternating_power_sum_direct(unsigned long n, unsigned long m) {
    Integer acc;
    for (unsigned long l = 0; l < n; ++l) {
        Integer term;
        mpz_ui_pow_ui(term.get_mpz_t(), l, m);
        if (l % 2 == 0) acc += term;
        else acc -= term;
    }
    return Rational(Integer(2 * acc));
}

Rational alternating_power_sum_closed(unsigned long n, unsigned long m) {
    if (n == 0 || n % 2 != 0)
        throw std::invalid_argument("alternating_power_sum_closed: n must be even and positive, got " +
                                    std::to_string(n));
    const auto numbers = euler_numbers_upto(m);
    const auto row = binomial_row(m);
    Rational acc;
    for (unsigned long l = 0; l < m; ++l) {
        if (numbers[l].is_zero()) continue;
        acc += Rational(row[l]) * numbers[l] * integer_power(static_cast<long>(n), m - l);
    }
    return -acc;
}

Rational partial_zeta_neg(std::size_t n, long a, long modulus) {
    if (modulus <= 0 || modulus % 2 == 0)
        throw std::invalid_argument("partial_zeta_neg: modulus must be odd and positive");
    if (a <= 0 || a >= modulus)
        throw std::invalid_argument("partial_zeta_neg: need 0 < a < F");
    const Rational sign = (a % 2 == 0) ? Rational(1) : Rational(-1);
    return sign * integer_power(modulus, n) * Rational(1, 2) * eval_euler_poly(n, Rational(a, modulus));
}

DistributionSides distribution_sides(std::size_t n, long f, const Rational& x) {
    if (f <= 0 || f % 2 == 0) throw std::invalid_argument("distribution_check: f must be odd and positive");
    const auto poly = euler_polynomial(n);
    Rational rhs;
    for (long a = 0; a < f; ++a) {
        const Rational term = poly((x + Rational(a)) / Rational(f));
        if (a % 2 == 0) rhs += term;
        else rhs -= term;
    }
    return {poly(x), rhs * integer_power(f, n)};
}

bool distribution_check(std::size_t n, long f, const Rational& x) {
    const auto sides = distribution_sides(n, f, x);
    return sides.lhs == sides.rhs;
}

}  // namespace eulerlp
