#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "eulerlp/rational.hpp"

namespace eulerlp {

/// Coefficients of E_n(x), index i holding the coefficient of x^i.
/// Monic of degree n.
class EulerPolynomial {
public:
    explicit EulerPolynomial(std::vector<Rational> coefficients);

    [[nodiscard]] std::size_t degree() const { return coefficients_.size() - 1; }
    [[nodiscard]] std::span<const Rational> coefficients() const { return coefficients_; }
    [[nodiscard]] const Rational& operator[](std::size_t i) const { return coefficients_.at(i); }

    /// Horner evaluation.
    [[nodiscard]] Rational operator()(const Rational& x) const;

    friend bool operator==(const EulerPolynomial&, const EulerPolynomial&) = default;

private:
    std::vector<Rational> coefficients_;
};

/// [E_0, ..., E_nmax] from E_0 = 1, E_n = -1/2 sum_{k<n} C(n,k) E_k.
std::vector<Rational> euler_numbers_upto(std::size_t nmax);

/// Single Euler number, served from a process-wide table that grows on
/// demand. Thread-safe.
Rational euler_number(std::size_t n);

EulerPolynomial euler_polynomial(std::size_t n);

/// E_n(x); equals the Euler zeta value zeta_E(-n, x).
Rational eval_euler_poly(std::size_t n, const Rational& x);

/// 2 * sum_{l=0}^{n-1} (-1)^l l^m by direct summation, with 0^0 = 1.
Rational alternating_power_sum_direct(unsigned long n, unsigned long m);

/// -sum_{l=0}^{m-1} C(m,l) E_l n^{m-l}, valid for even n >= 2.
/// Throws std::invalid_argument for odd or zero n.
Rational alternating_power_sum_closed(unsigned long n, unsigned long m);

/// Partial zeta value H(-n, a|F) = (-1)^a F^n / 2 * E_n(a/F).
/// Requires 0 < a < F and F odd; throws std::invalid_argument otherwise.
Rational partial_zeta_neg(std::size_t n, long a, long modulus);

/// Both sides of E_n(x) = f^n sum_{a=0}^{f-1} (-1)^a E_n((x+a)/f).
struct DistributionSides {
    Rational lhs;
    Rational rhs;
};
DistributionSides distribution_sides(std::size_t n, long f, const Rational& x);

/// True iff the distribution relation holds exactly. f must be odd and
/// positive (std::invalid_argument otherwise).
bool distribution_check(std::size_t n, long f, const Rational& x);

}  // namespace eulerlp
