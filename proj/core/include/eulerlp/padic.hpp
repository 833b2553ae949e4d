#pragma once

#include <memory>
#include <string>
#include <vector>

#include "eulerlp/rational.hpp"

namespace eulerlp {

/// An odd prime p together with an absolute precision N: values live in
/// Z/p^N. Cheap to copy; the power table is shared.
class PadicContext {
public:
    /// Throws std::invalid_argument unless p is an odd prime and N >= 1.
    PadicContext(unsigned long p, int precision);

    [[nodiscard]] unsigned long prime() const { return p_; }
    [[nodiscard]] int precision() const { return precision_; }
    /// p^k for 0 <= k <= N.
    [[nodiscard]] const Integer& power(int k) const;
    [[nodiscard]] const Integer& modulus() const { return power(precision_); }

    friend bool operator==(const PadicContext& a, const PadicContext& b) {
        return a.p_ == b.p_ && a.precision_ == b.precision_;
    }

private:
    unsigned long p_;
    int precision_;
    std::shared_ptr<const std::vector<Integer>> powers_;
};

bool is_prime(unsigned long n);

/// A p-adic integer known modulo p^M, M <= N. The residue is kept reduced
/// into [0, p^M). Valuation is exact when below M; a value that is zero
/// modulo p^M reports valuation M, read as "at least M".
class PadicNumber {
public:
    static PadicNumber zero(const PadicContext& ctx);
    static PadicNumber one(const PadicContext& ctx);
    static PadicNumber from_integer(const Integer& z, const PadicContext& ctx);
    static PadicNumber from_integer(long z, const PadicContext& ctx) {
        return from_integer(Integer(z), ctx);
    }
    /// Throws std::domain_error when p divides the denominator.
    static PadicNumber from_rational(const Rational& q, const PadicContext& ctx);

    [[nodiscard]] const PadicContext& context() const { return ctx_; }
    [[nodiscard]] const Integer& residue() const { return residue_; }
    [[nodiscard]] int precision() const { return precision_; }
    [[nodiscard]] int valuation() const { return valuation_; }
    [[nodiscard]] bool is_zero() const { return valuation_ >= precision_; }
    [[nodiscard]] bool is_unit() const { return valuation_ == 0 && precision_ > 0; }

    /// Base-p digits, least significant first, exactly precision() of them.
    [[nodiscard]] std::vector<unsigned long> digits() const;

    /// Forgets digits beyond p^m (m is clamped to the current precision).
    [[nodiscard]] PadicNumber reduced(int m) const;

    /// True iff both agree modulo p^m. Throws std::invalid_argument when
    /// either value is known to less than m digits.
    [[nodiscard]] bool congruent(const PadicNumber& other, int m) const;

    /// Inverse of a unit. Throws std::domain_error for non-units.
    [[nodiscard]] PadicNumber invert_unit() const;

    /// Exact division by p^k; requires valuation >= k and loses k digits of
    /// precision. Throws std::domain_error otherwise.
    [[nodiscard]] PadicNumber shift_down(int k) const;

    PadicNumber operator-() const;
    friend PadicNumber operator+(const PadicNumber& x, const PadicNumber& y);
    friend PadicNumber operator-(const PadicNumber& x, const PadicNumber& y);
    friend PadicNumber operator*(const PadicNumber& x, const PadicNumber& y);
    PadicNumber& operator+=(const PadicNumber& y) { return *this = *this + y; }
    PadicNumber& operator-=(const PadicNumber& y) { return *this = *this - y; }
    PadicNumber& operator*=(const PadicNumber& y) { return *this = *this * y; }

    /// Same context, same precision, same residue.
    friend bool operator==(const PadicNumber& x, const PadicNumber& y);

private:
    PadicNumber(PadicContext ctx, Integer residue, int precision);

    PadicContext ctx_;
    Integer residue_;
    int precision_;
    int valuation_;
};

/// x^e by repeated squaring; e < 0 goes through invert_unit.
PadicNumber unit_pow(const PadicNumber& x, long e);

/// Teichmuller lift w(a): the (p-1)-th root of unity congruent to a mod p,
/// found as the fixed point of x -> x^p. Throws std::domain_error if p | a.
PadicNumber teichmuller(long a, const PadicContext& ctx);

/// <a> = a / w(a), a principal unit. Throws std::domain_error if p | a.
PadicNumber angle(long a, const PadicContext& ctx);

/// z(z-1)...(z-j+1)/j! for any integer z. Always integral.
Rational binom_int(long z, unsigned long j);

}  // namespace eulerlp
