#include "eulerlp/padic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace eulerlp {

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PadicContext::PadicContext(unsigned long p, int precision) : p_(p), precision_(precision) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("PadicContext: p must be an odd prime, got " + std::to_string(p));
    if (precision < 1)
        throw std::invalid_argument("PadicContext: precision must be >= 1");
    std::vector<Integer> powers(static_cast<std::size_t>(precision) + 1);
    powers[0] = 1;
    for (std::size_t k = 1; k < powers.size(); ++k) powers[k] = powers[k - 1] * p;
    powers_ = std::make_shared<const std::vector<Integer>>(std::move(powers));
}

const Integer& PadicContext::power(int k) const {
    if (k < 0 || k > precision_) throw std::out_of_range("PadicContext::power");
    return (*powers_)[static_cast<std::size_t>(k)];
}

PadicNumber::PadicNumber(PadicContext ctx, Integer residue, int precision)
    : ctx_(std::move(ctx)), precision_(std::clamp(precision, 0, ctx_.precision())) {
    const Integer& mod = ctx_.power(precision_);
    mpz_fdiv_r(residue.get_mpz_t(), residue.get_mpz_t(), mod.get_mpz_t());
    residue_ = std::move(residue);
    valuation_ = precision_;
    if (residue_ != 0) {
        Integer rest = residue_;
        valuation_ = static_cast<int>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(),
                                                  Integer(ctx_.prime()).get_mpz_t()));
    }
}

PadicNumber PadicNumber::zero(const PadicContext& ctx) { return {ctx, Integer(0), ctx.precision()}; }

PadicNumber PadicNumber::one(const PadicContext& ctx) { return {ctx, Integer(1), ctx.precision()}; }

PadicNumber PadicNumber::from_integer(const Integer& z, const PadicContext& ctx) {
    return {ctx, z, ctx.precision()};
}

PadicNumber PadicNumber::from_rational(const Rational& q, const PadicContext& ctx) {
    const Integer den = q.denominator();
    if (mpz_divisible_ui_p(den.get_mpz_t(), ctx.prime()))
        throw std::domain_error("from_rational: denominator of " + q.to_string() + " is divisible by " +
                                std::to_string(ctx.prime()));
    Integer inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), ctx.modulus().get_mpz_t());
    return {ctx, Integer(q.numerator() * inv), ctx.precision()};
}

std::vector<unsigned long> PadicNumber::digits() const {
    std::vector<unsigned long> out;
    out.reserve(static_cast<std::size_t>(precision_));
    Integer rest = residue_;
    for (int i = 0; i < precision_; ++i)
        out.push_back(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), ctx_.prime()));
    return out;
}

PadicNumber PadicNumber::reduced(int m) const { return {ctx_, residue_, std::min(m, precision_)}; }

bool PadicNumber::congruent(const PadicNumber& other, int m) const {
    if (!(ctx_ == other.ctx_)) throw std::invalid_argument("PadicNumber: context mismatch");
    if (m > precision_ || m > other.precision_)
        throw std::invalid_argument("congruent: requested " + std::to_string(m) +
                                    " digits beyond known precision");
    return reduced(m).residue_ == other.reduced(m).residue_;
}

PadicNumber PadicNumber::invert_unit() const {
    if (!is_unit()) throw std::domain_error("invert_unit: value is not a p-adic unit");
    Integer inv;
    mpz_invert(inv.get_mpz_t(), residue_.get_mpz_t(), ctx_.power(precision_).get_mpz_t());
    return {ctx_, inv, precision_};
}

PadicNumber PadicNumber::shift_down(int k) const {
    if (k < 0 || valuation_ < k)
        throw std::domain_error("shift_down: valuation " + std::to_string(valuation_) +
                                " is below the requested shift " + std::to_string(k));
    Integer q;
    mpz_divexact(q.get_mpz_t(), residue_.get_mpz_t(), ctx_.power(k).get_mpz_t());
    return {ctx_, q, precision_ - k};
}

PadicNumber PadicNumber::operator-() const { return {ctx_, Integer(-residue_), precision_}; }

namespace {
void require_same_context(const PadicNumber& x, const PadicNumber& y) {
    if (!(x.context() == y.context())) throw std::invalid_argument("PadicNumber: context mismatch");
}
}  // namespace

PadicNumber operator+(const PadicNumber& x, const PadicNumber& y) {
    require_same_context(x, y);
    return {x.ctx_, Integer(x.residue_ + y.residue_), std::min(x.precision_, y.precision_)};
}

PadicNumber operator-(const PadicNumber& x, const PadicNumber& y) {
    require_same_context(x, y);
    return {x.ctx_, Integer(x.residue_ - y.residue_), std::min(x.precision_, y.precision_)};
}

PadicNumber operator*(const PadicNumber& x, const PadicNumber& y) {
    require_same_context(x, y);
    // Error terms p^{M_x} * y and p^{M_y} * x bound the known digits.
    const int precision = std::min(x.precision_ + y.valuation_, y.precision_ + x.valuation_);
    return {x.ctx_, Integer(x.residue_ * y.residue_), precision};
}

bool operator==(const PadicNumber& x, const PadicNumber& y) {
    return x.ctx_ == y.ctx_ && x.precision_ == y.precision_ && x.residue_ == y.residue_;
}

PadicNumber unit_pow(const PadicNumber& x, long e) {
    if (e < 0) return unit_pow(x.invert_unit(), -e);
    if (e == 0) return PadicNumber::one(x.context());
    PadicNumber base = x;
    PadicNumber acc = PadicNumber::one(x.context());
    auto bits = static_cast<unsigned long>(e);
    while (bits != 0) {
        if (bits & 1UL) acc *= base;
        bits >>= 1;
        if (bits != 0) base *= base;
    }
    return acc;
}

PadicNumber teichmuller(long a, const PadicContext& ctx) {
    const Integer& mod = ctx.modulus();
    Integer x(a);
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
    if (mpz_divisible_ui_p(x.get_mpz_t(), ctx.prime()))
        throw std::domain_error("teichmuller: " + std::to_string(a) + " is divisible by p");
    const Integer exponent(ctx.prime());
    // a^{p^k} is correct to k+1 digits, so N iterations always reach the fixed point.
    for (int i = 0; i <= ctx.precision(); ++i) {
        Integer next;
        mpz_powm(next.get_mpz_t(), x.get_mpz_t(), exponent.get_mpz_t(), mod.get_mpz_t());
        if (next == x) break;
        x = next;
    }
    return PadicNumber::from_integer(x, ctx);
}

PadicNumber angle(long a, const PadicContext& ctx) {
    return PadicNumber::from_integer(a, ctx) * teichmuller(a, ctx).invert_unit();
}

Rational binom_int(long z, unsigned long j) {
    Integer out;
    mpz_bin_ui(out.get_mpz_t(), Integer(z).get_mpz_t(), j);
    return Rational(out);
}

}  // namespace eulerlp
