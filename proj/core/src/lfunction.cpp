#include "eulerlp/lfunction.hpp"

#include <stdexcept>
#include <string>

#include "eulerlp/euler.hpp"

namespace eulerlp {

TruncationPlan TruncationPlan::for_precision(int target_precision, int extra_terms) {
    if (target_precision < 1) throw std::invalid_argument("TruncationPlan: precision must be >= 1");
    if (extra_terms < 0) throw std::invalid_argument("TruncationPlan: extra_terms must be >= 0");
    return {target_precision, target_precision + extra_terms};
}

namespace {

void check_plan(const TruncationPlan& plan, const PadicContext& ctx) {
    if (plan.target_precision < 1 || plan.target_precision > ctx.precision())
        throw std::invalid_argument("TruncationPlan: target precision outside [1, N]");
    if (plan.series_cutoff < plan.target_precision)
        throw std::invalid_argument("TruncationPlan: series cutoff below target precision");
}

void check_partial_zeta_args(long a, long modulus, const PadicContext& ctx) {
    const auto p = static_cast<long>(ctx.prime());
    if (modulus <= 0 || modulus % 2 == 0 || modulus % p != 0)
        throw std::invalid_argument("H_p: modulus must be an odd multiple of p");
    if (a <= 0 || a >= modulus) throw std::invalid_argument("H_p: need 0 < a < F");
    if (a % p == 0) throw std::invalid_argument("H_p: a must be prime to p");
}

// Rational parity sign (-1)^a.
Rational parity(long a) { return (a % 2 == 0) ? Rational(1) : Rational(-1); }

Rational integer_power(long base, std::size_t e) {
    Rational out(1);
    for (std::size_t i = 0; i < e; ++i) out *= Rational(base);
    return out;
}

}  // namespace

PadicNumber generalized_euler_number(std::size_t n, const DirichletCharacter& chi) {
    const PadicContext& ctx = chi.context();
    const long f = chi.conductor();
    const Rational scale = integer_power(f, n);
    const auto poly = euler_polynomial(n);
    PadicNumber acc = PadicNumber::zero(ctx);
    for (long a = 0; a < f; ++a) {
        const PadicNumber value = chi(a);
        if (value.is_zero()) continue;
        const Rational term = parity(a) * scale * poly(Rational(a, f));
        acc += value * PadicNumber::from_rational(term, ctx);
    }
    return acc;
}

Rational generalized_euler_number_exact(std::size_t n, const DirichletCharacter& chi) {
    const long f = chi.conductor();
    const auto poly = euler_polynomial(n);
    Rational acc;
    for (long a = 0; a < f; ++a) {
        const auto sign = chi.sign_value(a);
        if (!sign) throw std::invalid_argument("generalized_euler_number_exact: character value is not 0 or +-1");
        if (*sign == 0) continue;
        acc += Rational(*sign) * parity(a) * poly(Rational(a, f));
    }
    return acc * integer_power(f, n);
}

PadicNumber l_at_negative_int(std::size_t k, const DirichletCharacter& chi) {
    if (k < 1) throw std::invalid_argument("l_at_negative_int: k must be >= 1");
    return generalized_euler_number(k, chi);
}

PadicNumber partial_zeta_p_series(long s, long a, long modulus, const PadicContext& ctx,
                                  const TruncationPlan& plan) {
    check_partial_zeta_args(a, modulus, ctx);
    check_plan(plan, ctx);
    const PadicNumber ratio = PadicNumber::from_integer(modulus, ctx) * PadicNumber::from_integer(a, ctx).invert_unit();
    PadicNumber ratio_power = PadicNumber::one(ctx);
    PadicNumber series = PadicNumber::zero(ctx);
    for (int j = 0; j < plan.series_cutoff; ++j) {
        const auto jj = static_cast<unsigned long>(j);
        const Rational coefficient = binom_int(-s, jj) * euler_number(jj);
        if (!coefficient.is_zero()) series += PadicNumber::from_rational(coefficient, ctx) * ratio_power;
        ratio_power *= ratio;
    }
    const PadicNumber front = PadicNumber::from_rational(parity(a) * Rational(1, 2), ctx) * unit_pow(angle(a, ctx), -s);
    return (front * series).reduced(plan.target_precision);
}

PadicNumber partial_zeta_p_closed(std::size_t n, long a, long modulus, const PadicContext& ctx) {
    check_partial_zeta_args(a, modulus, ctx);
    return unit_pow(teichmuller(a, ctx), -static_cast<long>(n)) *
           PadicNumber::from_rational(partial_zeta_neg(n, a, modulus), ctx);
}

PadicNumber padic_l(long s, const DirichletCharacter& chi, const TruncationPlan& plan) {
    const PadicContext& ctx = chi.context();
    const auto p = static_cast<long>(ctx.prime());
    if (chi.modulus() != 1 && chi.modulus() != p)
        throw std::invalid_argument("padic_l: character modulus must divide p");
    check_plan(plan, ctx);
    PadicNumber acc = PadicNumber::zero(ctx);
    for (long a = 1; a < p; ++a) acc += chi(a) * partial_zeta_p_series(s, a, p, ctx, plan);
    return (PadicNumber::from_integer(2, ctx) * acc).reduced(plan.target_precision);
}

CongruenceReport interpolation_check(std::size_t n, const DirichletCharacter& chi, int m, int extra_terms) {
    const PadicContext& ctx = chi.context();
    const auto p = static_cast<long>(ctx.prime());
    const PadicNumber lhs = padic_l(-static_cast<long>(n), chi, TruncationPlan::for_precision(m, extra_terms));
    const DirichletCharacter twisted = twist(chi, -static_cast<long>(n));
    const PadicNumber euler_factor =
        PadicNumber::one(ctx) - PadicNumber::from_rational(integer_power(p, n), ctx) * twisted(p);
    const PadicNumber rhs = euler_factor * generalized_euler_number(n, twisted);

    nlohmann::ordered_json params;
    params["n"] = n;
    params["character"] = chi.descriptor();
    params["twisted"] = twisted.descriptor();
    return make_padic_report("interpolation", std::move(params), lhs, rhs, m);
}

CongruenceReport kummer_check(long k, long t, const PadicContext& ctx, int extra_terms) {
    const auto p = static_cast<long>(ctx.prime());
    if (((t % (p - 1)) + (p - 1)) % (p - 1) != 0)
        throw std::invalid_argument("kummer_check: t must be divisible by p-1, got " + std::to_string(t));
    const auto chi = DirichletCharacter::teichmuller_power(t, ctx);
    const auto plan = TruncationPlan::for_precision(ctx.precision(), extra_terms);
    const PadicNumber lhs = padic_l(k, chi, plan);
    const PadicNumber rhs = padic_l(k + p, chi, plan);

    bool constant = true;
    nlohmann::ordered_json samples = nlohmann::ordered_json::array();
    for (long s = 1; s <= p; ++s) {
        samples.push_back(s);
        constant = constant && padic_l(s, chi, plan).congruent(lhs, 1);
    }

    nlohmann::ordered_json params;
    params["k"] = k;
    params["t"] = t;
    params["shifted_k"] = k + p;
    params["constancy_samples"] = samples;
    params["constant_mod_p"] = constant;
    auto report = make_padic_report("kummer", std::move(params), lhs, rhs, 1);
    report.match = report.match && constant;
    return report;
}

}  // namespace eulerlp
