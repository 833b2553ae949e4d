#pragma once

#include <cstddef>

#include "eulerlp/character.hpp"
#include "eulerlp/padic.hpp"
#include "eulerlp/rational.hpp"
#include "eulerlp/report.hpp"

namespace eulerlp {

/// How far to sum the series sum_j C(-s,j) (F/a)^j E_j. Term j has
/// valuation >= j, so a cutoff J >= M gives the value modulo p^M.
struct TruncationPlan {
    int target_precision;
    int series_cutoff;

    /// J = M + extra_terms. Throws std::invalid_argument if M < 1 or
    /// extra_terms < 0.
    static TruncationPlan for_precision(int target_precision, int extra_terms = 0);
};

/// E_{n,chi} = f^n sum_{a=0}^{f-1} chi(a) (-1)^a E_n(a/f), f the conductor.
PadicNumber generalized_euler_number(std::size_t n, const DirichletCharacter& chi);

/// The same sum in exact rationals; chi must take only the values 0, +-1.
/// Throws std::invalid_argument otherwise.
Rational generalized_euler_number_exact(std::size_t n, const DirichletCharacter& chi);

/// l(-k, chi) = E_{k,chi}, for k >= 1.
PadicNumber l_at_negative_int(std::size_t k, const DirichletCharacter& chi);

/// H_p(s, a|F) = (-1)^a / 2 <a>^{-s} sum_{j<J} C(-s,j) (F/a)^j E_j,
/// correct modulo p^M. Requires p | F, F odd, 0 < a < F, p not dividing a.
PadicNumber partial_zeta_p_series(long s, long a, long modulus, const PadicContext& ctx,
                                  const TruncationPlan& plan);

/// H_p(-n, a|F) = w(a)^{-n} H(-n, a|F), evaluated through the exact
/// Euler polynomial value. Same preconditions as the series.
PadicNumber partial_zeta_p_closed(std::size_t n, long a, long modulus, const PadicContext& ctx);

/// l_p(s, chi) = 2 sum_{0<a<p, p not dividing a} chi(a) H_p(s, a|p), with
/// F fixed to p. chi must have modulus 1 or p.
PadicNumber padic_l(long s, const DirichletCharacter& chi, const TruncationPlan& plan);

/// l_p(-n, chi) against (1 - p^n chi w^{-n}(p)) E_{n, chi w^{-n}} mod p^M.
CongruenceReport interpolation_check(std::size_t n, const DirichletCharacter& chi, int m, int extra_terms = 0);

/// For t = 0 mod p-1: l_p(k, w^t) against l_p(k+p, w^t) mod p, together
/// with constancy of l_p(s, w^t) mod p over s = 1..p. Values are computed
/// to the context precision. Throws std::invalid_argument for other t.
CongruenceReport kummer_check(long k, long t, const PadicContext& ctx, int extra_terms = 0);

}  // namespace eulerlp
