#pragma once

#include <vector>

#include "harmid/rational.hpp"
#include "harmid/real.hpp"

namespace harmid {

/// Exact Bernoulli number B_m (B_1 = -1/2 convention), from the defining
/// recurrence sum_{j=0..m} C(m+1,j) B_j = 0. Table bound 64.
Rational bernoulli(long m);

/// Exact Euler number E_m from the secant generating-function recurrence.
/// Table bound 64.
Int euler_number(long m);

/// Riemann zeta at integer n >= 2. Even n uses the closed form with pi and
/// |B_n|; odd n goes through the accelerated alternating (eta) series.
Real zeta(long n, const PrecisionContext& ctx);

/// Dirichlet eta: eta(1) = log 2, eta(n) = (1 - 2^(1-n)) zeta(n).
Real eta_const(long n, const PrecisionContext& ctx);

/// Dirichlet beta. Odd n from the Euler-number closed form
/// beta(2k+1) = |E_2k| pi^(2k+1) / (2^(2k+2) (2k)!); even n from the
/// accelerated alternating series. beta(2) is Catalan's constant.
Real beta_const(long n, const PrecisionContext& ctx);

Real catalan_const(const PrecisionContext& ctx);

/// Quarter-integer base points supported by polygamma_quarter.
enum class QuarterPoint { Quarter, Half, ThreeQuarter, One };

/// psi_m at x = base + offset for base in {1/4, 1/2, 3/4, 1} and a
/// non-negative integer offset; order m >= 1 (the digamma itself is out of
/// scope). Base values come from zeta closed forms and the Kolbig
/// 1/4-vs-3/4 relations; offsets are applied through the recurrence
/// psi_m(z+1) = psi_m(z) + (-1)^m m! / z^(m+1) with exact rational increments.
Real polygamma_quarter(long order, QuarterPoint base, long offset, const PrecisionContext& ctx);

/// Polylogarithm Li_n(z) for |z| <= 3/4 by direct series with a geometric
/// tail bound below 10^-(digits+guard).
Real polylog(long n, const Rational& z, const PrecisionContext& ctx);

/// Value of the accelerated alternating series sum_{k>=1} (-1)^(k-1) a_k for
/// a_k = (s0 + (k-1)*stride)^-n; used by the zeta/beta series paths and
/// exposed for cross-path tests.
Real accelerated_alternating(long n, long s0, long stride, const PrecisionContext& ctx);

/// zeta(n) through the eta series route regardless of parity; the even closed
/// form and this path must agree to <= 1 ulp.
Real zeta_series_path(long n, const PrecisionContext& ctx);

} // namespace harmid
