#pragma once

#include <vector>

#include "harmid/rational.hpp"
#include "harmid/real.hpp"

namespace harmid {

enum class HarmonicFamily { H, h, Hbar, hbar };

/// Prefix tables of exact values for H, h and their alternating variants,
/// grown lazily per order and immutable once a prefix exists. Reads are safe
/// from concurrent threads; growth takes a writer lock.
class HarmonicCache {
  public:
    /// Pre-extend the tables so later reads never take the writer lock.
    void warm(long max_index, const std::vector<long>& orders);

    Rational get(HarmonicFamily fam, long N, long m) const;

    static HarmonicCache& global();

  private:
    struct Impl;
    Impl& impl() const;
};

/// H(N,m) = sum_{r=1..N} r^-m, exact. Nonpositive m gives power sums
/// (H(N,0) = N, H(N,-1) = N(N+1)/2, ...). H(0,m) = 0.
Rational H(long N, long m);

/// h(N,m) = sum_{r=1..N} (2r-1)^-m, exact. h(N,0) = N, h(N,-1) = N^2.
Rational h(long N, long m);

/// Alternating variants with sign (-1)^(r-1).
Rational Hbar(long N, long m);
Rational hbar(long N, long m);

/// H(2N,m) - 2^-m H(N,m); equal to h(N,m) exactly. Also cross-checks the
/// odd-upper-limit variant H(2N-1,m) - 2^-m H(N-1,m) for N >= 1.
Rational h_from_H(long N, long m);

enum class Parity { Even, Odd };

/// Parity-split closed form for Hbar at even/odd upper limit:
///   even: -2^-m H(N,m) + h(N,m)  ( = Hbar(2N,m) )
///   odd:  -2^-m H(N-1,m) + h(N,m)  ( = Hbar(2N-1,m) )
Rational Hbar_split(long N, long m, Parity parity);

/// Exact coefficients c_j of the remainder expansion
///   zeta(m) - H(N,m) = sum_j c_j N^-j,  j = m-1 .. m+2K-1,
/// from the Euler-Maclaurin formula. Returned as (power, coefficient) pairs.
/// The error of the truncated expansion is bounded by the first omitted term.
std::vector<std::pair<long, Rational>> harmonic_remainder_coeffs(long m, int K);

/// Order-K asymptotic value of H(N,m) for m >= 2; error bounded by the first
/// omitted Euler-Maclaurin term.
Real asymptotic_H(long N, long m, int K, const PrecisionContext& ctx);

} // namespace harmid
