#include "harmid/special.hpp"

#include <map>
#include <mutex>

namespace harmid {

namespace {

constexpr long kTableBound = 64;

std::mutex table_mu;

const std::vector<Rational>& bernoulli_table() {
    static std::vector<Rational> table = [] {
        std::vector<Rational> b;
        b.reserve(kTableBound + 1);
        b.push_back(Rational(1));
        for (long m = 1; m <= kTableBound; ++m) {
            // sum_{j=0..m} C(m+1,j) B_j = 0  =>  B_m
            Rational acc(0);
            for (long j = 0; j < m; ++j)
                acc += Rational(Int::binomial(m + 1, j)) * b[j];
            b.push_back(-acc / Rational(m + 1));
        }
        return b;
    }();
    return table;
}

const std::vector<Int>& euler_table() {
    static std::vector<Int> table = [] {
        std::vector<Int> e;
        e.reserve(kTableBound + 1);
        e.push_back(Int(1));
        for (long m = 1; m <= kTableBound; ++m) {
            if (m % 2 == 1) {
                e.push_back(Int(0));
                continue;
            }
            // sum_{k=0..n} C(2n,2k) E_2k = 0
            Int acc(0);
            for (long k = 0; k < m / 2; ++k)
                acc = acc + Int::binomial(m, 2 * k) * e[2 * k];
            e.push_back(-acc);
        }
        return e;
    }();
    return table;
}

// ((3+sqrt8)^n + (3-sqrt8)^n)/2, exact: u_0=1, u_1=3, u_{j+1} = 6 u_j - u_{j-1}
Int chebyshev_d(long n) {
    Int prev(1), cur(3);
    if (n == 0) return prev;
    for (long j = 1; j < n; ++j) {
        Int next = Int(6) * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

PrecisionContext boosted(const PrecisionContext& ctx, int extra) {
    return PrecisionContext(ctx.digits + ctx.guard + extra, 10);
}

struct ZetaKey {
    long n;
    int digits;
    int guard;
    auto operator<=>(const ZetaKey&) const = default;
};

std::mutex zeta_mu;
std::map<ZetaKey, Real> zeta_cache;

} // namespace

Rational bernoulli(long m) {
    if (m < 0 || m > kTableBound)
        throw OutOfTable("bernoulli index out of table bound [0,64]");
    std::lock_guard lock(table_mu);
    return bernoulli_table()[m];
}

Int euler_number(long m) {
    if (m < 0 || m > kTableBound)
        throw OutOfTable("euler index out of table bound [0,64]");
    std::lock_guard lock(table_mu);
    return euler_table()[m];
}

Real accelerated_alternating_raw(long n, long s0, long stride, const PrecisionContext& work) {
    // Cohen-Rodriguez Villegas-Zagier acceleration; error ~ (3+sqrt8)^-K.
    long K = static_cast<long>((work.digits + work.guard) * 2.302585 / 1.762747) + 6;
    Int dK = chebyshev_d(K);
    Rational b(-1), c(Rational(0) - Rational(dK, Int(1)));
    Real acc(work);
    for (long k = 0; k < K; ++k) {
        c = b - c;
        Real a_k = Real::pow_int(Real(Rational(s0 + k * stride), work), -n);
        acc += Real(c, work) * a_k;
        // b_{k+1} = b_k * 2 (k+n')(k-n') / ((2k+1)(k+1)) with n' = K
        b = b * Rational(2 * (k + K)) * Rational(k - K) / (Rational(2 * k + 1) * Rational(k + 1));
    }
    return acc / Real(Rational(dK, Int(1)), work);
}

Real accelerated_alternating(long n, long s0, long stride, const PrecisionContext& ctx) {
    return accelerated_alternating_raw(n, s0, stride, boosted(ctx, 8)).round_to(ctx);
}

Real zeta_series_path(long n, const PrecisionContext& ctx) {
    PrecisionContext work = boosted(ctx, 8);
    Real eta_n = accelerated_alternating_raw(n, 1, 1, work);
    Real z = eta_n / Real(Rational(1) - Rational::pow(Rational(2), 1 - n), work);
    return z.round_to(ctx);
}

Real zeta(long n, const PrecisionContext& ctx) {
    if (n < 2) throw DomainError("zeta requires integer argument >= 2");
    {
        std::lock_guard lock(zeta_mu);
        auto it = zeta_cache.find({n, ctx.digits, ctx.guard});
        if (it != zeta_cache.end()) return it->second;
    }
    Real result(ctx);
    if (n % 2 == 0) {
        // zeta(2k) = |B_2k| (2 pi)^2k / (2 (2k)!)
        PrecisionContext work = boosted(ctx, 8);
        Rational factor = bernoulli(n).abs() / Rational(Int(2) * Int::factorial(n), Int(1));
        Real two_pi = const_pi(work) + const_pi(work);
        result = (Real(factor, work) * Real::pow_int(two_pi, n)).round_to(ctx);
    } else {
        result = zeta_series_path(n, ctx);
    }
    std::lock_guard lock(zeta_mu);
    zeta_cache.emplace(ZetaKey{n, ctx.digits, ctx.guard}, result);
    return result;
}

Real eta_const(long n, const PrecisionContext& ctx) {
    if (n < 1) throw DomainError("eta requires integer argument >= 1");
    if (n == 1) return const_log2(ctx);
    return Real(Rational(1) - Rational::pow(Rational(2), 1 - n), ctx) * zeta(n, ctx);
}

Real beta_const(long n, const PrecisionContext& ctx) {
    if (n < 1) throw DomainError("beta requires integer argument >= 1");
    if (n % 2 == 1) {
        // beta(2k+1) = |E_2k| pi^(2k+1) / (2^(2k+2) (2k)!)
        long k = (n - 1) / 2;
        PrecisionContext work = boosted(ctx, 8);
        Int e2k = euler_number(2 * k);
        Rational num(e2k.sign() < 0 ? -e2k : e2k, Int::pow(Int(2), 2 * k + 2) * Int::factorial(2 * k));
        return (Real(num, work) * Real::pow_int(const_pi(work), n)).round_to(ctx);
    }
    return accelerated_alternating(n, 1, 2, ctx);
}

Real catalan_const(const PrecisionContext& ctx) { return beta_const(2, ctx); }

Real polygamma_quarter(long order, QuarterPoint base, long offset, const PrecisionContext& ctx) {
    if (order < 1) throw DomainError("polygamma order must be >= 1 (digamma excluded)");
    if (offset < 0) throw DomainError("polygamma offset must be non-negative");
    PrecisionContext work = boosted(ctx, 8);
    long m = order;
    Rational sign_fact(Int::factorial(m), Int(1));
    if (m % 2 == 0) sign_fact = -sign_fact; // (-1)^(m+1) m!

    Real base_val(work);
    switch (base) {
        case QuarterPoint::One:
            base_val = Real(sign_fact, work) * zeta(m + 1, work);
            break;
        case QuarterPoint::Half:
            base_val = Real(sign_fact * (Rational::pow(Rational(2), m + 1) - Rational(1)), work) *
                       zeta(m + 1, work);
            break;
        case QuarterPoint::Quarter:
        case QuarterPoint::ThreeQuarter: {
            // difference from Kolbig, sum from the duplication formula at z = 1/4
            Real diff(work);
            if (m % 2 == 0) {
                long k = m / 2; // psi_2k(1/4) - psi_2k(3/4) = -pi (2 pi)^2k |E_2k|
                Real two_pi = const_pi(work) + const_pi(work);
                Int e2k = euler_number(2 * k);
                diff = -(const_pi(work) * Real::pow_int(two_pi, 2 * k) *
                         Real(Rational(e2k.sign() < 0 ? -e2k : e2k, Int(1)), work));
            } else {
                long k = (m + 1) / 2; // psi_{2k-1}(1/4) - psi_{2k-1}(3/4) = (2k-1)! 2^(4k) beta(2k)
                Rational f(Int::factorial(2 * k - 1) * Int::pow(Int(2), 4 * k), Int(1));
                diff = Real(f, work) * beta_const(2 * k, work);
            }
            Real half_val = Real(sign_fact * (Rational::pow(Rational(2), m + 1) - Rational(1)), work) *
                            zeta(m + 1, work);
            Real sum = Real(Rational::pow(Rational(2), m + 1), work) * half_val;
            Real two(2, work);
            base_val = (base == QuarterPoint::Quarter) ? (sum + diff) / two : (sum - diff) / two;
            break;
        }
    }

    if (offset > 0) {
        // psi_m(z + j) = psi_m(z) + (-1)^m m! sum_{i<j} (z+i)^-(m+1), exact increment
        Rational z;
        switch (base) {
            case QuarterPoint::Quarter: z = Rational(1, 4); break;
            case QuarterPoint::Half: z = Rational(1, 2); break;
            case QuarterPoint::ThreeQuarter: z = Rational(3, 4); break;
            case QuarterPoint::One: z = Rational(1); break;
        }
        Rational inc(0);
        for (long i = 0; i < offset; ++i)
            inc += Rational::pow(z + Rational(i), -(m + 1));
        Rational scale(Int::factorial(m), Int(1));
        if (m % 2 == 1) scale = -scale;
        base_val += Real(scale * inc, work);
    }
    return base_val.round_to(ctx);
}

Real polylog(long n, const Rational& z, const PrecisionContext& ctx) {
    if (n < 1) throw DomainError("polylog requires order >= 1");
    Rational az = z.abs();
    if (az > Rational(3, 4)) throw DomainError("polylog argument must satisfy |z| <= 3/4");
    if (z.is_zero()) return Real(ctx);
    PrecisionContext work = boosted(ctx, 8);
    // stop when |z|^(K+1)/(1-|z|) < 10^-(work digits)
    Real eps = Real::pow_int(Real(10, work), -(work.digits + work.guard));
    Real acc(work);
    Real zp(1, work);
    Real zr(z, work);
    Real one_minus = Real(Rational(1) - az, work);
    for (long k = 1;; ++k) {
        zp *= zr;
        acc += zp / Real::pow_int(Real(k, work), n);
        Real tail = zp.abs() * Real(az, work) / one_minus;
        if (tail < eps) break;
        if (k > 4000) throw EvaluationError("polylog series did not meet its tail bound");
    }
    return acc.round_to(ctx);
}

} // namespace harmid
