#include "harmid/harmonic.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

#include "harmid/special.hpp"

namespace harmid {

namespace {

Rational term_of(HarmonicFamily fam, long r, long m) {
    long base = (fam == HarmonicFamily::h || fam == HarmonicFamily::hbar) ? 2 * r - 1 : r;
    Rational t = Rational::pow(Rational(base), -m);
    if (fam == HarmonicFamily::Hbar || fam == HarmonicFamily::hbar) {
        if (r % 2 == 0) t = -t;
    }
    return t;
}

Rational direct_sum(HarmonicFamily fam, long N, long m) {
    Rational s(0);
    for (long r = 1; r <= N; ++r) s += term_of(fam, r, m);
    return s;
}

} // namespace

struct HarmonicCache::Impl {
    mutable std::shared_mutex mu;
    // keyed by (family, order); tables[k][N] = partial sum through N
    std::map<std::pair<int, long>, std::vector<Rational>> tables;

    void ensure(HarmonicFamily fam, long m, long N) {
        auto key = std::make_pair(static_cast<int>(fam), m);
        std::unique_lock lock(mu);
        auto& tab = tables[key];
        if (tab.empty()) tab.push_back(Rational(0));
        while (static_cast<long>(tab.size()) <= N) {
            long r = static_cast<long>(tab.size());
            tab.push_back(tab.back() + term_of(fam, r, m));
        }
    }

    Rational read(HarmonicFamily fam, long m, long N) const {
        std::shared_lock lock(mu);
        auto it = tables.find(std::make_pair(static_cast<int>(fam), m));
        if (it != tables.end() && N < static_cast<long>(it->second.size())) return it->second[N];
        lock.unlock();
        return direct_sum(fam, N, m);
    }
};

HarmonicCache::Impl& HarmonicCache::impl() const {
    static Impl impl;
    return impl;
}

HarmonicCache& HarmonicCache::global() {
    static HarmonicCache cache;
    return cache;
}

void HarmonicCache::warm(long max_index, const std::vector<long>& orders) {
    for (int fam = 0; fam < 4; ++fam)
        for (long m : orders) impl().ensure(static_cast<HarmonicFamily>(fam), m, max_index);
}

Rational HarmonicCache::get(HarmonicFamily fam, long N, long m) const {
    if (N < 0) throw DomainError("harmonic index must be non-negative");
    if (N == 0) return Rational(0);
    constexpr long kCacheLimit = 4096; // beyond this fall back to direct summation
    if (N > kCacheLimit) return direct_sum(fam, N, m);
    impl().ensure(fam, m, N);
    return impl().read(fam, m, N);
}

Rational H(long N, long m) { return HarmonicCache::global().get(HarmonicFamily::H, N, m); }
Rational h(long N, long m) { return HarmonicCache::global().get(HarmonicFamily::h, N, m); }
Rational Hbar(long N, long m) { return HarmonicCache::global().get(HarmonicFamily::Hbar, N, m); }
Rational hbar(long N, long m) { return HarmonicCache::global().get(HarmonicFamily::hbar, N, m); }

Rational h_from_H(long N, long m) {
    Rational half_pow = Rational::pow(Rational(2), -m);
    Rational even = H(2 * N, m) - half_pow * H(N, m);
    if (N >= 1) {
        Rational odd = H(2 * N - 1, m) - half_pow * H(N - 1, m);
        if (!(even == odd)) throw EvaluationError("h_from_H: even/odd reductions disagree");
    }
    return even;
}

Rational Hbar_split(long N, long m, Parity parity) {
    if (N < 1) throw DomainError("Hbar_split requires N >= 1");
    Rational half_pow = Rational::pow(Rational(2), -m);
    if (parity == Parity::Even) return -(half_pow * H(N, m)) + h(N, m);
    return -(half_pow * H(N - 1, m)) + h(N, m);
}

std::vector<std::pair<long, Rational>> harmonic_remainder_coeffs(long m, int K) {
    if (K > 30) throw OrderTooHigh("expansion order must be <= 30");
    if (m < 2) throw DomainError("remainder expansion requires order m >= 2");
    std::vector<std::pair<long, Rational>> out;
    // integral term, then the half-correction, then Bernoulli terms:
    //   zeta(m)-H(N,m) = N^(1-m)/(m-1) - N^-m/2 + sum_k B_2k/(2k)! (m)_{2k-1} N^(-m-2k+1)
    out.emplace_back(m - 1, Rational(1, m - 1));
    out.emplace_back(m, Rational(-1, 2));
    for (int k = 1; k <= K; ++k) {
        Rational rising(1); // (m)_{2k-1} = m (m+1) ... (m+2k-2)
        for (long j = 0; j < 2 * k - 1; ++j) rising *= Rational(m + j);
        Rational coeff = bernoulli(2 * k) * rising * Rational(Int(1), Int::factorial(2 * k));
        out.emplace_back(m + 2 * k - 1, coeff);
    }
    return out;
}

Real asymptotic_H(long N, long m, int K, const PrecisionContext& ctx) {
    if (N < 2) throw DomainError("asymptotic_H requires N >= 2");
    auto coeffs = harmonic_remainder_coeffs(m, K);
    Real remainder(ctx);
    Real invN = Real(1, ctx) / Real(N, ctx);
    for (const auto& [power, c] : coeffs)
        remainder += Real(c, ctx) * Real::pow_int(invN, power);
    return zeta(m, ctx) - remainder;
}

} // namespace harmid
