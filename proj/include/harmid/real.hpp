#pragma once

#include <mpfr.h>

#include <cmath>
#include <string>

#include "harmid/errors.hpp"
#include "harmid/rational.hpp"

namespace harmid {

/// Working precision in decimal digits plus guard digits. All Real arithmetic
/// under a context rounds to nearest at digits+guard decimals.
struct PrecisionContext {
    int digits = 30;
    int guard = 10;

    PrecisionContext() = default;
    explicit PrecisionContext(int d, int g = 10) : digits(d), guard(g) {
        if (digits < 15) throw DomainError("precision context requires digits >= 15");
        if (guard < 0) throw DomainError("guard digits must be non-negative");
    }

    /// Binary precision backing this context.
    mpfr_prec_t bits() const {
        return static_cast<mpfr_prec_t>(std::ceil((digits + guard) * 3.321928094887363)) + 8;
    }

    friend bool operator==(const PrecisionContext& a, const PrecisionContext& b) {
        return a.digits == b.digits && a.guard == b.guard;
    }
};

/// Immutable arbitrary-precision floating value carrying its context.
class Real {
  public:
    Real() : ctx_() { mpfr_init2(v_, ctx_.bits()); mpfr_set_zero(v_, 1); }
    explicit Real(const PrecisionContext& ctx) : ctx_(ctx) {
        mpfr_init2(v_, ctx.bits());
        mpfr_set_zero(v_, 1);
    }
    Real(long n, const PrecisionContext& ctx) : ctx_(ctx) {
        mpfr_init2(v_, ctx.bits());
        mpfr_set_si(v_, n, MPFR_RNDN);
    }
    Real(const Rational& q, const PrecisionContext& ctx) : ctx_(ctx) {
        mpfr_init2(v_, ctx.bits());
        mpfr_set_q(v_, q.raw(), MPFR_RNDN);
    }
    Real(const Real& o) : ctx_(o.ctx_) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept : ctx_(o.ctx_) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
            ctx_ = o.ctx_;
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        ctx_ = o.ctx_;
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    const PrecisionContext& context() const { return ctx_; }

    friend Real operator+(const Real& a, const Real& b) {
        a.check(b);
        Real r(a.ctx_);
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a, const Real& b) {
        a.check(b);
        Real r(a.ctx_);
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, const Real& b) {
        a.check(b);
        Real r(a.ctx_);
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& a, const Real& b) {
        a.check(b);
        if (mpfr_zero_p(b.v_)) throw DivisionByZero();
        Real r(a.ctx_);
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    Real operator-() const {
        Real r(ctx_);
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    Real& operator+=(const Real& o) {
        check(o);
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator-=(const Real& o) {
        check(o);
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator*=(const Real& o) {
        check(o);
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    Real abs() const {
        Real r(ctx_);
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }

    static Real pow_int(const Real& base, long e) {
        if (e < 0 && mpfr_zero_p(base.v_)) throw DivisionByZero();
        Real r(base.ctx_);
        mpfr_pow_si(r.v_, base.v_, e, MPFR_RNDN);
        return r;
    }

    friend bool operator==(const Real& a, const Real& b) {
        a.check(b);
        return mpfr_cmp(a.v_, b.v_) == 0;
    }
    friend auto operator<=>(const Real& a, const Real& b) {
        a.check(b);
        int c = mpfr_cmp(a.v_, b.v_);
        return c <=> 0;
    }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Decimal string with the given number of significant digits
    /// (defaults to the context's nominal digits).
    std::string str(int sig_digits = 0) const;

    /// Round to a coarser context (used by precision-monotonicity checks).
    Real round_to(const PrecisionContext& ctx) const {
        Real r(ctx);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    const mpfr_t& raw() const { return v_; }
    mpfr_t& raw() { return v_; }

  private:
    void check(const Real& o) const {
        if (!(ctx_ == o.ctx_)) throw ContextMismatch();
    }

    mpfr_t v_;
    PrecisionContext ctx_;
};

/// pi to ctx.digits.
Real const_pi(const PrecisionContext& ctx);

/// log 2 to ctx.digits.
Real const_log2(const PrecisionContext& ctx);

} // namespace harmid
