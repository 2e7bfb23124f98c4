#pragma once

#include <gmp.h>

#include <cstdint>
#include <string>
#include <utility>

#include "harmid/errors.hpp"

namespace harmid {

/// Arbitrary-precision integer, a thin value wrapper over GMP's mpz_t.
class Int {
  public:
    Int() { mpz_init(v_); }
    Int(long n) { mpz_init_set_si(v_, n); } // NOLINT(google-explicit-constructor)
    explicit Int(const std::string& s) {
        if (mpz_init_set_str(v_, s.c_str(), 10) != 0) {
            mpz_clear(v_);
            throw Error("invalid integer literal: " + s);
        }
    }
    Int(const Int& o) { mpz_init_set(v_, o.v_); }
    Int(Int&& o) noexcept {
        mpz_init(v_);
        mpz_swap(v_, o.v_);
    }
    Int& operator=(const Int& o) {
        if (this != &o) mpz_set(v_, o.v_);
        return *this;
    }
    Int& operator=(Int&& o) noexcept {
        mpz_swap(v_, o.v_);
        return *this;
    }
    ~Int() { mpz_clear(v_); }

    friend Int operator+(const Int& a, const Int& b) { Int r; mpz_add(r.v_, a.v_, b.v_); return r; }
    friend Int operator-(const Int& a, const Int& b) { Int r; mpz_sub(r.v_, a.v_, b.v_); return r; }
    friend Int operator*(const Int& a, const Int& b) { Int r; mpz_mul(r.v_, a.v_, b.v_); return r; }
    Int operator-() const { Int r; mpz_neg(r.v_, v_); return r; }

    friend bool operator==(const Int& a, const Int& b) { return mpz_cmp(a.v_, b.v_) == 0; }
    friend auto operator<=>(const Int& a, const Int& b) {
        int c = mpz_cmp(a.v_, b.v_);
        return c <=> 0;
    }

    static Int pow(const Int& base, unsigned long e) {
        Int r;
        mpz_pow_ui(r.v_, base.v_, e);
        return r;
    }
    static Int factorial(unsigned long n) {
        Int r;
        mpz_fac_ui(r.v_, n);
        return r;
    }
    static Int binomial(unsigned long n, unsigned long k) {
        Int r;
        mpz_bin_uiui(r.v_, n, k);
        return r;
    }

    bool is_zero() const { return mpz_sgn(v_) == 0; }
    int sign() const { return mpz_sgn(v_); }
    bool fits_long() const { return mpz_fits_slong_p(v_); }
    long to_long() const { return mpz_get_si(v_); }
    std::string str() const {
        char* s = mpz_get_str(nullptr, 10, v_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

    const mpz_t& raw() const { return v_; }
    mpz_t& raw() { return v_; }

  private:
    mpz_t v_;
};

/// Exact rational number in canonical form: gcd(|num|, den) = 1, den > 0.
/// All arithmetic is exact; there is no implicit conversion to floating point.
class Rational {
  public:
    Rational() { mpq_init(v_); }
    Rational(long n) { // NOLINT(google-explicit-constructor)
        mpq_init(v_);
        mpq_set_si(v_, n, 1);
    }
    Rational(long num, long den) {
        if (den == 0) throw DivisionByZero();
        mpq_init(v_);
        mpq_set_si(v_, num, 1);
        mpq_t d;
        mpq_init(d);
        mpq_set_si(d, den, 1);
        mpq_div(v_, v_, d);
        mpq_clear(d);
    }
    Rational(const Int& num, const Int& den) {
        if (den.is_zero()) throw DivisionByZero();
        mpq_init(v_);
        mpz_set(mpq_numref(v_), num.raw());
        mpz_set(mpq_denref(v_), den.raw());
        mpq_canonicalize(v_);
    }
    explicit Rational(const Int& n) {
        mpq_init(v_);
        mpz_set(mpq_numref(v_), n.raw());
    }
    explicit Rational(const std::string& s) {
        mpq_init(v_);
        if (mpq_set_str(v_, s.c_str(), 10) != 0 || mpz_sgn(mpq_denref(v_)) == 0) {
            mpq_clear(v_);
            throw Error("invalid rational literal: " + s);
        }
        mpq_canonicalize(v_);
    }
    Rational(const Rational& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(v_, o.v_);
        return *this;
    }
    ~Rational() { mpq_clear(v_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.v_, a.v_, b.v_);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.v_, a.v_, b.v_);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.v_, a.v_, b.v_);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivisionByZero();
        Rational r;
        mpq_div(r.v_, a.v_, b.v_);
        return r;
    }
    Rational operator-() const {
        Rational r;
        mpq_neg(r.v_, v_);
        return r;
    }
    Rational& operator+=(const Rational& o) {
        mpq_add(v_, v_, o.v_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(v_, v_, o.v_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(v_, v_, o.v_);
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_, b.v_) != 0; }
    friend auto operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.v_, b.v_);
        return c <=> 0;
    }

    /// Integer power; negative exponents require a non-zero base.
    static Rational pow(const Rational& base, long e) {
        if (e == 0) return Rational(1);
        if (base.is_zero() && e < 0) throw DivisionByZero();
        Rational r;
        unsigned long ue = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
        mpz_pow_ui(mpq_numref(r.v_), mpq_numref(base.v_), ue);
        mpz_pow_ui(mpq_denref(r.v_), mpq_denref(base.v_), ue);
        if (e < 0) {
            mpz_swap(mpq_numref(r.v_), mpq_denref(r.v_));
            if (mpz_sgn(mpq_denref(r.v_)) < 0) {
                mpz_neg(mpq_numref(r.v_), mpq_numref(r.v_));
                mpz_neg(mpq_denref(r.v_), mpq_denref(r.v_));
            }
        }
        return r;
    }

    Rational abs() const {
        Rational r;
        mpq_abs(r.v_, v_);
        return r;
    }

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    int sign() const { return mpq_sgn(v_); }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }
    bool fits_long() const { return is_integer() && mpz_fits_slong_p(mpq_numref(v_)); }
    long to_long() const {
        if (!fits_long()) throw Error("rational does not fit a machine integer: " + str());
        return mpz_get_si(mpq_numref(v_));
    }

    Int numerator() const {
        Int n;
        mpz_set(n.raw(), mpq_numref(v_));
        return n;
    }
    Int denominator() const {
        Int d;
        mpz_set(d.raw(), mpq_denref(v_));
        return d;
    }

    std::string str() const {
        char* s = mpq_get_str(nullptr, 10, v_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

    const mpq_t& raw() const { return v_; }

  private:
    mpq_t v_;
};

enum class RatOp { Add, Sub, Mul, Div, PowInt };

/// Dispatch helper used by the CLI and bindings.
inline Rational rat_arith(const Rational& a, const Rational& b, RatOp op) {
    switch (op) {
        case RatOp::Add: return a + b;
        case RatOp::Sub: return a - b;
        case RatOp::Mul: return a * b;
        case RatOp::Div: return a / b;
        case RatOp::PowInt:
            if (!b.is_integer()) throw Error("pow-int exponent must be an integer");
            return Rational::pow(a, b.to_long());
    }
    throw Error("unreachable");
}

} // namespace harmid
