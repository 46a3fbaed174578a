#pragma once

#include <cstdint>
#include <string>

#include <mpfr.h>

#include "moran/integer.hpp"
#include "moran/rational.hpp"

namespace moran {

/// RAII wrapper over an mpfr_t. A value carries its own precision; binary
/// operations round to the larger of the two operand precisions
/// (MPFR_RNDN throughout).
class BigReal {
public:
    explicit BigReal(mpfr_prec_t prec = 64) { mpfr_init2(v_, clamp(prec)); mpfr_set_zero(v_, 1); }
    BigReal(const BigReal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigReal(BigReal&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~BigReal() { mpfr_clear(v_); }

    static BigReal from(double x, mpfr_prec_t prec) { BigReal r(prec); mpfr_set_d(r.v_, x, MPFR_RNDN); return r; }
    static BigReal from(const Integer& z, mpfr_prec_t prec) { BigReal r(prec); mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN); return r; }
    static BigReal from(const Rational& q, mpfr_prec_t prec) { BigReal r(prec); mpfr_set_q(r.v_, q.raw().get_mpq_t(), MPFR_RNDN); return r; }
    static BigReal pi(mpfr_prec_t prec) { BigReal r(prec); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    friend BigReal operator+(const BigReal& a, const BigReal& b) { return binop(a, b, mpfr_add); }
    friend BigReal operator-(const BigReal& a, const BigReal& b) { return binop(a, b, mpfr_sub); }
    friend BigReal operator*(const BigReal& a, const BigReal& b) { return binop(a, b, mpfr_mul); }
    friend BigReal operator/(const BigReal& a, const BigReal& b) { return binop(a, b, mpfr_div); }
    BigReal operator-() const { BigReal r(precision()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

    BigReal abs() const { BigReal r(precision()); mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }
    BigReal floor() const { BigReal r(precision()); mpfr_floor(r.v_, v_); return r; }
    BigReal sin() const { BigReal r(precision()); mpfr_sin(r.v_, v_, MPFR_RNDN); return r; }
    BigReal cos() const { BigReal r(precision()); mpfr_cos(r.v_, v_, MPFR_RNDN); return r; }
    /// k-th root, k >= 1; requires a nonnegative value.
    BigReal rootn(unsigned long k) const { BigReal r(precision()); mpfr_rootn_ui(r.v_, v_, k, MPFR_RNDN); return r; }
    BigReal pow_si(long e) const { BigReal r(precision()); mpfr_pow_si(r.v_, v_, e, MPFR_RNDN); return r; }
    friend BigReal hypot(const BigReal& a, const BigReal& b) { return binop(a, b, mpfr_hypot); }

    /// Same value rounded to a new precision.
    BigReal round_to(mpfr_prec_t prec) const { BigReal r(prec); mpfr_set(r.v_, v_, MPFR_RNDN); return r; }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    friend int compare(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const BigReal& a, const BigReal& b) { return compare(a, b) < 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return compare(a, b) > 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Upper bound on |x| as a double (rounded away from zero; may be inf).
    double magnitude_upper() const {
        mpfr_t t; mpfr_init2(t, 64);
        mpfr_abs(t, v_, MPFR_RNDU);
        double d = mpfr_get_d(t, MPFR_RNDU);
        mpfr_clear(t);
        return d;
    }
    /// Exponent e with 2^(e-1) <= |x| < 2^e; 0 for zero.
    long exponent2() const { return is_zero() ? 0 : static_cast<long>(mpfr_get_exp(v_)); }

    /// Scientific decimal string with the requested significant digits.
    std::string str(int significant_digits = 19) const;

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

private:
    static mpfr_prec_t clamp(mpfr_prec_t p) { return p < MPFR_PREC_MIN ? MPFR_PREC_MIN : p; }
    template <typename F>
    static BigReal binop(const BigReal& a, const BigReal& b, F op) {
        BigReal r(std::max(a.precision(), b.precision()));
        op(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
};

} // namespace moran
