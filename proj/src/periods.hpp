#pragma once

#include <mpfr.h>

#include <string>

#include "weierstrass.hpp"

namespace isogrowth {

// arbitrary-precision real; thin RAII layer over mpfr_t
class Real {
  public:
    explicit Real(mpfr_prec_t prec = 128) {
        mpfr_init2(v, prec);
        mpfr_set_zero(v, 1);
    }
    Real(const Real& o) {
        mpfr_init2(v, mpfr_get_prec(o.v));
        mpfr_set(v, o.v, MPFR_RNDN);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v, mpfr_get_prec(o.v));
            mpfr_set(v, o.v, MPFR_RNDN);
        }
        return *this;
    }
    ~Real() { mpfr_clear(v); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v); }
    int sign() const { return mpfr_sgn(v); }
    bool operator<(const Real& o) const { return mpfr_cmp(v, o.v) < 0; }
    bool operator>(const Real& o) const { return mpfr_cmp(v, o.v) > 0; }

    mpfr_t v;
};

mpfr_prec_t bits_for(long digits);

Real real_from(const Z& n, mpfr_prec_t prec);
Real real_from(const Q& r, mpfr_prec_t prec);
Real real_from(long n, mpfr_prec_t prec);
Real real_from(const std::string& s, mpfr_prec_t prec);

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator-(const Real& a);
Real operator*(long a, const Real& b);
Real operator/(const Real& a, long b);
Real operator/(long a, const Real& b);

Real sqrt(const Real& a);
Real abs(const Real& a);
Real pi(mpfr_prec_t prec);

std::string to_decimal(const Real& x, long digits);
// chop (toward zero) after `places` digits past the decimal point
Real trunc_decimals(const Real& x, long places);

struct PeriodData {
    Real omega;       // least real period of the minimal model
    Real omega_star;  // Im tau of the normalized lattice (untranslated)
    int components;   // #components of E(R): 1 or 2
    long digits;
};

PeriodData period_data(const WeierstrassModel& Emin, long digits);

// unique rational within tolerance of x with denominator <= max_den
Q rationalize_quotient(const Real& x, const Z& max_den, const Q& tol);
Q rationalize_quotient(const Real& x);  // library defaults

struct PeriodValuations {
    Q omega_quotient;       // Omega(second) / Omega(first)
    Q omega_star_quotient;  // same orientation
    long omega_ord;
    long omega_star_ord;
};

PeriodValuations period_quotient_valuations(const WeierstrassModel& E,
                                            const WeierstrassModel& Eprime,
                                            const Z& p, long digits = 50);

}  // namespace isogrowth
