#include "periods.hpp"

#include <algorithm>
#include <vector>

namespace isogrowth {

mpfr_prec_t bits_for(long digits) {
    return static_cast<mpfr_prec_t>((digits + 30) * 3.3220) + 32;
}

Real real_from(const Z& n, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_z(r.v, n.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real real_from(const Q& q, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.v, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real real_from(long n, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v, n, MPFR_RNDN);
    return r;
}

Real real_from(const std::string& s, mpfr_prec_t prec) {
    Real r(prec);
    if (mpfr_set_str(r.v, s.c_str(), 10, MPFR_RNDN) != 0)
        throw arith_error("bad decimal literal: " + s);
    return r;
}

namespace {

mpfr_prec_t join(const Real& a, const Real& b) {
    return std::max(a.prec(), b.prec());
}

}  // namespace

Real operator+(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_add(r.v, a.v, b.v, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_sub(r.v, a.v, b.v, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_mul(r.v, a.v, b.v, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_div(r.v, a.v, b.v, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a) {
    Real r(a.prec());
    mpfr_neg(r.v, a.v, MPFR_RNDN);
    return r;
}

Real operator*(long a, const Real& b) {
    Real r(b.prec());
    mpfr_mul_si(r.v, b.v, a, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, long b) {
    Real r(a.prec());
    mpfr_div_si(r.v, a.v, b, MPFR_RNDN);
    return r;
}

Real operator/(long a, const Real& b) {
    Real r(b.prec());
    mpfr_si_div(r.v, a, b.v, MPFR_RNDN);
    return r;
}

Real sqrt(const Real& a) {
    Real r(a.prec());
    mpfr_sqrt(r.v, a.v, MPFR_RNDN);
    return r;
}

Real abs(const Real& a) {
    Real r(a.prec());
    mpfr_abs(r.v, a.v, MPFR_RNDN);
    return r;
}

Real pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v, MPFR_RNDN);
    return r;
}

std::string to_decimal(const Real& x, long digits) {
    if (mpfr_zero_p(x.v))
        return "0";
    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits),
                             x.v, MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (mant[0] == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    std::string out;
    if (e <= 0)
        out = "0." + std::string(static_cast<size_t>(-e), '0') + mant;
    else if (static_cast<size_t>(e) >= mant.size())
        out = mant + std::string(static_cast<size_t>(e) - mant.size(), '0');
    else
        out = mant.substr(0, static_cast<size_t>(e)) + "." +
              mant.substr(static_cast<size_t>(e));
    return sign + out;
}

Real trunc_decimals(const Real& x, long places) {
    Real scale = real_from(pow_z(10, static_cast<unsigned long>(places)),
                           x.prec());
    Real y = x * scale;
    mpfr_trunc(y.v, y.v);
    return y / scale;
}

namespace {

constexpr int kAgmBudget = 400;
constexpr int kNewtonBudget = 200;

Real agm(Real a, Real b) {
    mpfr_prec_t prec = join(a, b);
    Real eps(prec);
    mpfr_set_ui_2exp(eps.v, 1, -(prec - 8), MPFR_RNDN);
    for (int i = 0; i < kAgmBudget; i++) {
        if (abs(a - b) < eps * abs(a))
            return a;
        Real am = (a + b) / 2;
        Real gm = sqrt(a * b);
        a = am;
        b = gm;
    }
    throw arith_error("period iteration did not converge; raise precision");
}

Real newton_cubic(Real t, const Real& g2, const Real& g3) {
    mpfr_prec_t prec = g2.prec();
    Real eps(prec);
    mpfr_set_ui_2exp(eps.v, 1, -(prec - 8), MPFR_RNDN);
    Real one = real_from(1L, prec);
    for (int i = 0; i < kNewtonBudget; i++) {
        Real f = ((4 * t * t - g2) * t) - g3;
        Real fp = 12 * t * t - g2;
        Real step = f / fp;
        t = t - step;
        if (abs(step) < eps * (abs(t) + one))
            return t;
    }
    throw arith_error("root refinement did not converge; raise precision");
}

Real cbrt_r(const Real& a) {
    Real r(a.prec());
    mpfr_cbrt(r.v, a.v, MPFR_RNDN);
    return r;
}

void clamp_unit(Real& x) {
    if (mpfr_cmp_si(x.v, 1) > 0)
        mpfr_set_si(x.v, 1, MPFR_RNDN);
    if (mpfr_cmp_si(x.v, -1) < 0)
        mpfr_set_si(x.v, -1, MPFR_RNDN);
}

}  // namespace

PeriodData period_data(const WeierstrassModel& Emin, long digits) {
    if (digits < 30)
        throw arith_error("period precision must be at least 30 digits");
    if (!Emin.integral())
        throw arith_error("period_data wants the minimal model");
    mpfr_prec_t prec = bits_for(digits);
    Real g2 = real_from(Emin.c4 / 12, prec);
    Real g3 = real_from(Emin.c6 / 216, prec);
    Real P = pi(prec);

    if (Emin.disc > 0) {
        // three real roots of 4t^3 - g2 t - g3, by the cosine form
        Real m = 2 * sqrt(g2 / 12);
        Real arg = (3 * (-(g3 / 4))) / ((-(g2 / 4)) * m);
        clamp_unit(arg);
        Real theta(prec);
        mpfr_acos(theta.v, arg.v, MPFR_RNDN);
        std::vector<Real> e;
        for (int k = 0; k < 3; k++) {
            Real ang = theta / 3 - (2 * k) * (P / 3);
            Real c(prec);
            mpfr_cos(c.v, ang.v, MPFR_RNDN);
            e.push_back(newton_cubic(m * c, g2, g3));
        }
        std::sort(e.begin(), e.end(), [](const Real& a, const Real& b) {
            return b < a;
        });
        Real w1 = P / agm(sqrt(e[0] - e[2]), sqrt(e[0] - e[1]));
        Real w2 = P / agm(sqrt(e[0] - e[2]), sqrt(e[1] - e[2]));
        return {w1, w2 / w1, 2, digits};
    }

    // one real root: Cardano with the stable cofactor
    Real ph = -(g2 / 12);  // t^3 + ph t + qh
    Real qh = -(g3 / 4);
    Real D = (qh / 2) * (qh / 2) + (ph / 3) * (ph / 3) * (ph / 3);
    Real e1(prec);
    if (ph.sign() == 0) {
        e1 = cbrt_r(-qh);
    } else {
        Real sd = sqrt(D);
        Real w = qh.sign() <= 0 ? -(qh / 2) + sd : -(qh / 2) - sd;
        Real u = cbrt_r(w);
        e1 = u - ph / (3 * u);
    }
    e1 = newton_cubic(e1, g2, g3);

    Real q = 3 * e1 * e1 - g2 / 4;
    Real num = 3 * e1 * e1 - g2;  // = (2 sqrt q)^2 - (3 e1)^2
    Real splus(prec), sminus(prec);
    if (e1.sign() >= 0) {
        splus = 2 * sqrt(q) + 3 * e1;
        sminus = num / splus;
    } else {
        sminus = 2 * sqrt(q) - 3 * e1;
        splus = num / sminus;
    }
    Real fourth = sqrt(sqrt(q));
    Real om = (2 * P) / agm(2 * fourth, sqrt(splus));
    Real omi = (2 * P) / agm(2 * fourth, sqrt(sminus));
    return {om, omi / (2 * om), 1, digits};
}

Q rationalize_quotient(const Real& x, const Z& max_den, const Q& tol) {
    if (max_den < 1 || tol <= 0)
        throw arith_error("rationalize_quotient: bad parameters");
    if (tol * (2 * max_den * max_den) >= 1)
        throw arith_error(
            "tolerance too coarse to pin a unique denominator <= " +
            max_den.get_str());
    if (x.sign() <= 0)
        throw arith_error("rationalize_quotient wants a positive input");
    mpfr_prec_t prec = x.prec();
    Real cur = x;
    Z p0 = 0, p1 = 1, q0 = 1, q1 = 0;  // convergent recurrences
    Real tiny(prec);
    mpfr_set_ui_2exp(tiny.v, 1, -(prec / 2), MPFR_RNDN);
    for (int i = 0; i < 128; i++) {
        Real fl(prec);
        mpfr_floor(fl.v, cur.v);
        Z a(0);
        mpfr_get_z(a.get_mpz_t(), fl.v, MPFR_RNDZ);
        Z p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den)
            break;
        if (q2 > 0) {
            Q cand(p2, q2);
            cand.canonicalize();
            Real diff = abs(x - real_from(cand, prec));
            if (mpfr_cmp_q(diff.v, tol.get_mpq_t()) < 0)
                return cand;
        }
        p0 = p1;
        p1 = p2;
        q0 = q1;
        q1 = q2;
        Real frac = cur - fl;
        if (frac < tiny)
            break;
        cur = 1L / frac;
    }
    throw arith_error("no rational with denominator <= " + max_den.get_str() +
                      " within tolerance");
}

Q rationalize_quotient(const Real& x) {
    return rationalize_quotient(x, Z(10000), Q(1) / Q(pow_z(10, 30)));
}

PeriodValuations period_quotient_valuations(const WeierstrassModel& E,
                                            const WeierstrassModel& Eprime,
                                            const Z& p, long digits) {
    PeriodData a = period_data(minimal_model(E).first, digits);
    PeriodData b = period_data(minimal_model(Eprime).first, digits);
    PeriodValuations out;
    out.omega_quotient = rationalize_quotient(b.omega / a.omega);
    out.omega_star_quotient =
        rationalize_quotient(b.omega_star / a.omega_star);
    out.omega_ord =
        out.omega_quotient == 1 ? 0 : ord_p(out.omega_quotient, p);
    out.omega_star_ord =
        out.omega_star_quotient == 1 ? 0 : ord_p(out.omega_star_quotient, p);
    return out;
}

}  // namespace isogrowth
