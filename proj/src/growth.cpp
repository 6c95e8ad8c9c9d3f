#include "growth.hpp"

namespace isogrowth {

namespace {

long residue_mod12(const Z& e, long delta) {
    Z r = zmod(e * delta, Z(12));
    return r.get_si();
}

bool valid_eth(int eth) {
    switch (eth) {
        case 0:
        case 2:
        case 3:
        case 4:
        case 6:
        case 8:
        case 9:
        case 10:
            return true;
        default:
            return false;
    }
}

// Tamagawa number of I_m after base change to a place with profile w
long multiplicative_layer_ord(const LocalReductionData& d, const PlaceGroup& w,
                              const Z& p) {
    Z em = w.e * d.type_n;
    bool split = d.reduction == ReductionClass::split_multiplicative ||
                 zmod(w.f, Z(2)) == 0;
    Z c = split ? em : (zmod(em, Z(2)) == 0 ? Z(2) : Z(1));
    return ord_p(c, p);
}

}  // namespace

ExactOrInterval discriminant_base_change(long delta, int eth, const Z& e,
                                         bool curve_tame, bool ext_tame,
                                         const Z& p) {
    if (e < 1)
        throw arith_error("ramification degree must be positive");
    if (delta < 0)
        throw arith_error("discriminant valuation must be nonnegative");
    if (curve_tame) {
        if (delta >= 12)
            throw arith_error(
                "tame additive reduction has discriminant valuation below 12");
        return ExactOrInterval::exactly(residue_mod12(e, delta));
    }
    if (ext_tame) {
        if (!valid_eth(eth))
            throw arith_error("not a base-change invariant of an additive type");
        Z df = e * delta - 12 * ((e * eth) / 12);
        return ExactOrInterval::exactly(Q(df));
    }
    if (p == 3)
        return ExactOrInterval::exactly(residue_mod12(e, delta));
    if (p == 2)
        return ExactOrInterval::around(
            16, 16, "wild 2-adic base change: valuation only bounded");
    throw arith_error("wild base change needs residue characteristic 2 or 3");
}

ExactOrInterval omega_phi(const LocalReductionData& dE,
                          const LocalReductionData& dEp, const Z& e,
                          bool ext_tame, const Z& p) {
    if (dE.p != p || dEp.p != p)
        throw arith_error("local data computed at a different prime");
    if (e < 1)
        throw arith_error("ramification degree must be positive");
    bool addE = dE.reduction == ReductionClass::additive;
    bool addEp = dEp.reduction == ReductionClass::additive;
    if (addE != addEp)
        throw arith_error("isogenous curves cannot disagree on additivity");
    if (!addE)
        return ExactOrInterval::exactly(0);
    if (dE.potential != dEp.potential)
        throw arith_error(
            "isogenous curves cannot disagree on potential reduction");
    if (dE.potential != PotentialClass::good_supersingular)
        return ExactOrInterval::exactly(0);

    bool curve_tame = dE.tame && dEp.tame;
    if (curve_tame || ext_tame || p == 3) {
        ExactOrInterval dF =
            discriminant_base_change(dE.delta, dE.eth, e, curve_tame, ext_tame, p);
        ExactOrInterval dFp = discriminant_base_change(dEp.delta, dEp.eth, e,
                                                       curve_tame, ext_tame, p);
        Q om = (e * Q(dEp.delta - dE.delta) - (dFp.center - dF.center)) / 12;
        if (q_den(om) != 1)
            throw arith_error("form quotient valuation did not come out integral");
        return ExactOrInterval::exactly(om);
    }
    Q slope = e * Q(dEp.delta - dE.delta) / 12;
    return ExactOrInterval::around(
        slope, Q(13, 2), "wild 2-adic pair: only the leading slope is known");
}

ExactOrInterval tamagawa_quotient_layer(const LocalReductionData& dE,
                                        const LocalReductionData& dEp,
                                        const PlaceGroup& w, const Z& p,
                                        const Z& degree, bool has_chain) {
    if (dE.p != dEp.p)
        throw arith_error("local data at different primes");
    if (w.e < 1 || w.f < 1)
        throw arith_error("invalid place profile");
    if (degree < 1)
        throw arith_error("degree must be positive");
    bool addE = dE.reduction == ReductionClass::additive;
    bool addEp = dEp.reduction == ReductionClass::additive;
    if (addE != addEp)
        throw arith_error("isogenous curves cannot disagree on additivity");

    if (dE.reduction == ReductionClass::good ||
        dEp.reduction == ReductionClass::good) {
        if (dE.reduction != dEp.reduction)
            throw arith_error("isogenous curves cannot disagree on good reduction");
        return ExactOrInterval::exactly(0);
    }

    if (!addE)
        return ExactOrInterval::exactly(
            Q(multiplicative_layer_ord(dEp, w, p) -
              multiplicative_layer_ord(dE, w, p)));

    // additive; the component map kernel and cokernel are killed by the degree
    if (dE.potential != dEp.potential)
        throw arith_error(
            "isogenous curves cannot disagree on potential reduction");
    if (ord_p(degree, p) == 0)
        return ExactOrInterval::exactly(0);

    if (dE.potential == PotentialClass::multiplicative) {
        if (p >= 5)
            return ExactOrInterval::exactly(0);
        return ExactOrInterval::around(
            0, p == 2 ? 2 : 1,
            "potentially multiplicative component bound at p = 2, 3");
    }

    if (p >= 5) {
        if (ord_p(degree, p) >= 2 && !has_chain)
            throw arith_error(
                "composite degree needs a prime-degree chain for the exact "
                "component rule");
        return ExactOrInterval::exactly(0);
    }

    bool wild = !dE.tame || !dEp.tame;
    Q hw = p == 2 ? 2 : 1;
    if (wild && dE.potential == PotentialClass::good_supersingular)
        return ExactOrInterval::around(
            0, hw, "wild supersingular place: contributions alternate with period 2");
    return ExactOrInterval::around(
        0, hw, "component evolution bounded at p = 2, 3; stabilises up the tower");
}

GammaExponent gamma_exponent(const LocalReductionData& dE,
                             const LocalReductionData& dEp,
                             const PlaceGroup& w, const Z& v, const Z& p,
                             const Z& degree, bool has_chain) {
    GammaExponent g;
    g.tamagawa = tamagawa_quotient_layer(dE, dEp, w, p, degree, has_chain);
    if (v == p) {
        bool ext_tame = zmod(w.e, p) != 0;
        g.omega_phi_part = omega_phi(dE, dEp, w.e, ext_tame, p).scaled(Q(w.f));
    } else {
        g.omega_phi_part = ExactOrInterval::exactly(0);
    }
    g.total = g.tamagawa + g.omega_phi_part;
    return g;
}

Q semistable_toric_tamagawa(const Q& C, const Q& Cp, long r, const Z& e,
                            const Z& p) {
    if (C <= 0 || Cp <= 0)
        throw arith_error("toric periods must be positive");
    if (r < 0)
        throw arith_error("toric rank must be nonnegative");
    if (e < 1)
        throw arith_error("ramification degree must be positive");
    return Q(ord_p(Cp, p) - ord_p(C, p));
}

}  // namespace isogrowth
