#pragma once

#include "isogeny.hpp"
#include "localred.hpp"
#include "tower.hpp"

namespace isogrowth {

// exact rational, or a rational interval (center, halfwidth)
struct ExactOrInterval {
    Q center = 0;
    Q halfwidth = 0;
    bool exact = true;
    std::vector<std::string> notes;

    static ExactOrInterval exactly(const Q& v) { return {v, 0, true, {}}; }
    static ExactOrInterval around(const Q& c, const Q& hw,
                                  const std::string& note) {
        ExactOrInterval r{c, hw, false, {}};
        if (!note.empty())
            r.notes.push_back(note);
        return r;
    }

    bool contains(const Q& v) const {
        return v >= center - halfwidth && v <= center + halfwidth;
    }

    ExactOrInterval operator+(const ExactOrInterval& o) const {
        ExactOrInterval r{center + o.center, halfwidth + o.halfwidth,
                          exact && o.exact, notes};
        r.notes.insert(r.notes.end(), o.notes.begin(), o.notes.end());
        return r;
    }

    ExactOrInterval scaled(const Q& k) const {
        return {center * k, halfwidth * abs(k), exact, notes};
    }
};

// valuation of the minimal discriminant after base change with ramification
// degree e; exact except in the wild 2-adic case
ExactOrInterval discriminant_base_change(long delta, int eth, const Z& e,
                                         bool curve_tame, bool ext_tame,
                                         const Z& p);

// valuation of the double quotient of minimal exterior forms across the
// base change; zero unless additive potentially supersingular
ExactOrInterval omega_phi(const LocalReductionData& dE,
                          const LocalReductionData& dEp, const Z& e,
                          bool ext_tame, const Z& p);

// ord_p(c'/c) at one place with absolute profile w, for an isogeny of the
// given degree (has_chain: a prime-degree decomposition is available)
ExactOrInterval tamagawa_quotient_layer(const LocalReductionData& dE,
                                        const LocalReductionData& dEp,
                                        const PlaceGroup& w, const Z& p,
                                        const Z& degree, bool has_chain);

struct GammaExponent {
    ExactOrInterval tamagawa;
    ExactOrInterval omega_phi_part;  // already weighted by f_w
    ExactOrInterval total;
};

// per-place exponent above the rational prime v (w gives the absolute
// profile of one place of the layer)
GammaExponent gamma_exponent(const LocalReductionData& dE,
                             const LocalReductionData& dEp,
                             const PlaceGroup& w, const Z& v, const Z& p,
                             const Z& degree, bool has_chain);

// ord_p(C'/C); the e^r ramification factors cancel
Q semistable_toric_tamagawa(const Q& C, const Q& Cp, long r, const Z& e,
                            const Z& p);

}  // namespace isogrowth
