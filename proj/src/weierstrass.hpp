#pragma once

#include "arith.hpp"

#include <array>
#include <utility>

namespace isogrowth {

// long Weierstrass model over Q with cached invariants
struct WeierstrassModel {
    Q a1, a2, a3, a4, a6;
    Q b2, b4, b6, b8, c4, c6, disc, j;

    WeierstrassModel(const Q& A1, const Q& A2, const Q& A3, const Q& A4,
                     const Q& A6);

    static WeierstrassModel from_strings(const std::array<std::string, 5>& a);

    bool integral() const;
    // integral coefficient by index 1,2,3,4,6; throws if non-integral
    Z az(int i) const;

    // (x,y) -> (x + r, y + s x + t), same scale
    WeierstrassModel shift(const Z& r, const Z& s, const Z& t) const;
    // a_i -> a_i / u^i  (disc -> disc / u^12)
    WeierstrassModel scale(const Q& u) const;

    bool same_coefficients(const WeierstrassModel& o) const;
};

// globally minimal model and the scaling u with a_i(min) = a_i / u^i
std::pair<WeierstrassModel, Q> minimal_model(const WeierstrassModel& E);

// the reduced integral model with the given invariants (must be realizable)
WeierstrassModel model_from_c4c6(const Z& c4, const Z& c6);

}  // namespace isogrowth
