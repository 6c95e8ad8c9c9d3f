#pragma once

#include "arith.hpp"

namespace isogrowth {

// inertia representation datum: dimension, conductor exponent, slope
struct InertiaRepDatum {
    long dim = 1;
    Q f = 0;
    Q m = -1;
};

struct TensorConductor {
    Q f;
    bool exact = true;  // false: upper bound only
};

// slope of the last ramification break from the conductor exponent
Q m_from_f(const Q& f, long dim, bool trivial);

// conductor exponent of rho (x) chi, oriented by the slopes
TensorConductor tensor_conductor(const InertiaRepDatum& rho,
                                 const InertiaRepDatum& chi);

// f(E/F) <= e(F/K)·(f(E/K) − 2) + 2 for additive reduction
Q base_change_conductor_bound(const Q& f_base, const Z& e_upper);

// stable conductor ceiling at residue characteristic l: the maximal base
// exponent (2 for l >= 5, 3v+2 for l = 3, 6v+2 for l = 2) pushed through
// the base-change bound at ramification e_stable
Q tower_conductor_ceiling(const Z& l, long v_l, const Z& e_stable);

}  // namespace isogrowth
