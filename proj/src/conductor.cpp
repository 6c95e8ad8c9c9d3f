#include "conductor.hpp"

namespace isogrowth {

Q m_from_f(const Q& f, long dim, bool trivial) {
    if (dim < 1)
        throw arith_error("dimension must be positive");
    if (trivial) {
        if (f != 0)
            throw arith_error("trivial inertia action has conductor exponent 0");
        return Q(-1);
    }
    if (f == 0)
        return Q(-1);
    if (f < dim)
        throw arith_error("conductor exponent below dimension for ramified input");
    return f / dim - 1;
}

TensorConductor tensor_conductor(const InertiaRepDatum& rho,
                                 const InertiaRepDatum& chi) {
    if (rho.dim < 1 || chi.dim < 1)
        throw arith_error("dimension must be positive");
    if (rho.f < 0 || chi.f < 0)
        throw arith_error("conductor exponent must be nonnegative");
    const InertiaRepDatum* lo = &rho;
    const InertiaRepDatum* hi = &chi;
    if (hi->m < lo->m)
        std::swap(lo, hi);
    return {hi->f * lo->dim, lo->m != hi->m};
}

Q base_change_conductor_bound(const Q& f_base, const Z& e_upper) {
    if (f_base < 2)
        throw arith_error("base-change bound needs additive reduction (f >= 2)");
    if (e_upper < 1)
        throw arith_error("ramification degree must be positive");
    return e_upper * (f_base - 2) + 2;
}

Q tower_conductor_ceiling(const Z& l, long v_l, const Z& e_stable) {
    if (!is_prime(l))
        throw arith_error("residue characteristic must be prime");
    if (v_l < 1)
        throw arith_error("valuation of l must be positive");
    if (e_stable < 1)
        throw arith_error("stable ramification degree must be positive");
    Q fmax = 2;
    if (l == 3)
        fmax = 3 * v_l + 2;
    else if (l == 2)
        fmax = 6 * v_l + 2;
    return base_change_conductor_bound(fmax, e_stable);
}

}  // namespace isogrowth
