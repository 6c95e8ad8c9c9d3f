#pragma once

#include "weierstrass.hpp"

namespace isogrowth {

enum class KodairaType {
    I0, In, II, III, IV, I0star, Instar, IVstar, IIIstar, IIstar
};

enum class ReductionClass {
    good, split_multiplicative, nonsplit_multiplicative, additive
};

enum class PotentialClass { good_ordinary, good_supersingular, multiplicative };

struct LocalReductionData {
    Z p;
    long delta = 0;        // ord_p of the minimal discriminant
    KodairaType type = KodairaType::I0;
    long type_n = 0;       // n for I_n (n>=1), nu for I_nu* (nu>=0)
    long m = 1;            // Neron component count
    long c = 1;            // Tamagawa number
    long f = 0;            // conductor exponent
    ReductionClass reduction = ReductionClass::good;
    PotentialClass potential = PotentialClass::good_ordinary;
    bool tame = true;
    int eth = 0;           // the tame base-change invariant; -1 when pot-mult
    bool split = false;    // for multiplicative reduction
};

std::string kodaira_string(KodairaType t, long n);
std::string reduction_string(ReductionClass r);
std::string potential_string(PotentialClass p);

// lookup by Kodaira type: I0->0, II->2, III->3, IV->4, *->6, IV*->8,
// III*->9, II*->10
int eth_of_type(KodairaType t);

LocalReductionData tate_local_data(const WeierstrassModel& Emin, const Z& p);
PotentialClass classify_potential(const WeierstrassModel& E, const Z& p);

// order of the p-primary part of the rational torsion subgroup
Z torsion_p_part(const WeierstrassModel& E, const Z& p);
// full rational torsion order (helper, exposed for tests)
long torsion_order(const WeierstrassModel& E);

// trace of Frobenius at a good prime q
long frobenius_trace(const WeierstrassModel& E, const Z& q);

// product of p^f over the bad primes of the minimal model
Z conductor(const WeierstrassModel& Emin);

}  // namespace isogrowth
