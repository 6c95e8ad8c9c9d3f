#include "isogeny.hpp"

#include <algorithm>

namespace isogrowth {

IsogenyDescriptor IsogenyDescriptor::reversed() const {
    IsogenyDescriptor r{target, source, degree, {}};
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        r.chain.push_back({it->target, it->source, it->degree});
    return r;
}

ValidationReport validate_isogeny(const IsogenyDescriptor& d,
                                  long good_prime_bound) {
    ValidationReport rep;
    if (d.degree < 1)
        rep.fail("degree must be positive");

    for (auto [E, who] : {std::pair{&d.source, "source"},
                          std::pair{&d.target, "target"}}) {
        if (!E->integral() || !minimal_model(*E).first.same_coefficients(*E))
            rep.fail(std::string(who) + " model is not minimal");
    }
    if (!rep.ok)
        return rep;

    Z N = conductor(d.source), Np = conductor(d.target);
    if (N != Np)
        rep.fail("conductor mismatch: " + N.get_str() + " vs " +
                 Np.get_str());

    Z NN = N * Np;
    for (Z q = 2; q <= good_prime_bound; q += (q == 2 ? 1 : 2)) {
        if (!is_prime(q) || NN % q == 0)
            continue;
        long a = frobenius_trace(d.source, q);
        long b = frobenius_trace(d.target, q);
        if (a != b)
            rep.fail("trace mismatch at " + q.get_str() + ": " +
                     std::to_string(a) + " vs " + std::to_string(b));
    }

    try {
        PeriodValuations pv =
            period_quotient_valuations(d.source, d.target, 2);
        for (const Q& quot : {pv.omega_quotient, pv.omega_star_quotient})
            for (auto& [p, e] : factor(q_num(quot) * q_den(quot)))
                if (d.degree % p != 0)
                    rep.fail("period quotient has a factor " + p.get_str() +
                             " outside the degree");
    } catch (const arith_error& err) {
        rep.fail(std::string("period quotient not recognized: ") +
                 err.what());
    }

    if (!d.chain.empty()) {
        Z prod = 1;
        for (const IsogenyStep& s : d.chain) {
            if (!is_prime(s.degree))
                rep.fail("chain step degree " + s.degree.get_str() +
                         " is not prime");
            prod *= s.degree;
        }
        if (prod != d.degree)
            rep.fail("chain degrees multiply to " + prod.get_str() +
                     ", not " + d.degree.get_str());
        if (!d.chain.front().source.same_coefficients(d.source))
            rep.fail("chain does not start at the source");
        if (!d.chain.back().target.same_coefficients(d.target))
            rep.fail("chain does not end at the target");
        for (size_t i = 0; i + 1 < d.chain.size(); i++)
            if (!d.chain[i].target.same_coefficients(d.chain[i + 1].source))
                rep.fail("chain breaks after step " + std::to_string(i + 1));
    }
    return rep;
}

}  // namespace isogrowth
