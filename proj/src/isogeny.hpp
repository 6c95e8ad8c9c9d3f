#pragma once

#include <vector>

#include "localred.hpp"
#include "periods.hpp"

namespace isogrowth {

struct IsogenyStep {
    WeierstrassModel source;
    WeierstrassModel target;
    Z degree;  // prime
};

struct IsogenyDescriptor {
    WeierstrassModel source;
    WeierstrassModel target;
    Z degree;
    std::vector<IsogenyStep> chain;  // optional prime-degree decomposition

    IsogenyDescriptor reversed() const;  // the dual, implicitly
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(const std::string& why) {
        ok = false;
        failures.push_back(why);
    }
};

ValidationReport validate_isogeny(const IsogenyDescriptor& d,
                                  long good_prime_bound);

}  // namespace isogrowth
