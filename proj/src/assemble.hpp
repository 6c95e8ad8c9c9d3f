#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "growth.hpp"
#include "periods.hpp"

namespace isogrowth {

struct LocalPair {
    LocalReductionData E;
    LocalReductionData Ep;
};

// everything the per-layer formula consumes, computed once from the pair
struct AssemblyContext {
    IsogenyDescriptor phi;
    TowerModel tower;
    Z p;
    Z degree;
    bool has_chain = false;
    long tors_E = 0;  // ord_p of the p-part of the rational torsion
    long tors_Ep = 0;
    PeriodValuations pv;
    std::vector<std::pair<Z, LocalPair>> bad;  // by rational bad prime
    std::map<std::string, LocalPair> labeled;  // data for abstract places
};

AssemblyContext build_assembly_context(const IsogenyDescriptor& phi,
                                       const TowerModel& T, const Z& p,
                                       long digits = 50);

// ord_p of the Selmer/Sha quotient at layer n
ExactOrInterval global_exponent_at_layer(const AssemblyContext& ctx, long n);

struct MuCyclotomic {
    Q mu = 0;
    Q eps_bound = 0;
    bool exact = true;
};

MuCyclotomic asymptotic_mu_cyclotomic(const AssemblyContext& ctx, const Z& l);

struct MuZl {
    Q mu = 0;
    Q halfwidth = 0;
    bool exact = true;
    // per-place contribution (per single place; classes list their copies)
    std::vector<std::pair<std::string, ExactOrInterval>> places;
};

MuZl asymptotic_mu_Zl(const AssemblyContext& ctx);

struct LieCoefficient {
    bool fluctuating = false;
    Q value = 0;       // when stable
    Q even_value = 0;  // the two parity values otherwise
    Q odd_value = 0;
};

struct LieFit {
    Q mu = 0;
    std::vector<LieCoefficient> lower;  // mu_1 .. mu_d
    bool fluctuation = false;
    bool from_parity_split = false;
};

// fit exponent(n) = mu·x^d + mu_1·x^(d-1) + ... + mu_d with x = l^n,
// falling back to a parity split when no single polynomial works
LieFit lie_polynomial_fit(const std::vector<ExactOrInterval>& ys, const Z& l,
                          int dim, long n_lo);
LieFit lie_polynomial_fit(const AssemblyContext& ctx, long n_lo, long n_hi);

// widens the layer exponent by the divisible-Selmer bound rk_p·ord_p(deg)
// on each side, plus the same slack once more when torsion is not exact
ExactOrInterval sha_uncertainty_interval(const ExactOrInterval& exponent,
                                         long rk_p, const Z& deg, const Z& p,
                                         bool torsion_exact);

struct GrowthReport {
    Z p;
    TowerModel tower;
    long n_lo = 0;
    long n_hi = 0;
    std::vector<ExactOrInterval> exponents;
    std::vector<ExactOrInterval> sha;
    Q mu = 0;
    bool mu_exact = true;
    Q mu_eps = 0;
    std::vector<std::pair<std::string, ExactOrInterval>> mu_places;
    std::vector<LieCoefficient> lower;
    bool fluctuation = false;
    ExactOrInterval constant_observed;
    std::vector<std::string> assumptions;
};

struct ReportOptions {
    long rk_p = 0;
    bool torsion_exact = true;
    long digits = 50;
};

GrowthReport build_growth_report(const IsogenyDescriptor& phi,
                                 const TowerModel& T, const Z& p, long n_lo,
                                 long n_hi, const ReportOptions& opt);

std::string report_to_json(const GrowthReport& r);
GrowthReport report_from_json(const std::string& text);

}  // namespace isogrowth
