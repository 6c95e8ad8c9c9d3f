#include "assemble.hpp"

#include <json.hpp>

#include <algorithm>
#include <optional>

namespace isogrowth {

namespace {

using nlohmann::json;

// exact Gaussian elimination on a square rational system
std::vector<Q> solve_linear(std::vector<std::vector<Q>> A, std::vector<Q> y) {
    size_t k = A.size();
    for (size_t col = 0; col < k; ++col) {
        size_t piv = col;
        while (piv < k && A[piv][col] == 0)
            ++piv;
        if (piv == k)
            throw arith_error("singular fit system");
        std::swap(A[piv], A[col]);
        std::swap(y[piv], y[col]);
        for (size_t r = col + 1; r < k; ++r) {
            if (A[r][col] == 0)
                continue;
            Q m = A[r][col] / A[col][col];
            for (size_t c = col; c < k; ++c)
                A[r][c] -= m * A[col][c];
            y[r] -= m * y[col];
        }
    }
    std::vector<Q> x(k);
    for (size_t i = k; i-- > 0;) {
        Q s = y[i];
        for (size_t c = i + 1; c < k; ++c)
            s -= A[i][c] * x[c];
        x[i] = s / A[i][i];
    }
    return x;
}

// coefficients highest degree first
Q poly_at(const std::vector<Q>& coef, const Q& x) {
    Q v = 0;
    for (const Q& c : coef)
        v = v * x + c;
    return v;
}

Q q_pow(const Q& x, int k) {
    Q v = 1;
    for (int i = 0; i < k; ++i)
        v *= x;
    return v;
}

json eoi_to_json(const ExactOrInterval& v) {
    json j;
    j["exact"] = v.exact;
    if (v.exact) {
        j["value"] = q_to_string(v.center);
    } else {
        j["center"] = q_to_string(v.center);
        j["halfwidth"] = q_to_string(v.halfwidth);
    }
    if (!v.notes.empty())
        j["notes"] = v.notes;
    return j;
}

ExactOrInterval eoi_from_json(const json& j) {
    ExactOrInterval v;
    v.exact = j.at("exact").get<bool>();
    if (v.exact) {
        v.center = q_from_string(j.at("value").get<std::string>());
    } else {
        v.center = q_from_string(j.at("center").get<std::string>());
        v.halfwidth = q_from_string(j.at("halfwidth").get<std::string>());
    }
    if (j.contains("notes"))
        v.notes = j.at("notes").get<std::vector<std::string>>();
    return v;
}

}  // namespace

AssemblyContext build_assembly_context(const IsogenyDescriptor& phi,
                                       const TowerModel& T, const Z& p,
                                       long digits) {
    if (!is_prime(p))
        throw arith_error("growth prime must be prime");
    AssemblyContext ctx{phi, T, p, phi.degree};
    ctx.has_chain = is_prime(phi.degree) || !phi.chain.empty();
    WeierstrassModel E = minimal_model(phi.source).first;
    WeierstrassModel Ep = minimal_model(phi.target).first;
    ctx.tors_E = ord_p(torsion_p_part(E, p), p);
    ctx.tors_Ep = ord_p(torsion_p_part(Ep, p), p);
    long k = ord_p(phi.degree, p);
    if (ctx.tors_Ep - ctx.tors_E > k || ctx.tors_E - ctx.tors_Ep > k)
        throw arith_error("torsion quotient violates the degree bound");
    ctx.pv = period_quotient_valuations(E, Ep, p, digits);
    Z NE = conductor(E);
    if (NE != conductor(Ep))
        throw arith_error("isogenous curves must share a conductor");
    for (const auto& [q, e] : factor(NE)) {
        (void)e;
        ctx.bad.emplace_back(
            q, LocalPair{tate_local_data(E, q), tate_local_data(Ep, q)});
    }
    return ctx;
}

ExactOrInterval global_exponent_at_layer(const AssemblyContext& ctx, long n) {
    if (n < 0)
        throw arith_error("negative layer");
    if (ord_p(ctx.degree, ctx.p) == 0)
        return ExactOrInterval::exactly(0);  // no p-power isogeny kernel
    LayerSignature sig = layer_signature(ctx.tower, n);
    ExactOrInterval total =
        ExactOrInterval::exactly(2 * Q(ctx.tors_Ep - ctx.tors_E));
    total = total +
            ExactOrInterval::exactly(Q(sig.degree_over_q) * ctx.pv.omega_ord);
    total = total + ExactOrInterval::exactly(Q(sig.complex_places) *
                                             ctx.pv.omega_star_ord);
    for (const auto& [q, lp] : ctx.bad) {
        for (const PlaceGroup& w : tower_local_data(ctx.tower, q.get_str(), n)) {
            GammaExponent g = gamma_exponent(lp.E, lp.Ep, w, q, ctx.p,
                                             ctx.degree, ctx.has_chain);
            total = total + g.total.scaled(Q(w.count));
        }
    }
    for (const ZlPlaceClass& c : ctx.tower.places) {
        if (c.residue_char != 0)
            continue;  // decimal places already ride with the bad primes
        auto it = ctx.labeled.find(c.place);
        if (it == ctx.labeled.end())
            throw arith_error("missing local data for abstract place " +
                              c.place);
        for (const PlaceGroup& w : tower_local_data(ctx.tower, c.place, n)) {
            GammaExponent g = gamma_exponent(it->second.E, it->second.Ep, w,
                                             Z(0), ctx.p, ctx.degree,
                                             ctx.has_chain);
            total = total + g.total.scaled(Q(w.count));
        }
    }
    return total;
}

MuCyclotomic asymptotic_mu_cyclotomic(const AssemblyContext& ctx, const Z& l) {
    if (!is_prime(l))
        throw arith_error("l must be prime");
    MuCyclotomic r;
    r.mu = ctx.pv.omega_ord;
    if (l == ctx.p) {
        long dE = 0, dEp = 0;
        bool pot_good = true;
        for (const auto& [q, lp] : ctx.bad)
            if (q == ctx.p) {
                dE = lp.E.delta;
                dEp = lp.Ep.delta;
                pot_good = lp.E.potential != PotentialClass::multiplicative;
            }
        if (pot_good)
            r.mu += Q(dEp - dE) / 12;
    }
    r.exact = l != ctx.p || ord_p(ctx.degree, l) == 0;
    if (!r.exact)
        r.eps_bound = ctx.p > 3 ? Q(2, 3) : (ctx.p == 3 ? Q(3, 2) : Q(17, 2));
    return r;
}

MuZl asymptotic_mu_Zl(const AssemblyContext& ctx) {
    if (ctx.tower.kind != TowerKind::generic_zl &&
        ctx.tower.kind != TowerKind::z5sq_qi)
        throw arith_error("Zl asymptotics need a tower of classified places");
    Q r2 = ctx.tower.base_complex;
    if (ctx.tower.real_complex_after >= 0)
        r2 += Q(ctx.tower.base_real) / 2;
    ExactOrInterval total = ExactOrInterval::exactly(
        ctx.tower.base_degree * Q(ctx.pv.omega_ord) +
        r2 * ctx.pv.omega_star_ord);
    MuZl r;
    for (const auto& [q, lp] : ctx.bad) {
        for (const ZlPlaceClass& c : classify_place(ctx.tower, q)) {
            ExactOrInterval mu_v = ExactOrInterval::exactly(0);
            if (c.dimD == 0) {
                PlaceGroup w{c.e_base, c.f_base, 1};
                mu_v = tamagawa_quotient_layer(lp.E, lp.Ep, w, ctx.p,
                                               ctx.degree, ctx.has_chain);
            } else if (q == ctx.p && c.dimI >= 1 && ctx.tower.l == ctx.p &&
                       lp.E.potential != PotentialClass::multiplicative) {
                mu_v = ExactOrInterval::exactly(Q(c.f_base) * c.e_base *
                                                (lp.Ep.delta - lp.E.delta) /
                                                12);
            }
            std::string label = c.place;
            if (c.copies > 1)
                label += " (x" + std::to_string(c.copies) + ")";
            r.places.emplace_back(label, mu_v);
            total = total + mu_v.scaled(c.copies);
        }
    }
    r.mu = total.center;
    r.halfwidth = total.halfwidth;
    r.exact = total.exact;
    return r;
}

LieFit lie_polynomial_fit(const std::vector<ExactOrInterval>& ys, const Z& l,
                          int dim, long n_lo) {
    long count = static_cast<long>(ys.size());
    int d = dim;
    if (d < 1)
        throw arith_error("tower dimension must be positive");
    if (n_lo < 0)
        throw arith_error("negative layer");
    if (count < d + 2)
        throw arith_error("layer range is underdetermined for the fit");
    std::vector<Q> xs(count);
    for (long i = 0; i < count; ++i)
        xs[i] = Q(pow_z(l, static_cast<unsigned long>(n_lo + i)));

    // solve on the first d+1 points of idx, then check the rest of idx
    auto try_fit = [&](const std::vector<long>& idx)
        -> std::optional<std::vector<Q>> {
        std::vector<std::vector<Q>> A;
        std::vector<Q> rhs;
        for (int r = 0; r <= d; ++r) {
            const Q& x = xs[idx[r]];
            std::vector<Q> row(d + 1);
            Q pw = 1;
            for (int c = d; c >= 0; --c) {
                row[c] = pw;
                pw *= x;
            }
            A.push_back(row);
            rhs.push_back(ys[idx[r]].center);
        }
        std::vector<Q> coef = solve_linear(A, rhs);
        for (long j : idx) {
            Q res = poly_at(coef, xs[j]) - ys[j].center;
            if (abs(res) > ys[j].halfwidth)
                return std::nullopt;
        }
        return coef;
    };

    std::vector<long> all(count);
    for (long i = 0; i < count; ++i)
        all[i] = i;
    if (auto coef = try_fit(all)) {
        LieFit f;
        f.mu = (*coef)[0];
        for (int i = 1; i <= d; ++i)
            f.lower.push_back({false, (*coef)[i], (*coef)[i], (*coef)[i]});
        return f;
    }

    std::vector<long> even, odd;
    for (long i = 0; i < count; ++i)
        (((n_lo + i) % 2 == 0) ? even : odd).push_back(i);
    std::vector<long>* primary = &odd;
    std::vector<long>* secondary = &even;
    if (even.size() > odd.size())
        std::swap(primary, secondary);
    if (static_cast<long>(primary->size()) < d + 1 ||
        static_cast<long>(secondary->size()) < d)
        throw arith_error("layer range is underdetermined for the fit");
    auto pcoef = try_fit(*primary);
    if (!pcoef)
        throw arith_error(
            "no parity-stable polynomial fits the exponent sequence");
    Q mu = (*pcoef)[0];

    // lower coefficients of the other parity, with the leading term shared
    std::vector<std::vector<Q>> A;
    std::vector<Q> rhs;
    for (int r = 0; r < d; ++r) {
        const Q& x = xs[(*secondary)[r]];
        std::vector<Q> row(d);
        Q pw = 1;
        for (int c = d - 1; c >= 0; --c) {
            row[c] = pw;
            pw *= x;
        }
        A.push_back(row);
        rhs.push_back(ys[(*secondary)[r]].center - mu * q_pow(x, d));
    }
    std::vector<Q> scoef = solve_linear(A, rhs);
    for (size_t r = d; r < secondary->size(); ++r) {
        long j = (*secondary)[r];
        Q res = mu * q_pow(xs[j], d) + poly_at(scoef, xs[j]) - ys[j].center;
        if (abs(res) > ys[j].halfwidth)
            throw arith_error(
                "no parity-stable polynomial fits the exponent sequence");
    }

    LieFit f;
    f.mu = mu;
    f.from_parity_split = true;
    bool primary_odd = primary == &odd;
    for (int i = 1; i <= d; ++i) {
        Q pv = (*pcoef)[i];
        Q sv = scoef[i - 1];
        LieCoefficient c;
        if (pv == sv) {
            c.value = pv;
            c.even_value = pv;
            c.odd_value = pv;
        } else {
            c.fluctuating = true;
            c.odd_value = primary_odd ? pv : sv;
            c.even_value = primary_odd ? sv : pv;
            f.fluctuation = true;
        }
        f.lower.push_back(c);
    }
    return f;
}

LieFit lie_polynomial_fit(const AssemblyContext& ctx, long n_lo, long n_hi) {
    if (n_lo < 0 || n_hi < n_lo)
        throw arith_error("bad layer range");
    std::vector<ExactOrInterval> ys;
    for (long n = n_lo; n <= n_hi; ++n)
        ys.push_back(global_exponent_at_layer(ctx, n));
    return lie_polynomial_fit(ys, ctx.tower.l, ctx.tower.dim, n_lo);
}

ExactOrInterval sha_uncertainty_interval(const ExactOrInterval& exponent,
                                         long rk_p, const Z& deg, const Z& p,
                                         bool torsion_exact) {
    if (rk_p < 0)
        throw arith_error("corank bound must be nonnegative");
    long k = ord_p(deg, p);
    Q widen = Q(rk_p) * k + (torsion_exact ? Q(0) : Q(k));
    ExactOrInterval r = exponent;
    if (widen != 0) {
        r.halfwidth += widen;
        r.exact = false;
        r.notes.push_back("includes divisible-Selmer and torsion slack");
    }
    return r;
}

GrowthReport build_growth_report(const IsogenyDescriptor& phi,
                                 const TowerModel& T, const Z& p, long n_lo,
                                 long n_hi, const ReportOptions& opt) {
    if (n_lo < 0 || n_hi < n_lo)
        throw arith_error("bad layer range");
    AssemblyContext ctx = build_assembly_context(phi, T, p, opt.digits);
    GrowthReport r;
    r.p = p;
    r.tower = T;
    r.n_lo = n_lo;
    r.n_hi = n_hi;
    for (long n = n_lo; n <= n_hi; ++n)
        r.exponents.push_back(global_exponent_at_layer(ctx, n));
    for (const ExactOrInterval& e : r.exponents)
        r.sha.push_back(sha_uncertainty_interval(e, opt.rk_p, ctx.degree, p,
                                                 opt.torsion_exact));
    r.assumptions.push_back(
        "torsion over each layer taken as the stabilized base p-part");
    if (opt.rk_p == 0)
        r.assumptions.push_back(
            "p-corank 0: the Sha quotient equals the full Selmer quotient");

    bool lie_kind = T.kind == TowerKind::false_tate ||
                    T.kind == TowerKind::z5sq_qi ||
                    T.kind == TowerKind::generic_lie;
    if (T.kind == TowerKind::cyclotomic_q) {
        MuCyclotomic m = asymptotic_mu_cyclotomic(ctx, T.l);
        r.mu = m.mu;
        r.mu_exact = m.exact;
        r.mu_eps = m.eps_bound;
    } else if (T.kind == TowerKind::generic_zl) {
        MuZl m = asymptotic_mu_Zl(ctx);
        r.mu = m.mu;
        r.mu_exact = m.exact;
        r.mu_eps = m.halfwidth;
        r.mu_places = m.places;
    }

    Q x_hi = Q(pow_z(T.l, static_cast<unsigned long>(n_hi)));
    try {
        LieFit fit = lie_polynomial_fit(r.exponents, T.l, T.dim, n_lo);
        r.lower = fit.lower;
        r.fluctuation = fit.fluctuation;
        bool inputs_exact = true;
        for (const ExactOrInterval& e : r.exponents)
            inputs_exact = inputs_exact && e.exact;
        if (lie_kind) {
            r.mu = fit.mu;
            r.mu_exact = inputs_exact;
        } else if (fit.mu != r.mu) {
            r.assumptions.push_back(
                "polynomial fit on this range disagrees with the asymptotic "
                "mu (pre-asymptotic layers)");
        }
        Q sub = fit.mu * q_pow(x_hi, T.dim);
        for (int i = 1; i < T.dim; ++i) {
            const LieCoefficient& c = fit.lower[i - 1];
            Q cv = c.fluctuating
                       ? (n_hi % 2 == 0 ? c.even_value : c.odd_value)
                       : c.value;
            sub += cv * q_pow(x_hi, T.dim - i);
        }
        r.constant_observed =
            r.exponents.back() + ExactOrInterval::exactly(-sub);
    } catch (const arith_error&) {
        if (lie_kind) {
            if (r.exponents.size() >= 2) {
                Q den = q_pow(x_hi, T.dim) -
                        Q(pow_z(T.l, static_cast<unsigned long>(
                                         (n_hi - 1) * T.dim)));
                r.mu = (r.exponents.back().center -
                        r.exponents[r.exponents.size() - 2].center) /
                       den;
                r.mu_exact = false;
                r.assumptions.push_back(
                    "mu estimated from the top layers; range too short for "
                    "the fit");
            } else {
                r.mu_exact = false;
                r.assumptions.push_back("single layer: no asymptotics");
            }
        } else {
            r.assumptions.push_back("range too short for the coefficient fit");
        }
        r.constant_observed =
            r.exponents.back() +
            ExactOrInterval::exactly(-(r.mu * q_pow(x_hi, T.dim)));
    }
    r.assumptions.push_back(
        "constant term is the value observed at the largest layer");
    return r;
}

std::string report_to_json(const GrowthReport& r) {
    json j;
    j["p"] = r.p.get_str();
    j["tower"] = json::parse(tower_to_json(r.tower));
    j["layers"] = {{"from", r.n_lo}, {"to", r.n_hi}};
    json ex = json::array();
    for (const ExactOrInterval& e : r.exponents)
        ex.push_back(eoi_to_json(e));
    j["exponents"] = ex;
    json sh = json::array();
    for (const ExactOrInterval& e : r.sha)
        sh.push_back(eoi_to_json(e));
    j["sha"] = sh;
    j["mu"] = {{"value", q_to_string(r.mu)},
               {"exact", r.mu_exact},
               {"eps_bound", q_to_string(r.mu_eps)}};
    if (!r.mu_places.empty()) {
        json mp = json::array();
        for (const auto& [place, v] : r.mu_places)
            mp.push_back({{"place", place}, {"value", eoi_to_json(v)}});
        j["mu_places"] = mp;
    }
    if (!r.lower.empty()) {
        json co = json::array();
        for (size_t i = 0; i < r.lower.size(); ++i) {
            const LieCoefficient& c = r.lower[i];
            json cj;
            cj["index"] = static_cast<long>(i + 1);
            cj["fluctuating"] = c.fluctuating;
            if (c.fluctuating) {
                cj["even"] = q_to_string(c.even_value);
                cj["odd"] = q_to_string(c.odd_value);
            } else {
                cj["value"] = q_to_string(c.value);
            }
            co.push_back(cj);
        }
        j["coefficients"] = co;
    }
    j["fluctuation"] = r.fluctuation;
    j["constant_observed"] = eoi_to_json(r.constant_observed);
    j["assumptions"] = r.assumptions;
    return j.dump(2);
}

GrowthReport report_from_json(const std::string& text) {
    json j = json::parse(text);
    GrowthReport r;
    r.p = Z(j.at("p").get<std::string>());
    r.tower = tower_from_json(j.at("tower").dump());
    r.n_lo = j.at("layers").at("from").get<long>();
    r.n_hi = j.at("layers").at("to").get<long>();
    for (const json& e : j.at("exponents"))
        r.exponents.push_back(eoi_from_json(e));
    for (const json& e : j.at("sha"))
        r.sha.push_back(eoi_from_json(e));
    r.mu = q_from_string(j.at("mu").at("value").get<std::string>());
    r.mu_exact = j.at("mu").at("exact").get<bool>();
    r.mu_eps = q_from_string(j.at("mu").at("eps_bound").get<std::string>());
    if (j.contains("mu_places"))
        for (const json& e : j.at("mu_places"))
            r.mu_places.emplace_back(e.at("place").get<std::string>(),
                                     eoi_from_json(e.at("value")));
    if (j.contains("coefficients")) {
        for (const json& e : j.at("coefficients")) {
            LieCoefficient c;
            c.fluctuating = e.at("fluctuating").get<bool>();
            if (c.fluctuating) {
                c.even_value = q_from_string(e.at("even").get<std::string>());
                c.odd_value = q_from_string(e.at("odd").get<std::string>());
            } else {
                c.value = q_from_string(e.at("value").get<std::string>());
                c.even_value = c.value;
                c.odd_value = c.value;
            }
            r.lower.push_back(c);
        }
    }
    r.fluctuation = j.at("fluctuation").get<bool>();
    r.constant_observed = eoi_from_json(j.at("constant_observed"));
    r.assumptions = j.at("assumptions").get<std::vector<std::string>>();
    return r;
}

}  // namespace isogrowth
