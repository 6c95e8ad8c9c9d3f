#include "isogrowth.h"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "assemble.hpp"
#include "conductor.hpp"
#include "curve_table.hpp"
#include "growth.hpp"
#include "isogeny.hpp"
#include "localred.hpp"
#include "periods.hpp"
#include "tower.hpp"

using json = nlohmann::ordered_json;
using namespace isogrowth;

struct isogrowth_curve {
    WeierstrassModel model;
};

struct isogrowth_pair {
    IsogenyDescriptor desc;
};

struct isogrowth_tower {
    TowerModel model;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

isogrowth_status fail_argument(const std::string& why) {
    g_last_error = why;
    return ISOGROWTH_ERR_ARGUMENT;
}

isogrowth_status set_out(char** out, const std::string& s) {
    *out = dup_string(s);
    if (*out == nullptr) {
        g_last_error = "out of memory";
        return ISOGROWTH_ERR_INTERNAL;
    }
    return ISOGROWTH_OK;
}

template <typename F>
isogrowth_status guarded(F&& body) {
    try {
        return body();
    } catch (const arith_error& e) {
        g_last_error = e.what();
        return ISOGROWTH_ERR_DOMAIN;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return ISOGROWTH_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return ISOGROWTH_ERR_ARGUMENT;
    } catch (...) {
        g_last_error = "unrecognized failure";
        return ISOGROWTH_ERR_INTERNAL;
    }
}

Z z_from(const char* s, const char* what) {
    if (s == nullptr) throw std::invalid_argument(std::string(what) + " is null");
    try {
        return Z(s);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument(std::string(what) + " is not an integer: " +
                                    s);
    }
}

json interval_json(const ExactOrInterval& v) {
    json j;
    j["exact"] = v.exact;
    if (v.exact) {
        j["value"] = q_to_string(v.center);
    } else {
        j["center"] = q_to_string(v.center);
        j["halfwidth"] = q_to_string(v.halfwidth);
    }
    if (!v.notes.empty()) j["notes"] = v.notes;
    return j;
}

}  // namespace

extern "C" {

const char* isogrowth_last_error(void) { return g_last_error.c_str(); }

void isogrowth_free(char* s) { std::free(s); }

isogrowth_status isogrowth_curve_new(const char* a1, const char* a2,
                                     const char* a3, const char* a4,
                                     const char* a6, isogrowth_curve** out) {
    if (out == nullptr) return fail_argument("output pointer is null");
    *out = nullptr;
    return guarded([&]() {
        for (const char* s : {a1, a2, a3, a4, a6})
            if (s == nullptr) return fail_argument("coefficient is null");
        WeierstrassModel m = WeierstrassModel::from_strings(
            {std::string(a1), std::string(a2), std::string(a3), std::string(a4),
             std::string(a6)});
        *out = new isogrowth_curve{std::move(m)};
        return ISOGROWTH_OK;
    });
}

isogrowth_status isogrowth_curve_by_label(const char* label,
                                          isogrowth_curve** out) {
    if (out == nullptr) return fail_argument("output pointer is null");
    *out = nullptr;
    return guarded([&]() {
        if (label == nullptr) return fail_argument("label is null");
        *out = new isogrowth_curve{curve_by_label(label)};
        return ISOGROWTH_OK;
    });
}

void isogrowth_curve_release(isogrowth_curve* c) { delete c; }

isogrowth_status isogrowth_curve_invariant(const isogrowth_curve* c,
                                           const char* name, char** out) {
    if (out == nullptr) return fail_argument("output pointer is null");
    *out = nullptr;
    return guarded([&]() {
        if (c == nullptr) return fail_argument("curve handle is null");
        if (name == nullptr) return fail_argument("invariant name is null");
        WeierstrassModel Emin = minimal_model(c->model).first;
        std::string which(name);
        Q value;
        if (which == "c4") {
            value = Emin.c4;
        } else if (which == "c6") {
            value = Emin.c6;
        } else if (which == "disc") {
            value = Emin.disc;
        } else if (which == "j") {
            value = Emin.j;
        } else if (which == "conductor") {
            value = Q(conductor(Emin));
        } else if (which == "torsion") {
            value = Q(torsion_order(Emin));
        } else {
            return fail_argument("unknown invariant: " + which);
        }
        return set_out(out, q_to_string(value));
    });
}

isogrowth_status isogrowth_local_data(const isogrowth_curve* c, const char* p,
                                      char** out) {
    if (out == nullptr) return fail_argument("output pointer is null");
    *out = nullptr;
    return guarded([&]() {
        if (c == nullptr) return fail_argument("curve handle is null");
        Z prime = z_from(p, "prime");
        WeierstrassModel Emin = minimal_model(c->model).first;
        LocalReductionData d = tate_local_data(Emin, prime);
        json j;
        j["p"] = prime.get_str();
        j["kodaira"] = kodaira_string(d.type, d.type_n);
        j["delta"] = d.delta;
        j["m"] = d.m;
        j["c"] = d.c;
        j["f"] = d.f;
        j["reduction"] = reduction_string(d.reduction);
        j["potential"] = potential_string(d.potential);
        j["tame"] = d.tame;
        j["eth"] = d.eth;
        j["split"] = d.split;
        return set_out(out, j.dump(2));
    });
}

isogrowth_status isogrowth_periods(const isogrowth_curve* c, long digits,
                                   char** out) {
    if (out == nullptr) return fail_argument("output pointer is null");
    *out = nullptr;
    return guarded([&]() {
        if (c == nullptr) return fail_argument("curve handle is null");
        if (digits < 10) return fail_argument("precision below 10 digits");
        WeierstrassModel Emin = minimal_model(c->model).first;
        PeriodData pd = period_data(Emin, digits);
        json j;
        j["omega"] = to_decimal(pd.omega, digits);
        j["omega_star"] = to_decimal(pd.omega_star, digits);
        j["components"] = pd.components;
        j["digits"] = pd.digits;
        return set_out(out, j.dump(2));
    });
}

isogrowth_status isogrowth_pair_by_labels(const char* from, const char* to,
                                          isogrowth_pair** out) {
    if (out == nullptr) return fail_argument("output pointer is null");
    *out = nullptr;
    return guarded([&]() {
        if (from == nullptr || to == nullptr)
            return fail_argument("curve label is null");
        *out = new isogrowth_pair{descriptor_between(from, to)};
        return ISOGROWTH_OK;
    });
}

isogrowth_status isogrowth_pair_new(const isogrowth_curve* from,
                                    const isogrowth_curve* to,
                                    const char* degree, isogrowth_pair** out) {
    if (out == nullptr) return fail_argument("output pointer is null");
    *out = nullptr;
    return guarded([&]() {
        if (from == nullptr || to == nullptr)
            return fail_argument("curve handle is null");
        Z deg = z_from(degree, "degree");
        if (deg < 1) return fail_argument("degree must be positive");
        *out = new isogrowth_pair{
            IsogenyDescriptor{from->model, to->model, deg, {}}};
        return ISOGROWTH_OK;
    });
}

void isogrowth_pair_release(isogrowth_pair* pr) { delete pr; }

isogrowth_status isogrowth_pair_degree(const isogrowth_pair* pr, char** out) {
    if (out == nullptr) return fail_argument("output pointer is null");
    *out = nullptr;
    return guarded([&]() {
        if (pr == nullptr) return fail_argument("pair handle is null");
        return set_out(out, pr->desc.degree.get_str());
    });
}

isogrowth_status isogrowth_pair_validate(const isogrowth_pair* pr,
                                         long good_prime_bound, char** out) {
    if (out == nullptr) return fail_argument("output pointer is null");
    *out = nullptr;
    return guarded([&]() {
        if (pr == nullptr) return fail_argument("pair handle is null");
        ValidationReport rep = validate_isogeny(pr->desc, good_prime_bound);
        json j;
        j["ok"] = rep.ok;
        j["failures"] = rep.failures;
        return set_out(out, j.dump(2));
    });
}

isogrowth_status isogrowth_period_quotients(const isogrowth_pair* pr,
                                            const char* p, long digits,
                                            char** out) {
    if (out == nullptr) return fail_argument("output pointer is null");
    *out = nullptr;
    return guarded([&]() {
        if (pr == nullptr) return fail_argument("pair handle is null");
        Z prime = z_from(p, "prime");
        PeriodValuations pv = period_quotient_valuations(
            pr->desc.source, pr->desc.target, prime, digits);
        json j;
        j["omega_quotient"] = q_to_string(pv.omega_quotient);
        j["omega_star_quotient"] = q_to_string(pv.omega_star_quotient);
        j["omega_ord"] = pv.omega_ord;
        j["omega_star_ord"] = pv.omega_star_ord;
        return set_out(out, j.dump(2));
    });
}

isogrowth_status isogrowth_omega_phi(const isogrowth_pair* pr, const char* q,
                                     const char* e, char** out) {
    if (out == nullptr) return fail_argument("output pointer is null");
    *out = nullptr;
    return guarded([&]() {
        if (pr == nullptr) return fail_argument("pair handle is null");
        Z prime = z_from(q, "prime");
        Z ram = z_from(e, "ramification degree");
        WeierstrassModel Emin = minimal_model(pr->desc.source).first;
        WeierstrassModel Epmin = minimal_model(pr->desc.target).first;
        LocalReductionData dE = tate_local_data(Emin, prime);
        LocalReductionData dEp = tate_local_data(Epmin, prime);
        bool ext_tame = zmod(ram, prime) != 0;
        ExactOrInterval v = omega_phi(dE, dEp, ram, ext_tame, prime);
        return set_out(out, interval_json(v).dump(2));
    });
}

isogrowth_status isogrowth_tower_by_name(const char* name,
                                         isogrowth_tower** out) {
    if (out == nullptr) return fail_argument("output pointer is null");
    *out = nullptr;
    return guarded([&]() {
        if (name == nullptr) return fail_argument("tower name is null");
        *out = new isogrowth_tower{tower_by_name(name)};
        return ISOGROWTH_OK;
    });
}

isogrowth_status isogrowth_tower_from_json(const char* text,
                                           isogrowth_tower** out) {
    if (out == nullptr) return fail_argument("output pointer is null");
    *out = nullptr;
    return guarded([&]() {
        if (text == nullptr) return fail_argument("tower description is null");
        *out = new isogrowth_tower{tower_from_json(text)};
        return ISOGROWTH_OK;
    });
}

void isogrowth_tower_release(isogrowth_tower* t) { delete t; }

isogrowth_status isogrowth_tower_to_json(const isogrowth_tower* t,
                                         char** out) {
    if (out == nullptr) return fail_argument("output pointer is null");
    *out = nullptr;
    return guarded([&]() {
        if (t == nullptr) return fail_argument("tower handle is null");
        return set_out(out, tower_to_json(t->model));
    });
}

isogrowth_status isogrowth_tower_place(const isogrowth_tower* t,
                                       const char* place, long layer,
                                       char** out) {
    if (out == nullptr) return fail_argument("output pointer is null");
    *out = nullptr;
    return guarded([&]() {
        if (t == nullptr) return fail_argument("tower handle is null");
        if (place == nullptr) return fail_argument("place is null");
        std::vector<PlaceGroup> groups =
            tower_local_data(t->model, place, layer);
        json arr = json::array();
        for (const PlaceGroup& g : groups) {
            json j;
            j["e"] = g.e.get_str();
            j["f"] = g.f.get_str();
            j["count"] = g.count.get_str();
            arr.push_back(j);
        }
        return set_out(out, arr.dump(2));
    });
}

isogrowth_status isogrowth_growth_report(const isogrowth_pair* pr,
                                         const isogrowth_tower* t,
                                         const char* p, long n_lo, long n_hi,
                                         long rk_p, int torsion_exact,
                                         long digits, char** out) {
    if (out == nullptr) return fail_argument("output pointer is null");
    *out = nullptr;
    return guarded([&]() {
        if (pr == nullptr) return fail_argument("pair handle is null");
        if (t == nullptr) return fail_argument("tower handle is null");
        if (rk_p < 0) return fail_argument("corank bound must be nonnegative");
        Z prime = z_from(p, "prime");
        ReportOptions opt;
        opt.rk_p = rk_p;
        opt.torsion_exact = torsion_exact != 0;
        opt.digits = digits;
        GrowthReport r =
            build_growth_report(pr->desc, t->model, prime, n_lo, n_hi, opt);
        return set_out(out, report_to_json(r));
    });
}

isogrowth_status isogrowth_report_roundtrip(const char* report_json,
                                            char** out) {
    if (out == nullptr) return fail_argument("output pointer is null");
    *out = nullptr;
    return guarded([&]() {
        if (report_json == nullptr) return fail_argument("report is null");
        GrowthReport r = report_from_json(report_json);
        return set_out(out, report_to_json(r));
    });
}

isogrowth_status isogrowth_conductor_ceiling(const char* l, long v_l,
                                             const char* e_stable,
                                             char** out) {
    if (out == nullptr) return fail_argument("output pointer is null");
    *out = nullptr;
    return guarded([&]() {
        Z ell = z_from(l, "residue characteristic");
        Z e = z_from(e_stable, "stable ramification degree");
        Q bound = tower_conductor_ceiling(ell, v_l, e);
        return set_out(out, q_to_string(bound));
    });
}

}  // extern "C"
