#include "tower.hpp"

#include <json.hpp>

namespace isogrowth {

std::string tower_kind_string(TowerKind k) {
    switch (k) {
        case TowerKind::cyclotomic_q: return "cyclotomic-Q";
        case TowerKind::generic_zl: return "generic-Zl";
        case TowerKind::generic_lie: return "generic-Lie";
        case TowerKind::false_tate: return "false-Tate";
        case TowerKind::z5sq_qi: return "preset-Z5sq-Qi";
    }
    return "?";
}

namespace {

TowerKind kind_from_string(const std::string& s) {
    if (s == "cyclotomic-Q") return TowerKind::cyclotomic_q;
    if (s == "generic-Zl") return TowerKind::generic_zl;
    if (s == "generic-Lie") return TowerKind::generic_lie;
    if (s == "false-Tate") return TowerKind::false_tate;
    if (s == "preset-Z5sq-Qi") return TowerKind::z5sq_qi;
    throw arith_error("unknown tower kind: " + s);
}

Z parse_prime(const std::string& s) {
    Z q;
    if (q.set_str(s, 10) != 0 || !is_prime(q))
        throw arith_error("place label is not a rational prime: " + s);
    return q;
}

// exact rational power-law value C * l^(n*k); must come out integral
Z power_law(const Q& C, const Z& l, long n, int k) {
    Q v = C * Q(pow_z(l, static_cast<unsigned long>(n) *
                             static_cast<unsigned long>(k)));
    if (q_den(v) != 1)
        throw arith_error("tower power law is not integral at layer " +
                          std::to_string(n));
    return q_num(v);
}

// smallest f with zeta_{l^n} and an l^n-th root of m both in F_{q^f}
Z false_tate_residue_degree(const Z& l, const Z& m, const Z& q, long n) {
    Z ln = pow_z(l, static_cast<unsigned long>(n));
    for (Z f = mul_order(q, ln);; f *= l) {
        // m is an l^n-th power in F_{q^f} iff m^((q^f-1)/l^n) = 1; the
        // exponent reduces mod q-1 since m lives in F_q
        if (!f.fits_ulong_p())
            throw arith_error("false-Tate residue degree overflow");
        Z e = ((pow_z(q, f.get_ui()) - 1) / ln) % (q - 1);
        if (pow_mod(m, e, q) == 1)
            return f;
    }
}

const ZlPlaceClass* listed_place(const TowerModel& T, const std::string& v) {
    for (const ZlPlaceClass& c : T.places)
        if (c.place == v)
            return &c;
    return nullptr;
}

// per-class relative decomposition (e, f, g over K) at layer n
EFG class_efg(const TowerModel& T, const ZlPlaceClass& c, long n) {
    if (n < c.threshold) {
        if (static_cast<size_t>(n) >= c.table.size())
            throw arith_error("tower table too short at place " + c.place);
        return {c.table[n][0], c.table[n][1], c.table[n][2]};
    }
    return {power_law(c.C1, T.l, n, c.dimI),
            power_law(c.C2, T.l, n, c.dimD - c.dimI),
            power_law(c.C3, T.l, n, T.dim - c.dimD)};
}

std::vector<ZlPlaceClass> synthesize(const TowerModel& T, const Z& q) {
    std::vector<ZlPlaceClass> out;
    auto cls = [&](long copies, Z e_base, Z f_base, int dimD, int dimI) {
        ZlPlaceClass c;
        c.place = q.get_str();
        c.residue_char = q;
        c.copies = copies;
        c.e_base = e_base;
        c.f_base = f_base;
        c.dimD = dimD;
        c.dimI = dimI;
        out.push_back(c);
    };
    if (T.rule == "qi-split") {
        // base Q(i): 2 ramified, q=1 mod 4 split, q=3 mod 4 inert
        bool z5 = T.kind == TowerKind::z5sq_qi;
        int dD, dI;
        if (q == T.l) {  // the tower ramifies above l
            dD = z5 ? 2 : 1;
            dI = 1;
        } else if (z5) {  // Frobenius line in the plane
            dD = 1;
            dI = 0;
        } else if (zmod(q, 4) == 3) {
            // anticyclotomic: inert primes are totally split up the tower
            dD = 0;
            dI = 0;
        } else {
            dD = 1;
            dI = 0;
        }
        if (q == 2)
            cls(1, 2, 1, dD, dI);
        else if (zmod(q, 4) == 1)
            cls(2, 1, 1, dD, dI);
        else
            cls(1, 1, 2, dD, dI);
        return out;
    }
    throw arith_error("place " + q.get_str() +
                      " is not covered by the tower model");
}

}  // namespace

EFG cyclotomic_local_data(const Z& l, const Z& q, long n) {
    if (n < 0)
        throw arith_error("negative layer");
    Z ln = pow_z(l, static_cast<unsigned long>(n));
    if (n == 0)
        return {1, 1, 1};
    if (q == l)
        return {ln, 1, 1};
    Z M = pow_z(l, static_cast<unsigned long>(n) + 2);
    Z f;
    if (l == 2) {
        Z ord = mul_order(q, M);
        f = ord;
        if (ord % 2 == 0 && pow_mod(q, ord / 2, M) == M - 1)
            f = ord / 2;
    } else {
        Z step = l * (l - 1);
        f = mul_order(pow_mod(q, step, M), M);
    }
    if (ln % f != 0)
        throw arith_error("cyclotomic residue degree bookkeeping failed");
    return {1, f, ln / f};
}

Z layer_degree_over_base(const TowerModel& T, long n) {
    if (n < 0)
        throw arith_error("negative layer");
    unsigned long un = static_cast<unsigned long>(n);
    switch (T.kind) {
        case TowerKind::cyclotomic_q:
            return pow_z(T.l, un);
        case TowerKind::false_tate:
            return n == 0 ? Z(1) : (T.l - 1) * pow_z(T.l, 2 * un - 1);
        default:
            return pow_z(T.l, un * static_cast<unsigned long>(T.dim));
    }
}

LayerSignature layer_signature(const TowerModel& T, long n) {
    Z rel = layer_degree_over_base(T, n);
    LayerSignature s;
    s.degree_over_q = rel * T.base_degree;
    Z above_real = 0;  // complex places over each real place of K
    bool went_complex = T.real_complex_after >= 0 && n >= T.real_complex_after;
    if (went_complex && rel % 2 != 0)
        throw arith_error("odd-degree layer cannot lose a real place");
    if (went_complex)
        above_real = rel / 2;
    s.complex_places = T.base_complex * rel + T.base_real * above_real;
    s.real_places = went_complex ? Z(0) : T.base_real * rel;
    return s;
}

std::vector<PlaceGroup> tower_local_data(const TowerModel& T,
                                         const std::string& place, long n) {
    if (T.kind == TowerKind::cyclotomic_q) {
        EFG d = cyclotomic_local_data(T.l, parse_prime(place), n);
        return {{d.e, d.f, d.g}};
    }
    if (T.kind == TowerKind::false_tate) {
        Z q = parse_prime(place);
        Z deg = layer_degree_over_base(T, n);
        if (n == 0)
            return {{1, 1, 1}};
        if (q == T.l)
            return {{deg, 1, 1}};
        Z ln = pow_z(T.l, static_cast<unsigned long>(n));
        if (T.m % q == 0) {
            Z f = mul_order(q, ln);
            return {{ln, f, deg / (ln * f)}};
        }
        Z f = false_tate_residue_degree(T.l, T.m, q, n);
        return {{1, f, deg / f}};
    }

    std::vector<ZlPlaceClass> synth;
    const ZlPlaceClass* c = listed_place(T, place);
    std::vector<const ZlPlaceClass*> classes;
    if (c) {
        classes.push_back(c);
    } else {
        synth = synthesize(T, parse_prime(place));
        for (const ZlPlaceClass& s : synth) classes.push_back(&s);
    }
    std::vector<PlaceGroup> out;
    for (const ZlPlaceClass* cl : classes) {
        EFG rel = class_efg(T, *cl, n);
        out.push_back({cl->e_base * rel.e, cl->f_base * rel.f,
                       Z(cl->copies) * rel.g});
    }
    return out;
}

std::vector<ZlPlaceClass> classify_place(const TowerModel& T, const Z& q) {
    const ZlPlaceClass* c = listed_place(T, q.get_str());
    if (c)
        return {*c};
    return synthesize(T, q);
}

TowerModel tower_by_name(const std::string& name) {
    auto split = [](const std::string& s) {
        std::vector<std::string> parts;
        size_t pos = 0;
        while (pos <= s.size()) {
            size_t c = s.find(':', pos);
            if (c == std::string::npos) {
                parts.push_back(s.substr(pos));
                break;
            }
            parts.push_back(s.substr(pos, c - pos));
            pos = c + 1;
        }
        return parts;
    };
    std::vector<std::string> parts = split(name);
    TowerModel T;
    if (parts[0] == "cyclotomic" && parts.size() == 2) {
        T.kind = TowerKind::cyclotomic_q;
        T.l = parse_prime(parts[1]);
        return T;
    }
    if (parts[0] == "false-tate" && parts.size() == 3) {
        T.kind = TowerKind::false_tate;
        T.l = parse_prime(parts[1]);
        T.dim = 2;
        T.m.set_str(parts[2], 10);
        if (T.l < 3 || T.m < 2 || T.m % T.l == 0)
            throw arith_error("unsupported false-Tate parameters");
        for (auto& [q, e] : factor(T.m))
            if (e % T.l == 0)
                throw arith_error("radicand is an l-th power at " +
                                  q.get_str());
        T.real_complex_after = 1;
        return T;
    }
    if (parts[0] == "z5sq-qi" && parts.size() == 1) {
        T.kind = TowerKind::z5sq_qi;
        T.l = 5;
        T.dim = 2;
        T.base_degree = 2;
        T.base_real = 0;
        T.base_complex = 1;
        T.rule = "qi-split";
        return T;
    }
    if (parts[0] == "anticyclotomic-qi" && parts.size() <= 2) {
        T.kind = TowerKind::generic_zl;
        T.l = parts.size() == 2 ? parse_prime(parts[1]) : Z(5);
        T.dim = 1;
        T.base_degree = 2;
        T.base_real = 0;
        T.base_complex = 1;
        T.rule = "qi-split";
        return T;
    }
    throw arith_error("unknown tower preset: " + name);
}

TowerModel tower_from_json(const std::string& text) {
    using nlohmann::json;
    json j = json::parse(text);
    TowerModel T;
    T.kind = kind_from_string(j.at("kind").get<std::string>());
    if (j.contains("l"))
        T.l = Z(j.at("l").get<long>());
    if (j.contains("d"))
        T.dim = j.at("d").get<int>();
    else if (T.kind == TowerKind::false_tate || T.kind == TowerKind::z5sq_qi)
        T.dim = 2;
    if (j.contains("m"))
        T.m = Z(j.at("m").get<long>());
    if (j.contains("base")) {
        auto& b = j.at("base");
        T.base_degree = b.at("degree").get<long>();
        T.base_real = b.at("real_places").get<long>();
        T.base_complex = b.at("complex_places").get<long>();
    } else if (T.kind == TowerKind::z5sq_qi) {
        T.base_degree = 2;
        T.base_real = 0;
        T.base_complex = 1;
    }
    if (j.contains("real_complex_after"))
        T.real_complex_after = j.at("real_complex_after").get<long>();
    else if (T.kind == TowerKind::false_tate)
        T.real_complex_after = 1;
    if (j.contains("rule"))
        T.rule = j.at("rule").get<std::string>();
    else if (T.kind == TowerKind::z5sq_qi)
        T.rule = "qi-split";
    if (j.contains("places")) {
        for (auto& pj : j.at("places")) {
            ZlPlaceClass c;
            c.place = pj.at("place").get<std::string>();
            c.residue_char = Z(pj.at("residue_char").get<long>());
            if (pj.contains("copies"))
                c.copies = pj.at("copies").get<long>();
            if (pj.contains("e_base"))
                c.e_base = Z(pj.at("e_base").get<long>());
            if (pj.contains("f_base"))
                c.f_base = Z(pj.at("f_base").get<long>());
            c.dimD = pj.at("dimD").get<int>();
            c.dimI = pj.at("dimI").get<int>();
            if (pj.contains("C1"))
                c.C1 = q_from_string(pj.at("C1").get<std::string>());
            if (pj.contains("C2"))
                c.C2 = q_from_string(pj.at("C2").get<std::string>());
            if (pj.contains("C3"))
                c.C3 = q_from_string(pj.at("C3").get<std::string>());
            if (pj.contains("threshold"))
                c.threshold = pj.at("threshold").get<long>();
            if (pj.contains("table"))
                for (auto& row : pj.at("table"))
                    c.table.push_back({Z(row.at(0).get<long>()),
                                       Z(row.at(1).get<long>()),
                                       Z(row.at(2).get<long>())});
            if (c.dimI > c.dimD || c.dimD > T.dim)
                throw arith_error("inconsistent decomposition dimensions at " +
                                  c.place);
            if (c.C1 * c.C2 * c.C3 != 1)
                throw arith_error("power-law constants do not preserve the "
                                  "layer degree at " + c.place);
            T.places.push_back(c);
        }
    }
    return T;
}

std::string tower_to_json(const TowerModel& T) {
    using nlohmann::json;
    json j;
    j["kind"] = tower_kind_string(T.kind);
    j["l"] = T.l.get_si();
    j["d"] = T.dim;
    if (T.m != 0)
        j["m"] = T.m.get_si();
    j["base"] = {{"degree", T.base_degree},
                 {"real_places", T.base_real},
                 {"complex_places", T.base_complex}};
    if (T.real_complex_after >= 0)
        j["real_complex_after"] = T.real_complex_after;
    if (!T.rule.empty())
        j["rule"] = T.rule;
    if (!T.places.empty()) {
        json arr = json::array();
        for (const ZlPlaceClass& c : T.places) {
            json pj;
            pj["place"] = c.place;
            pj["residue_char"] = c.residue_char.get_si();
            pj["copies"] = c.copies;
            pj["e_base"] = c.e_base.get_si();
            pj["f_base"] = c.f_base.get_si();
            pj["dimD"] = c.dimD;
            pj["dimI"] = c.dimI;
            pj["C1"] = q_to_string(c.C1);
            pj["C2"] = q_to_string(c.C2);
            pj["C3"] = q_to_string(c.C3);
            pj["threshold"] = c.threshold;
            json rows = json::array();
            for (auto& row : c.table)
                rows.push_back({row[0].get_si(), row[1].get_si(),
                                row[2].get_si()});
            pj["table"] = rows;
            arr.push_back(pj);
        }
        j["places"] = arr;
    }
    return j.dump(2);
}

}  // namespace isogrowth
