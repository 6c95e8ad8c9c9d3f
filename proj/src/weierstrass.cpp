#include "weierstrass.hpp"

namespace isogrowth {

WeierstrassModel::WeierstrassModel(const Q& A1, const Q& A2, const Q& A3,
                                   const Q& A4, const Q& A6)
    : a1(A1), a2(A2), a3(A3), a4(A4), a6(A6) {
    b2 = a1 * a1 + 4 * a2;
    b4 = 2 * a4 + a1 * a3;
    b6 = a3 * a3 + 4 * a6;
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    c4 = b2 * b2 - 24 * b4;
    c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
    disc = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
    if (disc == 0)
        throw arith_error("singular Weierstrass model");
    if (c4 * c4 * c4 - c6 * c6 != 1728 * disc)
        throw arith_error("invariant identity violated");
    j = c4 * c4 * c4 / disc;
}

WeierstrassModel WeierstrassModel::from_strings(
    const std::array<std::string, 5>& a) {
    return WeierstrassModel(q_from_string(a[0]), q_from_string(a[1]),
                            q_from_string(a[2]), q_from_string(a[3]),
                            q_from_string(a[4]));
}

bool WeierstrassModel::integral() const {
    for (const Q* c : {&a1, &a2, &a3, &a4, &a6})
        if (q_den(*c) != 1)
            return false;
    return true;
}

Z WeierstrassModel::az(int i) const {
    const Q* c = nullptr;
    switch (i) {
        case 1: c = &a1; break;
        case 2: c = &a2; break;
        case 3: c = &a3; break;
        case 4: c = &a4; break;
        case 6: c = &a6; break;
        default: throw arith_error("bad coefficient index");
    }
    if (q_den(*c) != 1)
        throw arith_error("non-integral coefficient");
    return q_num(*c);
}

WeierstrassModel WeierstrassModel::shift(const Z& r, const Z& s,
                                         const Z& t) const {
    Q A1 = a1 + 2 * s;
    Q A2 = a2 - s * a1 + 3 * r - s * s;
    Q A3 = a3 + r * a1 + 2 * t;
    Q A4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t;
    Q A6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
    return WeierstrassModel(A1, A2, A3, A4, A6);
}

WeierstrassModel WeierstrassModel::scale(const Q& u) const {
    Q u2 = u * u, u3 = u2 * u;
    return WeierstrassModel(a1 / u, a2 / u2, a3 / u3, a4 / (u2 * u2),
                            a6 / (u3 * u3));
}

bool WeierstrassModel::same_coefficients(const WeierstrassModel& o) const {
    return a1 == o.a1 && a2 == o.a2 && a3 == o.a3 && a4 == o.a4 && a6 == o.a6;
}

namespace {

bool kraus_admissible(const Z& c4, const Z& c6, const Z& p) {
    if (p == 3)
        return c6 == 0 || ord_p(c6, 3) != 2;
    if (p == 2) {
        if (zmod(c6, 4) == 3)
            return true;
        Z c6m = zmod(c6, 32);
        if ((c4 == 0 || ord_p(c4, 2) >= 4) && (c6m == 0 || c6m == 8))
            return true;
        return false;
    }
    return true;
}

}  // namespace

WeierstrassModel model_from_c4c6(const Z& c4, const Z& c6) {
    Z b2 = zmod(-c6, 12);
    if (b2 > 6)
        b2 -= 12;
    if ((b2 * b2 - c4) % 24 != 0)
        throw arith_error("invariants not realizable (b4)");
    Z b4 = (b2 * b2 - c4) / 24;
    Z num = -b2 * b2 * b2 + 36 * b2 * b4 - c6;
    if (num % 216 != 0)
        throw arith_error("invariants not realizable (b6)");
    Z b6 = num / 216;
    Z a1 = zmod(b2, 2);
    Z a2 = (b2 - a1) / 4;
    Z a3 = zmod(b6, 2);
    if ((b4 - a1 * a3) % 2 != 0 || (b6 - a3) % 4 != 0)
        throw arith_error("invariants not realizable (a4/a6)");
    Z a4 = (b4 - a1 * a3) / 2;
    Z a6 = (b6 - a3) / 4;
    WeierstrassModel E{Q(a1), Q(a2), Q(a3), Q(a4), Q(a6)};
    if (E.c4 != c4 || E.c6 != c6)
        throw arith_error("reduced model reconstruction failed");
    return E;
}

std::pair<WeierstrassModel, Q> minimal_model(const WeierstrassModel& E) {
    // clear denominators: smallest d with d^i a_i integral, scale by u = 1/d
    Z d = 1;
    const std::pair<int, const Q*> coeffs[] = {
        {1, &E.a1}, {2, &E.a2}, {3, &E.a3}, {4, &E.a4}, {6, &E.a6}};
    for (auto& [i, ai] : coeffs) {
        Z den = q_den(*ai);
        if (den == 1)
            continue;
        for (auto& [p, e] : factor(den)) {
            long need = (e + i - 1) / i;
            long have = ord_p(d, p);
            if (have < need)
                d *= pow_z(p, static_cast<unsigned long>(need - have));
        }
    }
    WeierstrassModel Ei = E.scale(Q(1, d));
    Z c4 = q_num(Ei.c4), c6 = q_num(Ei.c6), disc = q_num(Ei.disc);

    Z u = 1;
    for (auto& [p, e] : factor(disc)) {
        for (long k = e / 12; k > 0; k--) {
            if ((c4 != 0 && ord_p(c4, p) < 4 * k) ||
                (c6 != 0 && ord_p(c6, p) < 6 * k))
                continue;
            Z p4k = pow_z(p, static_cast<unsigned long>(4 * k));
            Z p6k = pow_z(p, static_cast<unsigned long>(6 * k));
            if (kraus_admissible(c4 / p4k, c6 / p6k, p)) {
                u *= pow_z(p, static_cast<unsigned long>(k));
                break;
            }
        }
    }
    WeierstrassModel Emin = model_from_c4c6(c4 / pow_z(u, 4), c6 / pow_z(u, 6));
    return {Emin, Q(u) / Q(d)};
}

}  // namespace isogrowth
