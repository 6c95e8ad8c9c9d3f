#include "localred.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace isogrowth {

std::string kodaira_string(KodairaType t, long n) {
    switch (t) {
        case KodairaType::I0: return "I0";
        case KodairaType::In: return "I" + std::to_string(n);
        case KodairaType::II: return "II";
        case KodairaType::III: return "III";
        case KodairaType::IV: return "IV";
        case KodairaType::I0star: return "I0*";
        case KodairaType::Instar: return "I" + std::to_string(n) + "*";
        case KodairaType::IVstar: return "IV*";
        case KodairaType::IIIstar: return "III*";
        case KodairaType::IIstar: return "II*";
    }
    return "?";
}

std::string reduction_string(ReductionClass r) {
    switch (r) {
        case ReductionClass::good: return "good";
        case ReductionClass::split_multiplicative: return "split multiplicative";
        case ReductionClass::nonsplit_multiplicative:
            return "nonsplit multiplicative";
        case ReductionClass::additive: return "additive";
    }
    return "?";
}

std::string potential_string(PotentialClass p) {
    switch (p) {
        case PotentialClass::good_ordinary: return "good-ordinary";
        case PotentialClass::good_supersingular: return "good-supersingular";
        case PotentialClass::multiplicative: return "multiplicative";
    }
    return "?";
}

int eth_of_type(KodairaType t) {
    switch (t) {
        case KodairaType::I0: return 0;
        case KodairaType::II: return 2;
        case KodairaType::III: return 3;
        case KodairaType::IV: return 4;
        case KodairaType::I0star:
        case KodairaType::Instar: return 6;
        case KodairaType::IVstar: return 8;
        case KodairaType::IIIstar: return 9;
        case KodairaType::IIstar: return 10;
        case KodairaType::In: return -1;
    }
    return -1;
}

namespace {

struct IntModel {
    Z a1, a2, a3, a4, a6;

    IntModel shift(const Z& r, const Z& s, const Z& t) const {
        IntModel n;
        n.a1 = a1 + 2 * s;
        n.a2 = a2 - s * a1 + 3 * r - s * s;
        n.a3 = a3 + r * a1 + 2 * t;
        n.a4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r -
               2 * s * t;
        n.a6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t -
               r * t * a1;
        return n;
    }
};

bool quad_splits(const Z& A, const Z& B, const Z& C, const Z& p) {
    for (Z t = 0; t < p; t++)
        if ((A * t * t + B * t + C) % p == 0)
            return true;
    return false;
}

std::optional<Z> quad_root(const Z& A, const Z& B, const Z& C, const Z& p) {
    for (Z t = 0; t < p; t++)
        if ((A * t * t + B * t + C) % p == 0)
            return t;
    return std::nullopt;
}

// multiplicities of the F_p-roots of T^3 + A T^2 + B T + C
std::vector<std::pair<Z, int>> cubic_root_mults(const Z& A, const Z& B,
                                                const Z& C, const Z& p) {
    std::vector<std::pair<Z, int>> out;
    for (Z t = 0; t < p; t++) {
        std::vector<Z> co{1, zmod(A, p), zmod(B, p), zmod(C, p)};
        int m = 0;
        while (co.size() > 1) {
            std::vector<Z> q{co[0]};
            for (size_t i = 1; i + 1 < co.size(); i++)
                q.push_back(zmod(q.back() * t + co[i], p));
            Z rem = zmod(q.back() * t + co.back(), p);
            if (rem != 0)
                break;
            m++;
            co = q;
        }
        if (m)
            out.emplace_back(t, m);
    }
    return out;
}

std::pair<Z, Z> singular_point(const IntModel& a, const Z& p) {
    if (p == 2 || p == 3) {
        for (Z x0 = 0; x0 < p; x0++)
            for (Z y0 = 0; y0 < p; y0++) {
                Z F = y0 * y0 + a.a1 * x0 * y0 + a.a3 * y0 - x0 * x0 * x0 -
                      a.a2 * x0 * x0 - a.a4 * x0 - a.a6;
                Z Fx = a.a1 * y0 - 3 * x0 * x0 - 2 * a.a2 * x0 - a.a4;
                Z Fy = 2 * y0 + a.a1 * x0 + a.a3;
                if (F % p == 0 && Fx % p == 0 && Fy % p == 0)
                    return {x0, y0};
            }
    } else {
        // p odd: the node/cusp has 2 y0 = -(a1 x0 + a3)
        Z inv2 = inv_mod(2, p);
        for (Z x0 = 0; x0 < p; x0++) {
            Z y0 = zmod(-(a.a1 * x0 + a.a3) * inv2, p);
            Z F = y0 * y0 + a.a1 * x0 * y0 + a.a3 * y0 - x0 * x0 * x0 -
                  a.a2 * x0 * x0 - a.a4 * x0 - a.a6;
            Z Fx = a.a1 * y0 - 3 * x0 * x0 - 2 * a.a2 * x0 - a.a4;
            if (F % p == 0 && Fx % p == 0)
                return {x0, y0};
        }
    }
    throw arith_error("no singular point at " + p.get_str());
}

// reach p|a1,a2, p^2|a3,a4, p^3|a6 for a model past the type-IV test
IntModel normalize_deep(const IntModel& a0, const Z& p) {
    if (p == 2) {
        for (Z r = 0; r < 8; r++)
            for (Z s = 0; s < 4; s++)
                for (Z t = 0; t < 8; t++) {
                    IntModel c = a0.shift(r, s, t);
                    if (c.a1 % 2 == 0 && c.a2 % 2 == 0 && c.a3 % 4 == 0 &&
                        c.a4 % 4 == 0 && c.a6 % 8 == 0)
                        return c;
                }
        throw arith_error("deep normalization failed at 2");
    }
    Z p2 = p * p, p3 = p2 * p;
    Z inv2 = inv_mod(2, p3);
    IntModel a = a0.shift(0, zmod(-a0.a1 * inv2, p2), 0);
    a = a.shift(0, 0, zmod(-a.a3 * inv2, p2));
    for (Z r = 0; r < p; r++) {
        IntModel c = a.shift(r, 0, 0);
        if (c.a2 % p == 0 && c.a4 % p2 == 0 && c.a6 % p3 == 0) {
            if (c.a1 % p != 0 || c.a3 % p2 != 0)
                throw arith_error("deep normalization inconsistent");
            return c;
        }
    }
    throw arith_error("deep normalization failed at " + p.get_str());
}

struct TypeResult {
    KodairaType type;
    long type_n;
    long m;
    long c;
    bool split = false;
    bool multiplicative = false;
};

TypeResult tate_type(const WeierstrassModel& E, const Z& p, long n) {
    IntModel a{E.az(1), E.az(2), E.az(3), E.az(4), E.az(6)};
    auto [x0, y0] = singular_point(a, p);
    a = a.shift(x0, 0, y0);

    if (E.c4 != 0 && ord_p(q_num(E.c4), p) == 0) {
        // node: tangents from T^2 + a1 T - a2
        bool spl;
        if (p == 2)
            spl = a.a2 % 2 == 0;  // a1 odd here
        else
            spl = legendre(a.a1 * a.a1 + 4 * a.a2, p) == 1;
        long c = spl ? n : (n % 2 == 0 ? 2 : 1);
        return {KodairaType::In, n, n, c, spl, true};
    }

    Z p2 = p * p, p3 = p2 * p, p4 = p3 * p;
    if (a.a6 % p2 != 0)
        return {KodairaType::II, 0, 1, 1};
    Z b8 = a.a1 * a.a1 * a.a6 + 4 * a.a2 * a.a6 - a.a1 * a.a3 * a.a4 +
           a.a2 * a.a3 * a.a3 - a.a4 * a.a4;
    if (b8 % p3 != 0)
        return {KodairaType::III, 0, 2, 2};
    Z b6 = a.a3 * a.a3 + 4 * a.a6;
    if (b6 % p3 != 0) {
        long c = quad_splits(1, a.a3 / p, -(a.a6 / p2), p) ? 3 : 1;
        return {KodairaType::IV, 0, 3, c};
    }

    a = normalize_deep(a, p);
    Z A = zmod(a.a2 / p, p), B = zmod(a.a4 / p2, p), C = zmod(a.a6 / p3, p);
    auto mults = cubic_root_mults(A, B, C, p);
    int mx = 1;
    for (auto& [t, m] : mults) mx = std::max(mx, m);
    if (mx == 1)
        return {KodairaType::I0star, 0, 5, 1 + static_cast<long>(mults.size())};

    Z t0 = 0;
    for (auto& [t, m] : mults)
        if (m == mx)
            t0 = t;
    a = a.shift(p * t0, 0, 0);

    if (mx == 2) {
        Z a2u = zmod(a.a2 / p, p);
        for (long k = 1; k < n; k++) {
            Z pk1 = pow_z(p, static_cast<unsigned long>(k + 1));
            Z p2k2 = pk1 * pk1;
            // nu = 2k-1: Y^2 + a3,(k+1) Y - a6,(2k+2)
            Z P = zmod(a.a3 / pk1, p), Qc = a.a6 / p2k2;
            if ((P * P + 4 * Qc) % p != 0) {
                long nu = 2 * k - 1;
                long c = quad_splits(1, P, -Qc, p) ? 4 : 2;
                return {KodairaType::Instar, nu, 5 + nu, c};
            }
            a = a.shift(0, 0, pk1 * *quad_root(1, P, zmod(-Qc, p), p));
            // nu = 2k: a2,1 X^2 + a4,(k+2) X + a6,(2k+3)
            Z U = zmod(a.a4 / (pk1 * p), p), V = zmod(a.a6 / (p2k2 * p), p);
            if ((U * U - 4 * a2u * V) % p != 0) {
                long nu = 2 * k;
                long c = quad_splits(a2u, U, V, p) ? 4 : 2;
                return {KodairaType::Instar, nu, 5 + nu, c};
            }
            a = a.shift(pk1 * *quad_root(a2u, U, V, p), 0, 0);
        }
        throw arith_error("I_n* subprocedure did not terminate");
    }

    // triple root
    Z P = zmod(a.a3 / p2, p), Qc = a.a6 / p4;
    if ((P * P + 4 * Qc) % p != 0) {
        long c = quad_splits(1, P, -Qc, p) ? 3 : 1;
        return {KodairaType::IVstar, 0, 7, c};
    }
    a = a.shift(0, 0, p2 * *quad_root(1, P, zmod(-Qc, p), p));
    if (a.a4 % p4 != 0)
        return {KodairaType::IIIstar, 0, 8, 2};
    if (a.a6 % (p4 * p2) != 0)
        return {KodairaType::IIstar, 0, 9, 1};
    throw arith_error("model not minimal at " + p.get_str());
}

// Hasse invariant: coefficient of x^(p-1) in (x^3+Ax+B)^((p-1)/2) mod p
bool hasse_vanishes(long A, long B, long p) {
    long k = (p - 1) / 2;
    std::vector<long> acc{1};
    std::vector<long> base{zmod(B, p).get_si(), zmod(A, p).get_si(), 0, 1};
    auto mul = [p](const std::vector<long>& f, const std::vector<long>& g) {
        std::vector<long> h(f.size() + g.size() - 1, 0);
        for (size_t i = 0; i < f.size(); i++) {
            if (!f[i])
                continue;
            for (size_t j = 0; j < g.size(); j++)
                h[i + j] = (h[i + j] + f[i] * g[j]) % p;
        }
        return h;
    };
    while (k) {
        if (k & 1)
            acc = mul(acc, base);
        k >>= 1;
        if (k)
            base = mul(base, base);
    }
    return acc.size() <= static_cast<size_t>(p - 1) || acc[p - 1] % p == 0;
}

bool is_supersingular(const Q& j, const Z& p) {
    Z jb = zmod(q_num(j) * inv_mod(q_den(j), p), p);
    if (p == 2 || p == 3)
        return jb == 0;
    long A, B, pl = p.get_si();
    if (jb == 0) {
        A = 0;
        B = 1;
    } else if (zmod(jb - 1728, p) == 0) {
        A = 1;
        B = 0;
    } else {
        Z k = zmod(jb * inv_mod(zmod(1728 - jb, p), p), p);
        A = zmod(3 * k, p).get_si();
        B = zmod(2 * k, p).get_si();
    }
    return hasse_vanishes(A, B, pl);
}

}  // namespace

PotentialClass classify_potential(const WeierstrassModel& E, const Z& p) {
    if (E.j != 0 && ord_p(E.j, p) < 0)
        return PotentialClass::multiplicative;
    return is_supersingular(E.j, p) ? PotentialClass::good_supersingular
                                    : PotentialClass::good_ordinary;
}

LocalReductionData tate_local_data(const WeierstrassModel& Emin, const Z& p) {
    if (!Emin.integral())
        throw arith_error("tate_local_data wants an integral model");
    if (!is_prime(p))
        throw arith_error("residue characteristic must be prime");
    LocalReductionData d;
    d.p = p;
    d.potential = classify_potential(Emin, p);
    Z disc = q_num(Emin.disc);
    d.delta = ord_p(disc, p);
    if (d.delta == 0) {
        d.type = KodairaType::I0;
        d.m = 1;
        d.c = 1;
        d.f = 0;
        d.reduction = ReductionClass::good;
        d.tame = true;
        d.eth = 0;
        return d;
    }
    TypeResult t = tate_type(Emin, p, d.delta);
    d.type = t.type;
    d.type_n = t.type_n;
    d.m = t.m;
    d.c = t.c;
    d.split = t.split;
    if (t.multiplicative) {
        d.reduction = t.split ? ReductionClass::split_multiplicative
                              : ReductionClass::nonsplit_multiplicative;
        d.f = 1;
    } else {
        d.reduction = ReductionClass::additive;
        d.f = d.delta - d.m + 1;
        if (p >= 5 && d.f != 2)
            throw arith_error("conductor bookkeeping failed at " + p.get_str());
        long fmax = p == 2 ? 8 : (p == 3 ? 5 : 2);
        if (d.f < 2 || d.f > fmax)
            throw arith_error("conductor exponent out of range at " +
                              p.get_str());
    }
    d.tame = d.reduction != ReductionClass::additive || d.f == 2;
    d.eth = d.potential == PotentialClass::multiplicative ? -1
                                                          : eth_of_type(d.type);
    if (d.f != d.delta - d.m + 1)
        throw arith_error("component count inconsistent at " + p.get_str());
    return d;
}

Z conductor(const WeierstrassModel& Emin) {
    Z N = 1;
    for (auto& [p, e] : factor(q_num(Emin.disc)))
        N *= pow_z(p, static_cast<unsigned long>(tate_local_data(Emin, p).f));
    return N;
}

long frobenius_trace(const WeierstrassModel& E, const Z& q) {
    Z a1 = zmod(E.az(1), q), a2 = zmod(E.az(2), q), a3 = zmod(E.az(3), q);
    Z a4 = zmod(E.az(4), q), a6 = zmod(E.az(6), q);
    Z cnt = 1;
    if (q == 2) {
        for (Z X = 0; X < 2; X++)
            for (Z Y = 0; Y < 2; Y++) {
                Z F = Y * Y + a1 * X * Y + a3 * Y - X * X * X - a2 * X * X -
                      a4 * X - a6;
                if (F % 2 == 0)
                    cnt++;
            }
    } else {
        for (Z X = 0; X < q; X++) {
            Z rhs = zmod(X * X * X + a2 * X * X + a4 * X + a6, q);
            Z b = zmod(a1 * X + a3, q);
            Z D = zmod(b * b + 4 * rhs, q);
            cnt += 1 + legendre(D, q);
        }
    }
    return Z(q + 1 - cnt).get_si();
}

namespace {

// exact group law on y^2 = x^3 + Ax + B over Q; nullopt = point at infinity
using PtQ = std::optional<std::pair<Q, Q>>;

PtQ short_add(const PtQ& P, const PtQ& R, const Z& A) {
    if (!P)
        return R;
    if (!R)
        return P;
    auto [x1, y1] = *P;
    auto [x2, y2] = *R;
    if (x1 == x2 && y1 + y2 == 0)
        return std::nullopt;
    Q lam;
    if (P == R)
        lam = (3 * x1 * x1 + Q(A)) / (2 * y1);
    else
        lam = (y2 - y1) / (x2 - x1);
    Q x3 = lam * lam - x1 - x2;
    return std::make_pair(x3, lam * (x1 - x3) - y1);
}

}  // namespace

long torsion_order(const WeierstrassModel& E) {
    // integral points of finite order on Y^2 = X^3 + AX + B,
    // A = -27 c4, B = -54 c6; Lutz-Nagell: y = 0 or y^2 | 4A^3 + 27B^2
    Z A = -27 * q_num(E.c4), B = -54 * q_num(E.c6);
    Z N = 4 * A * A * A + 27 * B * B;
    std::set<Z> ys{1};
    for (auto& [p, e] : factor(N)) {
        std::set<Z> next;
        for (const Z& y : ys) {
            Z pk = 1;
            for (long i = 0; i <= e / 2; i++) {
                next.insert(y * pk);
                pk *= p;
            }
        }
        ys = next;
    }
    ys.insert(0);
    std::set<std::pair<Z, Z>> pts;
    for (const Z& yv : ys) {
        Z C = B - yv * yv;
        std::set<Z> xs;
        if (C == 0) {
            xs.insert(0);
            if (A < 0 && mpz_perfect_square_p(Z(-A).get_mpz_t())) {
                Z r = sqrt(Z(-A));
                xs.insert(r);
                xs.insert(-r);
            }
        } else {
            for (const Z& dv : divisors(C))
                for (const Z& xv : {dv, Z(-dv)})
                    if (xv * xv * xv + A * xv + C == 0)
                        xs.insert(xv);
        }
        for (const Z& xv : xs)
            if (xv * xv * xv + A * xv + B == yv * yv) {
                pts.insert({xv, yv});
                pts.insert({xv, -yv});
            }
    }
    long group = 1;
    for (auto& [X, Y] : pts) {
        PtQ P = std::make_pair(Q(X), Q(Y));
        PtQ R = P;
        for (int k = 1; k <= 13; k++) {
            if (!R) {
                group++;
                break;
            }
            if (q_den(R->first) != 1 || q_den(R->second) != 1)
                break;  // non-integral multiple: infinite order
            R = short_add(R, P, A);
        }
    }
    return group;
}

Z torsion_p_part(const WeierstrassModel& E, const Z& p) {
    long n = torsion_order(E);
    Z out = 1;
    while (n % p == 0) {
        out *= p;
        n /= static_cast<long>(p.get_si());
    }
    return out;
}

}  // namespace isogrowth
