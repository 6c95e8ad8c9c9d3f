#include "arith.hpp"

#include <algorithm>

namespace isogrowth {

Z zmod(const Z& a, const Z& m) {
    Z r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

long ord_p(const Z& n, const Z& p) {
    if (n == 0)
        throw arith_error("valuation of zero");
    Z rem;
    return static_cast<long>(
        mpz_remove(rem.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long ord_p(const Q& r, const Z& p) {
    return ord_p(q_num(r), p) - ord_p(q_den(r), p);
}

Z pow_z(const Z& base, unsigned long e) {
    Z r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Z pow_mod(const Z& b, const Z& e, const Z& m) {
    Z r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

Z inv_mod(const Z& a, const Z& m) {
    Z r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw arith_error("not invertible mod " + m.get_str());
    return r;
}

int legendre(const Z& a, const Z& p) {
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

bool is_prime(const Z& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

Z pollard_rho(const Z& n) {
    // Brent's variant; n odd composite, not a prime power of a found factor yet
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xD1CEul);
    while (true) {
        Z c = rng.get_z_range(n - 3) + 1;
        Z x = rng.get_z_range(n - 2) + 1;
        Z y = x, d = 1, q = 1, ys = y;
        unsigned long r = 1;
        const unsigned long batch = 128;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; i++) y = zmod(y * y + c, n);
            unsigned long k = 0;
            while (k < r && d == 1) {
                ys = y;
                unsigned long lim = std::min(batch, r - k);
                for (unsigned long i = 0; i < lim; i++) {
                    y = zmod(y * y + c, n);
                    q = zmod(q * (x > y ? x - y : y - x), n);
                }
                d = gcd(q, n);
                k += lim;
            }
            r *= 2;
        }
        if (d == n) {
            d = 1;
            while (d == 1) {
                ys = zmod(ys * ys + c, n);
                d = gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (d != n)
            return d;
    }
}

void factor_into(Z n, std::map<Z, long>& out) {
    if (n == 1)
        return;
    if (is_prime(n)) {
        out[n]++;
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Z r = sqrt(n);
        factor_into(r, out);
        factor_into(r, out);
        return;
    }
    Z d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::map<Z, long> factor(const Z& n) {
    if (n == 0)
        throw arith_error("factor(0)");
    Z m = abs(n);
    std::map<Z, long> out;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (m % p == 0) {
            out[Z(p)]++;
            m /= p;
        }
    }
    for (Z p = 17; p * p <= m && p < 100000; p += 2) {
        while (m % p == 0) {
            out[p]++;
            m /= p;
        }
    }
    if (m > 1)
        factor_into(m, out);
    return out;
}

std::vector<Z> divisors(const Z& n) {
    auto fac = factor(n);
    std::vector<Z> out{1};
    for (auto& [p, e] : fac) {
        size_t sz = out.size();
        Z pk = 1;
        for (long i = 1; i <= e; i++) {
            pk *= p;
            for (size_t j = 0; j < sz; j++) out.push_back(out[j] * pk);
        }
    }
    return out;
}

Z mul_order(const Z& q, const Z& m) {
    if (gcd(q, m) != 1)
        throw arith_error("mul_order: arguments not coprime");
    // order divides lambda(m); walk down from the group exponent
    Z lam = 1;
    for (auto& [p, e] : factor(m)) {
        Z comp;
        if (p == 2)
            comp = e <= 2 ? Z(1) << (e - 1) : Z(1) << (e - 2);
        else
            comp = (p - 1) * pow_z(p, static_cast<unsigned long>(e - 1));
        Z g = gcd(lam, comp);
        lam = lam / g * comp;
    }
    if (pow_mod(q, lam, m) != 1)
        throw arith_error("mul_order: exponent bound failed");
    Z ord = lam;
    for (auto& [p, e] : factor(lam)) {
        for (long i = 0; i < e; i++) {
            Z cand = ord / p;
            if (pow_mod(q, cand, m) == 1)
                ord = cand;
            else
                break;
        }
    }
    return ord;
}

Q q_from_string(const std::string& s) {
    std::string t = s;
    t.erase(std::remove_if(t.begin(), t.end(),
                           [](char c) { return c == ' ' || c == '\t'; }),
            t.end());
    if (t.empty())
        throw arith_error("empty rational literal");
    Q r;
    if (r.set_str(t, 10) != 0)
        throw arith_error("bad rational literal: " + s);
    if (q_den(r) == 0)
        throw arith_error("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string q_to_string(const Q& r) {
    if (q_den(r) == 1)
        return q_num(r).get_str();
    return q_num(r).get_str() + "/" + q_den(r).get_str();
}

}  // namespace isogrowth
