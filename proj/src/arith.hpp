#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace isogrowth {

using Z = mpz_class;
using Q = mpq_class;

class arith_error : public std::runtime_error {
  public:
    explicit arith_error(const std::string& what) : std::runtime_error(what) {}
};

// nonnegative representative of a mod m (m > 0)
Z zmod(const Z& a, const Z& m);

// p-adic valuation; throws on 0
long ord_p(const Z& n, const Z& p);
long ord_p(const Q& r, const Z& p);

Z pow_z(const Z& base, unsigned long e);
Z pow_mod(const Z& b, const Z& e, const Z& m);
Z inv_mod(const Z& a, const Z& m);
int legendre(const Z& a, const Z& p);  // p an odd prime

bool is_prime(const Z& n);
// prime factorization of |n|, n != 0
std::map<Z, long> factor(const Z& n);
// positive divisors of |n|, n != 0 (unsorted)
std::vector<Z> divisors(const Z& n);

// multiplicative order of q mod m, gcd(q,m)=1
Z mul_order(const Z& q, const Z& m);

// "n/d" or plain integer string -> exact rational (canonicalized)
Q q_from_string(const std::string& s);
std::string q_to_string(const Q& r);

inline Z q_num(const Q& r) { return Z(r.get_num()); }
inline Z q_den(const Q& r) { return Z(r.get_den()); }

}  // namespace isogrowth
