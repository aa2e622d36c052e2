#pragma once

#include <gmpxx.h>

#include <numeric>
#include <stdexcept>
#include <vector>

namespace taftcat {

// Arbitrary-precision signed integers and rationals. Rationals produced by
// make_rational and by arithmetic are always in lowest terms with a positive
// denominator.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw std::domain_error("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline bool is_prime(long n) {
    if (n < 2)
        return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

inline long euler_phi(long n) {
    if (n < 1)
        throw std::domain_error("euler_phi: argument must be positive");
    long phi = n;
    long rest = n;
    for (long p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            phi -= phi / p;
            while (rest % p == 0)
                rest /= p;
        }
    }
    if (rest > 1)
        phi -= phi / rest;
    return phi;
}

// Proper divisors first, n itself last; ascending.
inline std::vector<long> divisors(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d)
                large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it)
        small.push_back(*it);
    return small;
}

inline long mod_nonneg(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

// Smallest nonnegative x with a*x = 1 (mod m); requires gcd(a, m) = 1.
inline long mod_inverse(long a, long m) {
    if (m < 1)
        throw std::domain_error("mod_inverse: modulus must be positive");
    if (m == 1)
        return 0;
    long r0 = m, r1 = mod_nonneg(a, m);
    long s0 = 0, s1 = 1;
    while (r1 != 0) {
        long q = r0 / r1;
        long r2 = r0 - q * r1;
        long s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1)
        throw std::domain_error("mod_inverse: arguments are not coprime");
    return mod_nonneg(s0, m);
}

}  // namespace taftcat
