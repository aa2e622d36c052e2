#pragma once

#include <numeric>
#include <vector>

#include "taftcat/polynomial.hpp"

namespace taftcat {

// [n]_q = (q^n - 1)/(q - 1) = 1 + q + q^2 + ... + q^{n-1}.
inline IntPolynomial quantum_integer(long n) {
    if (n < 1)
        throw std::domain_error("quantum_integer: argument must be positive");
    std::vector<Integer> coeffs(static_cast<size_t>(n), Integer(1));
    return IntPolynomial::from_coefficients(std::move(coeffs));
}

inline IntPolynomial q_power_minus_one(long n) {
    return IntPolynomial::monomial(static_cast<int>(n)) - IntPolynomial(1);
}

/**
 * k-th cyclotomic polynomial, by recursive exact division:
 * Phi_k = (q^k - 1) / prod_{d|k, d<k} Phi_d, with Phi_1 = q - 1.
 */
inline IntPolynomial cyclotomic_polynomial(long k) {
    if (k < 1)
        throw std::domain_error("cyclotomic_polynomial: argument must be positive");
    if (k == 1)
        return q_power_minus_one(1);
    IntPolynomial denom(1);
    for (long d : divisors(k))
        if (d < k)
            denom = denom * cyclotomic_polynomial(d);
    return IntPolynomial::divide_exact(q_power_minus_one(k), denom);
}

// [nm]_q = [n]_q [m]_q Phi_nm(q) for distinct primes n, m.
inline bool check_product_identity(long n, long m) {
    if (!is_prime(n) || !is_prime(m) || n == m)
        throw std::domain_error("check_product_identity: arguments must be distinct primes");
    return quantum_integer(n * m) ==
           quantum_integer(n) * quantum_integer(m) * cyclotomic_polynomial(n * m);
}

// Smallest positive a with a*n = 1 + b*m; both a and b positive.
struct BezoutWitness {
    long a;
    long b;
};

inline BezoutWitness bezout_witness(long n, long m) {
    if (n < 1 || m < 1 || std::gcd(n, m) != 1)
        throw std::domain_error("bezout_witness: arguments must be coprime and positive");
    long a = mod_inverse(n, m);
    while (true) {
        long num = a * n - 1;
        if (num > 0 && num % m == 0)
            return {a, num / m};
        a += (m == 1 ? 1 : m);
    }
}

/**
 * The exact polynomial identity
 *   Phi_nm(q) = ([an]_q/[n]_q)([nm]_q/[m]_q) - q([bm]_q/[m]_q)([nm]_q/[n]_q)
 * with 1 = an - bm. Every quotient is an exact division of quantum integers;
 * an inexact division would be an internal error, not a property failure.
 */
inline bool check_bezout_identity(long n, long m) {
    if (!is_prime(n) || !is_prime(m) || n == m)
        throw std::domain_error("check_bezout_identity: arguments must be distinct primes");
    auto [a, b] = bezout_witness(n, m);
    IntPolynomial lhs = cyclotomic_polynomial(n * m);
    IntPolynomial an_over_n = IntPolynomial::divide_exact(quantum_integer(a * n), quantum_integer(n));
    IntPolynomial nm_over_m = IntPolynomial::divide_exact(quantum_integer(n * m), quantum_integer(m));
    IntPolynomial bm_over_m = IntPolynomial::divide_exact(quantum_integer(b * m), quantum_integer(m));
    IntPolynomial nm_over_n = IntPolynomial::divide_exact(quantum_integer(n * m), quantum_integer(n));
    IntPolynomial rhs = an_over_n * nm_over_m -
                        IntPolynomial::monomial(1) * bm_over_m * nm_over_n;
    return lhs == rhs;
}

/**
 * Exponents realizing the group isomorphism C_n x C_m = C_nm fixed by
 * q -> xy: alpha = 1 (mod n), 0 (mod m) and beta = 0 (mod n), 1 (mod m),
 * both in [0, nm). The inverse ring map is x -> q^alpha, y -> q^beta.
 */
struct CrtExponents {
    long alpha;
    long beta;
};

inline CrtExponents crt_exponents(long n, long m) {
    if (n < 1 || m < 1 || std::gcd(n, m) != 1)
        throw std::domain_error("crt_exponents: arguments must be coprime and positive");
    long alpha = (n == 1) ? 0 : mod_nonneg(m * mod_inverse(m, n), n * m);
    long beta = (m == 1) ? 0 : mod_nonneg(n * mod_inverse(n, m), n * m);
    return {alpha, beta};
}

namespace detail {

// Exponent vector of a polynomial in Z[q]/(q^N - 1): coefficient list indexed
// by exponent mod N.
inline std::vector<Integer> reduce_mod_qN_minus_one(const IntPolynomial& p, long N) {
    std::vector<Integer> out(static_cast<size_t>(N), Integer(0));
    const auto& cs = p.coefficients();
    for (size_t k = 0; k < cs.size(); ++k)
        out[static_cast<size_t>(mod_nonneg(static_cast<long>(k), N))] += cs[k];
    return out;
}

}  // namespace detail

/**
 * Checks that under x -> q^alpha, y -> q^beta the polynomial [n]_x maps to
 * [nm]_q/[m]_q and [m]_y to [nm]_q/[n]_q modulo q^{nm} - 1, and that the
 * substitutions q -> xy and (x, y) -> (q^alpha, q^beta) are mutually inverse
 * on all nm monomials of both group rings.
 */
inline bool check_crt_correspondence(long n, long m) {
    auto [alpha, beta] = crt_exponents(n, m);
    long N = n * m;

    // image of [n]_x: sum of q^{k*alpha mod N}
    std::vector<Integer> img_n(static_cast<size_t>(N), Integer(0));
    for (long k = 0; k < n; ++k)
        img_n[static_cast<size_t>(mod_nonneg(k * alpha, N))] += 1;
    auto expect_n = detail::reduce_mod_qN_minus_one(
        IntPolynomial::divide_exact(quantum_integer(N), quantum_integer(m)), N);
    if (img_n != expect_n)
        return false;

    std::vector<Integer> img_m(static_cast<size_t>(N), Integer(0));
    for (long k = 0; k < m; ++k)
        img_m[static_cast<size_t>(mod_nonneg(k * beta, N))] += 1;
    auto expect_m = detail::reduce_mod_qN_minus_one(
        IntPolynomial::divide_exact(quantum_integer(N), quantum_integer(n)), N);
    if (img_m != expect_m)
        return false;

    // round trip q^k -> x^{k mod n} y^{k mod m} -> q^{...}
    for (long k = 0; k < N; ++k) {
        long i = mod_nonneg(k, n), j = mod_nonneg(k, m);
        if (mod_nonneg(i * alpha + j * beta, N) != k)
            return false;
    }
    // round trip x^i y^j -> q^{i alpha + j beta} -> x^{... mod n} y^{... mod m}
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < m; ++j) {
            long k = mod_nonneg(i * alpha + j * beta, N);
            if (mod_nonneg(k, n) != i || mod_nonneg(k, m) != j)
                return false;
        }
    }
    return true;
}

}  // namespace taftcat
