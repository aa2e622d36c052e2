#pragma once

#include <compare>
#include <numeric>
#include <sstream>
#include <string>

#include "taftcat/cyclotomic_field.hpp"

namespace taftcat {

enum class Direction { D0, D1 };

inline Direction other(Direction d) { return d == Direction::D0 ? Direction::D1 : Direction::D0; }

struct Degree {
    long a = 0;
    long b = 0;
    auto operator<=>(const Degree&) const = default;

    friend Degree operator+(Degree x, Degree y) { return {x.a + y.a, x.b + y.b}; }
    friend Degree operator-(Degree x, Degree y) { return {x.a - y.a, x.b - y.b}; }
    Degree operator-() const { return {-a, -b}; }

    std::string to_string() const {
        std::ostringstream out;
        out << "(" << a << "," << b << ")";
        return out.str();
    }
};

enum class SchemeKind { Z2, CyclicNM };

/**
 * Bigrading scheme for modules over the tensor square of Taft algebras.
 *
 * Z2 is the homologically bigraded setting: degrees live in Z x Z. CyclicNM
 * is the merely cyclically graded setting: degrees live in Z/n x Z/m and are
 * stored normalized to [0,n) x [0,m).
 *
 * In both schemes the differentials raise the degree by one step in their
 * own coordinate: d0 maps degree g to g + (1,0) and d1 maps g to g + (0,1)
 * (taken mod n, m in the cyclic case). With this labelling the component at
 * degree (a, b) carries the k-eigenvalues q0^{-a} and q1^{-b}, where
 * q0 = t^m and q1 = t^n are the fixed primitive n-th and m-th roots of unity
 * inside Q[t]/(Phi_nm). Cyclic degree labels are thus the negatives of the
 * eigenvalue exponents, which matches the homological labels of the graded
 * setting degree-for-degree.
 */
struct GradingScheme {
    SchemeKind kind = SchemeKind::Z2;
    long n = 1;
    long m = 1;

    static GradingScheme z2(long n, long m) { return checked({SchemeKind::Z2, n, m}); }
    static GradingScheme cyclic(long n, long m) { return checked({SchemeKind::CyclicNM, n, m}); }

    bool operator==(const GradingScheme&) const = default;

    long nm() const { return n * m; }

    Degree normalize(Degree g) const {
        if (kind == SchemeKind::Z2)
            return g;
        return {mod_nonneg(g.a, n), mod_nonneg(g.b, m)};
    }

    Degree e(Direction d) const { return d == Direction::D0 ? Degree{1, 0} : Degree{0, 1}; }

    Degree step(Degree g, Direction d) const { return normalize(g + e(d)); }

    // Nilpotence order of the differential in the given direction.
    long chain_bound(Direction d) const { return d == Direction::D0 ? n : m; }

    CyclotomicScalar one() const { return CyclotomicScalar::one(nm()); }
    CyclotomicScalar scalar(long v) const { return CyclotomicScalar(nm(), v); }

    // k-eigenvalue of the component at degree g, for the Hopf generator of
    // the factor acting in direction d.
    CyclotomicScalar twist(Direction d, Degree g) const {
        long exponent = (d == Direction::D0) ? mod_nonneg(-g.a * m, nm())
                                             : mod_nonneg(-g.b * n, nm());
        return CyclotomicScalar::root_of_unity(nm(), exponent);
    }

    std::string to_string() const {
        std::ostringstream out;
        out << (kind == SchemeKind::Z2 ? "Z2" : "cyclic") << " n=" << n << " m=" << m;
        return out.str();
    }

private:
    static GradingScheme checked(GradingScheme s) {
        if (s.n < 1 || s.m < 1)
            throw std::domain_error("GradingScheme: n and m must be positive");
        if (std::gcd(s.n, s.m) != 1)
            throw std::domain_error("GradingScheme: n and m must be coprime");
        return s;
    }
};

}  // namespace taftcat
