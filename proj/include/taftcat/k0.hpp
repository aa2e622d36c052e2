#pragma once

#include "taftcat/laurent.hpp"
#include "taftcat/module.hpp"
#include "taftcat/subquotient.hpp"

namespace taftcat {

/**
 * Grothendieck class in Z[x, x^{-1}, y, y^{-1}]/([n]_x [m]_y), carried by a
 * Laurent representative. Equality is decided by clearing units from the
 * difference and testing monic divisibility by [n]_x and by [m]_y
 * separately, which is equivalent to divisibility by the product since the
 * two involve disjoint variables.
 */
class K0Class {
public:
    K0Class(long n, long m, LaurentPolynomial2 rep) : n_(n), m_(m), rep_(std::move(rep)) {
        if (n < 2 || m < 2)
            throw std::domain_error("K0Class: n and m must be at least 2");
    }

    long n() const { return n_; }
    long m() const { return m_; }
    const LaurentPolynomial2& rep() const { return rep_; }

    friend K0Class operator+(const K0Class& a, const K0Class& b) {
        a.require_same_ring(b);
        return K0Class(a.n_, a.m_, a.rep_ + b.rep_);
    }
    friend K0Class operator-(const K0Class& a, const K0Class& b) {
        a.require_same_ring(b);
        return K0Class(a.n_, a.m_, a.rep_ - b.rep_);
    }
    friend K0Class operator*(const K0Class& a, const K0Class& b) {
        a.require_same_ring(b);
        return K0Class(a.n_, a.m_, a.rep_ * b.rep_);
    }

    bool is_zero() const {
        if (rep_.is_zero())
            return true;
        LaurentPolynomial2 p = rep_.units_cleared();
        return divrem_by_quantum_x(p, n_).remainder.is_zero() &&
               divrem_by_quantum_y(p, m_).remainder.is_zero();
    }

    friend bool operator==(const K0Class& a, const K0Class& b) {
        a.require_same_ring(b);
        return (a - b).is_zero();
    }
    friend bool operator!=(const K0Class& a, const K0Class& b) { return !(a == b); }

    std::string to_string() const { return rep_.to_string(); }

private:
    void require_same_ring(const K0Class& other) const {
        if (n_ != other.n_ || m_ != other.m_)
            throw std::domain_error("K0Class: mixing distinct Grothendieck rings");
    }

    long n_, m_;
    LaurentPolynomial2 rep_;
};

// Class of a homologically bigraded module: the dimension generating
// function sum dims(a,b) x^a y^b. Cyclic grading carries no Laurent class
// and is rejected.
inline K0Class class_of(const GradedModule& X) {
    if (X.scheme().kind != SchemeKind::Z2)
        throw std::domain_error("class_of: cyclic grading has no Z x Z graded class");
    LaurentPolynomial2 rep;
    for (const auto& [g, d] : X.dims())
        rep.add_term(g.a, g.b, Integer(d));
    return K0Class(X.scheme().n, X.scheme().m, std::move(rep));
}

// [X] - [Y] + [Z] = 0 for a short exact sequence triangle.
inline bool class_additivity_check(const Triangle& t) {
    return (class_of(t.x) - class_of(t.y) + class_of(t.z)).is_zero();
}

// [X (x) Y] = [X][Y].
inline bool class_multiplicativity_check(const GradedModule& X, const GradedModule& Y) {
    return class_of(tensor(X, Y)) == class_of(X) * class_of(Y);
}

/**
 * Image of a class down the quotient chain: first the normal form in
 * Z[x,y]/([n]_x, [m]_y), then the push along x -> q^alpha, y -> q^beta into
 * Z[q]/(Phi_nm).
 */
struct QuotientImage {
    QuotientXY xy;
    CycloInteger cyclo;
};

inline QuotientImage quotient_class(const K0Class& c) {
    QuotientXY xy(c.n(), c.m(), c.rep());
    CycloInteger q = to_cyclotomic_integer(xy);
    return {xy, q};
}

/**
 * Executable facts about K0 of the one-factor stable category, which is
 * Z[x]/([n]_x): x has the two-sided inverse x^{n-1} because
 * (x - 1)[n]_x = x^n - 1, and the class [n]_x of the rank-one free module
 * is zero. nf_x records the normal form of x itself (for n = 2 this is -1,
 * the classical sign of the shift).
 */
struct SingleAlgebraFacts {
    long n;
    bool x_two_sided_inverse;
    bool free_class_zero;
    IntPolynomial nf_x;
};

inline SingleAlgebraFacts single_algebra_facts(long n) {
    if (n < 2)
        throw std::domain_error("single_algebra_facts: n must be at least 2");
    IntPolynomial qn = quantum_integer(n);
    auto nf = [&](const IntPolynomial& p) { return IntPolynomial::divrem(p, qn).second; };
    IntPolynomial x = IntPolynomial::monomial(1);
    IntPolynomial xinv = IntPolynomial::monomial(static_cast<int>(n - 1));
    bool inv_ok = nf(x * xinv) == IntPolynomial(1) && nf(xinv * x) == IntPolynomial(1);
    bool free_zero = nf(qn).is_zero();
    return {n, inv_ok, free_zero, nf(x)};
}

}  // namespace taftcat
