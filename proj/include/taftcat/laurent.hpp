#pragma once

#include <map>
#include <sstream>

#include "taftcat/quantum.hpp"

namespace taftcat {

/**
 * Two-variable Laurent polynomial over the integers. Terms are kept in a
 * sorted map with no zero coefficients, so iteration order and equality are
 * canonical.
 */
class LaurentPolynomial2 {
public:
    using Exponent = std::pair<long, long>;  // (x power, y power)

    LaurentPolynomial2() = default;

    static LaurentPolynomial2 monomial(long i, long j, const Integer& c = 1) {
        LaurentPolynomial2 p;
        if (c != 0)
            p.terms_[{i, j}] = c;
        return p;
    }

    static LaurentPolynomial2 constant(const Integer& c) { return monomial(0, 0, c); }

    // [n]_x viewed in the two-variable ring.
    static LaurentPolynomial2 quantum_x(long n) {
        LaurentPolynomial2 p;
        for (long k = 0; k < n; ++k)
            p.terms_[{k, 0}] = 1;
        return p;
    }

    static LaurentPolynomial2 quantum_y(long m) {
        LaurentPolynomial2 p;
        for (long k = 0; k < m; ++k)
            p.terms_[{0, k}] = 1;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponent, Integer>& terms() const { return terms_; }

    Integer coeff(long i, long j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add_term(long i, long j, const Integer& c) {
        if (c == 0)
            return;
        auto it = terms_.find({i, j});
        if (it == terms_.end()) {
            terms_[{i, j}] = c;
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    long min_x() const { return extreme(true, true); }
    long max_x() const { return extreme(true, false); }
    long min_y() const { return extreme(false, true); }
    long max_y() const { return extreme(false, false); }

    friend LaurentPolynomial2 operator+(const LaurentPolynomial2& a, const LaurentPolynomial2& b) {
        LaurentPolynomial2 r = a;
        for (const auto& [e, c] : b.terms_)
            r.add_term(e.first, e.second, c);
        return r;
    }

    friend LaurentPolynomial2 operator-(const LaurentPolynomial2& a, const LaurentPolynomial2& b) {
        LaurentPolynomial2 r = a;
        for (const auto& [e, c] : b.terms_)
            r.add_term(e.first, e.second, -c);
        return r;
    }

    LaurentPolynomial2 operator-() const {
        LaurentPolynomial2 r;
        for (const auto& [e, c] : terms_)
            r.terms_[e] = -c;
        return r;
    }

    friend LaurentPolynomial2 operator*(const LaurentPolynomial2& a, const LaurentPolynomial2& b) {
        LaurentPolynomial2 r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return r;
    }

    friend bool operator==(const LaurentPolynomial2& a, const LaurentPolynomial2& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPolynomial2& a, const LaurentPolynomial2& b) {
        return !(a == b);
    }

    // Multiply by the unit x^i y^j.
    LaurentPolynomial2 shifted(long i, long j) const {
        LaurentPolynomial2 r;
        for (const auto& [e, c] : terms_)
            r.terms_[{e.first + i, e.second + j}] = c;
        return r;
    }

    // Multiply by the unit clearing negative exponents, so min_x = min_y = 0.
    LaurentPolynomial2 units_cleared() const {
        if (is_zero())
            return *this;
        return shifted(-min_x(), -min_y());
    }

    std::string to_string(const std::string& xv = "x", const std::string& yv = "y") const {
        if (is_zero())
            return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Integer mag = abs(c);
            if (first) {
                if (c < 0)
                    out << "-";
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            bool has_var = (e.first != 0 || e.second != 0);
            bool wrote_coeff = false;
            if (mag != 1 || !has_var) {
                out << mag;
                wrote_coeff = true;
            }
            if (e.first != 0) {
                if (wrote_coeff)
                    out << "*";
                out << xv;
                if (e.first != 1)
                    out << "^" << e.first;
                wrote_coeff = true;
            }
            if (e.second != 0) {
                if (wrote_coeff)
                    out << "*";
                out << yv;
                if (e.second != 1)
                    out << "^" << e.second;
            }
        }
        return out.str();
    }

private:
    long extreme(bool in_x, bool take_min) const {
        if (terms_.empty())
            throw std::domain_error("LaurentPolynomial2: exponent range of zero polynomial");
        bool started = false;
        long best = 0;
        for (const auto& [e, c] : terms_) {
            long v = in_x ? e.first : e.second;
            if (!started || (take_min ? v < best : v > best)) {
                best = v;
                started = true;
            }
        }
        return best;
    }

    std::map<Exponent, Integer> terms_;
};

/**
 * Division with remainder by [n]_x, treating the input as a polynomial in x
 * with coefficients in Z[y, y^{-1}]. Requires min_x >= 0. Exact over the
 * integers because [n]_x is monic in x.
 */
struct LaurentDivRem {
    LaurentPolynomial2 quotient;
    LaurentPolynomial2 remainder;
};

inline LaurentDivRem divrem_by_quantum_x(const LaurentPolynomial2& p, long n) {
    if (n < 1)
        throw std::domain_error("divrem_by_quantum_x: n must be positive");
    if (!p.is_zero() && p.min_x() < 0)
        throw std::domain_error("divrem_by_quantum_x: input has negative x exponents");
    long dx = n - 1;  // degree of [n]_x in x
    LaurentPolynomial2 quot, rem = p;
    while (!rem.is_zero() && rem.max_x() >= dx && dx > 0) {
        long top = rem.max_x();
        // leading x-coefficient as a polynomial in y
        LaurentPolynomial2 lead;
        for (const auto& [e, c] : rem.terms())
            if (e.first == top)
                lead.add_term(0, e.second, c);
        LaurentPolynomial2 piece = lead.shifted(top - dx, 0);
        quot = quot + piece;
        rem = rem - piece * LaurentPolynomial2::quantum_x(n);
    }
    if (dx == 0) {  // [1]_x = 1
        return {p, LaurentPolynomial2()};
    }
    return {quot, rem};
}

inline LaurentDivRem divrem_by_quantum_y(const LaurentPolynomial2& p, long m) {
    if (m < 1)
        throw std::domain_error("divrem_by_quantum_y: m must be positive");
    if (!p.is_zero() && p.min_y() < 0)
        throw std::domain_error("divrem_by_quantum_y: input has negative y exponents");
    long dy = m - 1;
    LaurentPolynomial2 quot, rem = p;
    while (!rem.is_zero() && rem.max_y() >= dy && dy > 0) {
        long top = rem.max_y();
        LaurentPolynomial2 lead;
        for (const auto& [e, c] : rem.terms())
            if (e.second == top)
                lead.add_term(e.first, 0, c);
        LaurentPolynomial2 piece = lead.shifted(0, top - dy);
        quot = quot + piece;
        rem = rem - piece * LaurentPolynomial2::quantum_y(m);
    }
    if (dy == 0) {
        return {p, LaurentPolynomial2()};
    }
    return {quot, rem};
}

/**
 * Element of Z[x, y]/([n]_x, [m]_y) in its unique normal form: exponents are
 * first folded with x^n = 1, y^m = 1 (both relations hold in the quotient),
 * then reduced by monic division by [n]_x in x and [m]_y in y, leaving
 * deg_x <= n-2 and deg_y <= m-2.
 */
class QuotientXY {
public:
    QuotientXY(long n, long m, const LaurentPolynomial2& raw) : n_(n), m_(m) {
        if (n < 2 || m < 2)
            throw std::domain_error("QuotientXY: n and m must be at least 2");
        LaurentPolynomial2 folded;
        for (const auto& [e, c] : raw.terms())
            folded.add_term(mod_nonneg(e.first, n), mod_nonneg(e.second, m), c);
        LaurentPolynomial2 r = divrem_by_quantum_x(folded, n).remainder;
        rep_ = divrem_by_quantum_y(r, m).remainder;
    }

    long n() const { return n_; }
    long m() const { return m_; }
    const LaurentPolynomial2& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }

    friend QuotientXY operator+(const QuotientXY& a, const QuotientXY& b) {
        a.require_same_ring(b);
        return QuotientXY(a.n_, a.m_, a.rep_ + b.rep_);
    }
    friend QuotientXY operator-(const QuotientXY& a, const QuotientXY& b) {
        a.require_same_ring(b);
        return QuotientXY(a.n_, a.m_, a.rep_ - b.rep_);
    }
    friend QuotientXY operator*(const QuotientXY& a, const QuotientXY& b) {
        a.require_same_ring(b);
        return QuotientXY(a.n_, a.m_, a.rep_ * b.rep_);
    }

    friend bool operator==(const QuotientXY& a, const QuotientXY& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.rep_ == b.rep_;
    }
    friend bool operator!=(const QuotientXY& a, const QuotientXY& b) { return !(a == b); }

    std::string to_string() const { return rep_.to_string(); }

private:
    void require_same_ring(const QuotientXY& other) const {
        if (n_ != other.n_ || m_ != other.m_)
            throw std::domain_error("QuotientXY: mixing distinct quotient rings");
    }

    long n_, m_;
    LaurentPolynomial2 rep_;
};

/**
 * Element of Z[q]/(Phi_nm(q)): the unique remainder of division by the monic
 * cyclotomic polynomial.
 */
class CycloInteger {
public:
    CycloInteger(long nm, const IntPolynomial& raw)
        : nm_(nm), rep_(IntPolynomial::divrem(raw, cyclotomic_polynomial(nm)).second) {}

    long nm() const { return nm_; }
    const IntPolynomial& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }

    friend bool operator==(const CycloInteger& a, const CycloInteger& b) {
        return a.nm_ == b.nm_ && a.rep_ == b.rep_;
    }
    friend bool operator!=(const CycloInteger& a, const CycloInteger& b) { return !(a == b); }

    std::string to_string() const { return rep_.to_string(); }

private:
    long nm_;
    IntPolynomial rep_;
};

// Push an element along x -> q^alpha, y -> q^beta (the fixed isomorphism of
// group rings) and reduce modulo Phi_nm.
inline CycloInteger to_cyclotomic_integer(const QuotientXY& e) {
    long N = e.n() * e.m();
    auto [alpha, beta] = crt_exponents(e.n(), e.m());
    std::vector<Integer> coeffs(static_cast<size_t>(N), Integer(0));
    for (const auto& [exp, c] : e.rep().terms())
        coeffs[static_cast<size_t>(mod_nonneg(exp.first * alpha + exp.second * beta, N))] += c;
    return CycloInteger(N, IntPolynomial::from_coefficients(std::move(coeffs)));
}

}  // namespace taftcat
