#pragma once

#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "taftcat/integer.hpp"

namespace taftcat {

/**
 * Dense univariate polynomial over arbitrary-precision integers.
 *
 * Coefficients are stored in ascending degree with no trailing zeros, so
 * representations are canonical and equality is coefficient-wise. The zero
 * polynomial has an empty coefficient list and a distinguished degree marker.
 */
class IntPolynomial {
public:
    // Degree of the zero polynomial.
    static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

    IntPolynomial() = default;
    IntPolynomial(const Integer& constant) { coeffs_.push_back(constant); prune(); }
    IntPolynomial(long constant) : IntPolynomial(Integer(constant)) {}

    static IntPolynomial from_coefficients(std::vector<Integer> ascending) {
        IntPolynomial p;
        p.coeffs_ = std::move(ascending);
        p.prune();
        return p;
    }

    static IntPolynomial monomial(int degree, const Integer& c = 1) {
        if (degree < 0)
            throw std::domain_error("IntPolynomial::monomial: negative degree");
        IntPolynomial p;
        if (c != 0) {
            p.coeffs_.assign(static_cast<size_t>(degree) + 1, Integer(0));
            p.coeffs_.back() = c;
        }
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    int degree() const {
        return coeffs_.empty() ? kMinusInfinity
                               : static_cast<int>(coeffs_.size()) - 1;
    }

    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    // Coefficient of q^k; zero outside the stored range.
    const Integer& coeff(int k) const {
        static const Integer zero(0);
        if (k < 0 || k >= static_cast<int>(coeffs_.size()))
            return zero;
        return coeffs_[static_cast<size_t>(k)];
    }

    const std::vector<Integer>& coefficients() const { return coeffs_; }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        IntPolynomial r;
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            r.coeffs_[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i)
            r.coeffs_[i] += b.coeffs_[i];
        r.prune();
        return r;
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        IntPolynomial r;
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            r.coeffs_[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i)
            r.coeffs_[i] -= b.coeffs_[i];
        r.prune();
        return r;
    }

    IntPolynomial operator-() const {
        IntPolynomial r = *this;
        for (auto& c : r.coeffs_)
            c = -c;
        return r;
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero())
            return IntPolynomial();
        IntPolynomial r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0)
                continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j] == 0)
                    continue;
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        r.prune();
        return r;
    }

    friend IntPolynomial operator*(const Integer& c, const IntPolynomial& p) {
        if (c == 0)
            return IntPolynomial();
        IntPolynomial r = p;
        for (auto& x : r.coeffs_)
            x *= c;
        return r;
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) {
        return !(a == b);
    }

    /**
     * Division with remainder by a monic divisor: a = q*b + r, deg r < deg b.
     * Exact over the integers because b is monic. Non-monic or zero divisors
     * are rejected.
     */
    static std::pair<IntPolynomial, IntPolynomial> divrem(const IntPolynomial& a,
                                                          const IntPolynomial& b) {
        if (b.is_zero())
            throw std::domain_error("IntPolynomial::divrem: division by zero");
        if (!b.is_monic())
            throw std::domain_error("IntPolynomial::divrem: divisor must be monic");
        IntPolynomial q, r = a;
        int db = b.degree();
        while (!r.is_zero() && r.degree() >= db) {
            int shift = r.degree() - db;
            Integer c = r.coeffs_.back();
            q = q + monomial(shift, c);
            r = r - c * monomial(shift) * b;
        }
        return {q, r};
    }

    // Exact division; throws std::logic_error on a nonzero remainder.
    static IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
        auto [q, r] = divrem(a, b);
        if (!r.is_zero())
            throw std::logic_error("IntPolynomial::divide_exact: inexact division");
        return q;
    }

    // Ascending-degree rendering, e.g. "1 - q + q^3 - q^4 + q^5 - q^7 + q^8".
    std::string to_string(const std::string& var = "q") const {
        if (is_zero())
            return "0";
        std::ostringstream out;
        bool first = true;
        for (size_t k = 0; k < coeffs_.size(); ++k) {
            const Integer& c = coeffs_[k];
            if (c == 0)
                continue;
            Integer mag = abs(c);
            if (first) {
                if (c < 0)
                    out << "-";
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            if (k == 0) {
                out << mag;
            } else {
                if (mag != 1)
                    out << mag << "*";
                out << var;
                if (k > 1)
                    out << "^" << k;
            }
        }
        return out.str();
    }

private:
    void prune() {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<Integer> coeffs_;
};

}  // namespace taftcat
