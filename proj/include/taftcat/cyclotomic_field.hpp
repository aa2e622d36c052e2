#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "taftcat/quantum.hpp"

namespace taftcat {

namespace detail {

// Per-order data for Q[t]/(Phi_N): phi(N), the modulus, reduced powers
// t^k for k < N, and reduction rows expressing t^k for phi <= k <= 2*phi-2
// in the power basis.
struct CyclotomicContext {
    long order = 1;
    long phi = 1;
    IntPolynomial modulus;
    std::vector<std::vector<Integer>> reduction;  // index k - phi
    std::vector<std::vector<Integer>> powers;     // t^k mod Phi_N, k < N
};

inline const CyclotomicContext& cyclotomic_context(long N) {
    static std::mutex mu;
    static std::map<long, std::unique_ptr<CyclotomicContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end())
        return *it->second;

    auto ctx = std::make_unique<CyclotomicContext>();
    ctx->order = N;
    ctx->phi = euler_phi(N);
    ctx->modulus = cyclotomic_polynomial(N);
    long phi = ctx->phi;

    auto as_row = [phi](const IntPolynomial& p) {
        std::vector<Integer> row(static_cast<size_t>(phi), Integer(0));
        const auto& cs = p.coefficients();
        for (size_t i = 0; i < cs.size(); ++i)
            row[i] = cs[i];
        return row;
    };

    // t^k = t * t^{k-1} reduced, for k up to 2*phi - 2.
    IntPolynomial pw(1);
    std::vector<IntPolynomial> reduced_powers;
    for (long k = 0; k <= 2 * phi - 2 || k < N; ++k) {
        if (k > 0) {
            pw = IntPolynomial::monomial(1) * pw;
            pw = IntPolynomial::divrem(pw, ctx->modulus).second;
        }
        reduced_powers.push_back(pw);
        if (k >= phi)
            ctx->reduction.push_back(as_row(pw));
        if (k < N)
            ctx->powers.push_back(as_row(pw));
    }

    const CyclotomicContext& ref = *ctx;
    cache.emplace(N, std::move(ctx));
    return ref;
}

}  // namespace detail

/**
 * Element of the cyclotomic field Q[t]/(Phi_N(t)) in the power basis
 * 1, t, ..., t^{phi(N)-1}, with exact arithmetic throughout.
 *
 * Internally a scalar is an integer-coefficient numerator of degree < phi(N)
 * over a single positive denominator, kept normalized (gcd of numerator
 * content and denominator is 1), so equality is componentwise.
 *
 * A default-constructed scalar is the universal zero: it has order 0 and
 * combines with scalars of any order. Nonzero scalars of distinct orders do
 * not mix.
 */
class CyclotomicScalar {
public:
    CyclotomicScalar() : order_(0), den_(1) {}

    CyclotomicScalar(long N, const Rational& value) : order_(N), den_(1) {
        check_order(N);
        if (value != 0) {
            num_ = IntPolynomial(value.get_num());
            den_ = value.get_den();
        }
        if (num_.is_zero())
            order_ = 0, den_ = 1;
    }

    CyclotomicScalar(long N, long value) : CyclotomicScalar(N, Rational(value)) {}

    // The class of t^{e mod N}; its multiplicative order is N / gcd(e, N).
    static CyclotomicScalar root_of_unity(long N, long e) {
        check_order(N);
        const auto& ctx = detail::cyclotomic_context(N);
        CyclotomicScalar s;
        s.order_ = N;
        s.num_ = IntPolynomial::from_coefficients(ctx.powers[static_cast<size_t>(mod_nonneg(e, N))]);
        s.den_ = 1;
        if (s.num_.is_zero())
            s.order_ = 0;
        return s;
    }

    static CyclotomicScalar zero() { return CyclotomicScalar(); }
    static CyclotomicScalar one(long N) { return CyclotomicScalar(N, 1); }

    long order() const { return order_; }
    bool is_zero() const { return num_.is_zero(); }

    bool is_rational() const { return num_.degree() <= 0; }

    // Coordinates in the power basis, length phi(N) (length 1 for the
    // universal zero).
    std::vector<Rational> coords() const {
        long phi = order_ == 0 ? 1 : detail::cyclotomic_context(order_).phi;
        std::vector<Rational> out(static_cast<size_t>(phi));
        for (long k = 0; k < phi; ++k)
            out[static_cast<size_t>(k)] = make_rational(num_.coeff(static_cast<int>(k)), den_);
        return out;
    }

    friend CyclotomicScalar operator+(const CyclotomicScalar& a, const CyclotomicScalar& b) {
        if (a.is_zero())
            return b;
        if (b.is_zero())
            return a;
        long N = merge_order(a, b);
        CyclotomicScalar r;
        r.order_ = N;
        Integer g = gcd(a.den_, b.den_);
        Integer fa = b.den_ / g, fb = a.den_ / g;
        r.num_ = fa * a.num_ + fb * b.num_;
        r.den_ = a.den_ * fa;
        r.normalize();
        return r;
    }

    friend CyclotomicScalar operator-(const CyclotomicScalar& a, const CyclotomicScalar& b) {
        return a + (-b);
    }

    CyclotomicScalar operator-() const {
        CyclotomicScalar r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend CyclotomicScalar operator*(const CyclotomicScalar& a, const CyclotomicScalar& b) {
        if (a.is_zero() || b.is_zero())
            return CyclotomicScalar();
        long N = merge_order(a, b);
        CyclotomicScalar r;
        r.order_ = N;
        r.num_ = reduce(a.num_ * b.num_, N);
        r.den_ = a.den_ * b.den_;
        r.normalize();
        return r;
    }

    // Multiplicative inverse via the extended Euclidean algorithm on the
    // representative and Phi_N over the rationals.
    CyclotomicScalar inverse() const {
        if (is_zero())
            throw std::domain_error("CyclotomicScalar::inverse: zero is not invertible");
        if (is_rational()) {
            CyclotomicScalar r;
            r.order_ = order_;
            Integer n = num_.coeff(0);
            r.num_ = IntPolynomial(n < 0 ? -den_ : den_);
            r.den_ = abs(n);
            r.normalize();
            return r;
        }
        const auto& ctx = detail::cyclotomic_context(order_);

        using QPoly = std::vector<Rational>;
        auto deg = [](const QPoly& p) { return static_cast<int>(p.size()) - 1; };
        auto prune = [](QPoly& p) {
            while (!p.empty() && p.back() == 0)
                p.pop_back();
        };
        auto sub_scaled_shift = [&](QPoly& a, const QPoly& b, const Rational& c, int shift) {
            if (static_cast<int>(a.size()) < static_cast<int>(b.size()) + shift)
                a.resize(b.size() + static_cast<size_t>(shift));
            for (size_t i = 0; i < b.size(); ++i)
                a[i + static_cast<size_t>(shift)] -= c * b[i];
            prune(a);
        };

        QPoly r0, r1;
        for (const auto& c : ctx.modulus.coefficients())
            r0.push_back(Rational(c));
        for (int k = 0; k <= num_.degree(); ++k)
            r1.push_back(make_rational(num_.coeff(k), den_));
        QPoly s0{}, s1{Rational(1)};  // s tracks the cofactor of the representative

        while (deg(r1) > 0) {
            while (deg(r0) >= deg(r1)) {
                Rational c = r0.back() / r1.back();
                int shift = deg(r0) - deg(r1);
                sub_scaled_shift(r0, r1, c, shift);
                sub_scaled_shift(s0, s1, c, shift);
            }
            std::swap(r0, r1);
            std::swap(s0, s1);
        }
        if (r1.empty())
            throw std::logic_error("CyclotomicScalar::inverse: representative shares a factor with the modulus");
        // r1 is a nonzero constant: s1 / r1 inverts the representative.
        Rational lead = r1[0];
        std::vector<Rational> scaled;
        Integer common_den(1);
        for (const auto& c : s1) {
            Rational v(c / lead);
            common_den = lcm(common_den, v.get_den());
            scaled.push_back(v);
        }
        std::vector<Integer> coeffs;
        for (const auto& v : scaled) {
            Rational w(v * Rational(common_den));
            coeffs.push_back(w.get_num());
        }
        CyclotomicScalar out;
        out.order_ = order_;
        out.num_ = IntPolynomial::from_coefficients(std::move(coeffs));
        out.den_ = common_den;
        out.normalize();
        return out;
    }

    friend CyclotomicScalar operator/(const CyclotomicScalar& a, const CyclotomicScalar& b) {
        return a * b.inverse();
    }

    friend bool operator==(const CyclotomicScalar& a, const CyclotomicScalar& b) {
        if (a.is_zero() || b.is_zero())
            return a.is_zero() && b.is_zero();
        return a.order_ == b.order_ && a.den_ == b.den_ && a.num_ == b.num_;
    }
    friend bool operator!=(const CyclotomicScalar& a, const CyclotomicScalar& b) {
        return !(a == b);
    }

    // e.g. "1/2 + 3*t^2 - t^3"; pure rationals render as "p/q" or "p".
    std::string to_string() const {
        if (is_zero())
            return "0";
        std::ostringstream out;
        bool first = true;
        for (int k = 0; k <= num_.degree(); ++k) {
            if (num_.coeff(k) == 0)
                continue;
            Rational c = make_rational(num_.coeff(k), den_);
            if (first) {
                if (c < 0)
                    out << "-";
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            Integer num_mag = abs(c.get_num());
            bool unit_coeff = (num_mag == 1 && c.get_den() == 1);
            if (k == 0 || !unit_coeff) {
                out << num_mag;
                if (c.get_den() != 1)
                    out << "/" << c.get_den();
            }
            if (k > 0) {
                if (!unit_coeff)
                    out << "*";
                out << "t";
                if (k > 1)
                    out << "^" << k;
            }
        }
        return out.str();
    }

private:
    static void check_order(long N) {
        if (N < 1)
            throw std::domain_error("CyclotomicScalar: order must be positive");
    }

    static long merge_order(const CyclotomicScalar& a, const CyclotomicScalar& b) {
        if (a.order_ == 0)
            return b.order_;
        if (b.order_ == 0 || a.order_ == b.order_)
            return a.order_;
        throw std::domain_error("CyclotomicScalar: mixing scalars of distinct orders");
    }

    static IntPolynomial reduce(const IntPolynomial& p, long N) {
        const auto& ctx = detail::cyclotomic_context(N);
        long phi = ctx.phi;
        if (p.degree() < phi)
            return p;
        std::vector<Integer> out(static_cast<size_t>(phi), Integer(0));
        const auto& cs = p.coefficients();
        for (size_t k = 0; k < cs.size(); ++k) {
            if (cs[k] == 0)
                continue;
            if (static_cast<long>(k) < phi) {
                out[k] += cs[k];
            } else {
                const auto& row = ctx.reduction[k - static_cast<size_t>(phi)];
                for (long i = 0; i < phi; ++i)
                    if (row[static_cast<size_t>(i)] != 0)
                        out[static_cast<size_t>(i)] += cs[k] * row[static_cast<size_t>(i)];
            }
        }
        return IntPolynomial::from_coefficients(std::move(out));
    }

    void normalize() {
        if (num_.is_zero()) {
            order_ = 0;
            den_ = 1;
            return;
        }
        Integer g = den_;
        for (const auto& c : num_.coefficients()) {
            if (c == 0)
                continue;
            g = gcd(g, c);
            if (g == 1)
                return;
        }
        if (g > 1) {
            std::vector<Integer> cs = num_.coefficients();
            for (auto& c : cs)
                c /= g;
            num_ = IntPolynomial::from_coefficients(std::move(cs));
            den_ /= g;
        }
    }

    long order_;        // 0 marks the universal zero
    IntPolynomial num_; // degree < phi(order_)
    Integer den_;       // > 0, coprime to the numerator content
};

inline CyclotomicScalar scalar_root_of_unity(long N, long e) {
    return CyclotomicScalar::root_of_unity(N, e);
}

inline CyclotomicScalar scalar_inverse(const CyclotomicScalar& s) { return s.inverse(); }

}  // namespace taftcat
