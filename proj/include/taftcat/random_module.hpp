#pragma once

#include <random>

#include "taftcat/module.hpp"

namespace taftcat {

struct RandomModuleOptions {
    int max_summands = 4;
    bool full_e0 = false;    // force full-length d0 intervals in every summand
    bool full_e1 = false;    // force full-length d1 intervals in every summand
    long shift_window = 2;   // Z2 start coordinates are drawn from [-w, w]
    bool unit_twists = true; // allow root-of-unity factors in base changes
};

namespace detail {

// Unimodular-with-units matrix: a product of elementary row operations with
// small integer coefficients, optionally scaled by roots of unity.
inline Matrix<CyclotomicScalar> random_invertible(const GradingScheme& scheme, size_t d,
                                                  std::mt19937_64& rng, bool unit_twists) {
    Matrix<CyclotomicScalar> t = Matrix<CyclotomicScalar>::identity(d, scheme.one());
    if (d == 0)
        return t;
    std::uniform_int_distribution<size_t> row(0, d - 1);
    std::uniform_int_distribution<long> coeff(-2, 2);
    std::uniform_int_distribution<long> power(0, scheme.nm() - 1);
    size_t ops = 2 * d;
    for (size_t k = 0; k < ops; ++k) {
        size_t r = row(rng), s = row(rng);
        long c = coeff(rng);
        if (r == s || c == 0)
            continue;
        CyclotomicScalar cs = scheme.scalar(c);
        for (size_t j = 0; j < d; ++j)
            t(s, j) = t(s, j) + cs * t(r, j);
    }
    if (unit_twists) {
        for (size_t i = 0; i < d; ++i) {
            CyclotomicScalar u = CyclotomicScalar::root_of_unity(scheme.nm(), power(rng));
            for (size_t j = 0; j < d; ++j)
                t(i, j) = u * t(i, j);
        }
    }
    return t;
}

}  // namespace detail

// Conjugate every differential block by random invertible degree-wise base
// changes. The result is isomorphic to the input.
inline GradedModule random_base_change(const GradedModule& M, std::mt19937_64& rng,
                                       bool unit_twists = true) {
    const GradingScheme& scheme = M.scheme();
    std::map<Degree, Matrix<CyclotomicScalar>> t, tinv;
    for (const auto& [g, d] : M.dims()) {
        t[g] = detail::random_invertible(scheme, static_cast<size_t>(d), rng, unit_twists);
        tinv[g] = inverse(t[g], scheme.one());
    }
    GradedModule::BlockMap d0, d1;
    for (Direction dir : {Direction::D0, Direction::D1}) {
        auto& dst = dir == Direction::D0 ? d0 : d1;
        for (const auto& [g, b] : M.blocks(dir)) {
            // stored blocks are nonzero, so both endpoint degrees are present
            Matrix<CyclotomicScalar> nb = t.at(scheme.step(g, dir)) * b * tinv.at(g);
            if (!nb.is_zero())
                dst[g] = std::move(nb);
        }
    }
    return GradedModule(scheme, M.dims(), std::move(d0), std::move(d1));
}

/**
 * Deterministic pseudo-random module: a direct sum of shifted tensor
 * products of interval modules, disguised by a random degree-wise base
 * change. Total dimension never exceeds max_dim; the same seed always
 * produces the same module.
 */
inline GradedModule random_module(const GradingScheme& scheme, long max_dim, uint64_t seed,
                                  const RandomModuleOptions& opt) {
    if (max_dim < 1)
        throw std::domain_error("random_module: max_dim must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> len0(1, scheme.n);
    std::uniform_int_distribution<long> len1(1, scheme.m);
    std::uniform_int_distribution<long> za(-opt.shift_window, opt.shift_window);
    std::uniform_int_distribution<long> zb(-opt.shift_window, opt.shift_window);
    std::uniform_int_distribution<long> ca(0, scheme.n - 1);
    std::uniform_int_distribution<long> cb(0, scheme.m - 1);
    std::uniform_int_distribution<int> count(1, opt.max_summands);

    GradedModule result(scheme);
    int summands = count(rng);
    for (int s = 0; s < summands; ++s) {
        long l0 = opt.full_e0 ? scheme.n : len0(rng);
        long l1 = opt.full_e1 ? scheme.m : len1(rng);
        if (result.total_dim() + l0 * l1 > max_dim)
            break;
        Degree start0, start1;
        if (scheme.kind == SchemeKind::Z2) {
            start0 = {za(rng), zb(rng)};
            start1 = {za(rng), zb(rng)};
        } else {
            start0 = {ca(rng), cb(rng)};
            start1 = {ca(rng), cb(rng)};
        }
        GradedModule summand = tensor(interval_module(scheme, start0, Direction::D0, l0),
                                      interval_module(scheme, start1, Direction::D1, l1));
        result = result.is_zero_module() ? summand : direct_sum(result, summand);
    }
    if (result.is_zero_module()) {
        // budget too small for the drawn lengths: fall back to one simple module
        result = interval_module(scheme, scheme.kind == SchemeKind::Z2 ? Degree{za(rng), zb(rng)}
                                                                       : Degree{ca(rng), cb(rng)},
                                 Direction::D0, 1);
    }
    return random_base_change(result, rng, opt.unit_twists);
}

inline GradedModule random_module(const GradingScheme& scheme, long max_dim, uint64_t seed) {
    return random_module(scheme, max_dim, seed, RandomModuleOptions{});
}

}  // namespace taftcat
