#pragma once

#include "taftcat/module.hpp"

namespace taftcat {

// Per-degree column spans inside a module's components.
using SpanMap = std::map<Degree, Matrix<CyclotomicScalar>>;

// Columns of the incoming differential: the image of d inside each degree.
inline SpanMap image_spans(const GradedModule& M, Direction dir) {
    SpanMap out;
    const GradingScheme& scheme = M.scheme();
    for (const auto& [g, b] : M.blocks(dir)) {
        Degree tgt = scheme.step(g, dir);
        auto it = out.find(tgt);
        if (it == out.end())
            out[tgt] = b;
        else
            it->second = hstack(it->second, b);
    }
    return out;
}

// ker d0 intersect ker d1 in each degree.
inline SpanMap socle_spans(const GradedModule& M) {
    SpanMap out;
    const CyclotomicScalar one = M.scheme().one();
    for (const auto& [g, d] : M.dims()) {
        Matrix<CyclotomicScalar> stacked =
            vstack(M.block(Direction::D0, g), M.block(Direction::D1, g));
        Matrix<CyclotomicScalar> k = kernel_basis(stacked, one);
        if (k.cols() > 0)
            out[g] = k;
    }
    return out;
}

namespace detail {

// Reduce the given columns to an independent subset (original columns kept,
// chosen deterministically as the pivot columns).
inline Matrix<CyclotomicScalar> independent_columns(const Matrix<CyclotomicScalar>& s) {
    Matrix<CyclotomicScalar> copy = s;
    std::vector<size_t> pivots = rref(copy);
    Matrix<CyclotomicScalar> out(s.rows(), pivots.size());
    for (size_t k = 0; k < pivots.size(); ++k)
        for (size_t i = 0; i < s.rows(); ++i)
            out(i, k) = s(i, pivots[k]);
    return out;
}

// Indices of standard basis vectors completing the column space of s.
inline std::vector<size_t> completing_indices(const Matrix<CyclotomicScalar>& s,
                                              const CyclotomicScalar& one) {
    Matrix<CyclotomicScalar> aug = hstack(s, Matrix<CyclotomicScalar>::identity(s.rows(), one));
    std::vector<size_t> pivots = rref(aug);
    std::vector<size_t> out;
    for (size_t p : pivots)
        if (p >= s.cols())
            out.push_back(p - s.cols());
    return out;
}

}  // namespace detail

struct SubmodulePair {
    GradedModule sub;
    ModuleMorphism inclusion;
};

/**
 * The submodule spanned per degree by the given columns. The spans must be
 * closed under both differentials; a span that is not closed is rejected.
 */
inline SubmodulePair submodule(const GradedModule& M, const SpanMap& spans) {
    const GradingScheme& scheme = M.scheme();
    SpanMap basis;
    GradedModule::DimMap dims;
    for (const auto& [g, s] : spans) {
        if (s.rows() != static_cast<size_t>(M.dim(g)))
            throw std::domain_error("submodule: span rows mismatch at " + g.to_string());
        Matrix<CyclotomicScalar> b = detail::independent_columns(s);
        if (b.cols() > 0) {
            dims[g] = static_cast<long>(b.cols());
            basis[g] = std::move(b);
        }
    }
    GradedModule::BlockMap d0, d1;
    for (Direction dir : {Direction::D0, Direction::D1}) {
        auto& dst = dir == Direction::D0 ? d0 : d1;
        for (const auto& [g, b] : basis) {
            Degree tgt = scheme.step(g, dir);
            Matrix<CyclotomicScalar> img = M.block(dir, g) * b;
            auto it = basis.find(tgt);
            if (it == basis.end()) {
                if (!img.is_zero())
                    throw std::domain_error("submodule: span not closed under differential at " +
                                            g.to_string());
                continue;
            }
            auto sol = solve(it->second, img);
            if (!sol)
                throw std::domain_error("submodule: span not closed under differential at " +
                                        g.to_string());
            if (!sol->is_zero())
                dst[g] = std::move(*sol);
        }
    }
    GradedModule sub(scheme, std::move(dims), std::move(d0), std::move(d1));
    ModuleMorphism::BlockMap inc;
    for (const auto& [g, b] : basis)
        inc[g] = b;
    return {sub, ModuleMorphism(sub, M, std::move(inc))};
}

struct QuotientPair {
    GradedModule quot;
    ModuleMorphism projection;
};

/**
 * The quotient of M by the submodule spanned per degree by the given
 * columns (which must be closed under both differentials).
 */
inline QuotientPair quotient(const GradedModule& M, const SpanMap& spans) {
    const GradingScheme& scheme = M.scheme();
    const CyclotomicScalar one = scheme.one();

    SpanMap basis;  // independent columns of the submodule
    for (const auto& [g, s] : spans) {
        if (s.rows() != static_cast<size_t>(M.dim(g)))
            throw std::domain_error("quotient: span rows mismatch at " + g.to_string());
        Matrix<CyclotomicScalar> b = detail::independent_columns(s);
        if (b.cols() > 0)
            basis[g] = std::move(b);
    }

    // Per degree: projection onto coordinates along a standard-vector
    // complement, plus the section picking those complement vectors.
    GradedModule::DimMap dims;
    std::map<Degree, Matrix<CyclotomicScalar>> proj, section;
    for (const auto& [g, dm] : M.dims()) {
        size_t d = static_cast<size_t>(dm);
        Matrix<CyclotomicScalar> b =
            basis.count(g) ? basis.at(g) : Matrix<CyclotomicScalar>(d, 0);
        std::vector<size_t> comp = detail::completing_indices(b, one);
        if (comp.empty())
            continue;
        Matrix<CyclotomicScalar> full(d, b.cols() + comp.size());
        for (size_t j = 0; j < b.cols(); ++j)
            for (size_t i = 0; i < d; ++i)
                full(i, j) = b(i, j);
        Matrix<CyclotomicScalar> sec(d, comp.size());
        for (size_t k = 0; k < comp.size(); ++k) {
            full(comp[k], b.cols() + k) = one;
            sec(comp[k], k) = one;
        }
        Matrix<CyclotomicScalar> finv = inverse(full, one);
        Matrix<CyclotomicScalar> p(comp.size(), d);
        for (size_t k = 0; k < comp.size(); ++k)
            for (size_t j = 0; j < d; ++j)
                p(k, j) = finv(b.cols() + k, j);
        dims[g] = static_cast<long>(comp.size());
        proj[g] = std::move(p);
        section[g] = std::move(sec);
    }

    GradedModule::BlockMap d0, d1;
    for (Direction dir : {Direction::D0, Direction::D1}) {
        auto& dst = dir == Direction::D0 ? d0 : d1;
        for (const auto& [g, p] : proj) {
            Degree tgt = scheme.step(g, dir);
            auto it = proj.find(tgt);
            if (it == proj.end())
                continue;
            // well-defined because the span is closed under d
            Matrix<CyclotomicScalar> induced = it->second * M.block(dir, g) * section.at(g);
            if (!induced.is_zero())
                dst[g] = std::move(induced);
        }
    }
    GradedModule quot(scheme, std::move(dims), std::move(d0), std::move(d1));
    ModuleMorphism::BlockMap pb;
    for (auto& [g, p] : proj)
        pb[g] = std::move(p);
    ModuleMorphism projection(M, quot, std::move(pb));

    // closure check: the projection must be a chain map
    if (!projection.validate().empty())
        throw std::domain_error("quotient: span not closed under the differentials");
    return {quot, projection};
}

/**
 * Triangle record produced from a short exact sequence 0 -> X -> Y -> Z -> 0.
 * The maps are checked to be valid morphisms with i injective, p surjective,
 * p after i zero, and dim Y(g) = dim X(g) + dim Z(g) at every degree; the
 * first failing degree is reported otherwise.
 */
struct Triangle {
    GradedModule x, y, z;
    ModuleMorphism i, p;
};

inline Triangle cone_from_ses(const ModuleMorphism& i, const ModuleMorphism& p) {
    if (i.target() != p.source())
        throw std::domain_error("cone_from_ses: maps are not composable");
    if (!i.validate().empty())
        throw std::domain_error("cone_from_ses: inclusion is not a morphism");
    if (!p.validate().empty())
        throw std::domain_error("cone_from_ses: projection is not a morphism");
    const GradedModule& X = i.source();
    const GradedModule& Y = i.target();
    const GradedModule& Z = p.target();

    std::map<Degree, bool> degrees;
    for (const auto& [g, d] : X.dims())
        degrees[g] = true;
    for (const auto& [g, d] : Y.dims())
        degrees[g] = true;
    for (const auto& [g, d] : Z.dims())
        degrees[g] = true;
    for (const auto& [g, unused] : degrees) {
        if (Y.dim(g) != X.dim(g) + Z.dim(g))
            throw std::domain_error("cone_from_ses: dimensions not additive at " + g.to_string());
        if (rank(i.block(g)) != static_cast<size_t>(X.dim(g)))
            throw std::domain_error("cone_from_ses: inclusion not injective at " + g.to_string());
        if (rank(p.block(g)) != static_cast<size_t>(Z.dim(g)))
            throw std::domain_error("cone_from_ses: projection not surjective at " + g.to_string());
        if (!(p.block(g) * i.block(g)).is_zero())
            throw std::domain_error("cone_from_ses: composite p i nonzero at " + g.to_string());
    }
    return {X, Y, Z, i, p};
}

}  // namespace taftcat
