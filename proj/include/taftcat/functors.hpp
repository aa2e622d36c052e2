#pragma once

#include <set>

#include "taftcat/module.hpp"
#include "taftcat/subquotient.hpp"

namespace taftcat {

/**
 * A module with one differential forgotten: the image of the restriction
 * functor to the subalgebra generated by the group-likes of one factor.
 * The surviving flag records which differential is kept.
 */
struct RestrictedModule {
    GradedModule underlying;
    Direction surviving;
};

// Restriction along G_n (x) H_m -> H_n (x) H_m: forgets d0, keeps d1.
inline RestrictedModule restrict_p0(const GradedModule& X) {
    GradedModule::BlockMap d1;
    for (const auto& [g, b] : X.blocks(Direction::D1))
        d1[g] = b;
    return {GradedModule(X.scheme(), X.dims(), {}, std::move(d1)), Direction::D1};
}

// Restriction along H_n (x) G_m -> H_n (x) H_m: forgets d1, keeps d0.
inline RestrictedModule restrict_p1(const GradedModule& X) {
    GradedModule::BlockMap d0;
    for (const auto& [g, b] : X.blocks(Direction::D0))
        d0[g] = b;
    return {GradedModule(X.scheme(), X.dims(), std::move(d0), {}), Direction::D0};
}

/**
 * Interval decomposition of a graded nilpotent operator: the multiset of
 * (start degree, length) of the chain summands. Lengths are bounded by the
 * nilpotence order of the surviving direction.
 */
struct IntervalDecomposition {
    Direction direction;
    std::map<std::pair<Degree, long>, long> intervals;  // (start, length) -> multiplicity

    long total_length() const {
        long t = 0;
        for (const auto& [k, mult] : intervals)
            t += k.second * mult;
        return t;
    }

    bool all_lengths_equal(long len) const {
        for (const auto& [k, mult] : intervals)
            if (k.second != len)
                return false;
        return true;
    }

    // rank of d^j on the component at degree g, reconstructed from the
    // multiset alone
    long predicted_rank(const GradingScheme& scheme, Direction dir, Degree g, long j) const {
        long r = 0;
        for (const auto& [k, mult] : intervals) {
            Degree pos = k.first;
            for (long step = 0; step <= k.second - 1 - j; ++step) {
                if (scheme.normalize(pos) == scheme.normalize(g))
                    r += mult;
                pos = scheme.step(pos, dir);
            }
        }
        return r;
    }

    std::string to_string() const {
        std::ostringstream out;
        bool first = true;
        for (const auto& [k, mult] : intervals) {
            if (!first)
                out << ", ";
            first = false;
            out << mult << " x [start " << k.first.to_string() << ", len " << k.second << "]";
        }
        return first ? "empty" : out.str();
    }
};

/**
 * Computes the interval multiset of the surviving differential by adapted
 * subspace splitting at every chain end: within ker(d) at a degree, chains
 * of length l end exactly along ker(d) intersected with im(d^{l-1}), so the
 * multiplicities are the dimension drops of that flag.
 */
inline IntervalDecomposition decompose_intervals(const RestrictedModule& R) {
    const GradedModule& M = R.underlying;
    const GradingScheme& scheme = M.scheme();
    Direction dir = R.surviving;
    long bound = scheme.chain_bound(dir);
    const CyclotomicScalar one = scheme.one();

    IntervalDecomposition out{dir, {}};
    for (const auto& [g, d] : M.dims()) {
        Matrix<CyclotomicScalar> ker = kernel_basis(M.block(dir, g), one);
        if (ker.cols() == 0)
            continue;
        // w[l] = dim( ker d  intersect  im d^{l-1} arriving at g ), l = 1..bound
        std::vector<long> w(static_cast<size_t>(bound) + 2, 0);
        for (long l = 1; l <= bound; ++l) {
            Degree from = g;
            for (long k = 0; k < l - 1; ++k)
                from = scheme.normalize(from - scheme.e(dir));
            Matrix<CyclotomicScalar> img = M.composite(dir, from, l - 1);
            w[static_cast<size_t>(l)] =
                static_cast<long>(intersection_dim(ker, img));
        }
        for (long l = 1; l <= bound; ++l) {
            long count = w[static_cast<size_t>(l)] - w[static_cast<size_t>(l) + 1];
            if (count > 0) {
                Degree start = g;
                for (long k = 0; k < l - 1; ++k)
                    start = scheme.normalize(start - scheme.e(dir));
                out.intervals[{start, l}] += count;
            }
        }
    }
    return out;
}

namespace detail {

// Standard-basis lifts of the top X / (im d0 + im d1): per degree, the
// columns completing the incoming images to the whole component.
inline std::map<Degree, Matrix<CyclotomicScalar>> top_lifts(const GradedModule& X) {
    const GradingScheme& scheme = X.scheme();
    const CyclotomicScalar one = scheme.one();
    std::map<Degree, Matrix<CyclotomicScalar>> lifts;
    for (const auto& [g, d] : X.dims()) {
        Matrix<CyclotomicScalar> incoming =
            hstack(X.block(Direction::D0, scheme.normalize(g - scheme.e(Direction::D0))),
                   X.block(Direction::D1, scheme.normalize(g - scheme.e(Direction::D1))));
        std::vector<size_t> comp = completing_indices(incoming, one);
        if (comp.empty())
            continue;
        Matrix<CyclotomicScalar> l(static_cast<size_t>(d), comp.size());
        for (size_t k = 0; k < comp.size(); ++k)
            l(comp[k], k) = one;
        lifts[g] = std::move(l);
    }
    return lifts;
}

// All composites d0^a d1^b applied to the given columns at degree h,
// indexed by (a, b); entry (a, b) lives at degree h + (a, b).
inline std::vector<std::vector<Matrix<CyclotomicScalar>>> composite_grid(
    const GradedModule& X, Degree h, const Matrix<CyclotomicScalar>& cols) {
    const GradingScheme& scheme = X.scheme();
    long n = scheme.n, m = scheme.m;
    std::vector<std::vector<Matrix<CyclotomicScalar>>> w(
        static_cast<size_t>(n), std::vector<Matrix<CyclotomicScalar>>(static_cast<size_t>(m)));
    for (long a = 0; a < n; ++a) {
        for (long b = 0; b < m; ++b) {
            if (a == 0 && b == 0) {
                w[0][0] = cols;
            } else if (b == 0) {
                Degree prev = scheme.normalize(h + Degree{a - 1, 0});
                w[static_cast<size_t>(a)][0] =
                    X.block(Direction::D0, prev) * w[static_cast<size_t>(a - 1)][0];
            } else {
                Degree prev = scheme.normalize(h + Degree{a, b - 1});
                w[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                    X.block(Direction::D1, prev) * w[static_cast<size_t>(a)][static_cast<size_t>(b - 1)];
            }
        }
    }
    return w;
}

}  // namespace detail

/**
 * Projectivity test over the local graded algebra: lift a basis of the top
 * X / (im d0 + im d1), map the free module on those generators into X, and
 * decide whether that map is an isomorphism. Projective and free coincide
 * here, so this is exact.
 */
inline bool is_projective(const GradedModule& X) {
    const GradingScheme& scheme = X.scheme();
    auto lifts = detail::top_lifts(X);
    long top_total = 0;
    for (const auto& [g, l] : lifts)
        top_total += static_cast<long>(l.cols());
    if (top_total * scheme.nm() != X.total_dim())
        return false;

    // surjectivity of the induced map from the free module on the lifts
    std::map<Degree, Matrix<CyclotomicScalar>> span;
    for (const auto& [h, l] : lifts) {
        auto grid = detail::composite_grid(X, h, l);
        for (long a = 0; a < scheme.n; ++a) {
            for (long b = 0; b < scheme.m; ++b) {
                Degree g = scheme.normalize(h + Degree{a, b});
                const Matrix<CyclotomicScalar>& w = grid[static_cast<size_t>(a)][static_cast<size_t>(b)];
                if (w.rows() == 0 || w.cols() == 0)
                    continue;
                auto it = span.find(g);
                if (it == span.end())
                    span[g] = w;
                else
                    it->second = hstack(it->second, w);
            }
        }
    }
    for (const auto& [g, d] : X.dims()) {
        auto it = span.find(g);
        if (it == span.end() || rank(it->second) != static_cast<size_t>(d))
            return false;
    }
    return true;
}

// Zero in the stable category means projective here.
inline bool is_stably_zero(const GradedModule& X) { return is_projective(X); }

// X is killed by the stable restriction functor that forgets d0 exactly when
// every d1 interval of the restriction has full length m.
inline bool in_kernel_p0(const GradedModule& X) {
    return decompose_intervals(restrict_p0(X)).all_lengths_equal(X.scheme().m);
}

inline bool in_kernel_p1(const GradedModule& X) {
    return decompose_intervals(restrict_p1(X)).all_lengths_equal(X.scheme().n);
}

/**
 * Extension of a d0-free ladder: R0 Y = Y + Y{1,0} + ... + Y{n-1,0} with d0
 * the coordinate shift (y_0, ..., y_{n-1}) -> (y_1, ..., y_{n-1}, 0) and d1
 * acting diagonally. Takes a module with d0 forgotten (surviving d1); the
 * basis at each degree is ordered summand-major.
 */
inline GradedModule r0(const RestrictedModule& Y) {
    if (Y.surviving != Direction::D1)
        throw std::domain_error("r0: input must have d0 forgotten (surviving d1)");
    const GradedModule& U = Y.underlying;
    const GradingScheme& scheme = U.scheme();
    long n = scheme.n;

    auto summand_degree = [&](Degree g, long s) {
        return scheme.normalize(g + Degree{s, 0});
    };

    GradedModule::DimMap dims;
    std::set<Degree> degrees;
    for (const auto& [g, d] : U.dims())
        for (long s = 0; s < n; ++s)
            degrees.insert(scheme.normalize(g - Degree{s, 0}));
    for (Degree g : degrees) {
        long total = 0;
        for (long s = 0; s < n; ++s)
            total += U.dim(summand_degree(g, s));
        if (total > 0)
            dims[g] = total;
    }

    GradedModule::BlockMap d0, d1;
    for (const auto& [g, dtot] : dims) {
        std::vector<long> sizes(static_cast<size_t>(n)), offsets(static_cast<size_t>(n));
        long off = 0;
        for (long s = 0; s < n; ++s) {
            sizes[static_cast<size_t>(s)] = U.dim(summand_degree(g, s));
            offsets[static_cast<size_t>(s)] = off;
            off += sizes[static_cast<size_t>(s)];
        }
        // d0: summand s at degree g maps identically onto summand s-1 at
        // degree g + e0 (both are the same component of Y)
        Degree g0 = scheme.step(g, Direction::D0);
        auto it0 = dims.find(g0);
        if (it0 != dims.end()) {
            std::vector<long> toff(static_cast<size_t>(n));
            long o = 0;
            for (long s = 0; s < n; ++s) {
                toff[static_cast<size_t>(s)] = o;
                o += U.dim(summand_degree(g0, s));
            }
            GradedModule::Block blk(static_cast<size_t>(it0->second), static_cast<size_t>(dtot));
            bool nonzero = false;
            for (long s = 1; s < n; ++s) {
                long sz = sizes[static_cast<size_t>(s)];
                // summand s at g and summand s-1 at g+e0 are both Y at g+s*e0
                for (long k = 0; k < sz; ++k) {
                    blk(static_cast<size_t>(toff[static_cast<size_t>(s - 1)] + k),
                        static_cast<size_t>(offsets[static_cast<size_t>(s)] + k)) = scheme.one();
                    nonzero = true;
                }
            }
            if (nonzero)
                d0[g] = std::move(blk);
        }
        // d1: diagonal action of the surviving differential
        Degree g1 = scheme.step(g, Direction::D1);
        auto it1 = dims.find(g1);
        if (it1 != dims.end()) {
            std::vector<long> toff(static_cast<size_t>(n));
            long o = 0;
            for (long s = 0; s < n; ++s) {
                toff[static_cast<size_t>(s)] = o;
                o += U.dim(summand_degree(g1, s));
            }
            GradedModule::Block blk(static_cast<size_t>(it1->second), static_cast<size_t>(dtot));
            bool nonzero = false;
            for (long s = 0; s < n; ++s) {
                Degree ys = summand_degree(g, s);
                GradedModule::Block b = U.block(Direction::D1, ys);
                for (size_t i = 0; i < b.rows(); ++i)
                    for (size_t j = 0; j < b.cols(); ++j)
                        if (!b(i, j).is_zero()) {
                            blk(static_cast<size_t>(toff[static_cast<size_t>(s)]) + i,
                                static_cast<size_t>(offsets[static_cast<size_t>(s)]) + j) = b(i, j);
                            nonzero = true;
                        }
            }
            if (nonzero)
                d1[g] = std::move(blk);
        }
    }
    return GradedModule(scheme, std::move(dims), std::move(d0), std::move(d1));
}

// Exchange the roles of the two tensor factors: degrees are transposed,
// the differentials swap, and (n, m) becomes (m, n).
inline GradedModule swap_differentials(const GradedModule& X) {
    const GradingScheme& s = X.scheme();
    GradingScheme sw = s.kind == SchemeKind::Z2 ? GradingScheme::z2(s.m, s.n)
                                                : GradingScheme::cyclic(s.m, s.n);
    GradedModule::DimMap dims;
    for (const auto& [g, d] : X.dims())
        dims[{g.b, g.a}] = d;
    GradedModule::BlockMap d0, d1;
    for (const auto& [g, b] : X.blocks(Direction::D1))
        d0[{g.b, g.a}] = b;
    for (const auto& [g, b] : X.blocks(Direction::D0))
        d1[{g.b, g.a}] = b;
    return GradedModule(sw, std::move(dims), std::move(d0), std::move(d1));
}

inline RestrictedModule swap_differentials(const RestrictedModule& Y) {
    return {swap_differentials(Y.underlying), other(Y.surviving)};
}

// Mirror of r0 extending along the forgotten d1.
inline GradedModule r1(const RestrictedModule& Y) {
    if (Y.surviving != Direction::D0)
        throw std::domain_error("r1: input must have d1 forgotten (surviving d0)");
    return swap_differentials(r0(swap_differentials(Y)));
}

/**
 * The unit eta_X : X -> R0 P0 X, x -> (x, d0 x, ..., d0^{n-1} x). Injective
 * because the first coordinate is the identity; commutes with d0 since
 * d0^n = 0 and with d1 by the commutation of the differentials.
 */
inline ModuleMorphism eta(const GradedModule& X) {
    const GradingScheme& scheme = X.scheme();
    long n = scheme.n;
    GradedModule target = r0(restrict_p0(X));
    ModuleMorphism::BlockMap blocks;
    for (const auto& [g, d] : X.dims()) {
        GradedModule::Block blk = X.composite(Direction::D0, g, 0);
        for (long s = 1; s < n; ++s)
            blk = vstack(blk, X.composite(Direction::D0, g, s));
        blocks[g] = std::move(blk);
    }
    return ModuleMorphism(X, target, std::move(blocks));
}

namespace detail {

// Layout bookkeeping for linear systems whose unknowns are matrix blocks
// indexed by degree, flattened row-major.
struct BlockLayout {
    std::map<Degree, std::pair<long, long>> shapes;
    std::map<Degree, long> offsets;
    long total = 0;

    void add(Degree g, long rows, long cols) {
        if (rows <= 0 || cols <= 0)
            return;
        shapes[g] = {rows, cols};
        offsets[g] = total;
        total += rows * cols;
    }

    bool has(Degree g) const { return shapes.count(g) > 0; }

    long index(Degree g, long r, long c) const {
        const auto& sh = shapes.at(g);
        return offsets.at(g) + r * sh.second + c;
    }
};

}  // namespace detail

/**
 * Factorization through the unit: given f : X -> Y with Y in the kernel of
 * the stable functor that forgets d1, produces g : R0 P0 X -> Y with
 * g after eta_X equal to f exactly.
 *
 * The construction follows the degree induction on the first homological
 * coordinate from the top down: at slice j the required summand component
 * is any solution h of the exact linear system
 *   d0^{n-1} h = f - (already built part) restricted to slice j,
 *   h compatible with d1,
 * which is solvable precisely because Y is d0-free. An unsolvable system
 * means the precondition was violated. Z2 scheme only.
 */
inline ModuleMorphism factor_through_eta(const ModuleMorphism& f) {
    const GradedModule& X = f.source();
    const GradedModule& Y = f.target();
    const GradingScheme& scheme = X.scheme();
    if (scheme.kind != SchemeKind::Z2)
        throw std::domain_error("factor_through_eta: homological bigrading required");
    if (!in_kernel_p1(Y))
        throw std::domain_error("factor_through_eta: target is not in ker P1");
    long n = scheme.n;

    // slices of X by the first homological coordinate, top down
    std::set<long, std::greater<long>> slices;
    for (const auto& [g, d] : X.dims())
        slices.insert(g.a);

    // H[(j,c)] : X(j,c) -> Y(j-n+1, c), the deepest summand component per slice
    std::map<Degree, GradedModule::Block> H;

    for (long j : slices) {
        // degrees of this slice
        std::vector<Degree> degs;
        for (const auto& [g, d] : X.dims())
            if (g.a == j)
                degs.push_back(g);

        // residual r_j = f - sum of already built components, on the slice
        std::map<Degree, GradedModule::Block> residual;
        for (Degree g : degs) {
            GradedModule::Block r = f.block(g);
            for (long s = 1; s < n; ++s) {
                Degree src{j + s, g.b};
                auto it = H.find(src);
                if (it == H.end())
                    continue;
                Degree ybase{j + s - n + 1, g.b};
                GradedModule::Block term = Y.composite(Direction::D0, ybase, n - 1 - s) *
                                           it->second * X.composite(Direction::D0, g, s);
                r = r - term;
            }
            residual[g] = std::move(r);
        }

        // unknowns: H at slice degrees with both endpoint components present
        detail::BlockLayout layout;
        for (Degree g : degs) {
            long rows = Y.dim(Degree{j - n + 1, g.b});
            long cols = X.dim(g);
            layout.add(g, rows, cols);
        }

        // count rows of the system
        long eq_rows = 0;
        for (Degree g : degs) {
            if (Y.dim(g) > 0)
                eq_rows += Y.dim(g) * X.dim(g);  // composite condition
            Degree gy{j - n + 1, g.b};
            long r1rows = Y.dim(scheme.step(gy, Direction::D1));
            if (r1rows > 0)
                eq_rows += r1rows * X.dim(g);  // d1 compatibility
        }

        Matrix<CyclotomicScalar> A(static_cast<size_t>(eq_rows), static_cast<size_t>(layout.total));
        Matrix<CyclotomicScalar> rhs(static_cast<size_t>(eq_rows), 1);
        long row = 0;

        for (Degree g : degs) {
            long cols = X.dim(g);
            Degree ybase{j - n + 1, g.b};
            long yb = Y.dim(ybase);
            // (a) composite: d0^{n-1} H(g) = residual(g)
            if (Y.dim(g) > 0) {
                GradedModule::Block P = Y.composite(Direction::D0, ybase, n - 1);
                const GradedModule::Block& R = residual.at(g);
                for (long i = 0; i < Y.dim(g); ++i) {
                    for (long q = 0; q < cols; ++q) {
                        if (layout.has(g))
                            for (long p = 0; p < yb; ++p) {
                                const CyclotomicScalar& c = P(static_cast<size_t>(i), static_cast<size_t>(p));
                                if (!c.is_zero())
                                    A(static_cast<size_t>(row), static_cast<size_t>(layout.index(g, p, q))) = c;
                            }
                        rhs(static_cast<size_t>(row), 0) = R(static_cast<size_t>(i), static_cast<size_t>(q));
                        ++row;
                    }
                }
            }
            // (b) d1 compatibility: d1_Y H(g) = H(g + e1) d1_X(g)
            Degree g_next = scheme.step(g, Direction::D1);
            Degree ynext = scheme.step(ybase, Direction::D1);
            long rrows = Y.dim(ynext);
            if (rrows > 0) {
                GradedModule::Block DY = Y.block(Direction::D1, ybase);
                GradedModule::Block DX = X.block(Direction::D1, g);
                for (long i = 0; i < rrows; ++i) {
                    for (long q = 0; q < cols; ++q) {
                        if (layout.has(g))
                            for (long p = 0; p < yb; ++p) {
                                const CyclotomicScalar& c = DY(static_cast<size_t>(i), static_cast<size_t>(p));
                                if (!c.is_zero())
                                    A(static_cast<size_t>(row), static_cast<size_t>(layout.index(g, p, q))) = c;
                            }
                        if (layout.has(g_next))
                            for (long q2 = 0; q2 < X.dim(g_next); ++q2) {
                                const CyclotomicScalar& c = DX(static_cast<size_t>(q2), static_cast<size_t>(q));
                                if (!c.is_zero()) {
                                    size_t col = static_cast<size_t>(layout.index(g_next, i, q2));
                                    A(static_cast<size_t>(row), col) =
                                        A(static_cast<size_t>(row), col) - c;
                                }
                            }
                        ++row;
                    }
                }
            }
        }

        auto sol = solve(A, rhs);
        if (!sol)
            throw std::logic_error(
                "factor_through_eta: linear system unsolvable; target not in ker P1 or f invalid");
        for (const auto& [g, sh] : layout.shapes) {
            GradedModule::Block h(static_cast<size_t>(sh.first), static_cast<size_t>(sh.second));
            for (long p = 0; p < sh.first; ++p)
                for (long q = 0; q < sh.second; ++q)
                    h(static_cast<size_t>(p), static_cast<size_t>(q)) =
                        (*sol)(static_cast<size_t>(layout.index(g, p, q)), 0);
            if (!h.is_zero())
                H[g] = std::move(h);
        }
    }

    // assemble g on the summand-major layout of r0
    GradedModule R = r0(restrict_p0(X));
    ModuleMorphism::BlockMap blocks;
    for (const auto& [g, dtot] : R.dims()) {
        if (Y.dim(g) == 0)
            continue;
        GradedModule::Block blk(static_cast<size_t>(Y.dim(g)), static_cast<size_t>(dtot));
        long off = 0;
        bool nonzero = false;
        for (long s = 0; s < n; ++s) {
            Degree src{g.a + s, g.b};
            long w = X.dim(src);
            if (w == 0)
                continue;
            auto it = H.find(src);
            if (it != H.end()) {
                Degree ybase{src.a - n + 1, src.b};
                GradedModule::Block part =
                    Y.composite(Direction::D0, ybase, n - 1 - s) * it->second;
                for (size_t i = 0; i < part.rows(); ++i)
                    for (size_t jx = 0; jx < part.cols(); ++jx)
                        if (!part(i, jx).is_zero()) {
                            blk(i, static_cast<size_t>(off) + jx) = part(i, jx);
                            nonzero = true;
                        }
            }
            off += w;
        }
        if (nonzero)
            blocks[g] = std::move(blk);
    }
    return ModuleMorphism(R, Y, std::move(blocks));
}

namespace detail {

// Coordinates of the space of degree-(0,0) chain maps X -> Y: the layout of
// the unknown blocks and the kernel of the commutation constraints.
struct HomSpace {
    BlockLayout layout;
    Matrix<CyclotomicScalar> basis;  // columns are coordinate vectors
};

inline HomSpace hom_space(const GradedModule& X, const GradedModule& Y) {
    if (X.scheme() != Y.scheme())
        throw std::domain_error("hom_space: scheme mismatch");
    const GradingScheme& scheme = X.scheme();
    const CyclotomicScalar one = scheme.one();

    BlockLayout layout;
    for (const auto& [g, d] : X.dims())
        layout.add(g, Y.dim(g), d);

    long eq_rows = 0;
    for (const auto& [g, d] : X.dims())
        for (Direction dir : {Direction::D0, Direction::D1}) {
            long rows = Y.dim(scheme.step(g, dir));
            if (rows > 0)
                eq_rows += rows * d;
        }

    Matrix<CyclotomicScalar> A(static_cast<size_t>(eq_rows), static_cast<size_t>(layout.total));
    long row = 0;
    for (const auto& [g, d] : X.dims()) {
        for (Direction dir : {Direction::D0, Direction::D1}) {
            Degree tgt = scheme.step(g, dir);
            long rows = Y.dim(tgt);
            if (rows == 0)
                continue;
            GradedModule::Block DY = Y.block(dir, g);
            GradedModule::Block DX = X.block(dir, g);
            for (long i = 0; i < rows; ++i) {
                for (long q = 0; q < d; ++q) {
                    // (D_Y F(g))[i,q] - (F(tgt) D_X)[i,q] = 0
                    if (layout.has(g))
                        for (long p = 0; p < Y.dim(g); ++p) {
                            const CyclotomicScalar& c = DY(static_cast<size_t>(i), static_cast<size_t>(p));
                            if (!c.is_zero())
                                A(static_cast<size_t>(row), static_cast<size_t>(layout.index(g, p, q))) = c;
                        }
                    if (layout.has(tgt))
                        for (long q2 = 0; q2 < X.dim(tgt); ++q2) {
                            const CyclotomicScalar& c = DX(static_cast<size_t>(q2), static_cast<size_t>(q));
                            if (!c.is_zero()) {
                                size_t col = static_cast<size_t>(layout.index(tgt, i, q2));
                                A(static_cast<size_t>(row), col) = A(static_cast<size_t>(row), col) - c;
                            }
                        }
                    ++row;
                }
            }
        }
    }
    return {layout, kernel_basis(A, one)};
}

inline ModuleMorphism morphism_from_coordinates(const GradedModule& X, const GradedModule& Y,
                                                const BlockLayout& layout,
                                                const std::vector<CyclotomicScalar>& v) {
    ModuleMorphism::BlockMap blocks;
    for (const auto& [g, sh] : layout.shapes) {
        GradedModule::Block b(static_cast<size_t>(sh.first), static_cast<size_t>(sh.second));
        bool nonzero = false;
        for (long p = 0; p < sh.first; ++p)
            for (long q = 0; q < sh.second; ++q) {
                const CyclotomicScalar& c = v[static_cast<size_t>(layout.index(g, p, q))];
                if (!c.is_zero()) {
                    b(static_cast<size_t>(p), static_cast<size_t>(q)) = c;
                    nonzero = true;
                }
            }
        if (nonzero)
            blocks[g] = std::move(b);
    }
    return ModuleMorphism(X, Y, std::move(blocks));
}

// Incremental row-reduced span of coordinate vectors.
struct RowSpan {
    std::vector<std::vector<CyclotomicScalar>> rows;
    std::vector<size_t> lead;

    // reduces v against the span; returns true (and absorbs it) if v was
    // independent
    bool insert(std::vector<CyclotomicScalar> v) {
        for (size_t i = 0; i < rows.size(); ++i) {
            const CyclotomicScalar& c = v[lead[i]];
            if (c.is_zero())
                continue;
            CyclotomicScalar f = c;  // rows are normalized to leading 1
            for (size_t j = lead[i]; j < v.size(); ++j)
                if (!rows[i][j].is_zero())
                    v[j] = v[j] - f * rows[i][j];
        }
        size_t pivot = v.size();
        for (size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) {
                pivot = j;
                break;
            }
        if (pivot == v.size())
            return false;
        CyclotomicScalar inv = v[pivot].inverse();
        for (size_t j = pivot; j < v.size(); ++j)
            if (!v[j].is_zero())
                v[j] = inv * v[j];
        // keep rows sorted by leading index for deterministic reduction
        size_t at = 0;
        while (at < lead.size() && lead[at] < pivot)
            ++at;
        rows.insert(rows.begin() + static_cast<long>(at), std::move(v));
        lead.insert(lead.begin() + static_cast<long>(at), pivot);
        return true;
    }

    size_t dimension() const { return rows.size(); }
};

// Coordinate vectors spanning the morphisms X -> Y that factor through a
// projective: the span of pi after phi over all maps phi : X -> (free cover
// of Y). Morphisms into a rank-one free module correspond exactly to linear
// functionals on the component of X at the socle degree of that summand, so
// each generator is a small outer product.
inline std::vector<std::vector<CyclotomicScalar>> projective_factor_span(
    const GradedModule& X, const GradedModule& Y, const BlockLayout& layout) {
    const GradingScheme& scheme = X.scheme();
    long n = scheme.n, m = scheme.m;
    std::vector<std::vector<CyclotomicScalar>> gens;

    auto lifts = top_lifts(Y);
    for (const auto& [h, l] : lifts) {
        auto ygrid = composite_grid(Y, h, l);  // images of the generators
        Degree socle = scheme.normalize(h + Degree{n - 1, m - 1});
        long k = X.dim(socle);
        if (k == 0)
            continue;

        // composites of X from h+(a,b) into the socle degree, per (a,b)
        for (size_t gen = 0; gen < l.cols(); ++gen) {
            for (long psi = 0; psi < k; ++psi) {
                std::vector<CyclotomicScalar> v(static_cast<size_t>(layout.total));
                bool nonzero = false;
                for (long a = 0; a < n; ++a) {
                    for (long b = 0; b < m; ++b) {
                        Degree g = scheme.normalize(h + Degree{a, b});
                        if (!layout.has(g))
                            continue;
                        const Matrix<CyclotomicScalar>& u =
                            ygrid[static_cast<size_t>(a)][static_cast<size_t>(b)];
                        if (u.rows() == 0)
                            continue;
                        GradedModule::Block c0 = X.composite(Direction::D0, g, n - 1 - a);
                        Degree mid = scheme.normalize(g + Degree{n - 1 - a, 0});
                        GradedModule::Block c1 = X.composite(Direction::D1, mid, m - 1 - b);
                        GradedModule::Block comp = c1 * c0;  // X(g) -> X(socle)
                        for (long q = 0; q < X.dim(g); ++q) {
                            const CyclotomicScalar& w = comp(static_cast<size_t>(psi), static_cast<size_t>(q));
                            if (w.is_zero())
                                continue;
                            for (long p = 0; p < Y.dim(g); ++p) {
                                const CyclotomicScalar& uy = u(static_cast<size_t>(p), gen);
                                if (uy.is_zero())
                                    continue;
                                size_t idx = static_cast<size_t>(layout.index(g, p, q));
                                v[idx] = v[idx] + uy * w;
                                nonzero = true;
                            }
                        }
                    }
                }
                if (nonzero)
                    gens.push_back(std::move(v));
            }
        }
    }
    return gens;
}

}  // namespace detail

// Basis of the space of degree-(0,0) morphisms commuting with both
// differentials.
inline std::vector<ModuleMorphism> hom_basis(const GradedModule& X, const GradedModule& Y) {
    detail::HomSpace hs = detail::hom_space(X, Y);
    std::vector<ModuleMorphism> out;
    for (size_t c = 0; c < hs.basis.cols(); ++c) {
        std::vector<CyclotomicScalar> v(static_cast<size_t>(hs.layout.total));
        for (size_t r = 0; r < hs.basis.rows(); ++r)
            v[r] = hs.basis(r, c);
        out.push_back(detail::morphism_from_coordinates(X, Y, hs.layout, v));
    }
    return out;
}

struct StableHom {
    long dimension = 0;
    std::vector<ModuleMorphism> representatives;

    std::string to_string() const {
        std::ostringstream out;
        out << "stable hom dimension: " << dimension << "\n";
        for (size_t k = 0; k < representatives.size(); ++k) {
            out << "representative " << k << ":";
            bool any = false;
            for (const auto& [g, b] : representatives[k].blocks()) {
                out << " " << g.to_string() << " [";
                for (size_t i = 0; i < b.rows(); ++i)
                    for (size_t j = 0; j < b.cols(); ++j)
                        out << (i + j ? "; " : "") << b(i, j).to_string();
                out << "]";
                any = true;
            }
            if (!any)
                out << " 0";
            out << "\n";
        }
        return out.str();
    }
};

/**
 * Dimension of Hom in the stable category plus a basis of representatives:
 * the space of chain maps modulo those factoring through a projective,
 * where factoring through a projective is decided against the projective
 * cover of the target.
 */
inline StableHom stable_hom(const GradedModule& X, const GradedModule& Y) {
    detail::HomSpace hs = detail::hom_space(X, Y);
    detail::RowSpan span;
    for (auto& g : detail::projective_factor_span(X, Y, hs.layout))
        span.insert(std::move(g));

    StableHom out;
    for (size_t c = 0; c < hs.basis.cols(); ++c) {
        std::vector<CyclotomicScalar> v(static_cast<size_t>(hs.layout.total));
        for (size_t r = 0; r < hs.basis.rows(); ++r)
            v[r] = hs.basis(r, c);
        std::vector<CyclotomicScalar> copy = v;
        if (span.insert(std::move(copy))) {
            out.dimension += 1;
            out.representatives.push_back(detail::morphism_from_coordinates(X, Y, hs.layout, v));
        }
    }
    return out;
}

// Does f : X -> Y factor through a projective (vanish stably)?
inline bool is_stably_trivial(const ModuleMorphism& f) {
    detail::HomSpace hs = detail::hom_space(f.source(), f.target());
    detail::RowSpan span;
    for (auto& g : detail::projective_factor_span(f.source(), f.target(), hs.layout))
        span.insert(std::move(g));
    std::vector<CyclotomicScalar> v(static_cast<size_t>(hs.layout.total));
    for (const auto& [g, sh] : hs.layout.shapes) {
        GradedModule::Block b = f.block(g);
        for (long p = 0; p < sh.first; ++p)
            for (long q = 0; q < sh.second; ++q)
                v[static_cast<size_t>(hs.layout.index(g, p, q))] =
                    b(static_cast<size_t>(p), static_cast<size_t>(q));
    }
    return !span.insert(std::move(v));
}

}  // namespace taftcat
