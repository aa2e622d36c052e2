#pragma once

#include <map>
#include <vector>

#include "taftcat/grading.hpp"
#include "taftcat/matrix.hpp"

namespace taftcat {

/**
 * Finite-dimensional bigraded module over H_n (x) H_m, stored as per-degree
 * dimensions together with the homogeneous blocks of the two commuting
 * differentials. The k-actions are not stored: they are determined by the
 * grading (see GradingScheme).
 *
 * A block of d0 at degree g is a dim(g + e0) x dim(g) matrix over the
 * cyclotomic ground field; absent blocks are zero. Storage is canonical
 * (no zero dimensions, no zero blocks), so equality is structural.
 *
 * The structural shape of the block maps is enforced at construction;
 * validate() checks the algebra relations d0^n = 0, d1^m = 0 and
 * d0 d1 = d1 d0 blockwise and reports violations with their locations.
 */
class GradedModule {
public:
    using Block = Matrix<CyclotomicScalar>;
    using DimMap = std::map<Degree, long>;
    using BlockMap = std::map<Degree, Block>;

    GradedModule(GradingScheme scheme, DimMap dims, BlockMap d0, BlockMap d1)
        : scheme_(scheme) {
        for (const auto& [g, d] : dims) {
            if (d < 0)
                throw std::domain_error("GradedModule: negative dimension at " + g.to_string());
            if (d > 0)
                dims_[scheme_.normalize(g)] += d;
        }
        adopt_blocks(Direction::D0, std::move(d0));
        adopt_blocks(Direction::D1, std::move(d1));
    }

    explicit GradedModule(GradingScheme scheme) : scheme_(scheme) {}

    const GradingScheme& scheme() const { return scheme_; }
    const DimMap& dims() const { return dims_; }

    long dim(Degree g) const {
        auto it = dims_.find(scheme_.normalize(g));
        return it == dims_.end() ? 0 : it->second;
    }

    long total_dim() const {
        long t = 0;
        for (const auto& [g, d] : dims_)
            t += d;
        return t;
    }

    bool is_zero_module() const { return dims_.empty(); }

    std::vector<Degree> degrees() const {
        std::vector<Degree> out;
        out.reserve(dims_.size());
        for (const auto& [g, d] : dims_)
            out.push_back(g);
        return out;
    }

    const BlockMap& blocks(Direction dir) const { return dir == Direction::D0 ? d0_ : d1_; }

    // Block of the differential leaving degree g; zero-filled when absent.
    Block block(Direction dir, Degree g) const {
        Degree gn = scheme_.normalize(g);
        const BlockMap& bm = blocks(dir);
        auto it = bm.find(gn);
        if (it != bm.end())
            return it->second;
        return Block(static_cast<size_t>(dim(scheme_.step(gn, dir))), static_cast<size_t>(dim(gn)));
    }

    Block d0_block(Degree g) const { return block(Direction::D0, g); }
    Block d1_block(Degree g) const { return block(Direction::D1, g); }

    // Composite of `steps` consecutive blocks of the differential starting
    // at degree g (the zero map as soon as a dimension along the way is 0).
    Block composite(Direction dir, Degree g, long steps) const {
        Degree gn = scheme_.normalize(g);
        Degree tgt = gn;
        for (long k = 0; k < steps; ++k)
            tgt = scheme_.step(tgt, dir);
        Block acc = Block::identity(static_cast<size_t>(dim(gn)), scheme_.one());
        Degree cur = gn;
        for (long k = 0; k < steps; ++k) {
            if (dim(cur) == 0 || acc.is_zero())
                return Block(static_cast<size_t>(dim(tgt)), static_cast<size_t>(dim(gn)));
            acc = block(dir, cur) * acc;
            cur = scheme_.step(cur, dir);
        }
        return acc;
    }

    std::vector<std::string> validate() const {
        std::vector<std::string> violations;
        for (Direction dir : {Direction::D0, Direction::D1}) {
            long bound = scheme_.chain_bound(dir);
            const char* name = dir == Direction::D0 ? "d0" : "d1";
            for (const auto& [g, d] : dims_) {
                if (!composite(dir, g, bound).is_zero()) {
                    std::ostringstream out;
                    out << name << "^" << bound << " != 0 starting at " << g.to_string();
                    violations.push_back(out.str());
                }
            }
        }
        for (const auto& [g, d] : dims_) {
            Block lhs = block(Direction::D1, scheme_.step(g, Direction::D0)) * block(Direction::D0, g);
            Block rhs = block(Direction::D0, scheme_.step(g, Direction::D1)) * block(Direction::D1, g);
            if (lhs != rhs)
                violations.push_back("d1 d0 != d0 d1 at " + g.to_string());
        }
        return violations;
    }

    friend bool operator==(const GradedModule& x, const GradedModule& y) {
        return x.scheme_ == y.scheme_ && x.dims_ == y.dims_ && x.d0_ == y.d0_ && x.d1_ == y.d1_;
    }
    friend bool operator!=(const GradedModule& x, const GradedModule& y) { return !(x == y); }

private:
    void adopt_blocks(Direction dir, BlockMap raw) {
        BlockMap& dst = dir == Direction::D0 ? d0_ : d1_;
        const char* name = dir == Direction::D0 ? "d0" : "d1";
        for (auto& [g, b] : raw) {
            Degree gn = scheme_.normalize(g);
            size_t src = static_cast<size_t>(dim(gn));
            size_t tgt = static_cast<size_t>(dim(scheme_.step(gn, dir)));
            if (b.rows() != tgt || b.cols() != src)
                throw std::domain_error(std::string("GradedModule: ") + name + " block at " +
                                        gn.to_string() + " has shape " + std::to_string(b.rows()) +
                                        "x" + std::to_string(b.cols()) + ", expected " +
                                        std::to_string(tgt) + "x" + std::to_string(src));
            if (!b.is_zero())
                dst.emplace(gn, std::move(b));
        }
    }

    GradingScheme scheme_;
    DimMap dims_;
    BlockMap d0_, d1_;
};

// The bigraded free module of rank one generated in the given degree:
// an n-step d0 chain tensored with an m-step d1 chain of identity blocks,
// total dimension nm.
inline GradedModule free_module(const GradingScheme& scheme, Degree generator) {
    GradedModule::DimMap dims;
    GradedModule::BlockMap d0, d1;
    GradedModule::Block id1 = GradedModule::Block::identity(1, scheme.one());
    for (long i = 0; i < scheme.n; ++i) {
        for (long j = 0; j < scheme.m; ++j) {
            Degree g = scheme.normalize(generator + Degree{i, j});
            dims[g] = 1;
            if (i < scheme.n - 1)
                d0[g] = id1;
            if (j < scheme.m - 1)
                d1[g] = id1;
        }
    }
    return GradedModule(scheme, std::move(dims), std::move(d0), std::move(d1));
}

// Chain of L one-dimensional components with identity differentials in one
// direction and the zero differential in the other. L must not exceed the
// nilpotence order of the chosen direction.
inline GradedModule interval_module(const GradingScheme& scheme, Degree start, Direction dir,
                                    long length) {
    if (length < 1 || length > scheme.chain_bound(dir))
        throw std::domain_error("interval_module: length out of range");
    GradedModule::DimMap dims;
    GradedModule::BlockMap blocks;
    GradedModule::Block id1 = GradedModule::Block::identity(1, scheme.one());
    Degree g = scheme.normalize(start);
    for (long k = 0; k < length; ++k) {
        dims[g] = 1;
        if (k < length - 1)
            blocks[g] = id1;
        g = scheme.step(g, dir);
    }
    if (dir == Direction::D0)
        return GradedModule(scheme, std::move(dims), std::move(blocks), {});
    return GradedModule(scheme, std::move(dims), {}, std::move(blocks));
}

// Degree shift: shift(M, s) has component at g equal to M's component at
// g + s, with the differentials unchanged as linear maps.
inline GradedModule shift(const GradedModule& M, Degree by) {
    const GradingScheme& scheme = M.scheme();
    GradedModule::DimMap dims;
    GradedModule::BlockMap d0, d1;
    for (const auto& [g, d] : M.dims())
        dims[scheme.normalize(g - by)] = d;
    for (Direction dir : {Direction::D0, Direction::D1}) {
        auto& dst = dir == Direction::D0 ? d0 : d1;
        for (const auto& [g, b] : M.blocks(dir))
            dst[scheme.normalize(g - by)] = b;
    }
    return GradedModule(scheme, std::move(dims), std::move(d0), std::move(d1));
}

// Direct sum, with X-basis before Y-basis in every degree.
inline GradedModule direct_sum(const GradedModule& X, const GradedModule& Y) {
    if (X.scheme() != Y.scheme())
        throw std::domain_error("direct_sum: scheme mismatch");
    const GradingScheme& scheme = X.scheme();
    GradedModule::DimMap dims;
    for (const auto& [g, d] : X.dims())
        dims[g] += d;
    for (const auto& [g, d] : Y.dims())
        dims[g] += d;
    GradedModule::BlockMap d0, d1;
    for (Direction dir : {Direction::D0, Direction::D1}) {
        auto& dst = dir == Direction::D0 ? d0 : d1;
        std::map<Degree, bool> touched;
        for (const auto& [g, b] : X.blocks(dir))
            touched[g] = true;
        for (const auto& [g, b] : Y.blocks(dir))
            touched[g] = true;
        for (const auto& [g, unused] : touched) {
            Degree tgt = scheme.step(g, dir);
            size_t rx = static_cast<size_t>(X.dim(tgt)), cx = static_cast<size_t>(X.dim(g));
            size_t ry = static_cast<size_t>(Y.dim(tgt)), cy = static_cast<size_t>(Y.dim(g));
            GradedModule::Block blk(rx + ry, cx + cy);
            GradedModule::Block bx = X.block(dir, g), by = Y.block(dir, g);
            for (size_t i = 0; i < rx; ++i)
                for (size_t j = 0; j < cx; ++j)
                    blk(i, j) = bx(i, j);
            for (size_t i = 0; i < ry; ++i)
                for (size_t j = 0; j < cy; ++j)
                    blk(rx + i, cx + j) = by(i, j);
            dst[g] = std::move(blk);
        }
    }
    return GradedModule(scheme, std::move(dims), std::move(d0), std::move(d1));
}

namespace detail {

// Ordered list of (degree of X, degree of Y) pairs contributing to each
// degree of X (x) Y, together with basis offsets. Pairs are enumerated in
// lexicographic order of (gx, gy); within a pair the X index is major.
struct TensorLayout {
    struct Slot {
        Degree gx, gy;
        long offset;  // basis offset of this slot inside its degree
    };
    std::map<Degree, std::vector<Slot>> slots;
    std::map<Degree, long> dims;

    TensorLayout(const GradedModule& X, const GradedModule& Y) {
        const GradingScheme& scheme = X.scheme();
        for (const auto& [gx, dx] : X.dims()) {
            for (const auto& [gy, dy] : Y.dims()) {
                Degree g = scheme.normalize(gx + gy);
                auto& v = slots[g];
                long off = dims[g];
                v.push_back({gx, gy, off});
                dims[g] = off + dx * dy;
            }
        }
    }

    long offset_of(Degree g, Degree gx, Degree gy) const {
        for (const auto& s : slots.at(g))
            if (s.gx == gx && s.gy == gy)
                return s.offset;
        return -1;
    }
};

}  // namespace detail

/**
 * Tensor product over the Hopf structure. The differential d0 acts on a
 * homogeneous tensor x (x) y with x in degree gx as
 *   d0 x (x) y  +  q0^{-gx.a} x (x) d0 y,
 * the twist being the k-eigenvalue of x (and symmetrically for d1 with
 * q1^{-gx.b}). Dimensions convolve over the grading.
 */
inline GradedModule tensor(const GradedModule& X, const GradedModule& Y) {
    if (X.scheme() != Y.scheme())
        throw std::domain_error("tensor: scheme mismatch");
    const GradingScheme& scheme = X.scheme();
    detail::TensorLayout layout(X, Y);

    GradedModule::DimMap dims;
    for (const auto& [g, d] : layout.dims)
        if (d > 0)
            dims[g] = d;

    GradedModule::BlockMap d0, d1;
    for (Direction dir : {Direction::D0, Direction::D1}) {
        auto& dst = dir == Direction::D0 ? d0 : d1;
        for (const auto& [g, slotlist] : layout.slots) {
            Degree tgt = scheme.step(g, dir);
            auto tgt_it = layout.dims.find(tgt);
            if (tgt_it == layout.dims.end() || tgt_it->second == 0)
                continue;
            GradedModule::Block blk(static_cast<size_t>(tgt_it->second),
                                    static_cast<size_t>(layout.dims.at(g)));
            bool nonzero = false;
            for (const auto& slot : slotlist) {
                long dx = X.dim(slot.gx), dy = Y.dim(slot.gy);
                // d acting on the X factor: slot (gx + e, gy) of the target
                long tgt_off = layout.offset_of(tgt, scheme.step(slot.gx, dir), slot.gy);
                if (tgt_off >= 0) {
                    GradedModule::Block bx = X.block(dir, slot.gx);
                    long dx_t = X.dim(scheme.step(slot.gx, dir));
                    for (long i2 = 0; i2 < dx_t; ++i2)
                        for (long i = 0; i < dx; ++i) {
                            const CyclotomicScalar& c = bx(static_cast<size_t>(i2), static_cast<size_t>(i));
                            if (c.is_zero())
                                continue;
                            for (long j = 0; j < dy; ++j) {
                                blk(static_cast<size_t>(tgt_off + i2 * dy + j),
                                    static_cast<size_t>(slot.offset + i * dy + j)) = c;
                                nonzero = true;
                            }
                        }
                }
                // d acting on the Y factor, twisted by the k-eigenvalue of x
                tgt_off = layout.offset_of(tgt, slot.gx, scheme.step(slot.gy, dir));
                if (tgt_off >= 0) {
                    CyclotomicScalar tw = scheme.twist(dir, slot.gx);
                    GradedModule::Block by = Y.block(dir, slot.gy);
                    long dy_t = Y.dim(scheme.step(slot.gy, dir));
                    for (long j2 = 0; j2 < dy_t; ++j2)
                        for (long j = 0; j < dy; ++j) {
                            const CyclotomicScalar& c = by(static_cast<size_t>(j2), static_cast<size_t>(j));
                            if (c.is_zero())
                                continue;
                            CyclotomicScalar tc = tw * c;
                            for (long i = 0; i < dx; ++i) {
                                size_t r = static_cast<size_t>(tgt_off + i * dy_t + j2);
                                size_t s = static_cast<size_t>(slot.offset + i * dy + j);
                                blk(r, s) = blk(r, s) + tc;
                                nonzero = true;
                            }
                        }
                }
            }
            if (nonzero)
                dst[g] = std::move(blk);
        }
    }
    return GradedModule(scheme, std::move(dims), std::move(d0), std::move(d1));
}

// The monoidal unit: one dimension in degree (0,0), zero differentials.
inline GradedModule unit_module(const GradingScheme& scheme) {
    return GradedModule(scheme, {{Degree{0, 0}, 1}}, {}, {});
}

/**
 * The 15-dimensional cyclically graded module over H_3 (x) H_5 witnessing
 * that the two restriction kernels fail to intersect trivially in the
 * cyclic setting: it validates, lies in both kernels, and is not free.
 * Only (n, m) = (3, 5) is available.
 *
 * Degrees are (row mod 3, column mod 5); each of the 15 degrees carries one
 * dimension. The identity actions sit exactly on the arrows listed below;
 * every other block is zero.
 */
inline GradedModule counterexample_module(long n = 3, long m = 5) {
    if (n != 3 || m != 5)
        throw std::domain_error(
            "counterexample_module: only the (3,5) instance is available");
    GradingScheme scheme = GradingScheme::cyclic(3, 5);
    GradedModule::DimMap dims;
    for (long a = 0; a < 3; ++a)
        for (long b = 0; b < 5; ++b)
            dims[{a, b}] = 1;

    GradedModule::Block id1 = GradedModule::Block::identity(1, scheme.one());
    GradedModule::BlockMap d0, d1;
    // d1 (horizontal, column + 1 mod 5):
    //   row 0: (0,1)->(0,2)->(0,3)->(0,4) and the wrap (0,4)->(0,0)
    //   rows 1 and 2: full chains from column 0 to column 4, no wrap
    for (long c : {1, 2, 3, 4})
        d1[{0, c}] = id1;
    for (long c : {0, 1, 2, 3})
        d1[{1, c}] = id1;
    for (long c : {0, 1, 2, 3})
        d1[{2, c}] = id1;
    // d0 (vertical, row + 1 mod 3):
    //   from (0,c) for c in {1,2,3,4}; from (1,c) for every c; the wrap (2,0)->(0,0)
    for (long c : {1, 2, 3, 4})
        d0[{0, c}] = id1;
    for (long c : {0, 1, 2, 3, 4})
        d0[{1, c}] = id1;
    d0[{2, 0}] = id1;

    return GradedModule(scheme, std::move(dims), std::move(d0), std::move(d1));
}

/**
 * Degree-(0,0) linear map commuting with both differentials. Source and
 * target are stored by value; blocks are kept per degree with zero blocks
 * omitted.
 */
class ModuleMorphism {
public:
    using Block = GradedModule::Block;
    using BlockMap = std::map<Degree, Block>;

    ModuleMorphism(GradedModule source, GradedModule target, BlockMap blocks)
        : source_(std::move(source)), target_(std::move(target)) {
        if (source_.scheme() != target_.scheme())
            throw std::domain_error("ModuleMorphism: scheme mismatch");
        for (auto& [g, b] : blocks) {
            Degree gn = source_.scheme().normalize(g);
            if (b.rows() != static_cast<size_t>(target_.dim(gn)) ||
                b.cols() != static_cast<size_t>(source_.dim(gn)))
                throw std::domain_error("ModuleMorphism: block shape mismatch at " + gn.to_string());
            if (!b.is_zero())
                blocks_.emplace(gn, std::move(b));
        }
    }

    const GradedModule& source() const { return source_; }
    const GradedModule& target() const { return target_; }
    const BlockMap& blocks() const { return blocks_; }

    Block block(Degree g) const {
        Degree gn = source_.scheme().normalize(g);
        auto it = blocks_.find(gn);
        if (it != blocks_.end())
            return it->second;
        return Block(static_cast<size_t>(target_.dim(gn)), static_cast<size_t>(source_.dim(gn)));
    }

    bool is_zero() const { return blocks_.empty(); }

    std::vector<std::string> validate() const {
        std::vector<std::string> violations;
        const GradingScheme& scheme = source_.scheme();
        for (Direction dir : {Direction::D0, Direction::D1}) {
            const char* name = dir == Direction::D0 ? "d0" : "d1";
            std::map<Degree, bool> degrees;
            for (const auto& [g, d] : source_.dims())
                degrees[g] = true;
            for (const auto& [g, unused] : degrees) {
                Block lhs = block(scheme.step(g, dir)) * source_.block(dir, g);
                Block rhs = target_.block(dir, g) * block(g);
                if (lhs != rhs)
                    violations.push_back(std::string("morphism does not commute with ") + name +
                                         " at " + g.to_string());
            }
        }
        return violations;
    }

    friend ModuleMorphism operator+(const ModuleMorphism& f, const ModuleMorphism& g) {
        if (f.source_ != g.source_ || f.target_ != g.target_)
            throw std::domain_error("ModuleMorphism: adding maps with different ends");
        BlockMap sum = f.blocks_;
        for (const auto& [d, b] : g.blocks_) {
            auto it = sum.find(d);
            if (it == sum.end())
                sum[d] = b;
            else
                it->second = it->second + b;
        }
        return ModuleMorphism(f.source_, f.target_, std::move(sum));
    }

    friend ModuleMorphism operator*(const CyclotomicScalar& c, const ModuleMorphism& f) {
        BlockMap scaled;
        for (const auto& [d, b] : f.blocks_)
            scaled[d] = c * b;
        return ModuleMorphism(f.source_, f.target_, std::move(scaled));
    }

    friend bool operator==(const ModuleMorphism& f, const ModuleMorphism& g) {
        return f.source_ == g.source_ && f.target_ == g.target_ && f.blocks_ == g.blocks_;
    }

private:
    GradedModule source_, target_;
    BlockMap blocks_;
};

inline ModuleMorphism identity_morphism(const GradedModule& M) {
    ModuleMorphism::BlockMap blocks;
    for (const auto& [g, d] : M.dims())
        blocks[g] = GradedModule::Block::identity(static_cast<size_t>(d), M.scheme().one());
    return ModuleMorphism(M, M, std::move(blocks));
}

inline ModuleMorphism zero_morphism(const GradedModule& X, const GradedModule& Y) {
    return ModuleMorphism(X, Y, {});
}

// g after f.
inline ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f) {
    if (f.target() != g.source())
        throw std::domain_error("compose: middle objects differ");
    ModuleMorphism::BlockMap blocks;
    for (const auto& [d, unused] : f.source().dims())
        blocks[d] = g.block(d) * f.block(d);
    return ModuleMorphism(f.source(), g.target(), std::move(blocks));
}

}  // namespace taftcat
