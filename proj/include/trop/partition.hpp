#pragma once

#include <map>

#include "trop/lattice.hpp"
#include "trop/window.hpp"

namespace trop {

// True iff no nonzero translate of S meets S in >= d points, counted over the
// difference multiset.
inline bool is_d_sparse(const std::vector<IntVec>& pts_in, int d) {
    if (d < 1) throw ValidationError("is_d_sparse: d must be >= 1");
    auto pts = normalize_points(pts_in);
    for (const auto& p : pts)
        if (!pts.empty()) check_dim(p, static_cast<int>(pts.front().size()), "is_d_sparse");
    std::map<IntVec, int> diff_count;
    for (const auto& a : pts)
        for (const auto& b : pts) {
            if (a == b) continue;
            if (++diff_count[sub(a, b)] >= d) return false;
        }
    return true;
}

// Orbit representative of a block of a Z^n-invariant d-partition. Finite
// blocks are translated so their lexicographically smallest point is 0;
// affine blocks (infinite, lattice rank >= 1) are translated to offset 0.
struct Block {
    enum class Kind { Finite, Affine };

    Kind kind = Kind::Finite;
    std::vector<IntVec> points;  // Finite: sorted, min point at origin
    IntegerLattice lattice;      // Affine

    static Block finite(std::vector<IntVec> pts) {
        pts = normalize_points(std::move(pts));
        if (pts.empty()) throw ValidationError("finite block: empty point set");
        for (const auto& p : pts)
            check_dim(p, static_cast<int>(pts.front().size()), "finite block point");
        IntVec base = pts.front();
        for (auto& p : pts) p = sub(p, base);
        Block b;
        b.kind = Kind::Finite;
        b.points = std::move(pts);
        return b;
    }

    static Block affine(IntegerLattice lat) {
        if (lat.rank() < 1) throw ValidationError("affine block: lattice rank must be >= 1");
        Block b;
        b.kind = Kind::Affine;
        b.lattice = std::move(lat);
        return b;
    }

    bool is_finite() const { return kind == Kind::Finite; }

    int dim() const {
        return is_finite() ? static_cast<int>(points.front().size()) : lattice.dim();
    }

    // v in (shift + block)?
    bool contains(const IntVec& v, const IntVec& shift) const {
        IntVec w = sub(v, shift);
        if (is_finite()) return sorted_contains(points, w);
        return member(lattice, w);
    }

    friend bool operator==(const Block& a, const Block& b) {
        return a.kind == b.kind && a.points == b.points && a.lattice == b.lattice;
    }
    friend bool operator<(const Block& a, const Block& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.kind == Kind::Finite) return a.points < b.points;
        return a.lattice < b.lattice;
    }
};

class GeneratorSet {
public:
    GeneratorSet(int n, int d, std::vector<Block> blocks) : n_(n), d_(d) {
        if (n < 1) throw ValidationError("generator set: dimension must be >= 1");
        if (d < 1) throw ValidationError("generator set: d must be >= 1");
        for (const auto& b : blocks)
            if (b.dim() != n) throw ValidationError("generator set: block dimension mismatch");
        std::sort(blocks.begin(), blocks.end());
        blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
        blocks_ = std::move(blocks);
    }

    int dim() const { return n_; }
    int d() const { return d_; }
    const std::vector<Block>& blocks() const { return blocks_; }

    friend bool operator==(const GeneratorSet& a, const GeneratorSet& b) {
        return a.n_ == b.n_ && a.d_ == b.d_ && a.blocks_ == b.blocks_;
    }

private:
    int n_, d_;
    std::vector<Block> blocks_;
};

struct AxiomCheck {
    bool ok = true;
    std::string axiom;       // "A1" | "A2" | "A3" when violated
    int block1 = -1, block2 = -1;
    IntVec shift;
    std::string detail;

    static AxiomCheck valid() { return {}; }
    static AxiomCheck violation(std::string ax, int b1, int b2, IntVec u, std::string det) {
        AxiomCheck c;
        c.ok = false;
        c.axiom = std::move(ax);
        c.block1 = b1;
        c.block2 = b2;
        c.shift = std::move(u);
        c.detail = std::move(det);
        return c;
    }
};

// Axioms (A1)-(A3) for a generator set, quantified over all ordered block
// pairs (including equal indices) and all shifts that can produce an overlap.
inline AxiomCheck check_generator_axioms(const GeneratorSet& A) {
    const int n = A.dim();
    const int d = A.d();
    const auto& blocks = A.blocks();

    for (size_t i = 0; i < blocks.size(); ++i) {
        const Block& b = blocks[i];
        if (!b.is_finite() && b.lattice.rank() == n && b.lattice.is_full())
            return AxiomCheck::violation("A1", static_cast<int>(i), -1, zero_vec(n),
                                         "affine block equals the whole of Z^n");
        if (b.is_finite() && static_cast<int>(b.points.size()) < d)
            return AxiomCheck::violation("A2", static_cast<int>(i), -1, zero_vec(n),
                                         "finite block has fewer than d points");
    }

    for (size_t i = 0; i < blocks.size(); ++i)
        for (size_t j = 0; j < blocks.size(); ++j) {
            const Block& A1 = blocks[i];
            const Block& A2 = blocks[j];
            if (A1.is_finite() && A2.is_finite()) {
                // candidate shifts are point differences
                std::set<IntVec> shifts;
                for (const auto& a : A1.points)
                    for (const auto& b : A2.points) shifts.insert(sub(a, b));
                for (const auto& u : shifts) {
                    std::vector<IntVec> moved;
                    moved.reserve(A2.points.size());
                    for (const auto& p : A2.points) moved.push_back(add(u, p));
                    if (sorted_overlap(A1.points, moved) < static_cast<size_t>(d)) continue;
                    if (A1.points != moved)
                        return AxiomCheck::violation(
                            "A3", static_cast<int>(i), static_cast<int>(j), u,
                            "finite blocks overlap in >= d points without being equal");
                }
            } else if (A1.is_finite() && !A2.is_finite()) {
                // group A1's points by coset of A2's lattice
                std::map<IntVec, int> classes;
                for (const auto& p : A1.points)
                    if (++classes[reduce_mod(A2.lattice, p)] >= d)
                        return AxiomCheck::violation(
                            "A3", static_cast<int>(i), static_cast<int>(j),
                            reduce_mod(A2.lattice, p),
                            "finite block meets a translate of an affine block in >= d points");
            } else if (!A1.is_finite() && A2.is_finite()) {
                std::map<IntVec, int> classes;
                for (const auto& p : A2.points)
                    if (++classes[reduce_mod(A1.lattice, p)] >= d)
                        return AxiomCheck::violation(
                            "A3", static_cast<int>(i), static_cast<int>(j),
                            neg(reduce_mod(A1.lattice, p)),
                            "translate of a finite block meets an affine block in >= d points");
            } else {
                if (A1.lattice == A2.lattice) continue;  // translates coincide or are disjoint
                IntegerLattice meet = intersect(A1.lattice, A2.lattice);
                bool infinite_overlap = meet.rank() >= 1;
                if (infinite_overlap || d == 1)
                    return AxiomCheck::violation(
                        "A3", static_cast<int>(i), static_cast<int>(j), zero_vec(n),
                        infinite_overlap
                            ? "distinct affine blocks with infinite translate overlap"
                            : "distinct affine blocks meet in a point (d = 1)");
            }
        }
    return AxiomCheck::valid();
}

// A generator set that passed the axioms; semantic value is the invariant
// d-partition P_d(A) = (Z^n + A) ∪ D.
class InvariantPartition {
public:
    explicit InvariantPartition(GeneratorSet gens) : gens_(std::move(gens)) {
        AxiomCheck c = check_generator_axioms(gens_);
        if (!c.ok)
            throw ValidationError("generator set violates (" + c.axiom + "): " + c.detail +
                                  " [blocks " + std::to_string(c.block1) + "," +
                                  std::to_string(c.block2) + " shift " + vec_str(c.shift) + "]");
    }

    int dim() const { return gens_.dim(); }
    int d() const { return gens_.d(); }
    const std::vector<Block>& blocks() const { return gens_.blocks(); }
    const GeneratorSet& generators() const { return gens_; }

    friend bool operator==(const InvariantPartition& a, const InvariantPartition& b) {
        return a.gens_ == b.gens_;
    }

private:
    GeneratorSet gens_;
};

// Lookup result: a listed block translate, or the implicit default block
// (the d-set itself).
struct BlockRef {
    bool listed = false;
    int block = -1;
    IntVec shift;

    static BlockRef def() { return {}; }
    static BlockRef at(int b, IntVec u) { return {true, b, std::move(u)}; }

    friend bool operator==(const BlockRef& a, const BlockRef& b) {
        return a.listed == b.listed && a.block == b.block && a.shift == b.shift;
    }
};

// Unique block of P_d(A) containing the d-set D (axiom (P3)). Shifts are
// anchored at min(D) so the lookup is translation-equivariant.
inline BlockRef find_block(const InvariantPartition& P, const std::vector<IntVec>& D_in) {
    auto D = normalize_points(D_in);
    if (D.size() != D_in.size()) throw ValidationError("find_block: repeated points in d-set");
    if (static_cast<int>(D.size()) != P.d())
        throw ValidationError("find_block: expected exactly d points");
    for (const auto& p : D) check_dim(p, P.dim(), "find_block");
    const IntVec& d0 = D.front();
    for (size_t b = 0; b < P.blocks().size(); ++b) {
        const Block& blk = P.blocks()[b];
        if (blk.is_finite()) {
            for (const auto& q : blk.points) {
                IntVec u = sub(d0, q);
                bool all = true;
                for (const auto& x : D)
                    if (!blk.contains(x, u)) {
                        all = false;
                        break;
                    }
                if (all) return BlockRef::at(static_cast<int>(b), u);
            }
        } else {
            bool all = true;
            for (const auto& x : D)
                if (!member(blk.lattice, sub(x, d0))) {
                    all = false;
                    break;
                }
            if (all) return BlockRef::at(static_cast<int>(b), d0);
        }
    }
    return BlockRef::def();
}

// The unique listed/default block translate containing X (|X| >= d), if one
// exists. For |X| == d the default block counts as containment.
inline std::optional<BlockRef> contains_in_block(const InvariantPartition& P,
                                                 const std::vector<IntVec>& X_in) {
    auto X = normalize_points(X_in);
    for (const auto& p : X) check_dim(p, P.dim(), "contains_in_block");
    if (static_cast<int>(X.size()) < P.d())
        throw ValidationError("contains_in_block: need at least d points");
    std::vector<IntVec> D(X.begin(), X.begin() + P.d());
    BlockRef ref = find_block(P, D);
    if (!ref.listed) {
        if (static_cast<int>(X.size()) == P.d()) return ref;  // X is its own default block
        return std::nullopt;
    }
    const Block& blk = P.blocks()[static_cast<size_t>(ref.block)];
    for (const auto& x : X)
        if (!blk.contains(x, ref.shift)) return std::nullopt;
    return ref;
}

struct WindowTrace {
    int block;
    IntVec shift;
    std::vector<IntVec> trace;  // (shift + block) ∩ points, sorted

    friend bool operator<(const WindowTrace& a, const WindowTrace& b) {
        if (a.block != b.block) return a.block < b.block;
        return a.shift < b.shift;
    }
};

// Complete, duplicate-free list of block translates meeting the point set in
// at least min_points points.
inline std::vector<WindowTrace> blocks_meeting_points(const InvariantPartition& P,
                                                      const std::vector<IntVec>& pts_in,
                                                      int min_points) {
    auto pts = normalize_points(pts_in);
    for (const auto& p : pts) check_dim(p, P.dim(), "blocks_meeting_points");
    std::vector<WindowTrace> out;
    for (size_t b = 0; b < P.blocks().size(); ++b) {
        const Block& blk = P.blocks()[b];
        if (blk.is_finite()) {
            std::set<IntVec> shifts;
            for (const auto& w : pts)
                for (const auto& q : blk.points) shifts.insert(sub(w, q));
            for (const auto& u : shifts) {
                std::vector<IntVec> trace;
                for (const auto& w : pts)
                    if (blk.contains(w, u)) trace.push_back(w);
                if (static_cast<int>(trace.size()) >= min_points)
                    out.push_back({static_cast<int>(b), u, std::move(trace)});
            }
        } else {
            std::map<IntVec, std::vector<IntVec>> cosets;
            for (const auto& w : pts) cosets[reduce_mod(blk.lattice, w)].push_back(w);
            for (auto& [u, trace] : cosets)
                if (static_cast<int>(trace.size()) >= min_points)
                    out.push_back({static_cast<int>(b), u, std::move(trace)});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<WindowTrace> blocks_meeting_window(const InvariantPartition& P,
                                                      const Window& W, int min_points,
                                                      const Limits& lim = {}) {
    return blocks_meeting_points(P, W.points(lim.max_window_points), min_points);
}

}  // namespace trop
