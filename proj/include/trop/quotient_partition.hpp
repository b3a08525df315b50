#pragma once

#include <map>

#include "trop/partition.hpp"
#include "trop/quotient.hpp"

namespace trop {

// Block of a Z^n-invariant d-partition of a quotient group Z^n/L. Finite
// blocks hold canonical representatives; coset blocks are (M/L)-cosets for an
// intermediate lattice L ⊆ M ⊊ Z^n (offset normalized away: orbit rep).
struct QBlock {
    enum class Kind { Finite, Coset };

    Kind kind = Kind::Finite;
    std::vector<IntVec> reps;  // Finite: canonical orbit form, sorted
    IntegerLattice mid;        // Coset

    static QBlock finite(const QuotientGroup& Q, std::vector<IntVec> pts) {
        std::vector<IntVec> reps;
        reps.reserve(pts.size());
        for (const auto& p : pts) reps.push_back(Q.rep(p));
        reps = normalize_points(std::move(reps));
        if (reps.empty()) throw ValidationError("quotient block: empty point set");
        // orbit canonical form: minimal sorted translate over all point-to-0 shifts
        std::vector<IntVec> best;
        for (const auto& p : reps) {
            std::vector<IntVec> cand;
            cand.reserve(reps.size());
            for (const auto& x : reps) cand.push_back(Q.sub(x, p));
            std::sort(cand.begin(), cand.end());
            if (best.empty() || cand < best) best = std::move(cand);
        }
        QBlock b;
        b.kind = Kind::Finite;
        b.reps = std::move(best);
        return b;
    }

    static QBlock coset(const QuotientGroup& Q, IntegerLattice m) {
        if (!lattice_contains(m, Q.lattice()))
            throw ValidationError("coset block: intermediate lattice does not contain L");
        if (m == Q.lattice())
            throw ValidationError("coset block: intermediate lattice equals L (trivial subgroup)");
        QBlock b;
        b.kind = Kind::Coset;
        b.mid = std::move(m);
        return b;
    }

    bool is_finite() const { return kind == Kind::Finite; }

    // Number of group elements in the block; nullopt = infinite.
    std::optional<Int> size(const QuotientGroup& Q) const {
        if (is_finite()) return Int(reps.size());
        return subgroup_index(mid, Q.lattice());
    }

    bool contains(const QuotientGroup& Q, const IntVec& v, const IntVec& shift) const {
        if (is_finite()) return sorted_contains(reps, Q.sub(v, shift));
        return member(mid, sub(v, shift));
    }

    // Materialized representative set of (shift + block); finite blocks only.
    std::vector<IntVec> materialize(const QuotientGroup& Q, const IntVec& shift,
                                    long long limit = 1 << 16) const {
        std::vector<IntVec> out;
        if (is_finite()) {
            for (const auto& r : reps) out.push_back(Q.add(shift, r));
            return normalize_points(std::move(out));
        }
        auto idx = subgroup_index(mid, Q.lattice());
        if (!idx || *idx > limit) throw ResourceError("coset block too large to materialize");
        std::set<IntVec> seen;
        std::vector<IntVec> stack{Q.rep(shift)};
        seen.insert(stack.back());
        while (!stack.empty()) {
            IntVec cur = stack.back();
            stack.pop_back();
            for (const auto& g : mid.basis())
                for (const IntVec& nb : {Q.add(cur, g), Q.sub(cur, g)})
                    if (seen.insert(nb).second) stack.push_back(nb);
        }
        return {seen.begin(), seen.end()};
    }

    friend bool operator==(const QBlock& a, const QBlock& b) {
        return a.kind == b.kind && a.reps == b.reps && a.mid == b.mid;
    }
    friend bool operator<(const QBlock& a, const QBlock& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.kind == Kind::Finite) return a.reps < b.reps;
        return a.mid < b.mid;
    }
};

class QuotientGeneratorSet {
public:
    QuotientGeneratorSet(QuotientGroup Q, int d, std::vector<QBlock> blocks)
        : Q_(std::move(Q)), d_(d) {
        if (d < 1) throw ValidationError("quotient generator set: d must be >= 1");
        std::sort(blocks.begin(), blocks.end());
        blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
        blocks_ = std::move(blocks);
    }

    const QuotientGroup& group() const { return Q_; }
    int dim() const { return Q_.ambient_dim(); }
    int d() const { return d_; }
    const std::vector<QBlock>& blocks() const { return blocks_; }

    friend bool operator==(const QuotientGeneratorSet& a, const QuotientGeneratorSet& b) {
        return a.Q_ == b.Q_ && a.d_ == b.d_ && a.blocks_ == b.blocks_;
    }

private:
    QuotientGroup Q_;
    int d_;
    std::vector<QBlock> blocks_;
};

// (A1)-(A3) over the quotient group; translation ranges over Z^n/L. Unlike
// the Z^n case, finite blocks may have nonzero stabilizers and coset blocks
// may be finite, so every overlap is followed by a genuine set comparison.
inline AxiomCheck check_generator_axioms_q(const QuotientGeneratorSet& A) {
    const QuotientGroup& Q = A.group();
    const int n = A.dim();
    const int d = A.d();
    const auto& blocks = A.blocks();
    auto qorder = Q.order();

    for (size_t i = 0; i < blocks.size(); ++i) {
        const QBlock& b = blocks[i];
        auto sz = b.size(Q);
        if (sz && *sz < d)
            return AxiomCheck::violation("A2", static_cast<int>(i), -1, zero_vec(n),
                                         "block has fewer than d elements");
        bool whole = false;
        if (b.is_finite())
            whole = qorder.has_value() && Int(b.reps.size()) == *qorder;
        else
            whole = b.mid.is_full();
        if (whole)
            return AxiomCheck::violation("A1", static_cast<int>(i), -1, zero_vec(n),
                                         "block equals the whole quotient group");
    }

    // finite materializations of coset blocks, for exact set comparisons
    std::vector<std::vector<IntVec>> coset_pts(blocks.size());
    for (size_t i = 0; i < blocks.size(); ++i)
        if (!blocks[i].is_finite() && blocks[i].size(Q).has_value())
            coset_pts[i] = blocks[i].materialize(Q, zero_vec(n));  // throws past the budget

    auto block_points = [&](size_t i) -> const std::vector<IntVec>& {
        return blocks[i].is_finite() ? blocks[i].reps : coset_pts[i];
    };

    for (size_t i = 0; i < blocks.size(); ++i)
        for (size_t j = 0; j < blocks.size(); ++j) {
            const QBlock& B1 = blocks[i];
            const QBlock& B2 = blocks[j];
            auto s1 = B1.size(Q);
            auto s2 = B2.size(Q);
            const bool f1 = s1.has_value();
            const bool f2 = s2.has_value();
            if (f1 && f2) {
                const auto& P1 = block_points(i);
                const auto& P2 = block_points(j);
                std::set<IntVec> shifts;
                for (const auto& a : P1)
                    for (const auto& b : P2) shifts.insert(Q.sub(a, b));
                for (const auto& u : shifts) {
                    std::vector<IntVec> moved;
                    moved.reserve(P2.size());
                    for (const auto& p : P2) moved.push_back(Q.add(u, p));
                    moved = normalize_points(std::move(moved));
                    if (sorted_overlap(P1, moved) < static_cast<size_t>(d)) continue;
                    if (P1 != moved)
                        return AxiomCheck::violation(
                            "A3", static_cast<int>(i), static_cast<int>(j), u,
                            "blocks overlap in >= d elements without being equal");
                }
            } else if (f1 && !f2) {
                // finite vs infinite coset: group P1's reps by coset of B2.mid
                std::map<IntVec, int> classes;
                for (const auto& p : block_points(i))
                    if (++classes[reduce_mod(B2.mid, p)] >= d)
                        return AxiomCheck::violation(
                            "A3", static_cast<int>(i), static_cast<int>(j),
                            Q.rep(reduce_mod(B2.mid, p)),
                            "finite block meets a coset translate in >= d elements");
            } else if (!f1 && f2) {
                std::map<IntVec, int> classes;
                for (const auto& p : block_points(j))
                    if (++classes[reduce_mod(B1.mid, p)] >= d)
                        return AxiomCheck::violation(
                            "A3", static_cast<int>(i), static_cast<int>(j),
                            Q.negate(reduce_mod(B1.mid, p)),
                            "translated finite block meets a coset block in >= d elements");
            } else {
                if (B1.mid == B2.mid) continue;
                IntegerLattice meet = intersect(B1.mid, B2.mid);
                auto idx = subgroup_index(meet, Q.lattice());
                bool big = !idx.has_value() || *idx >= d;
                if (big)
                    return AxiomCheck::violation(
                        "A3", static_cast<int>(i), static_cast<int>(j), zero_vec(n),
                        "distinct coset blocks overlap in >= d elements");
            }
        }
    return AxiomCheck::valid();
}

class QuotientInvariantPartition {
public:
    explicit QuotientInvariantPartition(QuotientGeneratorSet gens) : gens_(std::move(gens)) {
        AxiomCheck c = check_generator_axioms_q(gens_);
        if (!c.ok)
            throw ValidationError("quotient generator set violates (" + c.axiom + "): " +
                                  c.detail + " [blocks " + std::to_string(c.block1) + "," +
                                  std::to_string(c.block2) + " shift " + vec_str(c.shift) + "]");
    }

    const QuotientGroup& group() const { return gens_.group(); }
    int dim() const { return gens_.dim(); }
    int d() const { return gens_.d(); }
    const std::vector<QBlock>& blocks() const { return gens_.blocks(); }
    const QuotientGeneratorSet& generators() const { return gens_; }

    friend bool operator==(const QuotientInvariantPartition& a,
                           const QuotientInvariantPartition& b) {
        return a.gens_ == b.gens_;
    }

private:
    QuotientGeneratorSet gens_;
};

// find_block over the quotient group; D holds d distinct classes.
inline BlockRef find_block_q(const QuotientInvariantPartition& P,
                             const std::vector<IntVec>& D_in) {
    const QuotientGroup& Q = P.group();
    std::vector<IntVec> D;
    D.reserve(D_in.size());
    for (const auto& p : D_in) D.push_back(Q.rep(p));
    D = normalize_points(std::move(D));
    if (D.size() != D_in.size())
        throw ValidationError("find_block_q: repeated classes in d-set");
    if (static_cast<int>(D.size()) != P.d())
        throw ValidationError("find_block_q: expected exactly d classes");
    const IntVec& d0 = D.front();
    for (size_t b = 0; b < P.blocks().size(); ++b) {
        const QBlock& blk = P.blocks()[b];
        if (blk.is_finite()) {
            for (const auto& q : blk.reps) {
                IntVec u = Q.sub(d0, q);
                bool all = true;
                for (const auto& x : D)
                    if (!blk.contains(Q, x, u)) {
                        all = false;
                        break;
                    }
                if (all) return BlockRef::at(static_cast<int>(b), u);
            }
        } else {
            bool all = true;
            for (const auto& x : D)
                if (!member(blk.mid, sub(x, d0))) {
                    all = false;
                    break;
                }
            if (all) return BlockRef::at(static_cast<int>(b), d0);
        }
    }
    return BlockRef::def();
}

inline std::optional<BlockRef> contains_in_block_q(const QuotientInvariantPartition& P,
                                                   const std::vector<IntVec>& X_in) {
    const QuotientGroup& Q = P.group();
    std::vector<IntVec> X;
    X.reserve(X_in.size());
    for (const auto& p : X_in) X.push_back(Q.rep(p));
    X = normalize_points(std::move(X));
    if (static_cast<int>(X.size()) < P.d())
        throw ValidationError("contains_in_block_q: need at least d classes");
    std::vector<IntVec> D(X.begin(), X.begin() + P.d());
    BlockRef ref = find_block_q(P, D);
    if (!ref.listed) {
        if (static_cast<int>(X.size()) == P.d()) return ref;
        return std::nullopt;
    }
    const QBlock& blk = P.blocks()[static_cast<size_t>(ref.block)];
    for (const auto& x : X)
        if (!blk.contains(Q, x, ref.shift)) return std::nullopt;
    return ref;
}

// Translate of a finite quotient block, in canonical orbit form equality.
inline std::vector<IntVec> translate_qblock(const QuotientGroup& Q,
                                            const std::vector<IntVec>& reps, const IntVec& u) {
    std::vector<IntVec> out;
    out.reserve(reps.size());
    for (const auto& r : reps) out.push_back(Q.add(u, r));
    return normalize_points(std::move(out));
}

// S is a coset of a subgroup of Z^n/L iff the difference set from any fixed
// point is closed under the group operations.
inline bool is_subgroup_coset(const QuotientGroup& Q, const std::vector<IntVec>& reps_in) {
    auto reps = normalize_points(reps_in);
    if (reps.empty()) return false;
    std::set<IntVec> T;
    for (const auto& r : reps) T.insert(Q.sub(r, reps.front()));
    for (const auto& a : T)
        for (const auto& b : T)
            if (!T.count(Q.sub(a, b))) return false;
    return true;
}

}  // namespace trop
