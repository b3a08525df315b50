#pragma once

#include "trop/matroid.hpp"
#include "trop/partition.hpp"
#include "trop/quotient_partition.hpp"

namespace trop {

// Support of a Boolean-coefficient polynomial: sorted, duplicate-free set of
// exponent vectors. Empty support models the zero polynomial.
using Support = std::vector<IntVec>;

inline Support make_support(std::vector<IntVec> pts) { return normalize_points(std::move(pts)); }

inline Int binom(Int n, int k) {
    if (k < 0 || Int(k) > n) return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - (i - 1)) / i;
    return r;
}

// Zero-dimensional tropical ideal with Boolean coefficients, in one of three
// finite representations:
//   Paving        — degree d+1, a Z^n-invariant d-partition of Z^n
//   Lattice2      — degree 2, a proper sublattice L ⊊ Z^n (cosets of L)
//   QuotientPair  — a sublattice L plus a d-partition of Z^n/L; degree d+1,
//                   minimal supports of sizes 2, d+1, d+2 (d = 2 is the
//                   standard degree-3 case)
class TropicalIdeal {
public:
    enum class Kind { Paving, Lattice2, QuotientPair };

    static TropicalIdeal paving(int n, int d, InvariantPartition P) {
        if (P.dim() != n || P.d() != d)
            throw ValidationError("paving ideal: partition parameters disagree");
        TropicalIdeal I;
        I.kind_ = Kind::Paving;
        I.n_ = n;
        I.d_ = d;
        I.part_.emplace(std::move(P));
        return I;
    }

    static TropicalIdeal from_lattice(IntegerLattice L) {
        if (L.is_full())
            throw ValidationError("degree-2 ideal: lattice must be a proper sublattice of Z^n");
        TropicalIdeal I;
        I.kind_ = Kind::Lattice2;
        I.n_ = L.dim();
        I.d_ = 1;
        I.lat_ = std::move(L);
        return I;
    }

    static TropicalIdeal from_quotient_pair(IntegerLattice L, QuotientInvariantPartition P) {
        if (!(P.group().lattice() == L))
            throw ValidationError("quotient-pair ideal: partition is not over Z^n/L");
        TropicalIdeal I;
        I.kind_ = Kind::QuotientPair;
        I.n_ = L.dim();
        I.d_ = P.d();
        I.lat_ = std::move(L);
        I.qpart_.emplace(std::move(P));
        return I;
    }

    static TropicalIdeal degree3_from_pair(IntegerLattice L, QuotientInvariantPartition P) {
        if (P.d() != 2)
            throw ValidationError("degree-3 ideal: quotient partition must have d = 2");
        return from_quotient_pair(std::move(L), std::move(P));
    }

    static TropicalIdeal uniform(int n, int d) {
        if (d < 1) throw ValidationError("uniform ideal: d must be >= 1");
        if (d == 1) return from_lattice(IntegerLattice::zero(n));
        return paving(n, d, InvariantPartition(GeneratorSet(n, d, {})));
    }

    Kind kind() const { return kind_; }
    int dim() const { return n_; }

    // d-partition parameter of the representation (1 for Lattice2).
    int block_param() const { return d_; }

    int degree() const { return kind_ == Kind::Lattice2 ? 2 : d_ + 1; }

    const InvariantPartition& partition() const {
        if (!part_) throw ValidationError("ideal has no Z^n partition representation");
        return *part_;
    }
    const QuotientInvariantPartition& qpartition() const {
        if (!qpart_) throw ValidationError("ideal has no quotient partition representation");
        return *qpart_;
    }
    const IntegerLattice& lattice() const { return lat_; }

    friend bool operator==(const TropicalIdeal& a, const TropicalIdeal& b) {
        if (a.kind_ != b.kind_ || a.n_ != b.n_ || a.d_ != b.d_) return false;
        switch (a.kind_) {
            case Kind::Paving:
                return *a.part_ == *b.part_;
            case Kind::Lattice2:
                return a.lat_ == b.lat_;
            case Kind::QuotientPair:
                return a.lat_ == b.lat_ && *a.qpart_ == *b.qpart_;
        }
        return false;
    }

private:
    TropicalIdeal() = default;

    Kind kind_ = Kind::Lattice2;
    int n_ = 0;
    int d_ = 1;
    std::optional<InvariantPartition> part_;
    IntegerLattice lat_;
    std::optional<QuotientInvariantPartition> qpart_;
};

inline int degree(const TropicalIdeal& I) { return I.degree(); }

// L_I = {u - v : x^u ⊕ x^v ∈ I} ∪ {0}.
inline IntegerLattice binomial_lattice(const TropicalIdeal& I) {
    switch (I.kind()) {
        case TropicalIdeal::Kind::Lattice2:
        case TropicalIdeal::Kind::QuotientPair:
            return I.lattice();
        case TropicalIdeal::Kind::Paving: {
            if (I.block_param() >= 2) return IntegerLattice::zero(I.dim());
            for (const auto& b : I.partition().blocks())
                if (!b.is_finite()) return b.lattice;
            return IntegerLattice::zero(I.dim());
        }
    }
    return IntegerLattice::zero(I.dim());
}

// Matroid rank of X in uMat(I), through the hyperplane structure of the
// representation.
inline int rank_oracle(const TropicalIdeal& I, const Support& X_in) {
    Support X = make_support(X_in);
    for (const auto& p : X) check_dim(p, I.dim(), "rank_oracle");
    if (X.empty()) return 0;
    switch (I.kind()) {
        case TropicalIdeal::Kind::Paving: {
            const int d = I.block_param();
            if (static_cast<int>(X.size()) <= d) return static_cast<int>(X.size());
            return contains_in_block(I.partition(), X) ? d : d + 1;
        }
        case TropicalIdeal::Kind::Lattice2: {
            std::set<IntVec> classes;
            for (const auto& p : X) classes.insert(reduce_mod(I.lattice(), p));
            return std::min<int>(static_cast<int>(classes.size()), 2);
        }
        case TropicalIdeal::Kind::QuotientPair: {
            const auto& P = I.qpartition();
            const QuotientGroup& Q = P.group();
            std::set<IntVec> cls;
            for (const auto& p : X) cls.insert(Q.rep(p));
            std::vector<IntVec> C(cls.begin(), cls.end());
            const int d = I.block_param();
            if (static_cast<int>(C.size()) <= d) return static_cast<int>(C.size());
            return contains_in_block_q(P, C) ? d : d + 1;
        }
    }
    return 0;
}

// Ideal membership: S is a cycle of uMat(I), i.e. its restriction has no
// coloop. The empty support (zero polynomial) belongs to every ideal.
inline bool contains(const TropicalIdeal& I, const Support& S_in) {
    Support S = make_support(S_in);
    if (S.empty()) return true;
    const int r = rank_oracle(I, S);
    for (size_t i = 0; i < S.size(); ++i) {
        Support T;
        T.reserve(S.size() - 1);
        for (size_t j = 0; j < S.size(); ++j)
            if (j != i) T.push_back(S[j]);
        if (rank_oracle(I, T) != r) return false;
    }
    return true;
}

inline bool is_circuit(const TropicalIdeal& I, const Support& S_in) {
    Support S = make_support(S_in);
    if (S.empty()) return false;
    if (rank_oracle(I, S) >= static_cast<int>(S.size())) return false;  // independent
    for (size_t i = 0; i < S.size(); ++i) {
        Support T;
        for (size_t j = 0; j < S.size(); ++j)
            if (j != i) T.push_back(S[j]);
        if (rank_oracle(I, T) != static_cast<int>(T.size())) return false;
    }
    return true;
}

namespace detail {

// Transversal expansion: one point per class, classes given as index lists.
template <typename F>
void for_each_transversal(const std::vector<const std::vector<int>*>& classes, F&& f) {
    std::vector<size_t> pos(classes.size(), 0);
    std::vector<int> pick(classes.size());
    while (true) {
        for (size_t i = 0; i < classes.size(); ++i) pick[i] = (*classes[i])[pos[i]];
        f(pick);
        size_t i = classes.size();
        bool done = false;
        while (true) {
            if (i == 0) {
                done = true;
                break;
            }
            --i;
            if (++pos[i] < classes[i]->size()) break;
            pos[i] = 0;
        }
        if (done) break;
    }
}

}  // namespace detail

// All circuits of uMat(I) inside the point set, canonically sorted. Sizes can
// be capped with max_size (0 = everything, up to block_param + 2).
inline std::vector<Support> circuits_in_points(const TropicalIdeal& I,
                                               const std::vector<IntVec>& pts_in,
                                               int max_size = 0, const Limits& lim = {}) {
    auto pts = normalize_points(pts_in);
    for (const auto& p : pts) check_dim(p, I.dim(), "circuits_in_points");
    const int d = I.block_param();
    if (max_size == 0) max_size = d + 2;
    std::set<Support> out;
    const int m = static_cast<int>(pts.size());

    switch (I.kind()) {
        case TropicalIdeal::Kind::Lattice2: {
            std::map<IntVec, std::vector<int>> classes;
            for (int i = 0; i < m; ++i) classes[reduce_mod(I.lattice(), pts[static_cast<size_t>(i)])].push_back(i);
            if (max_size >= 2)
                for (const auto& [key, idx] : classes)
                    for (size_t a = 0; a < idx.size(); ++a)
                        for (size_t b = a + 1; b < idx.size(); ++b)
                            out.insert({pts[static_cast<size_t>(idx[a])], pts[static_cast<size_t>(idx[b])]});
            if (max_size >= 3) {
                std::vector<const std::vector<int>*> cls;
                for (const auto& [key, idx] : classes) cls.push_back(&idx);
                Int total = 0;
                for (size_t a = 0; a < cls.size(); ++a)
                    for (size_t b = a + 1; b < cls.size(); ++b)
                        for (size_t c = b + 1; c < cls.size(); ++c)
                            total += Int(cls[a]->size()) * Int(cls[b]->size()) * Int(cls[c]->size());
                if (total > lim.max_subset_scans)
                    throw ResourceError("circuit enumeration budget exceeded");
                for (size_t a = 0; a < cls.size(); ++a)
                    for (size_t b = a + 1; b < cls.size(); ++b)
                        for (size_t c = b + 1; c < cls.size(); ++c)
                            detail::for_each_transversal({cls[a], cls[b], cls[c]},
                                                         [&](const std::vector<int>& pick) {
                                                             Support s;
                                                             for (int i : pick)
                                                                 s.push_back(pts[static_cast<size_t>(i)]);
                                                             out.insert(make_support(std::move(s)));
                                                         });
            }
            break;
        }
        case TropicalIdeal::Kind::Paving: {
            // dependent (d+1)-subsets come from block-translate traces
            std::set<std::vector<int>> dep;
            auto traces = blocks_meeting_points(I.partition(), pts, d + 1);
            std::map<IntVec, int> index_of;
            for (int i = 0; i < m; ++i) index_of[pts[static_cast<size_t>(i)]] = i;
            for (const auto& tr : traces) {
                std::vector<int> tidx;
                for (const auto& p : tr.trace) tidx.push_back(index_of.at(p));
                for_each_combination(static_cast<int>(tidx.size()), d + 1,
                                     [&](const std::vector<int>& sel) {
                                         std::vector<int> g;
                                         for (int s : sel) g.push_back(tidx[static_cast<size_t>(s)]);
                                         std::sort(g.begin(), g.end());
                                         dep.insert(std::move(g));
                                         return true;
                                     });
            }
            if (max_size >= d + 1)
                for (const auto& g : dep) {
                    Support s;
                    for (int i : g) s.push_back(pts[static_cast<size_t>(i)]);
                    out.insert(std::move(s));
                }
            if (max_size >= d + 2) {
                if (binom(m, d + 2) > lim.max_subset_scans)
                    throw ResourceError("circuit enumeration budget exceeded");
                for_each_combination(m, d + 2, [&](const std::vector<int>& sel) {
                    std::vector<int> sub(sel.size() - 1);
                    for (size_t skip = 0; skip < sel.size(); ++skip) {
                        size_t t = 0;
                        for (size_t j = 0; j < sel.size(); ++j)
                            if (j != skip) sub[t++] = sel[j];
                        if (dep.count(sub)) return true;  // has a dependent (d+1)-subset
                    }
                    Support s;
                    for (int i : sel) s.push_back(pts[static_cast<size_t>(i)]);
                    out.insert(std::move(s));
                    return true;
                });
            }
            break;
        }
        case TropicalIdeal::Kind::QuotientPair: {
            const auto& P = I.qpartition();
            const QuotientGroup& Q = P.group();
            std::map<IntVec, std::vector<int>> classes;
            for (int i = 0; i < m; ++i) classes[Q.rep(pts[static_cast<size_t>(i)])].push_back(i);
            if (max_size >= 2)
                for (const auto& [key, idx] : classes)
                    for (size_t a = 0; a < idx.size(); ++a)
                        for (size_t b = a + 1; b < idx.size(); ++b)
                            out.insert({pts[static_cast<size_t>(idx[a])], pts[static_cast<size_t>(idx[b])]});
            std::vector<IntVec> C;
            std::vector<const std::vector<int>*> cpts;
            for (const auto& [key, idx] : classes) {
                C.push_back(key);
                cpts.push_back(&idx);
            }
            const int k = static_cast<int>(C.size());
            // dependent (d+1)-class-sets via block translates on the quotient
            std::set<std::vector<int>> dep;  // indices into C
            for (const auto& blk : P.blocks()) {
                std::map<IntVec, std::vector<int>> hit;  // shift -> class indices
                if (blk.is_finite()) {
                    std::set<IntVec> shifts;
                    for (int ci = 0; ci < k; ++ci)
                        for (const auto& r : blk.reps)
                            shifts.insert(Q.sub(C[static_cast<size_t>(ci)], r));
                    for (const auto& u : shifts)
                        for (int ci = 0; ci < k; ++ci)
                            if (blk.contains(Q, C[static_cast<size_t>(ci)], u))
                                hit[u].push_back(ci);
                } else {
                    for (int ci = 0; ci < k; ++ci)
                        hit[reduce_mod(blk.mid, C[static_cast<size_t>(ci)])].push_back(ci);
                }
                for (const auto& [u, cls] : hit)
                    if (static_cast<int>(cls.size()) >= d + 1)
                        for_each_combination(static_cast<int>(cls.size()), d + 1,
                                             [&](const std::vector<int>& sel) {
                                                 std::vector<int> g;
                                                 for (int s : sel)
                                                     g.push_back(cls[static_cast<size_t>(s)]);
                                                 std::sort(g.begin(), g.end());
                                                 dep.insert(std::move(g));
                                                 return true;
                                             });
            }
            auto expand = [&](const std::vector<int>& class_sel) {
                std::vector<const std::vector<int>*> chosen;
                Int count = 1;
                for (int ci : class_sel) {
                    chosen.push_back(cpts[static_cast<size_t>(ci)]);
                    count *= Int(cpts[static_cast<size_t>(ci)]->size());
                }
                if (count > lim.max_subset_scans)
                    throw ResourceError("circuit enumeration budget exceeded");
                detail::for_each_transversal(chosen, [&](const std::vector<int>& pick) {
                    Support s;
                    for (int i : pick) s.push_back(pts[static_cast<size_t>(i)]);
                    out.insert(make_support(std::move(s)));
                });
            };
            if (max_size >= d + 1)
                for (const auto& g : dep) expand(g);
            if (max_size >= d + 2) {
                if (binom(k, d + 2) > lim.max_subset_scans)
                    throw ResourceError("circuit enumeration budget exceeded");
                for_each_combination(k, d + 2, [&](const std::vector<int>& sel) {
                    std::vector<int> sub(sel.size() - 1);
                    for (size_t skip = 0; skip < sel.size(); ++skip) {
                        size_t t = 0;
                        for (size_t j = 0; j < sel.size(); ++j)
                            if (j != skip) sub[t++] = sel[j];
                        if (dep.count(sub)) return true;
                    }
                    expand(sel);
                    return true;
                });
            }
            break;
        }
    }
    return {out.begin(), out.end()};
}

inline std::vector<Support> circuits_in_window(const TropicalIdeal& I, const Window& W,
                                               int max_size = 0, const Limits& lim = {}) {
    return circuits_in_points(I, W.points(lim.max_window_points), max_size, lim);
}

// uMat(I|_E) for a finite point set E.
inline FiniteMatroid restrict_matroid(const TropicalIdeal& I, const std::vector<IntVec>& pts,
                                      const Limits& lim = {}) {
    auto points = normalize_points(pts);
    LabelSet ground;
    for (const auto& p : points) ground.push_back(Label::point(p));
    std::vector<LabelSet> circuits;
    for (const auto& c : circuits_in_points(I, points, 0, lim)) {
        LabelSet s;
        for (const auto& p : c) s.push_back(Label::point(p));
        circuits.push_back(std::move(s));
    }
    return FiniteMatroid(std::move(ground), std::move(circuits));
}

inline FiniteMatroid restrict_matroid(const TropicalIdeal& I, const Window& W,
                                      const Limits& lim = {}) {
    return restrict_matroid(I, W.points(lim.max_window_points), lim);
}

// Dependence decided from the block structure alone (no rank arithmetic);
// independent oracle used by the degree verifier.
inline bool dependent_primitive(const TropicalIdeal& I, const std::vector<IntVec>& X) {
    switch (I.kind()) {
        case TropicalIdeal::Kind::Lattice2: {
            if (X.size() >= 3) return true;
            if (X.size() == 2) return member(I.lattice(), sub(X[0], X[1]));
            return false;
        }
        case TropicalIdeal::Kind::Paving: {
            const int d = I.block_param();
            if (static_cast<int>(X.size()) <= d) return false;
            if (static_cast<int>(X.size()) >= d + 2) return true;
            return contains_in_block(I.partition(), X).has_value();
        }
        case TropicalIdeal::Kind::QuotientPair: {
            const auto& P = I.qpartition();
            const QuotientGroup& Q = P.group();
            std::set<IntVec> cls;
            for (const auto& p : X) cls.insert(Q.rep(p));
            if (cls.size() < X.size()) return true;  // parallel pair
            const int d = I.block_param();
            std::vector<IntVec> C(cls.begin(), cls.end());
            if (static_cast<int>(C.size()) <= d) return false;
            if (static_cast<int>(C.size()) >= d + 2) return true;
            return contains_in_block_q(P, C).has_value();
        }
    }
    return false;
}

// Brute-force degree check: an independent set of the claimed size exists in
// the window and every larger subset is dependent.
inline bool verify_degree_on_window(const TropicalIdeal& I, const Window& W,
                                    const Limits& lim = {}) {
    auto pts = W.points(lim.max_window_points);
    const int D = I.degree();
    const int m = static_cast<int>(pts.size());
    if (m < D + 1) throw ValidationError("verify_degree_on_window: window too small");
    long long budget = lim.max_subset_scans;
    bool found = false;
    for_each_combination(m, D, [&](const std::vector<int>& sel) {
        if (--budget < 0) throw ResourceError("degree verification budget exceeded");
        std::vector<IntVec> X;
        for (int i : sel) X.push_back(pts[static_cast<size_t>(i)]);
        if (!dependent_primitive(I, X)) {
            found = true;
            return false;
        }
        return true;
    });
    if (!found) return false;
    bool all_dep = for_each_combination(m, D + 1, [&](const std::vector<int>& sel) {
        if (--budget < 0) throw ResourceError("degree verification budget exceeded");
        std::vector<IntVec> X;
        for (int i : sel) X.push_back(pts[static_cast<size_t>(i)]);
        return dependent_primitive(I, X);
    });
    return all_dep;
}

// Extends a paving matroid on a d-sparse point set to a paving tropical
// ideal: the generators are the embedded hyperplanes of size >= d+1; size-d
// hyperplanes reappear as default blocks.
inline TropicalIdeal extend_matroid(const FiniteMatroid& M,
                                    const std::map<Label, IntVec>& embedding) {
    if (M.rank() < 2) throw ValidationError("extend_matroid: matroid rank must be >= 2");
    if (!is_paving(M)) throw ValidationError("extend_matroid: matroid is not paving");
    const int d = M.rank() - 1;
    std::vector<IntVec> image;
    int n = -1;
    for (const auto& l : M.ground()) {
        auto it = embedding.find(l);
        if (it == embedding.end())
            throw ValidationError("extend_matroid: embedding misses label " + l.str());
        if (n < 0) n = static_cast<int>(it->second.size());
        check_dim(it->second, n, "extend_matroid embedding");
        image.push_back(it->second);
    }
    if (normalize_points(image).size() != image.size())
        throw ValidationError("extend_matroid: embedding is not injective");
    if (!is_d_sparse(image, d))
        throw ValidationError("extend_matroid: embedded image is not d-sparse");
    std::vector<Block> blocks;
    for (const auto& h : hyperplanes_of(M)) {
        if (static_cast<int>(h.size()) < d + 1) continue;
        std::vector<IntVec> pts;
        for (const auto& l : h) pts.push_back(embedding.at(l));
        blocks.push_back(Block::finite(std::move(pts)));
    }
    return TropicalIdeal::paving(n, d, InvariantPartition(GeneratorSet(n, d, std::move(blocks))));
}

// Restriction to the coordinate subring on the given axes (0-based). The
// result is re-validated; degree-2 results are returned in lattice form.
inline TropicalIdeal restrict_vars(const TropicalIdeal& I, const std::vector<int>& axes_in) {
    std::vector<int> axes(axes_in);
    std::sort(axes.begin(), axes.end());
    axes.erase(std::unique(axes.begin(), axes.end()), axes.end());
    const int n = I.dim();
    if (axes.empty()) throw ValidationError("restrict_vars: empty axes set");
    if (static_cast<int>(axes.size()) >= n)
        throw ValidationError("restrict_vars: axes must be a proper subset of coordinates");
    for (int a : axes)
        if (a < 0 || a >= n) throw ValidationError("restrict_vars: axis out of range");
    if (I.kind() == TropicalIdeal::Kind::QuotientPair)
        throw ValidationError("restrict_vars: quotient-pair representation not supported");

    const int d = I.block_param();
    const int m = static_cast<int>(axes.size());
    std::vector<Block> blocks;
    if (I.kind() == TropicalIdeal::Kind::Paving)
        blocks = I.partition().blocks();
    else if (I.lattice().rank() >= 1)
        blocks.push_back(Block::affine(I.lattice()));

    // containment branch: some block translate contains the whole coordinate
    // sublattice, and the restriction drops one degree
    for (const auto& b : blocks) {
        if (b.is_finite()) continue;
        bool contains_axes = true;
        for (int a : axes)
            if (!member(b.lattice, unit_vec(n, a))) {
                contains_axes = false;
                break;
            }
        if (contains_axes) {
            if (d == 1)
                throw ValidationError(
                    "restrict_vars: restriction collapses to a degree-1 ideal, which has no "
                    "finite representation here");
            return TropicalIdeal::uniform(m, d - 1);
        }
    }

    std::set<Block> traced;
    for (const auto& b : blocks) {
        if (b.is_finite()) {
            // group points by off-axes pattern; each rich fiber leaves a trace
            std::set<int> axset(axes.begin(), axes.end());
            std::map<IntVec, std::vector<IntVec>> fibers;
            for (const auto& p : b.points) {
                IntVec off, on;
                for (int j = 0; j < n; ++j)
                    (axset.count(j) ? on : off).push_back(p[static_cast<size_t>(j)]);
                fibers[off].push_back(on);
            }
            for (auto& [off, on_pts] : fibers)
                if (static_cast<int>(on_pts.size()) >= d)
                    traced.insert(Block::finite(on_pts));
        } else {
            IntegerLattice sec = coordinate_section(b.lattice, axes);
            if (sec.rank() >= 1) traced.insert(Block::affine(std::move(sec)));
            // rank-0 sections trace single points per translate; those are
            // default blocks and are never stored
        }
    }
    GeneratorSet gens(m, d, {traced.begin(), traced.end()});
    InvariantPartition P(std::move(gens));  // re-validation of (A1)-(A3)
    if (d == 1) {
        if (P.blocks().empty()) return TropicalIdeal::from_lattice(IntegerLattice::zero(m));
        return TropicalIdeal::from_lattice(P.blocks().front().lattice);
    }
    return TropicalIdeal::paving(m, d, std::move(P));
}

// --- named constructions -------------------------------------------------

// Degree-3 paving ideal in one variable generated by the block {m^s : s ∈ S}.
inline TropicalIdeal m_s_ideal(const Int& m, const std::vector<Int>& S_in) {
    if (m < 2) throw ValidationError("m_s_ideal: base must be >= 2");
    std::vector<Int> S(S_in);
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
    if (S.size() < 2) throw ValidationError("m_s_ideal: need |S| >= 2");
    if (S.front() < 0) throw ValidationError("m_s_ideal: exponents must be nonnegative");
    std::vector<IntVec> pts;
    for (const Int& s : S) {
        Int v = 1;
        for (Int i = 0; i < s; ++i) v *= m;
        pts.push_back({v});
    }
    if (!is_d_sparse(pts, 2)) throw ValidationError("m_s_ideal: block is not 2-sparse");
    return TropicalIdeal::paving(
        1, 2, InvariantPartition(GeneratorSet(1, 2, {Block::finite(std::move(pts))})));
}

// Quotient-pair ideal from the block S = {(x,y) : x ∈ {0,2,...,2d-4}, y ∈ {0,1}}
// over Z^2 / <(2d-2, 0)>: for d >= 3 the block is stabilized by [(2,0)] but is
// not a subgroup coset.
inline TropicalIdeal remark_example(int d = 3) {
    if (d < 3) throw ValidationError("remark_example: requires d >= 3");
    IntegerLattice L = hnf(2, {{Int(2 * d - 2), Int(0)}});
    QuotientGroup Q(L);
    std::vector<IntVec> S;
    for (int x = 0; x <= 2 * d - 4; x += 2)
        for (int y = 0; y <= 1; ++y) S.push_back({Int(x), Int(y)});
    QuotientGeneratorSet gens(Q, d, {QBlock::finite(Q, std::move(S))});
    return TropicalIdeal::from_quotient_pair(L, QuotientInvariantPartition(std::move(gens)));
}

inline TropicalIdeal uniform_ideal(int n, int d) { return TropicalIdeal::uniform(n, d); }

inline TropicalIdeal degree2_from_lattice(IntegerLattice L) {
    return TropicalIdeal::from_lattice(std::move(L));
}

// Semantic comparison on a probe window; structural equality (operator==) is
// sound within one representation, this bridges across representations.
inline bool semantically_equal_on_window(const TropicalIdeal& a, const TropicalIdeal& b,
                                         const Window& W, const Limits& lim = {}) {
    if (a.dim() != b.dim() || degree(a) != degree(b)) return false;
    return circuits_in_window(a, W, 0, lim) == circuits_in_window(b, W, 0, lim);
}

}  // namespace trop
