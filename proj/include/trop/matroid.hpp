#pragma once

#include <bit>
#include <functional>
#include <map>
#include <numeric>

#include "trop/core.hpp"

namespace trop {

// Ground-set element: an exponent vector (when the matroid was cut out of a
// window) or an opaque token. Points and tokens never compare equal.
class Label {
public:
    static Label point(IntVec v) {
        Label l;
        l.is_point_ = true;
        l.vec_ = std::move(v);
        return l;
    }
    static Label token(std::string s) {
        Label l;
        l.is_point_ = false;
        l.tok_ = std::move(s);
        return l;
    }

    bool is_point() const { return is_point_; }
    const IntVec& vec() const { return vec_; }
    const std::string& tok() const { return tok_; }

    std::string str() const { return is_point_ ? vec_str(vec_) : tok_; }

    friend bool operator==(const Label& a, const Label& b) {
        return a.is_point_ == b.is_point_ && a.vec_ == b.vec_ && a.tok_ == b.tok_;
    }
    friend bool operator<(const Label& a, const Label& b) {
        if (a.is_point_ != b.is_point_) return a.is_point_ < b.is_point_;
        if (a.is_point_) return a.vec_ < b.vec_;
        return a.tok_ < b.tok_;
    }

private:
    bool is_point_ = false;
    IntVec vec_;
    std::string tok_;
};

using LabelSet = std::vector<Label>;  // sorted, duplicate-free

inline LabelSet normalize_labels(LabelSet ls) {
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    return ls;
}

struct AxiomFailure {
    std::string axiom;
    std::string detail;
};

struct AxiomReport {
    bool passed = true;
    std::vector<AxiomFailure> failures;

    void fail(std::string axiom, std::string detail) {
        passed = false;
        failures.push_back({std::move(axiom), std::move(detail)});
    }
};

// Explicit matroid on a finite labeled ground set, circuits as the primary
// representation. Equality is label-aware: equal grounds and equal circuit
// sets, no isomorphism search.
class FiniteMatroid {
public:
    FiniteMatroid(LabelSet ground, std::vector<LabelSet> circuits)
        : ground_(normalize_labels(std::move(ground))) {
        for (auto& c : circuits) {
            c = normalize_labels(std::move(c));
            if (c.empty()) throw ValidationError("matroid: empty circuit");
            std::vector<int> idx;
            for (const auto& l : c) {
                int i = index_of(l);
                if (i < 0) throw ValidationError("matroid: circuit label not in ground set");
                idx.push_back(i);
            }
            circuits_.push_back(std::move(idx));
        }
        std::sort(circuits_.begin(), circuits_.end());
        circuits_.erase(std::unique(circuits_.begin(), circuits_.end()), circuits_.end());
        for (size_t i = 0; i < circuits_.size(); ++i)
            for (size_t j = 0; j < circuits_.size(); ++j)
                if (i != j && std::includes(circuits_[j].begin(), circuits_[j].end(),
                                            circuits_[i].begin(), circuits_[i].end()))
                    throw ValidationError("matroid: comparable circuits " + circuit_str(i) +
                                          " and " + circuit_str(j));
        rank_ = rank_of_indices(all_indices());
    }

    const LabelSet& ground() const { return ground_; }
    int size() const { return static_cast<int>(ground_.size()); }
    int rank() const { return rank_; }
    const std::vector<std::vector<int>>& circuit_indices() const { return circuits_; }

    std::vector<LabelSet> circuits() const {
        std::vector<LabelSet> out;
        for (const auto& c : circuits_) {
            LabelSet s;
            for (int i : c) s.push_back(ground_[static_cast<size_t>(i)]);
            out.push_back(std::move(s));
        }
        return out;
    }

    int index_of(const Label& l) const {
        auto it = std::lower_bound(ground_.begin(), ground_.end(), l);
        if (it == ground_.end() || !(*it == l)) return -1;
        return static_cast<int>(it - ground_.begin());
    }

    bool is_independent_indices(const std::vector<int>& sorted_idx) const {
        for (const auto& c : circuits_)
            if (std::includes(sorted_idx.begin(), sorted_idx.end(), c.begin(), c.end()))
                return false;
        return true;
    }

    // Greedy over the circuit oracle; exact for matroids.
    int rank_of_indices(std::vector<int> idx) const {
        std::sort(idx.begin(), idx.end());
        std::vector<int> cur;
        for (int e : idx) {
            cur.push_back(e);  // idx sorted, so cur stays sorted
            if (!is_independent_indices(cur)) cur.pop_back();
        }
        return static_cast<int>(cur.size());
    }

    int rank_of(const LabelSet& X) const {
        std::vector<int> idx;
        for (const auto& l : normalize_labels(X)) {
            int i = index_of(l);
            if (i < 0) throw ValidationError("rank_of: unknown label " + l.str());
            idx.push_back(i);
        }
        return rank_of_indices(std::move(idx));
    }

    FiniteMatroid restrict(const LabelSet& sub) const {
        LabelSet g = normalize_labels(sub);
        for (const auto& l : g)
            if (index_of(l) < 0) throw ValidationError("restrict: unknown label " + l.str());
        std::set<Label> keep(g.begin(), g.end());
        std::vector<LabelSet> cs;
        for (const auto& c : circuits()) {
            bool inside = std::all_of(c.begin(), c.end(),
                                      [&](const Label& l) { return keep.count(l) > 0; });
            if (inside) cs.push_back(c);
        }
        return FiniteMatroid(std::move(g), std::move(cs));
    }

    FiniteMatroid relabel(const std::map<Label, Label>& f) const {
        auto apply = [&](const Label& l) {
            auto it = f.find(l);
            if (it == f.end()) throw ValidationError("relabel: no image for " + l.str());
            return it->second;
        };
        LabelSet g;
        for (const auto& l : ground_) g.push_back(apply(l));
        if (normalize_labels(g).size() != g.size())
            throw ValidationError("relabel: map is not injective on the ground set");
        std::vector<LabelSet> cs;
        for (const auto& c : circuits()) {
            LabelSet img;
            for (const auto& l : c) img.push_back(apply(l));
            cs.push_back(std::move(img));
        }
        return FiniteMatroid(std::move(g), std::move(cs));
    }

    friend bool operator==(const FiniteMatroid& a, const FiniteMatroid& b) {
        return a.ground_ == b.ground_ && a.circuits_ == b.circuits_;
    }

private:
    std::vector<int> all_indices() const {
        std::vector<int> idx(ground_.size());
        std::iota(idx.begin(), idx.end(), 0);
        return idx;
    }

    std::string circuit_str(size_t i) const {
        std::string s = "{";
        for (size_t j = 0; j < circuits_[i].size(); ++j) {
            if (j) s += ",";
            s += ground_[static_cast<size_t>(circuits_[i][j])].str();
        }
        return s + "}";
    }

    LabelSet ground_;
    std::vector<std::vector<int>> circuits_;
    int rank_ = 0;
};

inline bool is_paving(const FiniteMatroid& M) {
    const size_t r = static_cast<size_t>(M.rank());
    for (const auto& c : M.circuit_indices())
        if (c.size() != r && c.size() != r + 1) return false;
    return true;
}

namespace detail {

inline uint64_t mask_of(const std::vector<int>& idx) {
    uint64_t m = 0;
    for (int i : idx) m |= (uint64_t{1} << i);
    return m;
}

inline std::vector<int> indexify(const LabelSet& set, const LabelSet& ground, const char* what) {
    std::vector<int> idx;
    for (const auto& l : set) {
        auto it = std::lower_bound(ground.begin(), ground.end(), l);
        if (it == ground.end() || !(*it == l))
            throw ValidationError(std::string(what) + ": label not in ground set: " + l.str());
        idx.push_back(static_cast<int>(it - ground.begin()));
    }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return idx;
}

inline std::string mask_str(uint64_t m, const LabelSet& ground) {
    std::string s = "{";
    bool first = true;
    for (size_t i = 0; i < ground.size(); ++i)
        if (m & (uint64_t{1} << i)) {
            if (!first) s += ",";
            s += ground[i].str();
            first = false;
        }
    return s + "}";
}

}  // namespace detail

// Exhaustive check of nonemptiness, incomparability and circuit elimination.
inline AxiomReport verify_circuit_axioms(const std::vector<LabelSet>& circuits_in,
                                         const LabelSet& ground_in, const Limits& lim = {}) {
    AxiomReport rep;
    LabelSet ground = normalize_labels(ground_in);
    if (static_cast<long long>(ground.size()) > lim.max_ground)
        throw ResourceError("verify_circuit_axioms: ground set too large");
    std::vector<uint64_t> masks;
    for (const auto& c : circuits_in) {
        if (c.empty()) {
            rep.fail("C0", "empty circuit");
            continue;
        }
        masks.push_back(detail::mask_of(detail::indexify(normalize_labels(c), ground, "circuit")));
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    for (size_t i = 0; i < masks.size() && rep.passed; ++i)
        for (size_t j = 0; j < masks.size(); ++j) {
            if (i == j) continue;
            if ((masks[i] & masks[j]) == masks[i]) {
                rep.fail("C1", "comparable circuits " + detail::mask_str(masks[i], ground) +
                                   " ⊆ " + detail::mask_str(masks[j], ground));
                break;
            }
        }
    if (!rep.passed) return rep;
    for (size_t i = 0; i < masks.size(); ++i)
        for (size_t j = i + 1; j < masks.size(); ++j) {
            uint64_t common = masks[i] & masks[j];
            if (!common) continue;
            uint64_t uni = masks[i] | masks[j];
            for (size_t e = 0; e < ground.size(); ++e) {
                if (!(common & (uint64_t{1} << e))) continue;
                uint64_t target = uni & ~(uint64_t{1} << e);
                bool found = false;
                for (uint64_t c : masks)
                    if ((c & target) == c) {
                        found = true;
                        break;
                    }
                if (!found) {
                    rep.fail("C2", "no elimination circuit inside " +
                                       detail::mask_str(target, ground) + " for circuits " +
                                       detail::mask_str(masks[i], ground) + ", " +
                                       detail::mask_str(masks[j], ground));
                    return rep;
                }
            }
        }
    return rep;
}

// Hyperplane axioms (H1)-(H3); (HF) is vacuous on a finite ground set.
inline AxiomReport verify_hyperplane_axioms(const std::vector<LabelSet>& H_in,
                                            const LabelSet& ground_in, const Limits& lim = {}) {
    AxiomReport rep;
    LabelSet ground = normalize_labels(ground_in);
    if (static_cast<long long>(ground.size()) > lim.max_ground)
        throw ResourceError("verify_hyperplane_axioms: ground set too large");
    const uint64_t full = ground.size() == 64 ? ~uint64_t{0}
                                              : ((uint64_t{1} << ground.size()) - 1);
    std::vector<uint64_t> H;
    for (const auto& h : H_in)
        H.push_back(detail::mask_of(detail::indexify(normalize_labels(h), ground, "hyperplane")));
    std::sort(H.begin(), H.end());
    H.erase(std::unique(H.begin(), H.end()), H.end());
    for (uint64_t h : H)
        if (h == full) {
            rep.fail("H1", "the full ground set is listed as a hyperplane");
            return rep;
        }
    for (size_t i = 0; i < H.size(); ++i)
        for (size_t j = 0; j < H.size(); ++j)
            if (i != j && (H[i] & H[j]) == H[i]) {
                rep.fail("H2", "comparable hyperplanes " + detail::mask_str(H[i], ground) +
                                   " ⊆ " + detail::mask_str(H[j], ground));
                return rep;
            }
    for (size_t i = 0; i < H.size(); ++i)
        for (size_t j = 0; j < H.size(); ++j) {
            if (i == j) continue;
            uint64_t common = H[i] & H[j];
            for (size_t x = 0; x < ground.size(); ++x) {
                uint64_t target = common | (uint64_t{1} << x);
                bool found = false;
                for (uint64_t h : H)
                    if ((target & h) == target) {
                        found = true;
                        break;
                    }
                if (!found) {
                    rep.fail("H3", "no hyperplane contains " + detail::mask_str(target, ground));
                    return rep;
                }
            }
        }
    return rep;
}

// d-partition axioms (P1)-(P3), exhausting every d-subset of the ground set.
inline AxiomReport verify_d_partition(const std::vector<LabelSet>& P_in, const LabelSet& ground_in,
                                      int d, const Limits& lim = {}) {
    AxiomReport rep;
    LabelSet ground = normalize_labels(ground_in);
    if (static_cast<long long>(ground.size()) > lim.max_ground)
        throw ResourceError("verify_d_partition: ground set too large");
    if (d < 1) throw ValidationError("verify_d_partition: d must be >= 1");
    if (static_cast<int>(ground.size()) < d + 1)
        throw ValidationError("verify_d_partition: ground set needs at least d+1 elements");
    std::vector<uint64_t> P;
    for (const auto& b : P_in)
        P.push_back(detail::mask_of(detail::indexify(normalize_labels(b), ground, "block")));
    std::sort(P.begin(), P.end());
    P.erase(std::unique(P.begin(), P.end()), P.end());
    if (P.size() < 2) rep.fail("P1", "fewer than two blocks");
    for (uint64_t b : P)
        if (std::popcount(b) < d) {
            rep.fail("P2", "block " + detail::mask_str(b, ground) + " has fewer than d elements");
            break;
        }
    if (!rep.passed) return rep;
    bool ok = for_each_combination(static_cast<int>(ground.size()), d, [&](const std::vector<int>& idx) {
        uint64_t m = detail::mask_of(idx);
        int count = 0;
        for (uint64_t b : P)
            if ((m & b) == m) ++count;
        if (count != 1) {
            rep.fail("P3", "d-subset " + detail::mask_str(m, ground) + " lies in " +
                               std::to_string(count) + " blocks");
            return false;
        }
        return true;
    });
    (void)ok;
    return rep;
}

// All hyperplanes (maximal rank-(r-1) subsets), by exhaustive rank tabulation.
inline std::vector<LabelSet> hyperplanes_of(const FiniteMatroid& M) {
    const int n = M.size();
    if (n > 20) throw ResourceError("hyperplanes_of: ground set too large for exhaustive scan");
    const size_t total = size_t{1} << n;
    std::vector<uint8_t> dep(total, 0), rank(total, 0);
    for (const auto& c : M.circuit_indices()) dep[detail::mask_of(c)] = 1;
    for (int b = 0; b < n; ++b)
        for (size_t m = 0; m < total; ++m)
            if (dep[m]) dep[m | (size_t{1} << b)] = 1;
    for (size_t m = 1; m < total; ++m) {
        if (!dep[m]) {
            rank[m] = static_cast<uint8_t>(std::popcount(m));
            continue;
        }
        uint8_t best = 0;
        for (int b = 0; b < n; ++b)
            if (m & (size_t{1} << b)) best = std::max(best, rank[m ^ (size_t{1} << b)]);
        rank[m] = best;
    }
    const uint8_t r = rank[total - 1];
    std::vector<LabelSet> out;
    for (size_t m = 0; m < total; ++m) {
        if (rank[m] + 1 != r) continue;
        bool maximal = true;
        for (int b = 0; b < n && maximal; ++b)
            if (!(m & (size_t{1} << b)) && rank[m | (size_t{1} << b)] == rank[m]) maximal = false;
        if (!maximal) continue;
        LabelSet h;
        for (int b = 0; b < n; ++b)
            if (m & (size_t{1} << b)) h.push_back(M.ground()[static_cast<size_t>(b)]);
        out.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Paving matroid of rank d+1 whose hyperplanes are the given d-partition:
// circuits are the (d+1)-subsets inside a block and the (d+2)-subsets with no
// such (d+1)-subset.
inline FiniteMatroid matroid_from_hyperplanes(const std::vector<LabelSet>& P_in,
                                              const LabelSet& ground_in, int d,
                                              const Limits& lim = {}) {
    LabelSet ground = normalize_labels(ground_in);
    AxiomReport rep = verify_d_partition(P_in, ground, d, lim);
    if (!rep.passed)
        throw ValidationError("matroid_from_hyperplanes: input is not a d-partition (" +
                              rep.failures.front().axiom + ": " + rep.failures.front().detail +
                              ")");
    std::vector<uint64_t> P;
    for (const auto& b : P_in)
        P.push_back(detail::mask_of(detail::indexify(normalize_labels(b), ground, "block")));
    const int n = static_cast<int>(ground.size());
    std::vector<std::vector<int>> small;  // dependent (d+1)-subsets
    std::vector<uint64_t> small_masks;
    for_each_combination(n, d + 1, [&](const std::vector<int>& idx) {
        uint64_t m = detail::mask_of(idx);
        for (uint64_t b : P)
            if ((m & b) == m) {
                small.push_back(idx);
                small_masks.push_back(m);
                break;
            }
        return true;
    });
    std::vector<std::vector<int>> circuits = small;
    for_each_combination(n, d + 2, [&](const std::vector<int>& idx) {
        uint64_t m = detail::mask_of(idx);
        for (uint64_t s : small_masks)
            if ((s & m) == s) return true;
        circuits.push_back(idx);
        return true;
    });
    std::vector<LabelSet> cs;
    for (const auto& c : circuits) {
        LabelSet s;
        for (int i : c) s.push_back(ground[static_cast<size_t>(i)]);
        cs.push_back(std::move(s));
    }
    return FiniteMatroid(std::move(ground), std::move(cs));
}

// Quotient by the parallelism relation (2-circuits) of a loopless matroid.
// The class map sends every label to its class representative (minimum label).
inline std::pair<FiniteMatroid, std::map<Label, Label>> simplification(const FiniteMatroid& M) {
    for (const auto& c : M.circuit_indices())
        if (c.size() == 1)
            throw ValidationError("simplification: matroid has a loop");
    const int n = M.size();
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    };
    for (const auto& c : M.circuit_indices())
        if (c.size() == 2) unite(c[0], c[1]);
    std::map<Label, Label> class_map;
    for (int i = 0; i < n; ++i)
        class_map[M.ground()[static_cast<size_t>(i)]] =
            M.ground()[static_cast<size_t>(find(i))];
    LabelSet ground;
    for (int i = 0; i < n; ++i)
        if (find(i) == i) ground.push_back(M.ground()[static_cast<size_t>(i)]);
    std::set<LabelSet> circuits;
    for (const auto& c : M.circuit_indices()) {
        if (c.size() <= 2) continue;
        LabelSet img;
        for (int i : c) img.push_back(M.ground()[static_cast<size_t>(find(i))]);
        circuits.insert(normalize_labels(std::move(img)));
    }
    return {FiniteMatroid(std::move(ground),
                          std::vector<LabelSet>(circuits.begin(), circuits.end())),
            std::move(class_map)};
}

// The non-Pappus matroid: rank-3 paving matroid on 9 points whose 3-point
// lines form the Pappus configuration minus the line {7,8,9}. Shipped as data
// and validated structurally on construction.
inline FiniteMatroid non_pappus() {
    const std::vector<std::vector<int>> lines = {{1, 2, 3}, {1, 5, 7}, {1, 6, 8}, {2, 4, 7},
                                                 {2, 6, 9}, {3, 4, 8}, {3, 5, 9}, {4, 5, 6}};
    LabelSet ground;
    for (int i = 1; i <= 9; ++i) ground.push_back(Label::token(std::to_string(i)));
    std::vector<LabelSet> H;
    std::set<std::pair<int, int>> covered;
    for (const auto& ln : lines) {
        LabelSet h;
        for (int i : ln) h.push_back(Label::token(std::to_string(i)));
        H.push_back(std::move(h));
        for (size_t a = 0; a < ln.size(); ++a)
            for (size_t b = a + 1; b < ln.size(); ++b)
                covered.insert({std::min(ln[a], ln[b]), std::max(ln[a], ln[b])});
    }
    for (int a = 1; a <= 9; ++a)
        for (int b = a + 1; b <= 9; ++b)
            if (!covered.count({a, b}))
                H.push_back({Label::token(std::to_string(a)), Label::token(std::to_string(b))});
    return matroid_from_hyperplanes(H, ground, 2);
}

}  // namespace trop
