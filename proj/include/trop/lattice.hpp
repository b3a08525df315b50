#pragma once

#include "trop/core.hpp"

namespace trop {

namespace detail {

// Row-style Hermite normal form, in place. Pivots positive, entries above a
// pivot reduced into [0, pivot), pivot columns strictly increasing, zero rows
// dropped. If `transform` is non-null it must start as the identity and is
// kept row-equivalent (U * input == current rows, U unimodular); zero rows of
// the result correspond to kernel rows of U and are returned too.
inline void hnf_in_place(std::vector<IntVec>& rows, int n, std::vector<IntVec>* transform) {
    const size_t k = rows.size();
    size_t r = 0;
    for (int c = 0; c < n && r < k; ++c) {
        const size_t cc = static_cast<size_t>(c);
        while (true) {
            size_t best = k;
            for (size_t i = r; i < k; ++i) {
                if (rows[i][cc] == 0) continue;
                if (best == k || abs(rows[i][cc]) < abs(rows[best][cc])) best = i;
            }
            if (best == k) break;  // column clear below r
            if (best != r) {
                std::swap(rows[best], rows[r]);
                if (transform) std::swap((*transform)[best], (*transform)[r]);
            }
            if (rows[r][cc] < 0) {
                rows[r] = neg(rows[r]);
                if (transform) (*transform)[r] = neg((*transform)[r]);
            }
            bool clear = true;
            for (size_t i = r + 1; i < k; ++i) {
                if (rows[i][cc] == 0) continue;
                Int q = floor_div(rows[i][cc], rows[r][cc]);
                for (int j = 0; j < n; ++j)
                    rows[i][static_cast<size_t>(j)] -= q * rows[r][static_cast<size_t>(j)];
                if (transform)
                    for (size_t j = 0; j < k; ++j) (*transform)[i][j] -= q * (*transform)[r][j];
                if (rows[i][cc] != 0) clear = false;
            }
            if (clear) break;
        }
        if (r < k && rows[r][cc] != 0) {
            for (size_t i = 0; i < r; ++i) {
                Int q = floor_div(rows[i][cc], rows[r][cc]);
                if (q == 0) continue;
                for (int j = 0; j < n; ++j)
                    rows[i][static_cast<size_t>(j)] -= q * rows[r][static_cast<size_t>(j)];
                if (transform)
                    for (size_t j = 0; j < k; ++j) (*transform)[i][j] -= q * (*transform)[r][j];
            }
            ++r;
        }
    }
    // rows r..k-1 are zero
    rows.resize(r);
}

}  // namespace detail

// Sublattice of Z^n held in canonical row HNF; structural equality is set
// equality. Empty basis encodes the zero lattice.
class IntegerLattice {
public:
    IntegerLattice() = default;

    static IntegerLattice from_rows(int n, std::vector<IntVec> rows) {
        if (n < 1) throw ValidationError("lattice: ambient dimension must be >= 1");
        for (const auto& v : rows) check_dim(v, n, "lattice row");
        detail::hnf_in_place(rows, n, nullptr);
        IntegerLattice L;
        L.n_ = n;
        L.basis_ = std::move(rows);
        return L;
    }

    static IntegerLattice zero(int n) { return from_rows(n, {}); }

    static IntegerLattice full(int n) {
        std::vector<IntVec> rows;
        for (int i = 0; i < n; ++i) rows.push_back(unit_vec(n, i));
        return from_rows(n, std::move(rows));
    }

    int dim() const { return n_; }
    int rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<IntVec>& basis() const { return basis_; }
    bool is_zero() const { return basis_.empty(); }
    bool is_full() const { return rank() == n_ && *this == full(n_); }

    // Pivot column of basis row i.
    int pivot_col(size_t i) const {
        const IntVec& row = basis_[i];
        for (size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) return static_cast<int>(j);
        return -1;  // unreachable for stored rows
    }

    friend bool operator==(const IntegerLattice& a, const IntegerLattice& b) {
        return a.n_ == b.n_ && a.basis_ == b.basis_;
    }
    friend bool operator<(const IntegerLattice& a, const IntegerLattice& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.basis_ < b.basis_;
    }

private:
    int n_ = 0;
    std::vector<IntVec> basis_;
};

inline IntegerLattice hnf(int n, std::vector<IntVec> rows) {
    return IntegerLattice::from_rows(n, std::move(rows));
}

// Integer coordinates of v in the HNF basis, if any (back-substitution along
// pivot columns).
inline std::optional<std::vector<Int>> solve_in_basis(const IntegerLattice& L, IntVec v) {
    check_dim(v, L.dim(), "member");
    std::vector<Int> coeffs;
    coeffs.reserve(L.basis().size());
    for (size_t i = 0; i < L.basis().size(); ++i) {
        const IntVec& row = L.basis()[i];
        int p = L.pivot_col(i);
        const Int& pv = row[static_cast<size_t>(p)];
        if (v[static_cast<size_t>(p)] % pv != 0) return std::nullopt;
        Int c = v[static_cast<size_t>(p)] / pv;
        if (c != 0)
            for (int j = 0; j < L.dim(); ++j)
                v[static_cast<size_t>(j)] -= c * row[static_cast<size_t>(j)];
        coeffs.push_back(std::move(c));
    }
    if (!is_zero(v)) return std::nullopt;
    return coeffs;
}

inline bool member(const IntegerLattice& L, const IntVec& v) {
    return solve_in_basis(L, v).has_value();
}

inline IntegerLattice sum(const IntegerLattice& a, const IntegerLattice& b) {
    if (a.dim() != b.dim()) throw ValidationError("sum: dimension mismatch");
    std::vector<IntVec> rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return hnf(a.dim(), std::move(rows));
}

// HNF together with the unimodular row transform: returns (H, U) with
// U * rows == H-padded-with-zero-rows; the trailing rows of U span the left
// kernel of the input.
inline std::pair<std::vector<IntVec>, std::vector<IntVec>> hnf_with_transform(
    std::vector<IntVec> rows, int n) {
    const size_t k = rows.size();
    std::vector<IntVec> U(k);
    for (size_t i = 0; i < k; ++i) {
        U[i] = zero_vec(static_cast<int>(k));
        U[i][i] = 1;
    }
    size_t before = rows.size();
    detail::hnf_in_place(rows, n, &U);
    (void)before;
    return {std::move(rows), std::move(U)};
}

// Kernel method: solutions of x*A = y*B give points common to both lattices.
inline IntegerLattice intersect(const IntegerLattice& a, const IntegerLattice& b) {
    if (a.dim() != b.dim()) throw ValidationError("intersect: dimension mismatch");
    const int n = a.dim();
    std::vector<IntVec> stacked = a.basis();
    stacked.insert(stacked.end(), b.basis().begin(), b.basis().end());
    const size_t ra = a.basis().size();
    auto [H, U] = hnf_with_transform(stacked, n);
    std::vector<IntVec> gens;
    for (size_t i = H.size(); i < U.size(); ++i) {  // kernel rows
        IntVec pt = zero_vec(n);
        for (size_t r = 0; r < ra; ++r)
            for (int j = 0; j < n; ++j)
                pt[static_cast<size_t>(j)] += U[i][r] * a.basis()[r][static_cast<size_t>(j)];
        gens.push_back(std::move(pt));
    }
    return hnf(n, std::move(gens));
}

// L ∩ (Z^axes × {0}), written in the |axes|-dimensional coordinates. Axes are
// 0-based and must be distinct.
inline IntegerLattice coordinate_section(const IntegerLattice& L, const std::vector<int>& axes) {
    if (axes.empty()) throw ValidationError("coordinate_section: empty axes set");
    const int n = L.dim();
    std::set<int> axset(axes.begin(), axes.end());
    if (static_cast<int>(axset.size()) != static_cast<int>(axes.size()))
        throw ValidationError("coordinate_section: repeated axis");
    for (int a : axes)
        if (a < 0 || a >= n) throw ValidationError("coordinate_section: axis out of range");
    std::vector<int> comp;
    for (int j = 0; j < n; ++j)
        if (!axset.count(j)) comp.push_back(j);
    std::vector<int> ax_sorted(axset.begin(), axset.end());
    const int m = static_cast<int>(ax_sorted.size());

    // rows of basis restricted to complement columns; its left kernel gives
    // the combinations that vanish off-axes
    std::vector<IntVec> restr;
    for (const auto& row : L.basis()) {
        IntVec r;
        for (int j : comp) r.push_back(row[static_cast<size_t>(j)]);
        if (r.empty()) r = {};  // comp empty: every row qualifies
        restr.push_back(std::move(r));
    }
    std::vector<IntVec> gens;
    if (comp.empty()) {
        for (const auto& row : L.basis()) {
            IntVec pt;
            for (int j : ax_sorted) pt.push_back(row[static_cast<size_t>(j)]);
            gens.push_back(std::move(pt));
        }
        return hnf(m, std::move(gens));
    }
    auto [H, U] = hnf_with_transform(restr, static_cast<int>(comp.size()));
    for (size_t i = H.size(); i < U.size(); ++i) {
        IntVec full = zero_vec(n);
        for (size_t r = 0; r < L.basis().size(); ++r)
            for (int j = 0; j < n; ++j)
                full[static_cast<size_t>(j)] += U[i][r] * L.basis()[r][static_cast<size_t>(j)];
        IntVec pt;
        for (int j : ax_sorted) pt.push_back(full[static_cast<size_t>(j)]);
        gens.push_back(std::move(pt));
    }
    return hnf(m, std::move(gens));
}

// Canonical coset representative: reduces v against the HNF pivots top-down,
// leaving non-pivot coordinates determined by the subtraction chain. Two
// vectors reduce identically iff they differ by a lattice element.
inline IntVec reduce_mod(const IntegerLattice& L, IntVec v) {
    check_dim(v, L.dim(), "reduce_mod");
    for (size_t i = 0; i < L.basis().size(); ++i) {
        const IntVec& row = L.basis()[i];
        int p = L.pivot_col(i);
        Int q = floor_div(v[static_cast<size_t>(p)], row[static_cast<size_t>(p)]);
        if (q != 0)
            for (int j = 0; j < L.dim(); ++j)
                v[static_cast<size_t>(j)] -= q * row[static_cast<size_t>(j)];
    }
    return v;
}

// Coset v + L with the offset stored reduced, so structural equality is set
// equality.
struct AffineLattice {
    IntVec offset;
    IntegerLattice lattice;

    AffineLattice() = default;
    AffineLattice(IntVec off, IntegerLattice lat)
        : offset(reduce_mod(lat, std::move(off))), lattice(std::move(lat)) {}

    int dim() const { return lattice.dim(); }
    bool contains(const IntVec& v) const { return member(lattice, sub(v, offset)); }

    friend bool operator==(const AffineLattice& a, const AffineLattice& b) {
        return a.offset == b.offset && a.lattice == b.lattice;
    }
    friend bool operator<(const AffineLattice& a, const AffineLattice& b) {
        if (!(a.lattice == b.lattice)) return a.lattice < b.lattice;
        return a.offset < b.offset;
    }
};

// Index [M : L] for L ⊆ M; nullopt when infinite (rank drop).
inline std::optional<Int> subgroup_index(const IntegerLattice& M, const IntegerLattice& L) {
    if (M.dim() != L.dim()) throw ValidationError("subgroup_index: dimension mismatch");
    if (L.rank() < M.rank()) return std::nullopt;
    std::vector<IntVec> coords;
    for (const auto& row : L.basis()) {
        auto c = solve_in_basis(M, row);
        if (!c) throw ValidationError("subgroup_index: L is not contained in M");
        coords.push_back(std::move(*c));
    }
    if (M.rank() == 0) return Int(1);
    IntegerLattice C = hnf(M.rank(), std::move(coords));
    if (C.rank() < M.rank()) return std::nullopt;
    Int det = 1;
    for (size_t i = 0; i < C.basis().size(); ++i)
        det *= C.basis()[i][static_cast<size_t>(C.pivot_col(i))];
    return det;
}

inline bool lattice_contains(const IntegerLattice& outer, const IntegerLattice& inner) {
    for (const auto& row : inner.basis())
        if (!member(outer, row)) return false;
    return true;
}

}  // namespace trop
