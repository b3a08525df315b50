#pragma once

#include "trop/lattice.hpp"

namespace trop {

namespace detail {

struct SnfResult {
    std::vector<Int> diag;      // positive, d_1 | d_2 | ..., length = rank
    std::vector<IntVec> V;      // n x n unimodular (column ops applied to A)
    std::vector<IntVec> Vinv;   // V^{-1}
};

// Smith normal form of the k x n matrix `rows`; only the column transform is
// tracked since row operations do not change the generated lattice.
inline SnfResult snf(std::vector<IntVec> A, int n) {
    const size_t k = A.size();
    SnfResult res;
    res.V.assign(static_cast<size_t>(n), IntVec());
    res.Vinv.assign(static_cast<size_t>(n), IntVec());
    for (int i = 0; i < n; ++i) {
        res.V[static_cast<size_t>(i)] = unit_vec(n, i);
        res.Vinv[static_cast<size_t>(i)] = unit_vec(n, i);
    }
    auto swap_cols = [&](int c1, int c2) {
        for (size_t i = 0; i < k; ++i)
            std::swap(A[i][static_cast<size_t>(c1)], A[i][static_cast<size_t>(c2)]);
        for (int i = 0; i < n; ++i)
            std::swap(res.V[static_cast<size_t>(i)][static_cast<size_t>(c1)],
                      res.V[static_cast<size_t>(i)][static_cast<size_t>(c2)]);
        std::swap(res.Vinv[static_cast<size_t>(c1)], res.Vinv[static_cast<size_t>(c2)]);
    };
    auto addmul_col = [&](int dst, int src, const Int& q) {
        // col_dst += q * col_src ; Vinv row_src -= q * row_dst
        for (size_t i = 0; i < k; ++i)
            A[i][static_cast<size_t>(dst)] += q * A[i][static_cast<size_t>(src)];
        for (int i = 0; i < n; ++i)
            res.V[static_cast<size_t>(i)][static_cast<size_t>(dst)] +=
                q * res.V[static_cast<size_t>(i)][static_cast<size_t>(src)];
        for (int j = 0; j < n; ++j)
            res.Vinv[static_cast<size_t>(src)][static_cast<size_t>(j)] -=
                q * res.Vinv[static_cast<size_t>(dst)][static_cast<size_t>(j)];
    };
    auto negate_col = [&](int c) {
        for (size_t i = 0; i < k; ++i) A[i][static_cast<size_t>(c)] = -A[i][static_cast<size_t>(c)];
        for (int i = 0; i < n; ++i)
            res.V[static_cast<size_t>(i)][static_cast<size_t>(c)] =
                -res.V[static_cast<size_t>(i)][static_cast<size_t>(c)];
        res.Vinv[static_cast<size_t>(c)] = neg(res.Vinv[static_cast<size_t>(c)]);
    };

    size_t t = 0;
    while (t < k && static_cast<int>(t) < n) {
        // locate smallest nonzero entry in the trailing block
        size_t bi = k;
        int bj = -1;
        for (size_t i = t; i < k; ++i)
            for (int j = static_cast<int>(t); j < n; ++j) {
                const Int& x = A[i][static_cast<size_t>(j)];
                if (x == 0) continue;
                if (bi == k || abs(x) < abs(A[bi][static_cast<size_t>(bj)])) {
                    bi = i;
                    bj = j;
                }
            }
        if (bi == k) break;
        if (bi != t) std::swap(A[bi], A[t]);
        if (bj != static_cast<int>(t)) swap_cols(bj, static_cast<int>(t));
        if (A[t][t] < 0) negate_col(static_cast<int>(t));

        bool again = false;
        for (size_t i = t + 1; i < k && !again; ++i) {
            if (A[i][t] == 0) continue;
            Int q = floor_div(A[i][t], A[t][t]);
            for (int j = 0; j < n; ++j)
                A[i][static_cast<size_t>(j)] -= q * A[t][static_cast<size_t>(j)];
            if (A[i][t] != 0) again = true;
        }
        if (again) continue;
        for (int j = static_cast<int>(t) + 1; j < n && !again; ++j) {
            if (A[t][static_cast<size_t>(j)] == 0) continue;
            Int q = floor_div(A[t][static_cast<size_t>(j)], A[t][t]);
            addmul_col(j, static_cast<int>(t), -q);
            if (A[t][static_cast<size_t>(j)] != 0) again = true;
        }
        if (again) continue;
        // pivot cleared; enforce divisibility d_t | everything below-right
        bool fixed = false;
        for (size_t i = t + 1; i < k && !fixed; ++i)
            for (int j = static_cast<int>(t) + 1; j < n && !fixed; ++j)
                if (A[i][static_cast<size_t>(j)] % A[t][t] != 0) {
                    for (int c = 0; c < n; ++c)
                        A[t][static_cast<size_t>(c)] += A[i][static_cast<size_t>(c)];
                    fixed = true;
                }
        if (fixed) continue;
        ++t;
    }
    for (size_t i = 0; i < t; ++i) res.diag.push_back(A[i][i]);
    return res;
}

}  // namespace detail

// Z^n / L presented by a Smith normal form: in transformed coordinates the
// group is Z/d_1 x ... x Z/d_r x Z^f. Canonical representatives live back in
// the original coordinates.
class QuotientGroup {
public:
    explicit QuotientGroup(IntegerLattice L) : L_(std::move(L)) {
        auto s = detail::snf(L_.basis(), L_.dim());
        diag_ = std::move(s.diag);
        V_ = std::move(s.V);
        Vinv_ = std::move(s.Vinv);
    }

    int ambient_dim() const { return L_.dim(); }
    const IntegerLattice& lattice() const { return L_; }
    int free_rank() const { return L_.dim() - static_cast<int>(diag_.size()); }

    // Torsion invariants d_1 | d_2 | ..., unit factors dropped.
    std::vector<Int> invariant_factors() const {
        std::vector<Int> f;
        for (const Int& d : diag_)
            if (d >= 2) f.push_back(d);
        return f;
    }

    std::optional<Int> order() const {
        if (free_rank() > 0) return std::nullopt;
        Int o = 1;
        for (const Int& d : diag_) o *= d;
        return o;
    }

    IntVec rep(const IntVec& v) const {
        check_dim(v, L_.dim(), "canonical_rep");
        IntVec t = mul_row(v, V_);
        for (size_t i = 0; i < diag_.size(); ++i) t[i] = floor_mod(t[i], diag_[i]);
        return mul_row(t, Vinv_);
    }

    IntVec add(const IntVec& a, const IntVec& b) const { return rep(trop::add(a, b)); }
    IntVec sub(const IntVec& a, const IntVec& b) const { return rep(trop::sub(a, b)); }
    IntVec negate(const IntVec& a) const { return rep(trop::neg(a)); }
    IntVec identity() const { return zero_vec(L_.dim()); }
    bool same_class(const IntVec& a, const IntVec& b) const { return member(L_, trop::sub(a, b)); }

    // All elements of a finite group, canonically sorted.
    std::vector<IntVec> elements(long long limit = 1 << 20) const {
        auto o = order();
        if (!o) throw ResourceError("quotient group is infinite");
        if (*o > limit) throw ResourceError("quotient group too large to enumerate");
        std::vector<IntVec> out;
        IntVec t = zero_vec(L_.dim());
        const size_t r = diag_.size();
        while (true) {
            out.push_back(mul_row(t, Vinv_));
            size_t i = 0;
            while (i < r) {
                t[i] += 1;
                if (t[i] < diag_[i]) break;
                t[i] = 0;
                ++i;
            }
            if (i == r) break;
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const QuotientGroup& a, const QuotientGroup& b) {
        return a.L_ == b.L_;
    }

private:
    static IntVec mul_row(const IntVec& v, const std::vector<IntVec>& M) {
        const size_t n = M.size();
        IntVec out = zero_vec(static_cast<int>(n));
        for (size_t i = 0; i < n; ++i) {
            if (v[i] == 0) continue;
            for (size_t j = 0; j < n; ++j) out[j] += v[i] * M[i][j];
        }
        return out;
    }

    IntegerLattice L_;
    std::vector<Int> diag_;
    std::vector<IntVec> V_, Vinv_;
};

inline QuotientGroup snf_quotient(const IntegerLattice& L) { return QuotientGroup(L); }

}  // namespace trop
