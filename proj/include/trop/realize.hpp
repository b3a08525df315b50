#pragma once

#include "trop/field.hpp"
#include "trop/ideal.hpp"

namespace trop {

// 2x2 matrix over a small finite field, entries as field codes, row major.
struct Mat2 {
    int a = 1, b = 0, c = 0, d = 1;

    friend bool operator==(const Mat2&, const Mat2&) = default;
    friend auto operator<=>(const Mat2&, const Mat2&) = default;
};

inline Mat2 mat_id() { return {1, 0, 0, 1}; }

inline Mat2 mat_mul(const FiniteField& F, const Mat2& X, const Mat2& Y) {
    return {F.add(F.mul(X.a, Y.a), F.mul(X.b, Y.c)), F.add(F.mul(X.a, Y.b), F.mul(X.b, Y.d)),
            F.add(F.mul(X.c, Y.a), F.mul(X.d, Y.c)), F.add(F.mul(X.c, Y.b), F.mul(X.d, Y.d))};
}

inline int mat_det(const FiniteField& F, const Mat2& X) {
    return F.sub(F.mul(X.a, X.d), F.mul(X.b, X.c));
}

inline Mat2 mat_inv(const FiniteField& F, const Mat2& X) {
    int di = F.inv(mat_det(F, X));
    return {F.mul(di, X.d), F.mul(di, F.negate(X.b)), F.mul(di, F.negate(X.c)), F.mul(di, X.a)};
}

inline Mat2 mat_scale(const FiniteField& F, int s, const Mat2& X) {
    return {F.mul(s, X.a), F.mul(s, X.b), F.mul(s, X.c), F.mul(s, X.d)};
}

inline bool mat_is_scalar(const Mat2& X) { return X.b == 0 && X.c == 0 && X.a == X.d; }

// Companion matrix of t^2 + a t + b.
inline Mat2 companion(const FiniteField& F, int a, int b) {
    return {0, F.negate(b), 1, F.negate(a)};
}

// Canonical representative of the scalar class of X: scale so the first
// nonzero entry (row-major) is 1.
inline Mat2 proj_canon(const FiniteField& F, const Mat2& X) {
    int lead = X.a ? X.a : X.b ? X.b : X.c ? X.c : X.d;
    if (lead == 0) throw ValidationError("proj_canon: zero matrix");
    return mat_scale(F, F.inv(lead), X);
}

inline std::string mat_str(const Mat2& X) {
    return "[[" + std::to_string(X.a) + "," + std::to_string(X.b) + "],[" + std::to_string(X.c) +
           "," + std::to_string(X.d) + "]]";
}

// Tuple of pairwise commuting invertible 2x2 matrices: the action of a
// colength-2 quotient of K[x_1^{±1},...,x_n^{±1}] on itself.
struct MatrixRep {
    FiniteField field;
    std::vector<Mat2> mats;

    MatrixRep(FiniteField F, std::vector<Mat2> ms) : field(std::move(F)), mats(std::move(ms)) {
        for (const auto& X : mats)
            if (mat_det(field, X) == 0)
                throw ValidationError("matrix rep: non-invertible matrix " + mat_str(X));
        for (size_t i = 0; i < mats.size(); ++i)
            for (size_t j = i + 1; j < mats.size(); ++j)
                if (!(mat_mul(field, mats[i], mats[j]) == mat_mul(field, mats[j], mats[i])))
                    throw ValidationError("matrix rep: matrices do not commute");
    }

    int n() const { return static_cast<int>(mats.size()); }
};

// {u in Z^n : X_1^{u_1} ... X_n^{u_n} is scalar} — the binomial lattice of the
// realized degree-2 ideal. Computed from a triangular presentation of the
// projective group generated by the matrices: full rank since that group is
// finite.
inline IntegerLattice scalar_power_lattice(const MatrixRep& rep) {
    const FiniteField& F = rep.field;
    const int n = rep.n();
    std::map<Mat2, IntVec> table;  // projective element -> one exponent vector
    table[mat_id()] = zero_vec(n);
    std::vector<IntVec> rows;
    for (int i = 0; i < n; ++i) {
        Mat2 g = proj_canon(F, rep.mats[static_cast<size_t>(i)]);
        // minimal b >= 1 with g^b inside the group generated so far
        Mat2 cur = g;
        long long b = 1;
        while (!table.count(proj_canon(F, cur))) {
            cur = mat_mul(F, cur, g);
            ++b;
            if (b > 1'000'000) throw ResourceError("scalar_power_lattice: runaway order");
        }
        IntVec row = zero_vec(n);
        row[static_cast<size_t>(i)] = b;
        const IntVec& prev = table.at(proj_canon(F, cur));
        for (int j = 0; j < n; ++j) row[static_cast<size_t>(j)] -= prev[static_cast<size_t>(j)];
        rows.push_back(std::move(row));
        // extend the table by the new cyclic factor
        std::map<Mat2, IntVec> next = table;
        Mat2 pw = mat_id();
        for (long long e = 1; e < b; ++e) {
            pw = mat_mul(F, pw, g);
            for (const auto& [h, vec] : table) {
                IntVec v = vec;
                v[static_cast<size_t>(i)] += e;
                next[proj_canon(F, mat_mul(F, h, pw))] = std::move(v);
            }
        }
        table = std::move(next);
    }
    return hnf(n, std::move(rows));
}

// Minimal g >= 1 with x^g scalar modulo x^2 + a x + b (a, b nonzero), or
// nullopt if none up to q^2 - 1. Cross-oracle for univariate realizability.
inline std::optional<long long> check_quadratic_gap(const FiniteField& F, int a, int b) {
    if (a == 0 || b == 0)
        throw ValidationError("check_quadratic_gap: a and b must be nonzero");
    // x^g = c0 + c1 x in F[x]/(x^2+ax+b)
    int c0 = 0, c1 = 1;
    const long long bound = static_cast<long long>(F.q()) * F.q() - 1;
    for (long long g = 1; g <= bound; ++g) {
        if (c1 == 0 && c0 != 0) return g;
        // multiply by x: (c0 + c1 x) x = -b c1 + (c0 - a c1) x
        int n0 = F.mul(F.negate(b), c1);
        int n1 = F.sub(c0, F.mul(a, c1));
        c0 = n0;
        c1 = n1;
    }
    return std::nullopt;
}

struct SearchReport {
    IntegerLattice target;
    int p = 0, k = 0;
    std::vector<MatrixRep> witnesses;
    long long scanned = 0;  // DFS nodes visited
};

namespace detail {

struct SearchState {
    const FiniteField& F;
    const IntegerLattice& target;
    std::vector<IntegerLattice> sections;  // target ∩ Z^k for k = 1..n
    std::vector<Mat2> partial;
    std::map<Mat2, IntVec> table;
    std::vector<IntVec> rows;
    SearchReport* report;
};

inline std::vector<Mat2> centralizer_candidates(const FiniteField& F,
                                                const std::vector<Mat2>& partial) {
    const Mat2* pivot = nullptr;
    for (const auto& X : partial)
        if (!mat_is_scalar(X)) {
            pivot = &X;
            break;
        }
    std::vector<Mat2> out;
    if (pivot) {
        // centralizer of a non-scalar 2x2 matrix is the algebra it generates
        for (int c = 0; c < F.q(); ++c)
            for (int d = 0; d < F.q(); ++d) {
                Mat2 Y{F.add(c, F.mul(d, pivot->a)), F.mul(d, pivot->b), F.mul(d, pivot->c),
                       F.add(c, F.mul(d, pivot->d))};
                if (mat_det(F, Y) != 0) out.push_back(Y);
            }
    } else {
        for (int a = 0; a < F.q(); ++a)
            for (int b = 0; b < F.q(); ++b)
                for (int c = 0; c < F.q(); ++c)
                    for (int d = 0; d < F.q(); ++d) {
                        Mat2 Y{a, b, c, d};
                        if (mat_det(F, Y) != 0) out.push_back(Y);
                    }
    }
    return out;
}

// Extends the triangular presentation by one generator and checks the partial
// scalar-power lattice against the corresponding section of the target.
inline void search_level(SearchState& st, const std::vector<Mat2>& candidates) {
    const int n = st.target.dim();
    const int k = static_cast<int>(st.partial.size());
    for (const Mat2& X : candidates) {
        ++st.report->scanned;
        Mat2 g = proj_canon(st.F, X);
        Mat2 cur = g;
        long long b = 1;
        while (!st.table.count(proj_canon(st.F, cur))) {
            cur = mat_mul(st.F, cur, g);
            ++b;
        }
        IntVec row = zero_vec(n);
        row[static_cast<size_t>(k)] = b;
        {
            const IntVec& prev = st.table.at(proj_canon(st.F, cur));
            for (int j = 0; j < n; ++j) row[static_cast<size_t>(j)] -= prev[static_cast<size_t>(j)];
        }
        // partial lattice on the first k+1 coordinates must match the section
        std::vector<IntVec> prows;
        for (const auto& r : st.rows)
            prows.push_back(IntVec(r.begin(), r.begin() + k + 1));
        prows.push_back(IntVec(row.begin(), row.begin() + k + 1));
        if (!(hnf(k + 1, std::move(prows)) == st.sections[static_cast<size_t>(k)])) continue;

        // accept the generator
        auto saved_table = st.table;
        st.rows.push_back(row);
        st.partial.push_back(X);
        std::map<Mat2, IntVec> next = st.table;
        Mat2 pw = mat_id();
        for (long long e = 1; e < b; ++e) {
            pw = mat_mul(st.F, pw, g);
            for (const auto& [h, vec] : st.table) {
                IntVec v = vec;
                v[static_cast<size_t>(k)] += e;
                next[proj_canon(st.F, mat_mul(st.F, h, pw))] = std::move(v);
            }
        }
        st.table = std::move(next);

        if (k + 1 == n)
            st.report->witnesses.emplace_back(st.F, st.partial);
        else
            search_level(st, centralizer_candidates(st.F, st.partial));

        st.partial.pop_back();
        st.rows.pop_back();
        st.table = std::move(saved_table);
    }
}

}  // namespace detail

// Exhaustive search for commuting invertible 2x2 tuples whose scalar-power
// lattice equals the target: X_1 ranges over conjugacy class representatives
// (scalars and companion matrices), later matrices over the full centralizer
// of the partial tuple. Complete up to simultaneous conjugation, which leaves
// the lattice invariant.
inline SearchReport search_degree2_realization(const IntegerLattice& target,
                                               const FiniteField& F, const Limits& lim = {}) {
    (void)lim;
    const int n = target.dim();
    if (target.rank() != n)
        throw ValidationError("realization search: target lattice must be full rank");
    if (n > 3) throw ResourceError("realization search: supported up to 3 variables");
    if (n <= 2 && F.q() > 25) throw ResourceError("realization search: field too large for n <= 2");
    if (n == 3 && F.q() > 9) throw ResourceError("realization search: field too large for n = 3");

    SearchReport report;
    report.target = target;
    report.p = F.p();
    report.k = F.k();

    std::vector<IntegerLattice> sections;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> axes;
        for (int i = 0; i < k; ++i) axes.push_back(i);
        sections.push_back(coordinate_section(target, axes));
    }

    std::vector<Mat2> first;
    for (int s = 1; s < F.q(); ++s) first.push_back(mat_scale(F, s, mat_id()));
    for (int a = 0; a < F.q(); ++a)
        for (int b = 1; b < F.q(); ++b) first.push_back(companion(F, a, b));

    detail::SearchState st{F, target, std::move(sections), {}, {}, {}, &report};
    st.table[mat_id()] = zero_vec(n);
    detail::search_level(st, first);
    return report;
}

// The two-pronged non-realizability experiment for the trivariate lattice
// generated by (4,0,0), (0,2,0), (0,0,2).
struct Prop46Entry {
    std::string label;
    int q = 0;
    long long witnesses = 0;
    long long scanned = 0;
    bool expect_witness = false;
    bool matches = false;
};

struct Prop46Report {
    IntegerLattice trivariate;
    IntegerLattice restriction_axis1;       // computed via restrict_vars
    IntegerLattice restriction_axes23;
    bool restrictions_match = false;
    std::vector<Prop46Entry> entries;
    bool all_match = false;
    std::vector<MatrixRep> sample_witnesses;  // one per entry that has any
};

inline Prop46Report prop46_experiment() {
    Prop46Report R;
    R.trivariate = hnf(3, {{4, 0, 0}, {0, 2, 0}, {0, 0, 2}});
    TropicalIdeal I = TropicalIdeal::from_lattice(R.trivariate);
    R.restriction_axis1 = binomial_lattice(restrict_vars(I, {0}));
    R.restriction_axes23 = binomial_lattice(restrict_vars(I, {1, 2}));
    R.restrictions_match = R.restriction_axis1 == hnf(1, {{4}}) &&
                           R.restriction_axes23 == hnf(2, {{2, 0}, {0, 2}});

    IntegerLattice uni = hnf(1, {{4}});
    IntegerLattice biv = hnf(2, {{2, 0}, {0, 2}});
    auto run = [&](const std::string& label, const IntegerLattice& target, int q,
                   bool expect_witness) {
        FiniteField F = FiniteField::gf(q);
        SearchReport s = search_degree2_realization(target, F);
        Prop46Entry e;
        e.label = label;
        e.q = q;
        e.witnesses = static_cast<long long>(s.witnesses.size());
        e.scanned = s.scanned;
        e.expect_witness = expect_witness;
        e.matches = expect_witness ? e.witnesses > 0 : e.witnesses == 0;
        if (!s.witnesses.empty()) R.sample_witnesses.push_back(s.witnesses.front());
        R.entries.push_back(e);
    };
    run("univariate 4Z", uni, 2, false);
    run("univariate 4Z", uni, 3, true);
    run("univariate 4Z", uni, 4, false);
    run("univariate 4Z", uni, 5, true);
    run("bivariate 2Zx2Z", biv, 3, false);
    run("bivariate 2Zx2Z", biv, 4, true);
    run("bivariate 2Zx2Z", biv, 5, false);
    run("trivariate", R.trivariate, 2, false);
    run("trivariate", R.trivariate, 3, false);
    run("trivariate", R.trivariate, 4, false);
    run("trivariate", R.trivariate, 5, false);
    R.all_match = R.restrictions_match;
    for (const auto& e : R.entries) R.all_match = R.all_match && e.matches;
    return R;
}

}  // namespace trop
