#pragma once

#include "trop/ideal.hpp"

namespace trop {

namespace detail {

// Rank of every subset of the ground set, from the circuit list alone.
inline std::vector<uint8_t> brute_rank_table(const FiniteMatroid& M) {
    const int n = M.size();
    if (n > 20) throw ResourceError("brute_rank_table: ground set too large");
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
    return rank;
}

}  // namespace detail

struct SuiteCheck {
    std::string name;
    bool applicable = true;
    bool passed = true;
    std::string detail;
};

struct WindowSuiteReport {
    std::vector<SuiteCheck> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (c.applicable && !c.passed) return false;
        return true;
    }
};

// Exhaustive per-window verification: circuit axioms, the paving property
// (of the matroid itself, or of its simplification when the representation
// carries a binomial lattice), the d-partition axioms on hyperplane traces,
// rank oracle vs brute force on every subset, and monomial-elimination spot
// checks against the window matroid's cycle family.
inline WindowSuiteReport verify_window_suite(const TropicalIdeal& I, const Window& W,
                                             const Limits& lim = {},
                                             long long elimination_budget = 4000) {
    WindowSuiteReport rep;
    FiniteMatroid M = restrict_matroid(I, W, lim);
    const bool simplify_first = I.kind() != TropicalIdeal::Kind::Paving &&
                                !binomial_lattice(I).is_zero();

    {
        SuiteCheck c;
        c.name = "circuit-axioms";
        AxiomReport r = verify_circuit_axioms(M.circuits(), M.ground(), lim);
        c.passed = r.passed;
        if (!r.passed) c.detail = r.failures.front().axiom + ": " + r.failures.front().detail;
        rep.checks.push_back(std::move(c));
    }

    FiniteMatroid T = simplify_first ? simplification(M).first : M;
    {
        SuiteCheck c;
        c.name = simplify_first ? "paving-after-simplification" : "paving";
        c.passed = is_paving(T);
        if (!c.passed) c.detail = "a circuit has size outside {rank, rank+1}";
        rep.checks.push_back(std::move(c));
    }

    {
        SuiteCheck c;
        c.name = "hyperplane-d-partition";
        const int r = T.rank();
        if (r < 2 || T.size() < r + 1) {
            c.applicable = false;
            c.detail = "window matroid rank below 2";
        } else {
            AxiomReport pr = verify_d_partition(hyperplanes_of(T), T.ground(), r - 1, lim);
            c.passed = pr.passed;
            if (!pr.passed) c.detail = pr.failures.front().axiom + ": " + pr.failures.front().detail;
        }
        rep.checks.push_back(std::move(c));
    }

    {
        SuiteCheck c;
        c.name = "rank-oracle-vs-brute-force";
        auto table = detail::brute_rank_table(M);
        const int n = M.size();
        for (size_t m = 0; m < table.size() && c.passed; ++m) {
            Support X;
            for (int b = 0; b < n; ++b)
                if (m & (size_t{1} << b)) X.push_back(M.ground()[static_cast<size_t>(b)].vec());
            if (rank_oracle(I, X) != static_cast<int>(table[m])) {
                c.passed = false;
                c.detail = "rank mismatch on a window subset of size " + std::to_string(X.size());
            }
        }
        rep.checks.push_back(std::move(c));
    }

    {
        SuiteCheck c;
        c.name = "monomial-elimination";
        auto table = detail::brute_rank_table(M);
        auto is_cycle = [&](uint64_t m) {
            if (m == 0) return true;
            for (int b = 0; b < M.size(); ++b)
                if (m & (uint64_t{1} << b))
                    if (table[m ^ (uint64_t{1} << b)] != table[m]) return false;
            return true;
        };
        std::vector<uint64_t> cyc;
        for (const auto& cidx : M.circuit_indices()) cyc.push_back(detail::mask_of(cidx));
        // unions of circuit pairs join the family (cycles are closed under union)
        const size_t base = cyc.size();
        for (size_t i = 0; i < base; ++i)
            for (size_t j = i + 1; j < base; ++j) cyc.push_back(cyc[i] | cyc[j]);
        std::sort(cyc.begin(), cyc.end());
        cyc.erase(std::unique(cyc.begin(), cyc.end()), cyc.end());
        long long budget = elimination_budget;
        for (size_t i = 0; i < cyc.size() && c.passed && budget > 0; ++i)
            for (size_t j = i + 1; j < cyc.size() && c.passed && budget > 0; ++j) {
                uint64_t f = cyc[i], g = cyc[j];
                uint64_t common = f & g;
                if (!common) continue;
                if (std::popcount(f | g) > 8) continue;
                --budget;
                uint64_t symdiff = f ^ g;
                for (int u = 0; u < M.size() && c.passed; ++u) {
                    if (!(common & (uint64_t{1} << u))) continue;
                    uint64_t target = (f | g) & ~(uint64_t{1} << u);
                    // search cycles h with symdiff ⊆ h ⊆ target
                    uint64_t free = target & ~symdiff;
                    bool found = false;
                    uint64_t sub = free;
                    while (true) {
                        if (is_cycle(symdiff | sub)) {
                            found = true;
                            break;
                        }
                        if (sub == 0) break;
                        sub = (sub - 1) & free;
                    }
                    if (!found) {
                        c.passed = false;
                        c.detail = "no eliminating cycle for a circuit-pair overlap";
                    }
                }
            }
        rep.checks.push_back(std::move(c));
    }

    return rep;
}

}  // namespace trop
