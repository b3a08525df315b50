#pragma once

#include "trop/realize.hpp"

namespace trop {

// Powers-of-two embedding for the non-Pappus ground set: token "i" -> 2^(i-1).
inline std::map<Label, IntVec> pow2_embedding(const FiniteMatroid& M) {
    std::map<Label, IntVec> emb;
    for (const auto& l : M.ground()) {
        if (l.is_point()) throw ValidationError("pow2 embedding expects token labels");
        long long i = std::stoll(l.tok());
        Int v = 1;
        for (long long e = 1; e < i; ++e) v *= 2;
        emb[l] = {v};
    }
    return emb;
}

inline TropicalIdeal non_pappus_extension() {
    FiniteMatroid M = non_pappus();
    return extend_matroid(M, pow2_embedding(M));
}

struct NamedIdeal {
    std::string name;
    TropicalIdeal ideal;
    int expected_degree;
};

// The five ideals every verification suite runs against.
inline std::vector<NamedIdeal> shipped_ideals() {
    std::vector<NamedIdeal> out;
    out.push_back({"lattice2-2Z", TropicalIdeal::from_lattice(hnf(1, {{2}})), 2});
    out.push_back({"lattice2-2Zx2Z", TropicalIdeal::from_lattice(hnf(2, {{2, 0}, {0, 2}})), 2});
    out.push_back({"mpower-2-0..5", m_s_ideal(2, {0, 1, 2, 3, 4, 5}), 3});
    out.push_back({"non-pappus-ext", non_pappus_extension(), 3});
    out.push_back({"remark-d3", remark_example(3), 3});
    return out;
}

inline TropicalIdeal shipped_ideal(const std::string& name) {
    for (auto& e : shipped_ideals())
        if (e.name == name) return e.ideal;
    throw ValidationError("unknown shipped ideal '" + name + "'");
}

}  // namespace trop
