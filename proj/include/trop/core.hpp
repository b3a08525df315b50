#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace trop {

// Exact integers throughout; HNF/SNF intermediates can blow up well past 64 bits.
using Int = boost::multiprecision::cpp_int;

// Integer point of Z^n. std::vector comparison is lexicographic, which is the
// canonical order used for all sorting in this library.
using IntVec = std::vector<Int>;

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

struct MismatchError : std::runtime_error {
    explicit MismatchError(const std::string& msg) : std::runtime_error(msg) {}
};

// Enumeration budgets. The library never scans past these; callers get a
// ResourceError instead of an open-ended computation.
struct Limits {
    long long max_window_points = 4096;
    long long max_subset_scans = 50'000'000;
    long long max_ground = 64;  // verifier ground-set cap (bitmask based)
};

inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int floor_mod(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

inline IntVec zero_vec(int n) { return IntVec(static_cast<size_t>(n), Int(0)); }

inline IntVec unit_vec(int n, int i) {
    IntVec v = zero_vec(n);
    v[static_cast<size_t>(i)] = 1;
    return v;
}

inline IntVec add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IntVec neg(const IntVec& a) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline bool is_zero(const IntVec& a) {
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

inline void check_dim(const IntVec& v, int n, const char* what) {
    if (static_cast<int>(v.size()) != n)
        throw ValidationError(std::string(what) + ": dimension mismatch");
}

inline std::string vec_str(const IntVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

// Sorted, duplicate-free point list.
inline std::vector<IntVec> normalize_points(std::vector<IntVec> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

inline bool sorted_contains(const std::vector<IntVec>& pts, const IntVec& v) {
    return std::binary_search(pts.begin(), pts.end(), v);
}

// |A ∩ B| for sorted point lists.
inline size_t sorted_overlap(const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
    size_t i = 0, j = 0, c = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (b[j] < a[i])
            ++j;
        else
            ++c, ++i, ++j;
    }
    return c;
}

// Visits all k-subsets of {0..m-1} as index vectors; f returns false to abort.
template <typename F>
bool for_each_combination(int m, int k, F&& f) {
    if (k < 0 || k > m) return true;
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        if (!f(idx)) return false;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == m - k + i) --i;
        if (i < 0) return true;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

}  // namespace trop
