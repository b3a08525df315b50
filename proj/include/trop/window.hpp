#pragma once

#include "trop/core.hpp"

namespace trop {

// Axis-aligned box of integer points: the finite stage on which infinite
// objects are materialized and verified.
struct Window {
    IntVec lo, hi;

    Window() = default;
    Window(IntVec l, IntVec h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo.size() != hi.size() || lo.empty())
            throw ValidationError("window: lo/hi dimension mismatch");
        for (size_t i = 0; i < lo.size(); ++i)
            if (lo[i] > hi[i]) throw ValidationError("window: lo > hi");
    }

    static Window box1(long long a, long long b) { return Window({Int(a)}, {Int(b)}); }

    int dim() const { return static_cast<int>(lo.size()); }

    Int point_count() const {
        Int c = 1;
        for (size_t i = 0; i < lo.size(); ++i) c *= hi[i] - lo[i] + 1;
        return c;
    }

    bool contains(const IntVec& v) const {
        if (v.size() != lo.size()) return false;
        for (size_t i = 0; i < lo.size(); ++i)
            if (v[i] < lo[i] || v[i] > hi[i]) return false;
        return true;
    }

    // All points, lexicographically sorted.
    std::vector<IntVec> points(long long limit) const {
        if (point_count() > limit) throw ResourceError("window too large");
        std::vector<IntVec> out;
        IntVec cur = lo;
        const size_t n = lo.size();
        while (true) {
            out.push_back(cur);
            size_t i = n;
            bool done = false;
            while (true) {
                if (i == 0) {
                    done = true;
                    break;
                }
                --i;
                cur[i] += 1;
                if (cur[i] <= hi[i]) break;
                cur[i] = lo[i];
            }
            if (done) break;
        }
        return out;
    }
};

}  // namespace trop
