#pragma once

#include <array>

#include "trop/core.hpp"

namespace trop {

// GF(p^k) for p in {2,3,5,7}, k in {1,2}, with one fixed irreducible modulus
// per field so element encodings are reproducible. Elements are encoded as
// integers 0..q-1: the element c0 + c1*t has code c0 + p*c1.
class FiniteField {
public:
    FiniteField(int p, int k) : p_(p), k_(k) {
        const bool okp = p == 2 || p == 3 || p == 5 || p == 7;
        if (!okp || (k != 1 && k != 2))
            throw ValidationError("finite field: supported fields are GF(p^k), p in {2,3,5,7}, k in {1,2}");
        q_ = k == 1 ? p : p * p;
        if (k == 2) {
            // shipped degree-2 moduli t^2 + m1 t + m0
            switch (p) {
                case 2: m1_ = 1, m0_ = 1; break;  // t^2+t+1
                case 3: m1_ = 0, m0_ = 1; break;  // t^2+1
                case 5: m1_ = 1, m0_ = 2; break;  // t^2+t+2
                case 7: m1_ = 0, m0_ = 1; break;  // t^2+1
            }
        }
        build_tables();
    }

    static FiniteField gf(int q) {
        for (int p : {2, 3, 5, 7})
            for (int k : {1, 2})
                if ((k == 1 ? p : p * p) == q) return FiniteField(p, k);
        throw ValidationError("finite field: unsupported order " + std::to_string(q));
    }

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }
    int modulus_c1() const { return m1_; }
    int modulus_c0() const { return m0_; }

    int add(int a, int b) const { return add_[idx(a, b)]; }
    int sub(int a, int b) const { return add(a, negate(b)); }
    int mul(int a, int b) const { return mul_[idx(a, b)]; }
    int negate(int a) const { return neg_[static_cast<size_t>(a)]; }
    int inv(int a) const {
        if (a == 0) throw ValidationError("finite field: inverse of zero");
        return inv_[static_cast<size_t>(a)];
    }
    int pow(int a, long long e) const {
        int r = 1, base = a;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    // image of an integer under Z -> GF(p) ⊂ GF(p^k)
    int from_int(long long v) const {
        long long m = v % p_;
        if (m < 0) m += p_;
        return static_cast<int>(m);
    }

    std::string elem_str(int a) const { return std::to_string(a); }

    friend bool operator==(const FiniteField& a, const FiniteField& b) {
        return a.p_ == b.p_ && a.k_ == b.k_;
    }

private:
    size_t idx(int a, int b) const {
        if (a < 0 || a >= q_ || b < 0 || b >= q_)
            throw ValidationError("finite field: element code out of range");
        return static_cast<size_t>(a) * static_cast<size_t>(q_) + static_cast<size_t>(b);
    }

    void build_tables() {
        const size_t n = static_cast<size_t>(q_) * static_cast<size_t>(q_);
        add_.assign(n, 0);
        mul_.assign(n, 0);
        neg_.assign(static_cast<size_t>(q_), 0);
        inv_.assign(static_cast<size_t>(q_), 0);
        auto split = [&](int a) { return std::array<int, 2>{a % p_, a / p_}; };
        auto join = [&](int c0, int c1) { return c0 + p_ * c1; };
        for (int a = 0; a < q_; ++a) {
            auto [a0, a1] = split(a);
            neg_[static_cast<size_t>(a)] = join((p_ - a0) % p_, (p_ - a1) % p_);
            for (int b = 0; b < q_; ++b) {
                auto [b0, b1] = split(b);
                add_[idx(a, b)] = join((a0 + b0) % p_, (a1 + b1) % p_);
                // (a0 + a1 t)(b0 + b1 t) with t^2 = -m1 t - m0
                int c0 = (a0 * b0) % p_;
                int c1 = (a0 * b1 + a1 * b0) % p_;
                int c2 = (a1 * b1) % p_;
                c1 = (c1 + (p_ - m1_ % p_) * c2) % p_;
                c0 = (c0 + (p_ - m0_ % p_) * c2) % p_;
                mul_[idx(a, b)] = join(c0 % p_, c1 % p_);
            }
        }
        for (int a = 1; a < q_; ++a) {
            int found = -1;
            for (int b = 1; b < q_; ++b)
                if (mul_[idx(a, b)] == 1) {
                    found = b;
                    break;
                }
            if (found < 0) throw ValidationError("finite field: modulus is not irreducible");
            inv_[static_cast<size_t>(a)] = found;
        }
    }

    int p_, k_, q_;
    int m1_ = 0, m0_ = 0;
    std::vector<int> add_, mul_, neg_, inv_;
};

}  // namespace trop
