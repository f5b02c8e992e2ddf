#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cremona/error.hpp"

namespace cremona {

using PicVec = std::vector<long long>; // coordinates in the basis e0, e1, ..., eN

// Pic of the plane blown up in N points: the odd unimodular lattice I^{1,N}
// with form diag(+1, -1, ..., -1) and K = -3 e0 + e1 + ... + eN.
struct PicLattice {
    unsigned N;

    explicit PicLattice(unsigned n) : N(n) {
        if (n > 8) throw UnsupportedNError("only N <= 8 is supported");
    }

    PicVec K() const {
        PicVec k(N + 1, 1);
        k[0] = -3;
        return k;
    }

    long long dot(const PicVec& a, const PicVec& b) const {
        if (a.size() != N + 1 || b.size() != N + 1)
            throw DimensionMismatchError("vector length does not match the lattice");
        long long s = a[0] * b[0];
        for (unsigned i = 1; i <= N; ++i) s -= a[i] * b[i];
        return s;
    }

    static PicVec basis_vector(unsigned N, unsigned i) {
        PicVec v(N + 1, 0);
        v[i] = 1;
        return v;
    }

    // the standard root basis of K-perp: e0-e1-e2-e3, then e_i - e_{i+1}
    std::vector<PicVec> kperp_basis() const {
        std::vector<PicVec> basis;
        PicVec a0(N + 1, 0);
        a0[0] = 1;
        a0[1] = a0[2] = a0[3] = -1;
        basis.push_back(std::move(a0));
        for (unsigned i = 1; i < N; ++i) {
            PicVec v(N + 1, 0);
            v[i] = 1;
            v[i + 1] = -1;
            basis.push_back(std::move(v));
        }
        return basis;
    }
};

inline PicVec pic_add(const PicVec& a, const PicVec& b) {
    PicVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline PicVec pic_scale(long long c, const PicVec& a) {
    PicVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline PicVec pic_neg(const PicVec& a) { return pic_scale(-1, a); }

// Geiser involution on Pic of a degree-2 Del Pezzo: D -> -D + (D.K) K
inline PicVec geiser(const PicLattice& L, const PicVec& D) {
    if (L.N != 7) throw WrongNError("the Geiser involution needs N = 7");
    return pic_add(pic_neg(D), pic_scale(L.dot(D, L.K()), L.K()));
}

// Bertini involution on Pic of a degree-1 Del Pezzo: D -> -D + 2 (D.K) K
inline PicVec bertini(const PicLattice& L, const PicVec& D) {
    if (L.N != 8) throw WrongNError("the Bertini involution needs N = 8");
    return pic_add(pic_neg(D), pic_scale(2 * L.dot(D, L.K()), L.K()));
}

// All classes E with E.E = -1 and E.K = -1, by bounded search on the degree
// coordinate (0 <= d <= 6 suffices for N <= 8); the counts must come out as
// 27 / 56 / 240 for N = 6 / 7 / 8.
inline std::vector<PicVec> exceptional_classes(const PicLattice& L) {
    std::vector<PicVec> out;
    for (long long d = 0; d <= 6; ++d) {
        // E.K = -3d - sum c_i = -1 and E.E = d^2 - sum c_i^2 = -1
        long long target_sum = 1 - 3 * d;
        long long target_sq = d * d + 1;
        PicVec cur(L.N + 1, 0);
        cur[0] = d;
        // depth-first over c_1..c_N with sum and sum-of-squares pruning
        std::function<void(unsigned, long long, long long)> rec =
            [&](unsigned i, long long sum, long long sq) {
                if (sq > target_sq) return;
                unsigned remaining = L.N - i;
                if (remaining == 0) {
                    if (sum == target_sum && sq == target_sq) out.push_back(cur);
                    return;
                }
                long long srem = target_sum - sum;
                long long qrem = target_sq - sq;
                if (srem * srem > static_cast<long long>(remaining) * qrem) return;
                long long hi = static_cast<long long>(std::sqrt(static_cast<double>(qrem))) + 1;
                for (long long c = -hi; c <= hi; ++c) {
                    cur[i + 1] = c;
                    rec(i + 1, sum + c, sq + c * c);
                }
                cur[i + 1] = 0;
            };
        rec(0, 0, 0);
    }
    std::sort(out.begin(), out.end());
    unsigned expected = L.N == 6 ? 27 : (L.N == 7 ? 56 : (L.N == 8 ? 240 : 0));
    if (expected && out.size() != expected)
        throw Error("exceptional class search found " + std::to_string(out.size()) +
                    " classes, expected " + std::to_string(expected));
    return out;
}

struct CrossValues {
    long long pair_sum = 0;                  // sum over the 12 ordered pairs
    std::optional<long long> common;         // set when all pairwise values agree
    std::array<std::array<long long, 4>, 4> table{}; // D_i . D_j
};

// Checks the degree-1 intersection bookkeeping: four classes of square 4
// summing to -8K have pairwise products summing to 64 - 16 = 48; reports the
// full table and whether one common value (then 4) accounts for it.
inline CrossValues di_cross_values(const PicLattice& L, const std::array<PicVec, 4>& D) {
    if (L.N != 8) throw WrongNError("the configuration lives on a degree-1 surface");
    PicVec sum(L.N + 1, 0);
    for (const auto& d : D) {
        if (L.dot(d, d) != 4) throw PreconditionError("each class must have self-intersection 4");
        sum = pic_add(sum, d);
    }
    if (sum != pic_scale(-8, L.K())) throw PreconditionError("the classes must sum to -8K");
    CrossValues cv;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cv.table[i][j] = L.dot(D[i], D[j]);
            if (i != j) cv.pair_sum += cv.table[i][j];
        }
    bool all_equal = true;
    long long v = cv.table[0][1];
    for (int i = 0; i < 4 && all_equal; ++i)
        for (int j = 0; j < 4 && all_equal; ++j)
            if (i != j && cv.table[i][j] != v) all_equal = false;
    if (all_equal) cv.common = v;
    return cv;
}

} // namespace cremona
