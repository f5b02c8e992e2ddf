#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include <boost/rational.hpp>

#include "cremona/error.hpp"
#include "cremona/root_system.hpp"

namespace cremona {

using IntMat = std::vector<long long>; // rank x rank, row-major

inline IntMat mat_identity(unsigned n) {
    IntMat m(n * n, 0);
    for (unsigned i = 0; i < n; ++i) m[i * n + i] = 1;
    return m;
}

inline IntMat mat_mul(const IntMat& a, const IntMat& b, unsigned n) {
    IntMat r(n * n, 0);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned k = 0; k < n; ++k) {
            long long v = a[i * n + k];
            if (v == 0) continue;
            for (unsigned j = 0; j < n; ++j) r[i * n + j] += v * b[k * n + j];
        }
    return r;
}

inline IntMat mat_neg(IntMat m) {
    for (auto& x : m) x = -x;
    return m;
}

inline long long mat_trace(const IntMat& m, unsigned n) {
    long long t = 0;
    for (unsigned i = 0; i < n; ++i) t += m[i * n + i];
    return t;
}

// Fraction-free (Bareiss) elimination; exact over the integers.  Returns the
// rank and, when the matrix is square and nonsingular, its determinant.
inline std::pair<unsigned, long long> bareiss_rank_det(IntMat a, unsigned n) {
    long long sign = 1, prev = 1;
    unsigned rank = 0;
    for (unsigned col = 0; col < n && rank < n; ++col) {
        unsigned piv = rank;
        while (piv < n && a[piv * n + col] == 0) ++piv;
        if (piv == n) continue;
        if (piv != rank) {
            for (unsigned j = 0; j < n; ++j) std::swap(a[piv * n + j], a[rank * n + j]);
            sign = -sign;
        }
        for (unsigned r = rank + 1; r < n; ++r) {
            for (unsigned j = col + 1; j < n; ++j)
                a[r * n + j] =
                    (a[rank * n + col] * a[r * n + j] - a[r * n + col] * a[rank * n + j]) / prev;
            a[r * n + col] = 0;
        }
        prev = a[rank * n + col];
        ++rank;
    }
    long long det = (rank == n) ? sign * prev : 0;
    return {rank, det};
}

inline bool preserves_gram(const RootSystem& rs, const IntMat& m) {
    unsigned n = rs.rank;
    IntMat g(n * n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) g[i * n + j] = rs.gram[i][j];
    IntMat mt(n * n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) mt[i * n + j] = m[j * n + i];
    return mat_mul(mat_mul(mt, g, n), m, n) == g;
}

// An isometry of the root lattice in simple-root coordinates.
class WeylElement {
  public:
    WeylElement(RootSystemPtr rs, IntMat m) : rs_(std::move(rs)), m_(std::move(m)) {
        if (m_.size() != std::size_t(rs_->rank) * rs_->rank)
            throw DimensionMismatchError("matrix size does not match rank");
        if (!preserves_gram(*rs_, m_)) throw Error("matrix does not preserve the Gram form");
    }

    static WeylElement identity(RootSystemPtr rs) {
        unsigned n = rs->rank;
        return {std::move(rs), mat_identity(n)};
    }

    static WeylElement minus_identity(RootSystemPtr rs) {
        unsigned n = rs->rank;
        return {std::move(rs), mat_neg(mat_identity(n))};
    }

    static WeylElement simple_reflection(RootSystemPtr rs, unsigned i) {
        IntMat m(rs->reflections.at(i));
        return {std::move(rs), std::move(m)};
    }

    const RootSystemPtr& system() const { return rs_; }
    const IntMat& matrix() const { return m_; }
    unsigned rank() const { return rs_->rank; }

    friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
        return {a.rs_, mat_mul(a.m_, b.m_, a.rs_->rank)};
    }

    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.m_ == b.m_; }

    bool is_identity() const { return m_ == mat_identity(rs_->rank); }

    long long trace() const { return mat_trace(m_, rs_->rank); }

    long long det() const { return bareiss_rank_det(m_, rs_->rank).second; }

    unsigned fixed_rank() const {
        unsigned n = rs_->rank;
        IntMat d = m_;
        for (unsigned i = 0; i < n; ++i) d[i * n + i] -= 1;
        return n - bareiss_rank_det(std::move(d), n).first;
    }

    std::optional<unsigned> order(unsigned cutoff = 64) const {
        IntMat acc = m_;
        IntMat id = mat_identity(rs_->rank);
        for (unsigned k = 1; k <= cutoff; ++k) {
            if (acc == id) return k;
            acc = mat_mul(acc, m_, rs_->rank);
        }
        return std::nullopt;
    }

  private:
    RootSystemPtr rs_;
    IntMat m_;
};

// nonzero integer vector fixed by w (kernel of M - I cleared to integers),
// in simple-root coordinates; nullopt when the fixed rank is 0
inline std::optional<std::vector<long long>> fixed_vector_witness(const WeylElement& w) {
    using Rat = boost::rational<long long>;
    unsigned n = w.rank();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            a[i][j] = Rat(w.matrix()[i * n + j] - (i == j ? 1 : 0));
    // reduced row echelon form
    std::vector<int> pivot_col(n, -1);
    unsigned rank = 0;
    for (unsigned col = 0; col < n && rank < n; ++col) {
        unsigned piv = rank;
        while (piv < n && a[piv][col] == Rat(0)) ++piv;
        if (piv == n) continue;
        std::swap(a[piv], a[rank]);
        Rat d = a[rank][col];
        for (unsigned j = 0; j < n; ++j) a[rank][j] /= d;
        for (unsigned r = 0; r < n; ++r) {
            if (r == rank || a[r][col] == Rat(0)) continue;
            Rat f = a[r][col];
            for (unsigned j = 0; j < n; ++j) a[r][j] -= f * a[rank][j];
        }
        pivot_col[rank] = static_cast<int>(col);
        ++rank;
    }
    if (rank == n) return std::nullopt;
    // pick the first free column and back-substitute
    std::vector<bool> is_pivot(n, false);
    for (unsigned r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
    unsigned free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    std::vector<Rat> x(n, Rat(0));
    x[free_col] = Rat(1);
    for (unsigned r = 0; r < rank; ++r) x[pivot_col[r]] = -a[r][free_col];
    long long lcm = 1;
    for (const auto& v : x) lcm = std::lcm(lcm, v.denominator());
    std::vector<long long> out(n);
    for (unsigned i = 0; i < n; ++i) out[i] = boost::rational_cast<long long>(x[i] * lcm);
    long long g = 0;
    for (long long v : out) g = std::gcd(g, v);
    if (g > 1)
        for (auto& v : out) v /= g;
    for (long long v : out) {
        if (v == 0) continue;
        if (v < 0)
            for (auto& y : out) y = -y;
        break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// exhaustive enumeration

namespace weyl_detail {

constexpr unsigned kMaxRank = 8;
using Mat8 = std::array<std::int8_t, kMaxRank * kMaxRank>;
using Key = std::array<std::uint64_t, 4>;

struct KeyHash {
    std::size_t operator()(const Key& k) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (std::uint64_t w : k) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdULL;
        }
        return static_cast<std::size_t>(h);
    }
};

// entries lie in [-8, 7]; anything larger would be a non-root column
inline Key pack(const Mat8& m, unsigned n) {
    Key k{0, 0, 0, 0};
    for (unsigned i = 0; i < n * n; ++i) {
        int v = m[i] + 8;
        k[i >> 4] |= static_cast<std::uint64_t>(v & 0xF) << ((i & 15) * 4);
    }
    return k;
}

inline Mat8 mat8_identity(unsigned n) {
    Mat8 m{};
    for (unsigned i = 0; i < n; ++i) m[i * n + i] = 1;
    return m;
}

inline Mat8 mat8_mul(const Mat8& a, const Mat8& b, unsigned n) {
    Mat8 r{};
    for (unsigned i = 0; i < n; ++i)
        for (unsigned k = 0; k < n; ++k) {
            int v = a[i * n + k];
            if (v == 0) continue;
            for (unsigned j = 0; j < n; ++j)
                r[i * n + j] = static_cast<std::int8_t>(r[i * n + j] + v * b[k * n + j]);
        }
    return r;
}

} // namespace weyl_detail

// Streams every group element exactly once (the identity first is not
// guaranteed; deduplication is by packed matrix bytes).  Refuses when the
// known group order exceeds the budget, which is the E8 policy.
template <typename Fn>
std::uint64_t enumerate_group(const RootSystem& rs, std::uint64_t budget, Fn&& cb) {
    using namespace weyl_detail;
    if (rs.group_order() > budget)
        throw BudgetExceededError(type_name(rs.type) + " has " +
                                  std::to_string(rs.group_order()) +
                                  " elements, beyond the budget of " + std::to_string(budget));
    unsigned n = rs.rank;
    // sparse column-update data: m * S_i adds -G[i][j] * col_i to col_j for
    // the neighbours j != i, then negates col_i
    std::vector<std::vector<std::pair<unsigned, long long>>> nbrs(n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            if (j != i && rs.gram[i][j] != 0) nbrs[i].emplace_back(j, rs.gram[i][j]);

    std::unordered_set<Key, KeyHash> visited;
    visited.reserve(static_cast<std::size_t>(rs.group_order() * 13 / 10));
    std::vector<Mat8> frontier;
    Mat8 id = mat8_identity(n);
    visited.insert(pack(id, n));
    cb(id);
    frontier.push_back(id);
    std::uint64_t count = 1;

    while (!frontier.empty()) {
        std::vector<Mat8> next;
        for (const Mat8& m : frontier) {
            for (unsigned i = 0; i < n; ++i) {
                Mat8 s = m;
                for (auto [j, gij] : nbrs[i])
                    for (unsigned r = 0; r < n; ++r)
                        s[r * n + j] = static_cast<std::int8_t>(s[r * n + j] - gij * m[r * n + i]);
                for (unsigned r = 0; r < n; ++r)
                    s[r * n + i] = static_cast<std::int8_t>(-m[r * n + i]);
                if (visited.insert(pack(s, n)).second) {
                    if (++count > budget) throw BudgetExceededError("enumeration passed budget");
                    cb(s);
                    next.push_back(s);
                }
            }
        }
        frontier = std::move(next);
    }
    return count;
}

struct OrderStat {
    std::uint64_t count = 0;
    std::map<long long, std::uint64_t> traces;      // trace -> multiplicity
    std::map<unsigned, std::uint64_t> fixed_ranks;  // fixed rank -> multiplicity
};

struct GroupScan {
    RootSystemType type;
    std::uint64_t count = 0;
    std::map<unsigned, OrderStat> profile; // keyed by element order
    bool saw_minus_identity = false;
    std::uint64_t det_plus = 0;
    std::uint64_t det_minus = 0;
    // witness from the w*w == -I scan, when one exists
    std::optional<IntMat> square_root_of_minus_identity;
    bool gram_preserved_all = true;
    unsigned max_abs_entry = 0;
};

// One full pass: counts, order/trace/fixed-rank profile, determinant split,
// and the square-roots-of-minus-identity scan.
inline GroupScan scan_group(const RootSystem& rs, std::uint64_t budget = 5000000) {
    using namespace weyl_detail;
    unsigned n = rs.rank;
    GroupScan scan;
    scan.type = rs.type;
    Mat8 id = mat8_identity(n);
    Mat8 minus_id{};
    for (unsigned i = 0; i < n; ++i) minus_id[i * n + i] = -1;

    IntMat gram(n * n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) gram[i * n + j] = rs.gram[i][j];

    scan.count = enumerate_group(rs, budget, [&](const Mat8& m) {
        IntMat mm(n * n);
        for (unsigned i = 0; i < n * n; ++i) {
            mm[i] = m[i];
            unsigned a = static_cast<unsigned>(m[i] < 0 ? -m[i] : m[i]);
            if (a > scan.max_abs_entry) scan.max_abs_entry = a;
        }
        // every element must preserve the form
        if (scan.gram_preserved_all && !preserves_gram(rs, mm)) scan.gram_preserved_all = false;

        unsigned order = 0;
        Mat8 acc = m;
        for (unsigned k = 1; k <= 64; ++k) {
            if (acc == id) {
                order = k;
                break;
            }
            acc = mat8_mul(acc, m, n);
        }

        IntMat d = mm;
        for (unsigned i = 0; i < n; ++i) d[i * n + i] -= 1;
        unsigned fr = n - bareiss_rank_det(std::move(d), n).first;
        long long det = bareiss_rank_det(mm, n).second;
        (det > 0 ? scan.det_plus : scan.det_minus)++;

        OrderStat& st = scan.profile[order];
        st.count++;
        st.traces[mat_trace(mm, n)]++;
        st.fixed_ranks[fr]++;

        if (m == minus_id) scan.saw_minus_identity = true;
        if (!scan.square_root_of_minus_identity && mat8_mul(m, m, n) == minus_id)
            scan.square_root_of_minus_identity = mm;
    });
    return scan;
}

// order -> statistics over the requested orders only
inline std::map<unsigned, OrderStat> order_profile(const GroupScan& scan,
                                                   const std::set<unsigned>& orders) {
    std::map<unsigned, OrderStat> out;
    for (unsigned o : orders) {
        auto it = scan.profile.find(o);
        if (it != scan.profile.end()) out.emplace(o, it->second);
    }
    return out;
}

// The longest element, by greedy descent of a strictly dominant vector; no
// enumeration, works for every supported type.
inline WeylElement longest_element(const RootSystemPtr& rs) {
    using Rat = boost::rational<long long>;
    unsigned n = rs->rank;
    // v with G v = c * (1,...,1), c > 0: solve with rational elimination
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) a[i][j] = Rat(rs->gram[i][j]);
        a[i][n] = Rat(1);
    }
    for (unsigned col = 0; col < n; ++col) {
        unsigned piv = col;
        while (a[piv][col] == Rat(0)) ++piv;
        std::swap(a[piv], a[col]);
        Rat d = a[col][col];
        for (unsigned j = 0; j <= n; ++j) a[col][j] /= d;
        for (unsigned r = 0; r < n; ++r) {
            if (r == col || a[r][col] == Rat(0)) continue;
            Rat f = a[r][col];
            for (unsigned j = 0; j <= n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    long long lcm = 1;
    for (unsigned i = 0; i < n; ++i) lcm = std::lcm(lcm, a[i][n].denominator());
    std::vector<long long> v(n);
    for (unsigned i = 0; i < n; ++i) v[i] = boost::rational_cast<long long>(a[i][n] * lcm);

    IntMat w = mat_identity(n);
    bool progress = true;
    while (progress) {
        progress = false;
        for (unsigned i = 0; i < n; ++i) {
            long long p = rs->pairing(v, i);
            if (p > 0) {
                v[i] -= p;
                IntMat s(n * n);
                for (unsigned r = 0; r < n; ++r)
                    for (unsigned c = 0; c < n; ++c) s[r * n + c] = rs->reflections[i][r * n + c];
                w = mat_mul(s, w, n);
                progress = true;
            }
        }
    }
    return {rs, std::move(w)};
}

struct SquareRootScan {
    bool target_seen = false;                 // target found among the elements
    std::optional<IntMat> witness;            // some w with w^2 == target
    std::uint64_t scanned = 0;
};

// full scan for square roots of `target` inside the group
inline SquareRootScan square_roots_of(const RootSystem& rs, const IntMat& target,
                                      std::uint64_t budget = 5000000) {
    using namespace weyl_detail;
    unsigned n = rs.rank;
    Mat8 t{};
    for (unsigned i = 0; i < n * n; ++i) t[i] = static_cast<std::int8_t>(target[i]);
    SquareRootScan out;
    out.scanned = enumerate_group(rs, budget, [&](const Mat8& m) {
        if (m == t) out.target_seen = true;
        if (!out.witness && mat8_mul(m, m, n) == t) {
            IntMat w(n * n);
            for (unsigned i = 0; i < n * n; ++i) w[i] = m[i];
            out.witness = std::move(w);
        }
    });
    return out;
}

struct PlusDecomposition {
    bool minus_identity_in_group = false;
    bool minus_identity_central = true; // scalar, so automatic; sampled anyway
    long long det_minus_identity = 0;
    bool halves_match = false; // |det=+1| == |det=-1| == |W|/2
    bool unique_factorization_samples = false;
    bool holds() const {
        return minus_identity_in_group && minus_identity_central && det_minus_identity == -1 &&
               halves_match && unique_factorization_samples;
    }
};

// W = W^+ x {+-1}: -I is central with determinant -1, the determinant splits
// the group in half, and w = (det-positive part) * (+-I) is unique
inline PlusDecomposition plus_part_decomposition(const RootSystemPtr& rs, const GroupScan& scan) {
    PlusDecomposition d;
    WeylElement w0 = longest_element(rs);
    WeylElement minus = WeylElement::minus_identity(rs);
    d.minus_identity_in_group = (w0 == minus) && scan.saw_minus_identity;
    d.det_minus_identity = minus.det();
    d.halves_match = scan.det_plus == scan.det_minus && scan.det_plus * 2 == scan.count;
    // centrality sample: s_i * (-I) == (-I) * s_i for all generators
    for (unsigned i = 0; i < rs->rank; ++i) {
        WeylElement s = WeylElement::simple_reflection(rs, i);
        if (!((s * minus) == (minus * s))) d.minus_identity_central = false;
    }
    // uniqueness sample: exactly one of w, -w has determinant +1
    d.unique_factorization_samples = true;
    WeylElement w = WeylElement::identity(rs);
    for (unsigned i = 0; i < 40; ++i) {
        w = w * WeylElement::simple_reflection(rs, i % rs->rank);
        long long dw = w.det();
        long long dmw = (minus * w).det();
        if (dw * dmw != -1) d.unique_factorization_samples = false;
    }
    return d;
}

// Lefschetz number of an automorphism of a rational surface whose trace on
// the primitive part of Pic is given: 1 (H^0) + 1 (H^4) + (1 + trace) (H^2).
inline long long lefschetz(long long trace_on_kperp) { return 3 + trace_on_kperp; }

} // namespace cremona
