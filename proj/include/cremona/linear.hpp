#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cremona/error.hpp"
#include "cremona/field.hpp"
#include "cremona/rng.hpp"

namespace cremona {

// Dense square matrix over a finite field, row-major codes.
class FieldMatrix {
  public:
    FieldMatrix(Field f, std::size_t n) : f_(std::move(f)), n_(n), a_(n * n, 0) {}

    static FieldMatrix identity(const Field& f, std::size_t n) {
        FieldMatrix m(f, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t size() const { return n_; }
    const Field& field() const { return f_; }

    code_t& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    code_t at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    friend FieldMatrix operator*(const FieldMatrix& x, const FieldMatrix& y) {
        if (!x.f_.same(y.f_) || x.n_ != y.n_)
            throw DescriptorMismatchError("matrix shape or field mismatch");
        FieldMatrix r(x.f_, x.n_);
        for (std::size_t i = 0; i < x.n_; ++i)
            for (std::size_t k = 0; k < x.n_; ++k) {
                code_t v = x.at(i, k);
                if (v == 0) continue;
                for (std::size_t j = 0; j < x.n_; ++j)
                    r.at(i, j) = x.f_.add(r.at(i, j), x.f_.mul(v, y.at(k, j)));
            }
        return r;
    }

    friend FieldMatrix operator+(const FieldMatrix& x, const FieldMatrix& y) {
        FieldMatrix r(x.f_, x.n_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.f_.add(x.a_[i], y.a_[i]);
        return r;
    }

    friend FieldMatrix operator-(const FieldMatrix& x, const FieldMatrix& y) {
        FieldMatrix r(x.f_, x.n_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.f_.sub(x.a_[i], y.a_[i]);
        return r;
    }

    friend bool operator==(const FieldMatrix& x, const FieldMatrix& y) {
        return x.n_ == y.n_ && x.f_.same(y.f_) && x.a_ == y.a_;
    }

    FieldMatrix pow(std::uint64_t e) const {
        FieldMatrix r = identity(f_, n_);
        FieldMatrix base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    bool is_zero() const {
        for (code_t c : a_)
            if (c) return false;
        return true;
    }

    // scalar = lambda * I; the first nonzero entry must sit on the diagonal
    bool is_scalar() const {
        code_t lambda = 0;
        for (std::size_t i = 0; i < n_ && lambda == 0; ++i) lambda = at(i, i);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (at(i, j) != (i == j ? lambda : 0)) return false;
        return true;
    }

    code_t determinant() const {
        FieldMatrix m = *this;
        code_t det = 1;
        for (std::size_t col = 0; col < n_; ++col) {
            std::size_t pivot = col;
            while (pivot < n_ && m.at(pivot, col) == 0) ++pivot;
            if (pivot == n_) return 0;
            if (pivot != col) {
                for (std::size_t j = 0; j < n_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
                det = f_.neg(det);
            }
            det = f_.mul(det, m.at(col, col));
            code_t inv = f_.inv(m.at(col, col));
            for (std::size_t r = col + 1; r < n_; ++r) {
                code_t factor = f_.mul(m.at(r, col), inv);
                if (factor == 0) continue;
                for (std::size_t j = col; j < n_; ++j)
                    m.at(r, j) = f_.sub(m.at(r, j), f_.mul(factor, m.at(col, j)));
            }
        }
        return det;
    }

    std::size_t rank() const {
        FieldMatrix m = *this;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < n_ && rank < n_; ++col) {
            std::size_t pivot = rank;
            while (pivot < n_ && m.at(pivot, col) == 0) ++pivot;
            if (pivot == n_) continue;
            for (std::size_t j = 0; j < n_; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
            code_t inv = f_.inv(m.at(rank, col));
            for (std::size_t r = rank + 1; r < n_; ++r) {
                code_t factor = f_.mul(m.at(r, col), inv);
                if (factor == 0) continue;
                for (std::size_t j = col; j < n_; ++j)
                    m.at(r, j) = f_.sub(m.at(r, j), f_.mul(factor, m.at(rank, j)));
            }
            ++rank;
        }
        return rank;
    }

    FieldMatrix inverse() const {
        FieldMatrix m = *this;
        FieldMatrix inv = identity(f_, n_);
        for (std::size_t col = 0; col < n_; ++col) {
            std::size_t pivot = col;
            while (pivot < n_ && m.at(pivot, col) == 0) ++pivot;
            if (pivot == n_) throw SingularMatrixError("matrix is singular");
            for (std::size_t j = 0; j < n_; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
            code_t pinv = f_.inv(m.at(col, col));
            for (std::size_t j = 0; j < n_; ++j) {
                m.at(col, j) = f_.mul(m.at(col, j), pinv);
                inv.at(col, j) = f_.mul(inv.at(col, j), pinv);
            }
            for (std::size_t r = 0; r < n_; ++r) {
                if (r == col) continue;
                code_t factor = m.at(r, col);
                if (factor == 0) continue;
                for (std::size_t j = 0; j < n_; ++j) {
                    m.at(r, j) = f_.sub(m.at(r, j), f_.mul(factor, m.at(col, j)));
                    inv.at(r, j) = f_.sub(inv.at(r, j), f_.mul(factor, inv.at(col, j)));
                }
            }
        }
        return inv;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < n_; ++i) {
            s += (i ? "; " : "");
            for (std::size_t j = 0; j < n_; ++j)
                s += (j ? "," : "") + f_.element_str(at(i, j));
        }
        return s + "]";
    }

  private:
    Field f_;
    std::size_t n_;
    std::vector<code_t> a_;
};

// Kernel dimension of a rectangular system, rows x cols, over a field; used
// for invariant-space computations.  Matrix given row-major.
inline std::size_t kernel_dimension(const Field& f, std::size_t rows, std::size_t cols,
                                    std::vector<code_t> m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot * cols + col] == 0) ++pivot;
        if (pivot == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(m[pivot * cols + j], m[rank * cols + j]);
        code_t inv = f.inv(m[rank * cols + col]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            code_t factor = f.mul(m[r * cols + col], inv);
            if (factor == 0) continue;
            for (std::size_t j = col; j < cols; ++j)
                m[r * cols + j] = f.sub(m[r * cols + j], f.mul(factor, m[rank * cols + j]));
        }
        ++rank;
    }
    return cols - rank;
}

// smallest n >= 1 with A^n scalar, or nullopt past the cutoff
inline std::optional<unsigned> proj_order(const FieldMatrix& a, unsigned cutoff = 64) {
    if (a.determinant() == 0) throw SingularMatrixError("projective order of singular matrix");
    FieldMatrix acc = a;
    for (unsigned n = 1; n <= cutoff; ++n) {
        if (acc.is_scalar()) return n;
        acc = acc * a;
    }
    return std::nullopt;
}

inline bool is_unipotent(const FieldMatrix& a) {
    FieldMatrix n = a - FieldMatrix::identity(a.field(), a.size());
    return n.pow(static_cast<std::uint64_t>(a.size())).is_zero();
}

// A^{p^{s-1}} == I + (A - I)^{p^{s-1}}, an identity of characteristic-p
// matrix arithmetic for unipotent A; checked exactly
inline bool unipotent_identity_check(const FieldMatrix& a, unsigned s) {
    if (!is_unipotent(a)) throw NotUnipotentError("matrix is not unipotent");
    if (s < 1) throw NotUnipotentError("s must be >= 1");
    std::uint64_t e = 1;
    for (unsigned i = 1; i < s; ++i) e *= a.field().p();
    FieldMatrix lhs = a.pow(e);
    FieldMatrix nil = a - FieldMatrix::identity(a.field(), a.size());
    FieldMatrix rhs = FieldMatrix::identity(a.field(), a.size()) + nil.pow(e);
    return lhs == rhs;
}

// Largest p-power order among p-power-order elements of PGL_{r+1} in
// characteristic p: p^s with s maximal subject to p^(s-1) < r+1.
inline std::uint64_t jordan_bound(unsigned r, code_t p) {
    unsigned s = 1;
    std::uint64_t pw = 1; // p^(s-1)
    while (pw * p < r + 1) {
        pw *= p;
        ++s;
    }
    std::uint64_t bound = 1;
    for (unsigned i = 0; i < s; ++i) bound *= p;
    return bound;
}

// Exhaustive check over GL_{r+1}(GF(q)): every projective order that is a
// power of p respects the bound above.  Enumeration walks all matrices and
// filters by determinant.
inline bool exhaustive_bound_check(unsigned r, const Field& f, std::uint64_t budget = 10000000) {
    std::size_t n = r + 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n * n; ++i) {
        total *= f.q();
        if (total > budget) throw BudgetExceededError("matrix space exceeds budget");
    }
    std::uint64_t bound = jordan_bound(r, f.p());
    for (std::uint64_t enc = 0; enc < total; ++enc) {
        FieldMatrix m(f, n);
        std::uint64_t e = enc;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                m.at(i, j) = static_cast<code_t>(e % f.q());
                e /= f.q();
            }
        if (m.determinant() == 0) continue;
        auto ord = proj_order(m, 256);
        if (!ord) return false;
        std::uint64_t o = *ord;
        while (o % f.p() == 0) o /= f.p();
        if (o == 1 && *ord > bound) return false; // a p-power order beyond the bound
    }
    return true;
}

// random unipotent matrix: I + strict upper triangle, conjugated to hide the
// triangular shape
inline FieldMatrix random_unipotent(const Field& f, std::size_t n, Rng& rng) {
    FieldMatrix u = FieldMatrix::identity(f, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            u.at(i, j) = static_cast<code_t>(rng.below(f.q()));
    // random invertible conjugator built from elementary operations
    FieldMatrix g = FieldMatrix::identity(f, n);
    for (int step = 0; step < 12; ++step) {
        std::size_t i = rng.below(n), j = rng.below(n);
        if (i == j) continue;
        code_t c = static_cast<code_t>(rng.below(f.q()));
        FieldMatrix e = FieldMatrix::identity(f, n);
        e.at(i, j) = c;
        g = g * e;
    }
    return g * u * g.inverse();
}

} // namespace cremona
