#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cremona/dejonquieres.hpp"
#include "cremona/error.hpp"
#include "cremona/polynomial.hpp"

namespace cremona {

// Self-map of a weighted projective space: component F_i is weighted
// homogeneous of degree w_i, with an invertible linear part in the weight-1
// coordinates for the triangular shapes used here.
class WeightedSelfMap {
  public:
    WeightedSelfMap(std::vector<Polynomial> components) : comps_(std::move(components)) {
        if (comps_.empty()) throw NotHomogeneousError("empty component list");
        const VarSetPtr& vs = comps_[0].vars();
        if (comps_.size() != vs->size())
            throw NotHomogeneousError("component count must match variable count");
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            if (!(*comps_[i].vars() == *vs))
                throw DescriptorMismatchError("components over different variable sets");
            if (comps_[i].is_zero() || !comps_[i].is_weighted_homogeneous(vs->weight(i)))
                throw NotHomogeneousError("component " + std::to_string(i) +
                                          " is not weighted-homogeneous of its weight");
        }
        check_invertible_linear_part();
    }

    static WeightedSelfMap identity(const Field& f, const VarSetPtr& vs) {
        std::vector<Polynomial> comps;
        for (std::size_t i = 0; i < vs->size(); ++i)
            comps.push_back(Polynomial::variable(f, vs, i));
        return WeightedSelfMap(std::move(comps));
    }

    const std::vector<Polynomial>& components() const { return comps_; }
    const Field& field() const { return comps_[0].field(); }
    const VarSetPtr& vars() const { return comps_[0].vars(); }

    friend WeightedSelfMap compose(const WeightedSelfMap& g1, const WeightedSelfMap& g2) {
        std::map<std::size_t, Polynomial> images;
        for (std::size_t i = 0; i < g2.comps_.size(); ++i) images.emplace(i, g2.comps_[i]);
        std::vector<Polynomial> comps;
        for (const auto& c : g1.comps_) comps.push_back(c.subst(images));
        return WeightedSelfMap(std::move(comps));
    }

    // identity up to weighted scaling: F_i = lambda^{w_i} t_i for one lambda
    // in the coefficient field
    bool is_identity_up_to_scaling() const {
        const Field& f = field();
        const VarSetPtr& vs = vars();
        std::vector<code_t> diag(comps_.size());
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            if (comps_[i].terms().size() != 1) return false;
            const auto& [e, c] = comps_[i].terms().front();
            for (std::size_t j = 0; j < e.size(); ++j)
                if (e[j] != (i == j ? 1u : 0u)) return false;
            diag[i] = c;
        }
        for (std::size_t i = 0; i < comps_.size(); ++i)
            if (vs->weight(i) == 1) {
                code_t lambda = diag[i];
                for (std::size_t j = 0; j < comps_.size(); ++j)
                    if (f.pow(lambda, vs->weight(j)) != diag[j]) return false;
                return true;
            }
        for (code_t lambda = 1; lambda < f.q(); ++lambda) {
            bool ok = true;
            for (std::size_t j = 0; j < comps_.size() && ok; ++j)
                ok = f.pow(lambda, vs->weight(j)) == diag[j];
            if (ok) return true;
        }
        return false;
    }

    std::optional<unsigned> order(unsigned cutoff = 64, std::uint64_t term_cap = 100000) const {
        WeightedSelfMap acc = *this;
        for (unsigned n = 1; n <= cutoff; ++n) {
            if (acc.is_identity_up_to_scaling()) return n;
            std::uint64_t sz = 0;
            for (const auto& c : acc.comps_) sz += c.terms().size();
            if (sz > term_cap) return std::nullopt;
            acc = compose(acc, *this);
        }
        return std::nullopt;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < comps_.size(); ++i)
            s += (i ? ", " : "") + comps_[i].str();
        return s + ")";
    }

  private:
    std::vector<Polynomial> comps_;

    void check_invertible_linear_part() const {
        const Field& f = field();
        const VarSetPtr& vs = vars();
        // weight-1 coordinates must map among themselves invertibly; the
        // final coordinate of strictly largest weight needs a nonzero
        // coefficient on itself (triangular shape)
        std::vector<std::size_t> w1;
        for (std::size_t i = 0; i < vs->size(); ++i)
            if (vs->weight(i) == 1) w1.push_back(i);
        if (!w1.empty()) {
            // determinant of the linear action on weight-1 coordinates
            std::vector<code_t> m(w1.size() * w1.size(), 0);
            for (std::size_t r = 0; r < w1.size(); ++r)
                for (std::size_t c = 0; c < w1.size(); ++c) {
                    Expo e(vs->size(), 0);
                    e[w1[c]] = 1;
                    m[r * w1.size() + c] = comps_[w1[r]].coeff(e);
                }
            // Gaussian elimination determinant over the field
            code_t det = 1;
            std::size_t n = w1.size();
            for (std::size_t col = 0; col < n; ++col) {
                std::size_t piv = col;
                while (piv < n && m[piv * n + col] == 0) ++piv;
                if (piv == n) {
                    det = 0;
                    break;
                }
                if (piv != col)
                    for (std::size_t j = 0; j < n; ++j) std::swap(m[piv * n + j], m[col * n + j]);
                det = f.mul(det, m[col * n + col]);
                code_t inv = f.inv(m[col * n + col]);
                for (std::size_t r2 = col + 1; r2 < n; ++r2) {
                    code_t factor = f.mul(m[r2 * n + col], inv);
                    for (std::size_t j = col; j < n; ++j)
                        m[r2 * n + j] = f.sub(m[r2 * n + j], f.mul(factor, m[col * n + j]));
                }
            }
            if (det == 0)
                throw NonInvertibleLinearPartError("linear part on weight-1 coordinates is singular");
        }
        for (std::size_t i = 0; i < vs->size(); ++i) {
            if (vs->weight(i) == 1) continue;
            Expo e(vs->size(), 0);
            e[i] = 1;
            if (comps_[i].coeff(e) == 0)
                throw NonInvertibleLinearPartError("coefficient of coordinate " + vs->name(i) +
                                                   " in its own image vanishes");
        }
    }
};

// ---------------------------------------------------------------------------
// the shift sum of a binary form: sum_{j=0}^{p-1} f(t0 + j t1, t1)

inline void require_binary_form(const Polynomial& f) {
    if (f.vars()->size() != 2) throw NotBinaryFormError("expected two variables");
    if (f.vars()->weight(0) != 1 || f.vars()->weight(1) != 1)
        throw NotBinaryFormError("expected weight-1 variables");
    if (!f.is_zero() && !f.is_weighted_homogeneous(static_cast<std::uint64_t>(f.degree())))
        throw NotBinaryFormError("expected a homogeneous binary form");
}

inline Polynomial norm_sum(const Polynomial& f, code_t p_check) {
    require_binary_form(f);
    const Field& fld = f.field();
    if (fld.p() != p_check) throw WrongCharacteristicError("field characteristic disagrees with p");
    const VarSetPtr& vs = f.vars();
    Polynomial t0 = Polynomial::variable(fld, vs, 0);
    Polynomial t1 = Polynomial::variable(fld, vs, 1);
    Polynomial acc = Polynomial::zero(fld, vs);
    for (code_t j = 0; j < fld.p(); ++j)
        acc = acc + f.subst_var(0, t0 + t1.scaled(fld.from_int(j).code()));
    return acc;
}

// Independent oracle: expand each monomial by the binomial theorem and use
// sum_{j=0}^{p-1} j^m = -1 when (p-1) | m, m >= 1, and 0 otherwise.
inline Polynomial norm_sum_oracle(const Polynomial& f, code_t p_check) {
    require_binary_form(f);
    const Field& fld = f.field();
    if (fld.p() != p_check) throw WrongCharacteristicError("field characteristic disagrees with p");
    code_t p = fld.p();
    const VarSetPtr& vs = f.vars();
    Polynomial acc = Polynomial::zero(fld, vs);
    // Pascal's triangle mod p
    std::uint32_t maxdeg = 0;
    for (const auto& [e, c] : f.terms()) maxdeg = std::max(maxdeg, e[0]);
    std::vector<std::vector<code_t>> binom(maxdeg + 1);
    for (std::uint32_t n = 0; n <= maxdeg; ++n) {
        binom[n].assign(n + 1, 0);
        binom[n][0] = 1;
        for (std::uint32_t r = 1; r <= n; ++r)
            binom[n][r] = fld.add(r <= n - 1 ? binom[n - 1][r] : 0, binom[n - 1][r - 1]);
    }
    for (const auto& [e, c] : f.terms()) {
        std::uint32_t a = e[0], b = e[1];
        for (std::uint32_t i = 0; i < a; ++i) {
            std::uint32_t m = a - i; // exponent of j, m >= 1
            if (m % (p - 1) != 0) continue;
            code_t coeff = fld.mul(c, binom[a][i]);
            coeff = fld.neg(coeff); // sum of j^m is -1
            if (coeff == 0) continue;
            acc = acc + Polynomial::monomial(fld, vs, Expo{i, b + m}, coeff);
        }
        // the i = a layer contributes p equal summands, i.e. zero
    }
    return acc;
}

// third route: the shift sum equals the (p-1)-st power of (shift - identity)
// applied to f, since sum_{j<p} S^j = (S - 1)^{p-1} in characteristic p
inline Polynomial norm_sum_difference_route(const Polynomial& f, code_t p_check) {
    require_binary_form(f);
    const Field& fld = f.field();
    if (fld.p() != p_check) throw WrongCharacteristicError("field characteristic disagrees with p");
    const VarSetPtr& vs = f.vars();
    Polynomial t0 = Polynomial::variable(fld, vs, 0);
    Polynomial t1 = Polynomial::variable(fld, vs, 1);
    Polynomial acc = f;
    for (code_t step = 0; step + 1 < fld.p(); ++step)
        acc = acc.subst_var(0, t0 + t1) - acc;
    return acc;
}

// ---------------------------------------------------------------------------
// self-maps of P^1 x P^1: (x, y) -> (phi(.), psi(.)), optionally swapping the
// inputs first

class ProductMap {
  public:
    ProductMap(Mobius phi, Mobius psi, bool swap)
        : phi_(std::move(phi)), psi_(std::move(psi)), swap_(swap) {}

    static ProductMap identity(const Field& f) {
        return {Mobius::identity(f), Mobius::identity(f), false};
    }

    const Mobius& phi() const { return phi_; }
    const Mobius& psi() const { return psi_; }
    bool swaps() const { return swap_; }

    // (g1 . g2)(x, y) = g1(g2(x, y))
    friend ProductMap compose(const ProductMap& g1, const ProductMap& g2) {
        if (!g2.swap_) {
            if (!g1.swap_) return {g1.phi_ * g2.phi_, g1.psi_ * g2.psi_, false};
            return {g1.phi_ * g2.psi_, g1.psi_ * g2.phi_, true};
        }
        if (!g1.swap_) return {g1.phi_ * g2.phi_, g1.psi_ * g2.psi_, true};
        return {g1.phi_ * g2.psi_, g1.psi_ * g2.phi_, false};
    }

    bool is_identity() const {
        return !swap_ && phi_.is_identity() && psi_.is_identity();
    }

    friend bool operator==(const ProductMap& a, const ProductMap& b) {
        return a.swap_ == b.swap_ && a.phi_ == b.phi_ && a.psi_ == b.psi_;
    }

    std::optional<unsigned> order(unsigned cutoff = 64) const {
        ProductMap acc = *this;
        for (unsigned n = 1; n <= cutoff; ++n) {
            if (acc.is_identity()) return n;
            acc = compose(acc, *this);
        }
        return std::nullopt;
    }

  private:
    Mobius phi_, psi_;
    bool swap_;
};

} // namespace cremona
