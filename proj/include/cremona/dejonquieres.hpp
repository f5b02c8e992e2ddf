#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "cremona/error.hpp"
#include "cremona/field.hpp"
#include "cremona/polynomial.hpp"

namespace cremona {

// Moebius transformation of the line, kept as a 2x2 matrix normalized so the
// first nonzero entry (row-major) is 1; equality is then representational.
class Mobius {
  public:
    Mobius(Field f, std::array<code_t, 4> m) : f_(std::move(f)), m_(m) {
        code_t det = f_.sub(f_.mul(m_[0], m_[3]), f_.mul(m_[1], m_[2]));
        if (det == 0) throw SingularMatrixError("Moebius matrix is singular");
        normalize();
    }

    static Mobius identity(const Field& f) { return {f, {1, 0, 0, 1}}; }
    static Mobius shift(const Field& f, code_t c) { return {f, {1, c, 0, 1}}; }

    const Field& field() const { return f_; }
    const std::array<code_t, 4>& entries() const { return m_; }

    friend Mobius operator*(const Mobius& x, const Mobius& y) {
        const Field& f = x.f_;
        return {f,
                {f.add(f.mul(x.m_[0], y.m_[0]), f.mul(x.m_[1], y.m_[2])),
                 f.add(f.mul(x.m_[0], y.m_[1]), f.mul(x.m_[1], y.m_[3])),
                 f.add(f.mul(x.m_[2], y.m_[0]), f.mul(x.m_[3], y.m_[2])),
                 f.add(f.mul(x.m_[2], y.m_[1]), f.mul(x.m_[3], y.m_[3]))}};
    }

    Mobius inverse() const { return {f_, {m_[3], f_.neg(m_[1]), f_.neg(m_[2]), m_[0]}}; }

    bool is_identity() const { return m_ == std::array<code_t, 4>{1, 0, 0, 1}; }

    friend bool operator==(const Mobius& x, const Mobius& y) {
        return x.f_.same(y.f_) && x.m_ == y.m_;
    }

    code_t apply(code_t x) const {
        code_t den = f_.add(f_.mul(m_[2], x), m_[3]);
        if (den == 0) throw DivisionByZeroError("Moebius pole");
        return f_.mul(f_.add(f_.mul(m_[0], x), m_[1]), f_.inv(den));
    }

  private:
    Field f_;
    std::array<code_t, 4> m_;

    void normalize() {
        for (code_t c : m_) {
            if (c == 0) continue;
            code_t inv = f_.inv(c);
            for (auto& e : m_) e = f_.mul(e, inv);
            return;
        }
    }
};

// (x, y) -> (base(x), (a(x) y + b(x)) / (c(x) y + d(x))).  The fiber matrix is
// stored with polynomial entries without a common factor and with the first
// nonzero entry monic, which makes equality representational.
class DeJonquieresMap {
  public:
    DeJonquieresMap(Mobius base, std::array<Polynomial, 4> fiber)
        : base_(std::move(base)), fiber_(std::move(fiber)) {
        normalize_fiber();
    }

    DeJonquieresMap(Mobius base, const std::array<RationalFunction, 4>& fiber)
        : base_(std::move(base)),
          fiber_{cleared(fiber, 0), cleared(fiber, 1), cleared(fiber, 2), cleared(fiber, 3)} {
        normalize_fiber();
    }

    static DeJonquieresMap identity(const Field& f, const VarSetPtr& xvar) {
        auto one = Polynomial::constant(f, xvar, 1);
        auto zero = Polynomial::zero(f, xvar);
        return {Mobius::identity(f), {one, zero, zero, one}};
    }

    const Mobius& base() const { return base_; }
    const std::array<Polynomial, 4>& fiber() const { return fiber_; }
    const Field& field() const { return base_.field(); }
    const VarSetPtr& xvar() const { return fiber_[0].vars(); }

    bool is_identity() const {
        return base_.is_identity() && fiber_[1].is_zero() && fiber_[2].is_zero() &&
               fiber_[0] == fiber_[3] && fiber_[0].is_constant() && !fiber_[0].is_zero();
    }

    friend bool operator==(const DeJonquieresMap& g, const DeJonquieresMap& h) {
        return g.base_ == h.base_ && g.fiber_ == h.fiber_;
    }

    // (g1 . g2)(x, y) = g1(g2(x, y)); the fiber matrix is M1(mu2(x)) * M2(x)
    friend DeJonquieresMap compose(const DeJonquieresMap& g1, const DeJonquieresMap& g2) {
        Mobius base = g1.base_ * g2.base_;
        std::array<Polynomial, 4> t;
        std::uint32_t deg = 0;
        for (const auto& e : g1.fiber_) deg = std::max(e.max_exponent(0), deg);
        for (int i = 0; i < 4; ++i) t[i] = twist(g1.fiber_[i], g2.base_, deg);
        std::array<Polynomial, 4> prod = {t[0] * g2.fiber_[0] + t[1] * g2.fiber_[2],
                                          t[0] * g2.fiber_[1] + t[1] * g2.fiber_[3],
                                          t[2] * g2.fiber_[0] + t[3] * g2.fiber_[2],
                                          t[2] * g2.fiber_[1] + t[3] * g2.fiber_[3]};
        return {std::move(base), std::move(prod)};
    }

    DeJonquieresMap inverse() const {
        Mobius binv = base_.inverse();
        std::array<Polynomial, 4> adj = {fiber_[3], -fiber_[1], -fiber_[2], fiber_[0]};
        std::uint32_t deg = 0;
        for (const auto& e : adj) deg = std::max(e.max_exponent(0), deg);
        std::array<Polynomial, 4> t;
        for (int i = 0; i < 4; ++i) t[i] = twist(adj[i], binv, deg);
        return {std::move(binv), std::move(t)};
    }

    // least n with g^n the identity, as normalized pairs; nullopt past cutoff
    // (or once the fiber degree blows past the growth cap)
    std::optional<unsigned> order(unsigned cutoff = 64, std::uint32_t degree_cap = 4096) const {
        DeJonquieresMap acc = *this;
        for (unsigned n = 1; n <= cutoff; ++n) {
            if (acc.is_identity()) return n;
            if (acc.fiber_degree() > degree_cap) return std::nullopt;
            acc = compose(acc, *this);
        }
        return std::nullopt;
    }

    std::uint32_t fiber_degree() const {
        std::uint32_t d = 0;
        for (const auto& e : fiber_) d = std::max(e.max_exponent(0), d);
        return d;
    }

    std::string str() const {
        return "base" + std::string("[") + field().element_str(base_.entries()[0]) + "," +
               field().element_str(base_.entries()[1]) + ";" +
               field().element_str(base_.entries()[2]) + "," +
               field().element_str(base_.entries()[3]) + "] fiber[" + fiber_[0].str() + ", " +
               fiber_[1].str() + "; " + fiber_[2].str() + ", " + fiber_[3].str() + "]";
    }

  private:
    Mobius base_;
    std::array<Polynomial, 4> fiber_;

    // e(mu(x)) * (cx + d)^deg for an entry e of degree <= deg
    static Polynomial twist(const Polynomial& e, const Mobius& mu, std::uint32_t deg) {
        const Field& f = e.field();
        const VarSetPtr& vs = e.vars();
        Polynomial x = Polynomial::variable(f, vs, 0);
        const auto& m = mu.entries();
        Polynomial num = x.scaled(m[0]) + Polynomial::constant(f, vs, m[1]);
        Polynomial den = x.scaled(m[2]) + Polynomial::constant(f, vs, m[3]);
        Polynomial acc = Polynomial::zero(f, vs);
        auto dense = to_dense(e, 0);
        for (std::size_t i = 0; i < dense.size(); ++i) {
            if (dense[i] == 0) continue;
            acc = acc + (num.pow(i) * den.pow(deg - i)).scaled(dense[i]);
        }
        return acc;
    }

    static Polynomial cleared(const std::array<RationalFunction, 4>& fr, int idx) {
        Polynomial r = fr[idx].num();
        for (int j = 0; j < 4; ++j)
            if (j != idx) r = r * fr[j].den();
        return r;
    }

    void normalize_fiber() {
        const Field& f = fiber_[0].field();
        Polynomial g = Polynomial::zero(f, fiber_[0].vars());
        for (const auto& e : fiber_)
            g = g.is_zero() ? e : (e.is_zero() ? g : univariate_gcd(g, e));
        if (!g.is_constant() && !g.is_zero()) {
            auto gd = to_dense(g, 0);
            for (auto& e : fiber_) {
                if (e.is_zero()) continue;
                e = from_dense(f, e.vars(), 0, detail::dquo_exact(to_dense(e, 0), gd, f));
            }
        }
        for (const auto& e : fiber_) {
            if (e.is_zero()) continue;
            code_t lc = e.leading_coeff();
            if (lc != 1) {
                code_t inv = f.inv(lc);
                for (auto& x : fiber_) x = x.scaled(inv);
            }
            break;
        }
        Polynomial det = fiber_[0] * fiber_[3] - fiber_[1] * fiber_[2];
        if (det.is_zero()) throw DegenerateFiberError("fiber determinant vanishes");
    }
};

// The order-4 example: base x -> x+1 and fiber built from a squarefree P
// over GF(2) via a = d = x P(x), b = P(x) P(x+1), c = x (x+1).
struct DjExample {
    DeJonquieresMap sigma;
    long long singular_fibres; // deg P(x) P(x+1)
    Polynomial P;
    Polynomial P_shift;
};

inline DjExample dj_example_build(const Polynomial& P) {
    const Field& f = P.field();
    if (f.p() != 2 || f.k() != 1)
        throw WrongCharacteristicError("the example lives over GF(2)");
    if (!univariate_squarefree(P)) throw NotSquarefreeError("P has multiple roots");
    const VarSetPtr& vs = P.vars();
    Polynomial x = Polynomial::variable(f, vs, 0);
    Polynomial one = Polynomial::constant(f, vs, 1);
    Polynomial Pshift = P.subst_var(0, x + one);
    Polynomial a = x * P;
    Polynomial b = P * Pshift;
    Polynomial c = x * (x + one);
    DeJonquieresMap sigma(Mobius::shift(f, 1), std::array<Polynomial, 4>{a, b, c, a});
    return {std::move(sigma), b.degree(), P, Pshift};
}

// a(x) a(x+1) + b(x) c(x+1) = a(x) a(x+1) + b(x+1) c(x) = 0, as exact
// polynomial identities; the base must be x -> x+1
inline bool dj_identities_check(const DeJonquieresMap& g) {
    const Field& f = g.field();
    if (!(g.base() == Mobius::shift(f, 1))) throw WrongBaseError("base is not x -> x+1");
    const auto& fb = g.fiber();
    const VarSetPtr& vs = g.xvar();
    Polynomial xp1 = Polynomial::variable(f, vs, 0) + Polynomial::constant(f, vs, 1);
    Polynomial a = fb[0], b = fb[1], c = fb[2];
    Polynomial a1 = a.subst_var(0, xp1);
    Polynomial b1 = b.subst_var(0, xp1);
    Polynomial c1 = c.subst_var(0, xp1);
    return (a * a1 + b * c1).is_zero() && (a * a1 + b1 * c).is_zero();
}

// (x, y) -> (x, Q(x) / y)
inline DeJonquieresMap dj_involution(const Polynomial& Q) {
    const Field& f = Q.field();
    Polynomial zero = Polynomial::zero(f, Q.vars());
    Polynomial one = Polynomial::constant(f, Q.vars(), 1);
    return {Mobius::identity(f), std::array<Polynomial, 4>{zero, Q, one, zero}};
}

// (x, y) -> (x, lambda(x) y)
inline DeJonquieresMap dj_y_scaling(const Polynomial& lambda) {
    const Field& f = lambda.field();
    Polynomial zero = Polynomial::zero(f, lambda.vars());
    Polynomial one = Polynomial::constant(f, lambda.vars(), 1);
    return {Mobius::identity(f), std::array<Polynomial, 4>{lambda, zero, zero, one}};
}

} // namespace cremona
