#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cremona/error.hpp"
#include "cremona/field.hpp"
#include "cremona/linear.hpp"
#include "cremona/polynomial.hpp"
#include "cremona/rng.hpp"
#include "cremona/weighted_map.hpp"

namespace cremona {

// Hypersurface in a weighted projective space, cut out by a weighted
// homogeneous polynomial.
struct WeightedHypersurface {
    Polynomial F;

    explicit WeightedHypersurface(Polynomial f) : F(std::move(f)) {
        if (F.is_zero()) throw NotHomogeneousError("zero equation");
        if (!F.is_weighted_homogeneous(static_cast<std::uint64_t>(F.degree())))
            throw NotHomogeneousError("equation is not weighted-homogeneous");
    }
};

// Jacobian criterion in the chart of a weight-1 coordinate that is nonzero
// at the point.  Points at which every weight-1 coordinate vanishes are not
// handled (none of the points we certify live there).
inline bool is_singular_at(const WeightedHypersurface& X, std::vector<FieldElement> point) {
    const Field& f = X.F.field();
    const VarSetPtr& vs = X.F.vars();
    if (point.size() != vs->size()) throw DimensionMismatchError("point arity mismatch");
    std::size_t chart = vs->size();
    for (std::size_t i = 0; i < vs->size(); ++i)
        if (vs->weight(i) == 1 && !point[i].is_zero()) {
            chart = i;
            break;
        }
    if (chart == vs->size()) throw NoUnitChartError("no weight-1 coordinate is nonzero");
    // rescale so the chart coordinate is 1
    FieldElement lambda = point[chart].inverse();
    std::vector<code_t> p(point.size());
    for (std::size_t i = 0; i < point.size(); ++i)
        p[i] = (point[i] * lambda.pow(vs->weight(i))).code();
    Polynomial chart_poly = X.F.subst_var(chart, Polynomial::constant(f, vs, 1));
    p[chart] = 1;
    if (chart_poly.eval_codes(p) != 0) throw NotOnSurfaceError("point does not lie on the surface");
    for (std::size_t i = 0; i < vs->size(); ++i) {
        if (i == chart) continue;
        if (chart_poly.partial(i).eval_codes(p) != 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// degree-2 Del Pezzo double planes: u^2 + a2(x,y,z) u + a4(x,y,z) = 0 in
// P(1,1,1,2) with coordinates (x, y, z, u)

inline VarSetPtr dp2_vars() { return parse_vars({"x", "y", "z", "u:2"}); }

inline WeightedHypersurface dp2_surface(const Polynomial& a2, const Polynomial& a4) {
    const Field& f = a2.field();
    const VarSetPtr& vs = a2.vars();
    if (!a2.is_weighted_homogeneous(2) || !a4.is_weighted_homogeneous(4))
        throw NotHomogeneousError("a2 and a4 must be forms of degrees 2 and 4");
    Polynomial u = Polynomial::variable(f, vs, 3);
    return WeightedHypersurface(u * u + a2 * u + a4);
}

// a4 = l0 z^4 + l1 z^3 + l2 z^2 + l3 z + l4 with l_i binary forms in x, y
inline std::array<Polynomial, 5> dp2_layers(const Polynomial& a4) {
    std::array<Polynomial, 5> l = {a4.coeff_of(2, 4), a4.coeff_of(2, 3), a4.coeff_of(2, 2),
                                   a4.coeff_of(2, 1), a4.coeff_of(2, 0)};
    return l;
}

struct Dp2Constraints {
    Polynomial layer_z2;  // = l1 w
    Polynomial layer_z1;  // = l1 w^2
    Polynomial layer_z0;  // = l0 w^4 + l1 w^3 + l2 w^2 + l3 w
    bool invariant = false;
    bool stated_constraint_l1w = false; // l1 w = 0, the constraint the text states
    bool extra_constraint = false;     // the constant layer, which the text omits
};

// Coefficient comparison of a4(x, y, z + w) against a4 in characteristic 2.
inline Dp2Constraints dp2_invariance_constraints(const Polynomial& a4, const Polynomial& w) {
    const Field& f = a4.field();
    if (f.p() != 2) throw WrongCharacteristicError("the double-plane analysis assumes char 2");
    if (!a4.is_weighted_homogeneous(4) && !a4.is_zero())
        throw NotHomogeneousError("a4 must be a quartic form");
    if (!w.is_zero() && !w.is_weighted_homogeneous(1))
        throw NotHomogeneousError("w must be a linear form");
    const VarSetPtr& vs = a4.vars();
    Polynomial z = Polynomial::variable(f, vs, 2);
    Polynomial delta = a4.subst_var(2, z + w) - a4;
    // delta has no z^4 or z^3 part; its layers are the constraints
    Dp2Constraints c{delta.coeff_of(2, 2), delta.coeff_of(2, 1), delta.coeff_of(2, 0)};
    auto l = dp2_layers(a4);
    if (!(delta.coeff_of(2, 4).is_zero() && delta.coeff_of(2, 3).is_zero()))
        throw Error("unexpected z^4 or z^3 layer in the comparison");
    // closed forms of the layers, as a cross-check of the expansion
    if (c.layer_z2 != l[1] * w || c.layer_z1 != l[1] * w * w ||
        c.layer_z0 != l[0] * w.pow(4) + l[1] * w.pow(3) + l[2] * w * w + l[3] * w)
        throw Error("layer expansion disagrees with its closed form");
    c.stated_constraint_l1w = c.layer_z2.is_zero();
    c.extra_constraint = c.layer_z0.is_zero();
    c.invariant = delta.is_zero();
    return c;
}

// Singular point on the axis x = y = 0 for the a2 = xy branch: (0,0,1,sqrt(l0)).
inline std::vector<FieldElement> dp2_singular_on_axis(const Polynomial& a2, const Polynomial& a4,
                                                      const Polynomial& w) {
    const Field& f = a2.field();
    const VarSetPtr& vs = a2.vars();
    Polynomial xy = Polynomial::variable(f, vs, 0) * Polynomial::variable(f, vs, 1);
    if (!(a2 == xy)) throw PreconditionError("a2 must be the reducible conic xy");
    Dp2Constraints c = dp2_invariance_constraints(a4, w);
    if (!c.invariant) throw PreconditionError("a4 is not invariant under z -> z + w");
    if (!dp2_layers(a4)[1].is_zero()) throw PreconditionError("the z^3 layer must vanish");
    Polynomial l0 = dp2_layers(a4)[0];
    FieldElement c0 = f.element(l0.constant_value());
    std::vector<FieldElement> pt = {f.zero(), f.zero(), f.one(), sqrt_char2(c0)};
    if (!is_singular_at(dp2_surface(a2, a4), pt))
        throw Error("axis point failed the singularity check");
    return pt;
}

// The invariants of z -> z + x on GF-coefficient polynomials in x, z are
// generated by x and z(z+x): compare kernel dimensions against the count of
// monomials x^a (z^2+xz)^b degree by degree.
inline bool invariant_ring_dimension_check(const Field& f, unsigned max_degree) {
    if (f.p() != 2) throw WrongCharacteristicError("the invariant ring claim assumes char 2");
    auto vs = parse_vars({"x", "z"});
    Polynomial x = Polynomial::variable(f, vs, 0);
    Polynomial z = Polynomial::variable(f, vs, 1);
    for (unsigned d = 1; d <= max_degree; ++d) {
        // basis x^a z^(d-a), a = 0..d
        unsigned n = d + 1;
        std::vector<code_t> m(n * n, 0); // rows: output coefficient, cols: input basis
        for (unsigned a = 0; a <= d; ++a) {
            Polynomial mono = Polynomial::monomial(f, vs, Expo{a, d - a}, 1);
            Polynomial img = mono.subst_var(1, z + x) - mono;
            for (const auto& [e, coeff] : img.terms()) m[e[0] * n + a] = coeff;
        }
        std::size_t kdim = kernel_dimension(f, n, n, std::move(m));
        if (kdim != d / 2 + 1) return false;
    }
    return true;
}

// random invariant quartic for the a2 = xy branch: l1 = 0 and
// l3 = l0 w^3 + l2 w, so the z^0 layer closes up
struct Dp2Sample {
    Polynomial a2, a4, w;
};

inline Dp2Sample dp2_xy_sample(const Field& f, Rng& rng) {
    auto vs = dp2_vars();
    Polynomial x = Polynomial::variable(f, vs, 0);
    Polynomial y = Polynomial::variable(f, vs, 1);
    Polynomial z = Polynomial::variable(f, vs, 2);
    auto rand_form = [&](unsigned deg) {
        Polynomial acc = Polynomial::zero(f, vs);
        for (unsigned i = 0; i <= deg; ++i) {
            code_t c = static_cast<code_t>(rng.below(f.q()));
            if (c) acc = acc + Polynomial::monomial(f, vs, Expo{i, deg - i, 0, 0}, c);
        }
        return acc;
    };
    Polynomial w = Polynomial::zero(f, vs);
    while (w.is_zero()) w = rand_form(1);
    Polynomial l0 = Polynomial::constant(f, vs, static_cast<code_t>(rng.below(f.q())));
    Polynomial l2 = rand_form(2);
    Polynomial l3 = l0 * w.pow(3) + l2 * w;
    Polynomial l4 = rand_form(4);
    Polynomial a4 = l0 * z.pow(4) + l2 * z * z + l3 * z + l4;
    return {x * y, a4, w};
}

// the a2 = x^2 branch: a4 = c z^2 (z+x)^2 + z (z+x) g(x,y) + h(x,y), which is
// invariant under z -> z + x by construction
struct Dp2DoubleLineSample {
    Polynomial a2, a4;
    FieldElement c;
};

inline Dp2DoubleLineSample dp2_double_line_sample(const Field& f, Rng& rng) {
    auto vs = dp2_vars();
    Polynomial x = Polynomial::variable(f, vs, 0);
    Polynomial z = Polynomial::variable(f, vs, 2);
    auto rand_form = [&](unsigned deg) {
        Polynomial acc = Polynomial::zero(f, vs);
        for (unsigned i = 0; i <= deg; ++i) {
            code_t c = static_cast<code_t>(rng.below(f.q()));
            if (c) acc = acc + Polynomial::monomial(f, vs, Expo{i, deg - i, 0, 0}, c);
        }
        return acc;
    };
    FieldElement c = f.element(static_cast<code_t>(rng.below(f.q())));
    Polynomial zzx = z * (z + x);
    Polynomial a4 = zzx * zzx.scaled(c.code()) + zzx * rand_form(2) + rand_form(4);
    return {x * x, a4, c};
}

// ---------------------------------------------------------------------------
// degree-1 Del Pezzo models in P(1,1,2,3) with coordinates (u, v, x, y):
// y^2 + u^3 y + x^3 + (b^2 + u^2 b) x + a6 = 0

inline VarSetPtr dp1_vars() { return parse_vars({"u", "v", "x:2", "y:3"}); }

inline void require_uv_form(const Polynomial& p, unsigned degree, const char* what) {
    if (p.is_zero()) return;
    for (std::size_t i : p.support())
        if (i > 1) throw NotBinaryFormError(std::string(what) + " must use u, v only");
    if (!p.is_weighted_homogeneous(degree))
        throw NotBinaryFormError(std::string(what) + " must be a form of degree " +
                                 std::to_string(degree));
}

struct DP1Surface {
    Polynomial b;   // binary quadratic in u, v
    Polynomial a6;  // binary sextic
    FieldElement alpha;
    Polynomial a3;  // u^3
    Polynomial a4;  // b^2 + u^2 b
    Polynomial F;
};

inline DP1Surface dp1_make(const Polynomial& b, const Polynomial& a6) {
    const Field& f = b.field();
    const VarSetPtr& vs = b.vars();
    if (f.p() != 2) throw WrongCharacteristicError("the model lives in characteristic 2");
    require_uv_form(b, 2, "b");
    require_uv_form(a6, 6, "a6");
    auto alpha = find_cube_root_generator(f);
    if (!alpha) throw NoAlphaInFieldError("no root of x^2 + x + 1 in the coefficient field");
    Polynomial u = Polynomial::variable(f, vs, 0);
    Polynomial x = Polynomial::variable(f, vs, 2);
    Polynomial y = Polynomial::variable(f, vs, 3);
    Polynomial a3 = u.pow(3);
    Polynomial a4 = b * b + u * u * b;
    Polynomial F = y * y + a3 * y + x.pow(3) + a4 * x + a6;
    return {b, a6, *alpha, a3, a4, F};
}

// a3 = s^3 and t^2 + a3 t + s^6 + a4 s^2 = 0, both as exact identities
inline bool dp1_constraints_check(const Polynomial& s, const Polynomial& t, const Polynomial& a3,
                                  const Polynomial& a4) {
    if (s.field().p() != 2) throw WrongCharacteristicError("characteristic 2 only");
    return a3 == s.pow(3) && (t * t + a3 * t + s.pow(6) + a4 * s * s).is_zero();
}

// with s = u: t = u b + alpha u^3 and a4 = b^2 + u^2 b satisfy the system
inline bool dp1_derived_constraints_ok(const DP1Surface& S) {
    const Field& f = S.b.field();
    Polynomial u = Polynomial::variable(f, S.b.vars(), 0);
    Polynomial t = u * S.b + u.pow(3).scaled(S.alpha.code());
    return dp1_constraints_check(u, t, S.a3, S.a4);
}

// tau: (u, v, x, y) -> (u, v, x + u^2, y + u x + u b + alpha u^3)
inline WeightedSelfMap dp1_tau(const DP1Surface& S) {
    const Field& f = S.b.field();
    const VarSetPtr& vs = S.b.vars();
    Polynomial u = Polynomial::variable(f, vs, 0);
    Polynomial v = Polynomial::variable(f, vs, 1);
    Polynomial x = Polynomial::variable(f, vs, 2);
    Polynomial y = Polynomial::variable(f, vs, 3);
    return WeightedSelfMap(
        {u, v, x + u * u, y + u * x + u * S.b + u.pow(3).scaled(S.alpha.code())});
}

// the deck transformation of the double cover: y -> y + u^3
inline WeightedSelfMap dp1_bertini_map(const DP1Surface& S) {
    const Field& f = S.b.field();
    const VarSetPtr& vs = S.b.vars();
    return WeightedSelfMap({Polynomial::variable(f, vs, 0), Polynomial::variable(f, vs, 1),
                            Polynomial::variable(f, vs, 2),
                            Polynomial::variable(f, vs, 3) +
                                Polynomial::variable(f, vs, 0).pow(3)});
}

inline Polynomial map_pullback(const Polynomial& F, const WeightedSelfMap& g) {
    std::map<std::size_t, Polynomial> images;
    for (std::size_t i = 0; i < g.components().size(); ++i) images.emplace(i, g.components()[i]);
    return F.subst(images);
}

struct Dp1SingularWitness {
    bool smooth;
    std::vector<FieldElement> point; // set when singular: (0, 1, b(0,1), sqrt(a6(0,1)))
};

// Exact decision: dF/dy = u^3 forces u = 0; there dF/dx = x^2 + b(0,1)^2
// forces x = b(0,1), and the only remaining condition is dF/du(0,1,...) =
// coeff of u v^5 in a6.  Smooth over the algebraic closure iff that
// coefficient is nonzero.
inline Dp1SingularWitness dp1_singular_witness(const DP1Surface& S) {
    const Field& f = S.b.field();
    code_t c6 = S.a6.coeff(Expo{1, 5, 0, 0});
    if (c6 != 0) return {true, {}};
    std::vector<code_t> pt01 = {0, 1, 0, 0};
    FieldElement x0 = f.element(S.b.eval_codes(pt01));
    FieldElement y0 = sqrt_char2(f.element(S.a6.eval_codes(pt01)));
    return {false, {f.zero(), f.one(), x0, y0}};
}

// Brute-force oracle: all singular points of the two weight-1 charts with
// coordinates in GF(2^k) (the surface coefficients are embedded first).
inline std::vector<std::vector<code_t>> dp1_brute_force_singular(const DP1Surface& S,
                                                                 const Field& ext) {
    FieldEmbedding emb(S.b.field(), ext);
    Polynomial F = S.F.mapped(emb);
    const VarSetPtr& vs = F.vars();
    std::vector<std::vector<code_t>> found;
    for (std::size_t chart : {std::size_t(0), std::size_t(1)}) {
        Polynomial g = F.subst_var(chart, Polynomial::constant(ext, vs, 1));
        // evaluate the cheapest partial first; a nonzero value short-circuits
        std::vector<Polynomial> tests = {g.partial(3), g.partial(2), g.partial(chart == 0 ? 1 : 0),
                                         g};
        std::vector<code_t> p(4, 0);
        p[chart] = 1;
        std::size_t other = chart == 0 ? 1 : 0;
        for (code_t a = 0; a < ext.q(); ++a) {
            // the u = 1 chart only needs v = 0; v != 0 is covered at v = 1
            if (chart == 0 && a != 0) continue;
            p[other] = a;
            for (code_t xx = 0; xx < ext.q(); ++xx) {
                p[2] = xx;
                for (code_t yy = 0; yy < ext.q(); ++yy) {
                    p[3] = yy;
                    bool singular = true;
                    for (const auto& t : tests)
                        if (t.eval_codes(p) != 0) {
                            singular = false;
                            break;
                        }
                    if (singular) found.push_back(p);
                }
            }
        }
    }
    return found;
}

// ---------------------------------------------------------------------------
// Weierstrass fibrations y^2 + a3(u,v) y = x^3 + a4(u,v) x + a6(u,v)

inline VarSetPtr fibration_vars() { return parse_vars({"u", "v"}); }

struct WeierstrassFibration {
    Polynomial a3, a4, a6; // binary forms of degrees 3, 4, 6 in (u, v)

    WeierstrassFibration(Polynomial a3_, Polynomial a4_, Polynomial a6_)
        : a3(std::move(a3_)), a4(std::move(a4_)), a6(std::move(a6_)) {
        check_form(a3, 3);
        check_form(a4, 4);
        check_form(a6, 6);
    }

  private:
    static void check_form(const Polynomial& p, unsigned d) {
        if (p.vars()->size() != 2) throw WrongShapeError("coefficients must be binary forms");
        if (!p.is_zero() && !p.is_weighted_homogeneous(d))
            throw WrongShapeError("coefficient of wrong degree");
    }
};

inline WeierstrassFibration dp1_to_fibration(const DP1Surface& S) {
    auto vs = fibration_vars();
    std::vector<std::size_t> where = {0, 1};
    auto restrict_uv = [&](const Polynomial& p) {
        for (std::size_t i : p.support())
            if (i > 1) throw WrongShapeError("coefficient is not a binary form");
        Polynomial q = Polynomial::zero(p.field(), vs);
        for (const auto& [e, c] : p.terms())
            q = q + Polynomial::monomial(p.field(), vs, Expo{e[0], e[1]}, c);
        return q;
    };
    return {restrict_uv(S.a3), restrict_uv(S.a4), restrict_uv(S.a6)};
}

// Characteristic-2 discriminant of this shape through the b-invariants:
// b2 = 0, b4 = 2 a4, b6 = a3^2 + 4 a6, b8 = -a4^2, and
// delta = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6, which reduces to a3^4.
inline Polynomial discriminant(const WeierstrassFibration& W) {
    const Field& f = W.a3.field();
    if (f.p() != 2) throw WrongCharacteristicError("this fibration shape assumes char 2");
    auto cint = [&](long long n) { return f.from_int(n).code(); };
    Polynomial b2 = Polynomial::zero(f, W.a3.vars());
    Polynomial b4 = W.a4.scaled(cint(2));
    Polynomial b6 = W.a3 * W.a3 + W.a6.scaled(cint(4));
    Polynomial b8 = (W.a4 * W.a4).scaled(cint(-1));
    Polynomial delta = (b2 * b2 * b8).scaled(cint(-1)) + b4.pow(3).scaled(cint(-8)) +
                       (b6 * b6).scaled(cint(-27)) + (b2 * b4 * b6).scaled(cint(9));
    return delta;
}

struct FiberReport {
    bool smooth = false;
    bool j_zero = false;             // c4 = 0 for this shape whenever a3 != 0
    bool inconsistent = false;       // a3 = 0 with delta != 0 cannot happen here
    unsigned two_torsion_count = 0;  // counted over the analysis field, origin included
    bool cuspidal_normal_form = false;
    std::vector<FieldElement> cusp;  // affine singular point of a singular fiber
};

// Analysis of one fiber over an analysis field containing the coefficients.
inline FiberReport fiber_analysis(const WeierstrassFibration& W, const FieldElement& u0,
                                  const FieldElement& v0) {
    const Field& kf = u0.field();
    if (kf.p() != 2) throw WrongCharacteristicError("characteristic 2 only");
    FieldEmbedding emb(W.a3.field(), kf);
    Polynomial a3 = W.a3.mapped(emb), a4 = W.a4.mapped(emb), a6 = W.a6.mapped(emb);
    std::vector<code_t> pt = {u0.code(), v0.code()};
    FieldElement A3 = kf.element(a3.eval_codes(pt));
    FieldElement A4 = kf.element(a4.eval_codes(pt));
    FieldElement A6 = kf.element(a6.eval_codes(pt));
    FieldElement D = kf.element(discriminant(W).mapped(emb).eval_codes(pt));

    FiberReport r;
    r.smooth = !D.is_zero();
    r.j_zero = !A3.is_zero(); // c4 = 0, so j = 0 for every smooth fiber
    r.inconsistent = A3.is_zero() && !D.is_zero();

    auto vs = parse_vars({"x", "y"});
    Polynomial x = Polynomial::variable(kf, vs, 0);
    Polynomial y = Polynomial::variable(kf, vs, 1);
    Polynomial curve = y * y + x.pow(3) + y.scaled(A3.code()) + x.scaled(A4.code()) +
                       Polynomial::constant(kf, vs, A6.code());

    if (r.smooth) {
        // a point is 2-torsion iff it equals its negative (x, y + a3);
        // count affine self-negating points and add the origin
        r.two_torsion_count = 1;
        for (code_t xx = 0; xx < kf.q(); ++xx)
            for (code_t yy = 0; yy < kf.q(); ++yy) {
                if (curve.eval_codes({xx, yy}) != 0) continue;
                if (kf.add(yy, A3.code()) == yy) ++r.two_torsion_count;
            }
        return r;
    }

    // singular fiber: locate the cusp and reduce to y^2 = x^3
    FieldElement xs = sqrt_char2(A4);
    FieldElement ys = sqrt_char2(A6);
    r.cusp = {xs, ys};
    Polynomial shifted = curve.subst_var(0, x + Polynomial::constant(kf, vs, xs.code()))
                             .subst_var(1, y + Polynomial::constant(kf, vs, ys.code()));
    // absorb the x^2 layer: y -> y + sqrt(c) x where c is the x^2 coefficient
    FieldElement c = kf.element(shifted.coeff(Expo{2, 0}));
    Polynomial reduced = shifted.subst_var(1, y + x.scaled(sqrt_char2(c).code()));
    r.cuspidal_normal_form = reduced == y * y + x.pow(3);
    return r;
}

// ---------------------------------------------------------------------------
// automorphisms of a fiber y^2 + a3 y = x^3 + a4 x + a6 over a small field:
// substitutions (x, y) -> (u^2 x + s^2, u^3 y + u^2 s x + t)

struct FiberAut {
    code_t u, s, t;
};

struct FiberAutReport {
    std::vector<FiberAut> elements;
    unsigned count = 0;
    unsigned center_size = 0;
    bool q8_signature = false;   // all order-4 elements share one square
    bool field_too_small = false; // fewer than the 24 expected for j = 0
};

inline FiberAut fiber_aut_compose(const Field& f, const FiberAut& a, const FiberAut& b) {
    // (a . b) means apply b first; composition law of the substitutions
    code_t u = f.mul(a.u, b.u);
    code_t s = f.add(f.mul(a.u, b.s), a.s);
    code_t u2 = f.mul(a.u, a.u);
    code_t t = f.add(f.add(f.mul(f.mul(u2, a.u), b.t), f.mul(f.mul(u2, a.s), f.mul(b.s, b.s))),
                     a.t);
    return {u, s, t};
}

inline FiberAutReport fiber_automorphism_report(const Field& f, const FieldElement& a3,
                                                const FieldElement& a4, const FieldElement& a6) {
    if (f.p() != 2) throw WrongCharacteristicError("characteristic 2 only");
    auto vs = parse_vars({"x", "y"});
    Polynomial x = Polynomial::variable(f, vs, 0);
    Polynomial y = Polynomial::variable(f, vs, 1);
    Polynomial curve = y * y + x.pow(3) + y.scaled(a3.code()) + x.scaled(a4.code()) +
                       Polynomial::constant(f, vs, a6.code());
    FiberAutReport rep;
    for (code_t u = 1; u < f.q(); ++u)
        for (code_t s = 0; s < f.q(); ++s)
            for (code_t t = 0; t < f.q(); ++t) {
                Polynomial xi = x.scaled(f.mul(u, u)) +
                                Polynomial::constant(f, vs, f.mul(s, s));
                Polynomial yi = y.scaled(f.mul(f.mul(u, u), u)) +
                                x.scaled(f.mul(f.mul(u, u), s)) +
                                Polynomial::constant(f, vs, t);
                std::map<std::size_t, Polynomial> images{{0, xi}, {1, yi}};
                Polynomial pulled = curve.subst(images);
                if (pulled == curve.scaled(f.pow(u, 6))) rep.elements.push_back({u, s, t});
            }
    rep.count = static_cast<unsigned>(rep.elements.size());
    for (const auto& g : rep.elements) {
        bool central = true;
        for (const auto& h : rep.elements) {
            FiberAut gh = fiber_aut_compose(f, g, h);
            FiberAut hg = fiber_aut_compose(f, h, g);
            if (gh.u != hg.u || gh.s != hg.s || gh.t != hg.t) {
                central = false;
                break;
            }
        }
        if (central) ++rep.center_size;
    }
    // order-4 elements must share one common square (the quaternion signature)
    auto order_of = [&](FiberAut g) {
        FiberAut acc = g;
        unsigned n = 1;
        while (!(acc.u == 1 && acc.s == 0 && acc.t == 0) && n < 64) {
            acc = fiber_aut_compose(f, acc, g);
            ++n;
        }
        return n;
    };
    std::optional<FiberAut> common_square;
    rep.q8_signature = true;
    bool any_order4 = false;
    for (const auto& g : rep.elements) {
        if (order_of(g) != 4) continue;
        any_order4 = true;
        FiberAut sq = fiber_aut_compose(f, g, g);
        if (!common_square) {
            common_square = sq;
            if (order_of(sq) != 2) rep.q8_signature = false;
        } else if (sq.u != common_square->u || sq.s != common_square->s ||
                   sq.t != common_square->t) {
            rep.q8_signature = false;
        }
    }
    if (!any_order4) rep.q8_signature = false;
    rep.field_too_small = rep.count < 24;
    return rep;
}

} // namespace cremona
