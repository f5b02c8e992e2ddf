#include <catch2/catch_amalgamated.hpp>

#include "cremona/surfaces.hpp"

using namespace cremona;

namespace {

Polynomial uv_form(const Field& f, const VarSetPtr& vs, const std::string& s) {
    return parse_polynomial(f, vs, s);
}

DP1Surface sample_dp1(const Field& f4) {
    auto vs = dp1_vars();
    return dp1_make(uv_form(f4, vs, "v^2"), uv_form(f4, vs, "u*v^5"));
}

} // namespace

TEST_CASE("Jacobian singularity test") {
    Field f2 = field_make(2, 1);
    auto vs = dp2_vars();
    SECTION("the double-line family is singular at (0,0,1,sqrt(c))") {
        // a2 = x^2, a4 = c z^2(z+x)^2 + z(z+x) g + h
        Field f4 = field_make(2, 2);
        auto vs4 = dp2_vars();
        Polynomial a2 = parse_polynomial(f4, vs4, "x^2");
        Polynomial a4 = parse_polynomial(f4, vs4, "a*z^2*(z+x)^2 + z*(z+x)*x*y + y^4");
        FieldElement c = f4.gen();
        auto X = dp2_surface(a2, a4);
        std::vector<FieldElement> pt = {f4.zero(), f4.zero(), f4.one(), sqrt_char2(c)};
        REQUIRE(is_singular_at(X, pt));
    }
    SECTION("a generic smooth point is not singular") {
        Polynomial a2 = parse_polynomial(f2, vs, "x*y");
        Polynomial a4 = parse_polynomial(f2, vs, "x^4 + y^4 + z^3*x");
        auto X = dp2_surface(a2, a4);
        // (1, 0, 0, 1): F = 1 + 0 + 1 = 0, dF/dz = z^3 -> 0... check via the routine
        std::vector<FieldElement> pt = {f2.one(), f2.zero(), f2.zero(), f2.one()};
        REQUIRE(!is_singular_at(X, pt));
    }
    SECTION("points off the surface are rejected") {
        Polynomial a2 = parse_polynomial(f2, vs, "x*y");
        Polynomial a4 = parse_polynomial(f2, vs, "x^4");
        auto X = dp2_surface(a2, a4);
        std::vector<FieldElement> pt = {f2.one(), f2.one(), f2.one(), f2.one()};
        REQUIRE_THROWS_AS(is_singular_at(X, pt), NotOnSurfaceError);
    }
    SECTION("no unit chart") {
        Polynomial a2 = parse_polynomial(f2, vs, "x*y");
        Polynomial a4 = parse_polynomial(f2, vs, "x^4");
        auto X = dp2_surface(a2, a4);
        std::vector<FieldElement> pt = {f2.zero(), f2.zero(), f2.zero(), f2.one()};
        REQUIRE_THROWS_AS(is_singular_at(X, pt), NoUnitChartError);
    }
}

TEST_CASE("dp2 invariance constraints") {
    Field f2 = field_make(2, 1);
    auto vs = dp2_vars();
    Polynomial x = Polynomial::variable(f2, vs, 0);
    SECTION("l1 = x with w = x is obstructed at the z^2 layer") {
        Polynomial a4 = parse_polynomial(f2, vs, "z^3*x");
        auto c = dp2_invariance_constraints(a4, x);
        REQUIRE(!c.invariant);
        REQUIRE(c.layer_z2 == parse_polynomial(f2, vs, "x^2"));
    }
    SECTION("l2 = x^2 with w = x is obstructed at the constant layer only") {
        Polynomial a4 = parse_polynomial(f2, vs, "z^2*x^2");
        auto c = dp2_invariance_constraints(a4, x);
        REQUIRE(!c.invariant);
        REQUIRE(c.stated_constraint_l1w);
        REQUIRE(c.layer_z0 == parse_polynomial(f2, vs, "x^4"));
    }
    SECTION("l1 = 0 and trivial layers give invariance") {
        Polynomial a4 = parse_polynomial(f2, vs, "y^4");
        auto c = dp2_invariance_constraints(a4, x);
        REQUIRE(c.invariant);
    }
    SECTION("seeded xy-branch samples are invariant and singular on the axis") {
        for (code_t q : {2u, 4u}) {
            Field f = q == 2 ? field_make(2, 1) : field_make(2, 2);
            Rng rng(17 + q);
            for (int i = 0; i < 10; ++i) {
                Dp2Sample s = dp2_xy_sample(f, rng);
                auto c = dp2_invariance_constraints(s.a4, s.w);
                REQUIRE(c.invariant);
                auto pt = dp2_singular_on_axis(s.a2, s.a4, s.w);
                REQUIRE(is_singular_at(dp2_surface(s.a2, s.a4), pt));
                REQUIRE(pt[0].is_zero());
                REQUIRE(pt[1].is_zero());
            }
        }
    }
    SECTION("precondition failures") {
        Polynomial a4 = parse_polynomial(f2, vs, "z^3*x");
        REQUIRE_THROWS_AS(dp2_singular_on_axis(parse_polynomial(f2, vs, "x^2"), a4, x),
                          PreconditionError);
        REQUIRE_THROWS_AS(dp2_singular_on_axis(parse_polynomial(f2, vs, "x*y"), a4, x),
                          PreconditionError);
    }
}

TEST_CASE("invariant ring dimensions") {
    Field f2 = field_make(2, 1);
    REQUIRE(invariant_ring_dimension_check(f2, 8));
    Field f4 = field_make(2, 2);
    REQUIRE(invariant_ring_dimension_check(f4, 6));
    Field f3 = field_make(3, 1);
    REQUIRE_THROWS_AS(invariant_ring_dimension_check(f3, 4), WrongCharacteristicError);
}

TEST_CASE("dp1 surface construction") {
    Field f4 = field_make(2, 2);
    auto vs = dp1_vars();
    SECTION("standard sample") {
        DP1Surface S = sample_dp1(f4);
        REQUIRE(S.a3 == parse_polynomial(f4, vs, "u^3"));
        REQUIRE(S.a4 == parse_polynomial(f4, vs, "v^4 + u^2*v^2"));
        REQUIRE(S.F.is_weighted_homogeneous(6));
        REQUIRE((S.alpha * S.alpha + S.alpha + f4.one()).is_zero());
    }
    SECTION("b may vanish") {
        REQUIRE_NOTHROW(dp1_make(Polynomial::zero(f4, vs), uv_form(f4, vs, "u*v^5")));
    }
    SECTION("GF(2) has no alpha") {
        Field f2 = field_make(2, 1);
        auto vs2 = dp1_vars();
        REQUIRE_THROWS_AS(dp1_make(Polynomial::zero(f2, vs2), uv_form(f2, vs2, "u*v^5")),
                          NoAlphaInFieldError);
    }
    SECTION("non-forms rejected") {
        REQUIRE_THROWS_AS(dp1_make(uv_form(f4, vs, "v"), uv_form(f4, vs, "u*v^5")),
                          NotBinaryFormError);
        REQUIRE_THROWS_AS(dp1_make(uv_form(f4, vs, "x"), uv_form(f4, vs, "u*v^5")),
                          NotBinaryFormError);
    }
}

TEST_CASE("dp1 order-4 constraint system") {
    Field f4 = field_make(2, 2);
    auto vs = dp1_vars();
    SECTION("s = u, b = v^2: t = u v^2 + alpha u^3 solves the system") {
        DP1Surface S = sample_dp1(f4);
        REQUIRE(dp1_derived_constraints_ok(S));
    }
    SECTION("degenerate zero data") {
        Polynomial zero = Polynomial::zero(f4, vs);
        REQUIRE(dp1_constraints_check(zero, zero, zero, zero));
    }
    SECTION("s = u with t = 0 and a4 = 0 fails") {
        Polynomial u = Polynomial::variable(f4, vs, 0);
        Polynomial zero = Polynomial::zero(f4, vs);
        REQUIRE(!dp1_constraints_check(u, zero, u.pow(3), zero));
    }
}

TEST_CASE("the order-4 automorphism tau") {
    Field f4 = field_make(2, 2);
    auto vs = dp1_vars();
    DP1Surface S = sample_dp1(f4);
    WeightedSelfMap tau = dp1_tau(S);
    SECTION("preserves the equation exactly") {
        REQUIRE(map_pullback(S.F, tau) == S.F);
    }
    SECTION("has order 4 with square the deck transformation y -> y + u^3") {
        REQUIRE(tau.order() == 4u);
        WeightedSelfMap sq = compose(tau, tau);
        WeightedSelfMap bertini = dp1_bertini_map(S);
        REQUIRE(sq.components() == bertini.components());
        REQUIRE(map_pullback(S.F, bertini) == S.F);
    }
    SECTION("seeded surfaces behave identically") {
        Rng rng(23);
        auto rand_uv_form = [&](unsigned deg) {
            Polynomial acc = Polynomial::zero(f4, vs);
            for (unsigned i = 0; i <= deg; ++i) {
                code_t c = static_cast<code_t>(rng.below(4));
                if (c) acc = acc + Polynomial::monomial(f4, vs, Expo{i, deg - i, 0, 0}, c);
            }
            return acc;
        };
        for (int i = 0; i < 15; ++i) {
            DP1Surface T = dp1_make(rand_uv_form(2), rand_uv_form(6));
            WeightedSelfMap t = dp1_tau(T);
            REQUIRE(map_pullback(T.F, t) == T.F);
            REQUIRE(t.order() == 4u);
            REQUIRE(compose(t, t).components() == dp1_bertini_map(T).components());
        }
    }
}

TEST_CASE("smoothness decision and the brute-force oracle") {
    Field f4 = field_make(2, 2);
    auto vs = dp1_vars();
    SECTION("uv^5 present: smooth") {
        DP1Surface S = sample_dp1(f4);
        auto w = dp1_singular_witness(S);
        REQUIRE(w.smooth);
        for (unsigned k : {2u, 4u}) {
            REQUIRE(dp1_brute_force_singular(S, field_make(2, k)).empty());
        }
    }
    SECTION("a6 = u^6: singular at (0,1,b(0,1),y0)") {
        DP1Surface S = dp1_make(uv_form(f4, vs, "v^2"), uv_form(f4, vs, "u^6"));
        auto w = dp1_singular_witness(S);
        REQUIRE(!w.smooth);
        REQUIRE(w.point[0].is_zero());
        REQUIRE(w.point[1] == f4.one());
        REQUIRE(w.point[2] == f4.one()); // b(0,1) = 1
        REQUIRE(is_singular_at(WeightedHypersurface(S.F), w.point));
        // the witness shows up in the brute-force list
        auto found = dp1_brute_force_singular(S, f4);
        bool seen = false;
        for (const auto& p : found)
            seen |= (p == std::vector<code_t>{w.point[0].code(), w.point[1].code(),
                                              w.point[2].code(), w.point[3].code()});
        REQUIRE(seen);
    }
    SECTION("b = 0, a6 = 0: singular at (0,1,0,0)") {
        DP1Surface S = dp1_make(Polynomial::zero(f4, vs), Polynomial::zero(f4, vs));
        auto w = dp1_singular_witness(S);
        REQUIRE(!w.smooth);
        REQUIRE(w.point == std::vector<FieldElement>{f4.zero(), f4.one(), f4.zero(), f4.zero()});
    }
    SECTION("seeded agreement between the symbolic route and the scan") {
        Rng rng(31);
        auto rand_uv_form = [&](unsigned deg) {
            Polynomial acc = Polynomial::zero(f4, vs);
            for (unsigned i = 0; i <= deg; ++i) {
                code_t c = static_cast<code_t>(rng.below(4));
                if (c) acc = acc + Polynomial::monomial(f4, vs, Expo{i, deg - i, 0, 0}, c);
            }
            return acc;
        };
        for (int i = 0; i < 12; ++i) {
            DP1Surface T = dp1_make(rand_uv_form(2), rand_uv_form(6));
            auto w = dp1_singular_witness(T);
            auto found = dp1_brute_force_singular(T, field_make(2, 4));
            if (w.smooth) {
                REQUIRE(found.empty());
            } else {
                REQUIRE(!found.empty());
                REQUIRE(is_singular_at(WeightedHypersurface(T.F), w.point));
            }
        }
    }
}

TEST_CASE("discriminant of the fibration") {
    Field f4 = field_make(2, 2);
    auto fvs = fibration_vars();
    SECTION("the dp1 family has discriminant u^12") {
        WeierstrassFibration W = dp1_to_fibration(sample_dp1(f4));
        REQUIRE(discriminant(W) == parse_polynomial(f4, fvs, "u^12"));
    }
    SECTION("a3 = v^3 moves the singular fiber to (1,0)") {
        WeierstrassFibration W(parse_polynomial(f4, fvs, "v^3"), Polynomial::zero(f4, fvs),
                               parse_polynomial(f4, fvs, "u*v^5"));
        REQUIRE(discriminant(W) == parse_polynomial(f4, fvs, "v^12"));
    }
    SECTION("a3 = 0 degenerates to zero discriminant") {
        WeierstrassFibration W(Polynomial::zero(f4, fvs), parse_polynomial(f4, fvs, "u^4"),
                               parse_polynomial(f4, fvs, "u*v^5"));
        REQUIRE(discriminant(W).is_zero());
    }
    SECTION("swapping u and v in the coefficients swaps them in the discriminant") {
        Polynomial u = Polynomial::variable(f4, fvs, 0);
        Polynomial v = Polynomial::variable(f4, fvs, 1);
        auto swap_uv = [&](const Polynomial& p) {
            std::map<std::size_t, Polynomial> images{{0, v}, {1, u}};
            return p.subst(images);
        };
        WeierstrassFibration W(parse_polynomial(f4, fvs, "u^3 + u*v^2"),
                               parse_polynomial(f4, fvs, "u^2*v^2"),
                               parse_polynomial(f4, fvs, "u*v^5 + v^6"));
        WeierstrassFibration Ws(swap_uv(W.a3), swap_uv(W.a4), swap_uv(W.a6));
        REQUIRE(discriminant(Ws) == swap_uv(discriminant(W)));
    }
}

TEST_CASE("fiber analysis") {
    Field f4 = field_make(2, 2);
    Field f16 = field_make(2, 4);
    WeierstrassFibration W = dp1_to_fibration(sample_dp1(f4));
    SECTION("a smooth fiber over GF(16) is supersingular with j = 0") {
        FiberReport r = fiber_analysis(W, f16.one(), f16.one());
        REQUIRE(r.smooth);
        REQUIRE(r.j_zero);
        REQUIRE(!r.inconsistent);
        REQUIRE(r.two_torsion_count == 1);
    }
    SECTION("the fiber at (0,1) is a cuspidal cubic") {
        FiberReport r = fiber_analysis(W, f16.zero(), f16.one());
        REQUIRE(!r.smooth);
        REQUIRE(r.cuspidal_normal_form);
    }
    SECTION("cusp reduction works with nonzero b(0,1) and a6(0,1)") {
        auto vsd = dp1_vars();
        DP1Surface S = dp1_make(parse_polynomial(f4, vsd, "v^2 + u*v"),
                                parse_polynomial(f4, vsd, "u*v^5 + v^6"));
        FiberReport r = fiber_analysis(dp1_to_fibration(S), f16.zero(), f16.one());
        REQUIRE(!r.smooth);
        REQUIRE(r.cuspidal_normal_form);
        REQUIRE(!r.cusp.empty());
    }
}

TEST_CASE("fiber automorphisms of y^2 + y = x^3") {
    SECTION("24 over GF(16), center of size 2, quaternion signature") {
        Field f16 = field_make(2, 4);
        auto rep = fiber_automorphism_report(f16, f16.one(), f16.zero(), f16.zero());
        REQUIRE(rep.count == 24);
        REQUIRE(rep.center_size == 2);
        REQUIRE(rep.q8_signature);
        REQUIRE(!rep.field_too_small);
        // the central involution is the negation y -> y + 1
        unsigned negations = 0;
        for (const auto& g : rep.elements)
            if (g.u == 1 && g.s == 0 && g.t == 1) ++negations;
        REQUIRE(negations == 1);
    }
    SECTION("GF(2) is too small and reports a partial count") {
        Field f2 = field_make(2, 1);
        auto rep = fiber_automorphism_report(f2, f2.one(), f2.zero(), f2.zero());
        REQUIRE(rep.count >= 1);
        REQUIRE(rep.count < 24);
        REQUIRE(rep.field_too_small);
    }
    SECTION("GF(4) already sees all 24") {
        Field f4 = field_make(2, 2);
        auto rep = fiber_automorphism_report(f4, f4.one(), f4.zero(), f4.zero());
        REQUIRE(rep.count == 24);
        REQUIRE(rep.center_size == 2);
        REQUIRE(rep.q8_signature);
    }
    SECTION("composition law matches the substitution algebra") {
        Field f4 = field_make(2, 2);
        auto rep = fiber_automorphism_report(f4, f4.one(), f4.zero(), f4.zero());
        auto vs = parse_vars({"x", "y"});
        Polynomial x = Polynomial::variable(f4, vs, 0);
        Polynomial y = Polynomial::variable(f4, vs, 1);
        auto as_images = [&](const FiberAut& g) {
            Polynomial xi = x.scaled(f4.mul(g.u, g.u)) +
                            Polynomial::constant(f4, vs, f4.mul(g.s, g.s));
            Polynomial yi = y.scaled(f4.mul(f4.mul(g.u, g.u), g.u)) +
                            x.scaled(f4.mul(f4.mul(g.u, g.u), g.s)) +
                            Polynomial::constant(f4, vs, g.t);
            return std::map<std::size_t, Polynomial>{{0, xi}, {1, yi}};
        };
        Rng rng(5);
        for (int i = 0; i < 10; ++i) {
            const FiberAut& g = rep.elements[rng.below(rep.elements.size())];
            const FiberAut& h = rep.elements[rng.below(rep.elements.size())];
            FiberAut gh = fiber_aut_compose(f4, g, h);
            // apply h then g to the coordinates
            auto gi = as_images(g), hi = as_images(h);
            Polynomial xc = gi.at(0).subst(hi);
            Polynomial yc = gi.at(1).subst(hi);
            auto ci = as_images(gh);
            REQUIRE(xc == ci.at(0));
            REQUIRE(yc == ci.at(1));
        }
    }
}
