#include <catch2/catch_amalgamated.hpp>

#include "cremona/dejonquieres.hpp"
#include "cremona/rng.hpp"

using namespace cremona;

namespace {

struct Fixture {
    Field f2 = field_make(2, 1);
    VarSetPtr vs = parse_vars({"x"});
    Polynomial x() const { return Polynomial::variable(f2, vs, 0); }
    Polynomial one() const { return Polynomial::constant(f2, vs, 1); }
    Polynomial parse(const std::string& s) const { return parse_polynomial(f2, vs, s); }
};

// all squarefree polynomials over GF(2) with degree in [1, max_deg]
std::vector<Polynomial> squarefree_polys(const Fixture& fx, unsigned max_deg) {
    std::vector<Polynomial> out;
    for (unsigned d = 1; d <= max_deg; ++d) {
        for (std::uint64_t enc = 0; enc < (1ull << d); ++enc) {
            std::vector<code_t> coeffs(d + 1, 0);
            for (unsigned i = 0; i < d; ++i) coeffs[i] = (enc >> i) & 1;
            coeffs[d] = 1;
            Polynomial P = from_dense(fx.f2, fx.vs, 0, coeffs);
            if (univariate_squarefree(P)) out.push_back(P);
        }
    }
    return out;
}

} // namespace

TEST_CASE("composition basics") {
    Fixture fx;
    auto ex = dj_example_build(fx.parse("x^2+x+1"));
    SECTION("g composed with its inverse is the identity") {
        REQUIRE(compose(ex.sigma, ex.sigma.inverse()).is_identity());
        REQUIRE(compose(ex.sigma.inverse(), ex.sigma).is_identity());
    }
    SECTION("sigma^2 is (x, R/y) with R = P(x)P(x+1)/(x(x+1))") {
        DeJonquieresMap sq = compose(ex.sigma, ex.sigma);
        REQUIRE(sq.base().is_identity());
        RationalFunction R(ex.P * ex.P_shift, fx.parse("x^2+x"));
        DeJonquieresMap expected(Mobius::identity(fx.f2),
                                 std::array<Polynomial, 4>{Polynomial::zero(fx.f2, fx.vs), R.num(),
                                                           R.den(), Polynomial::zero(fx.f2, fx.vs)});
        REQUIRE(sq == expected);
        // antidiagonal after normalization
        REQUIRE(sq.fiber()[0].is_zero());
        REQUIRE(sq.fiber()[3].is_zero());
    }
    SECTION("sigma^2 composed with itself is the identity") {
        DeJonquieresMap sq = compose(ex.sigma, ex.sigma);
        REQUIRE(compose(sq, sq).is_identity());
    }
    SECTION("degenerate fiber is rejected") {
        Fixture f;
        auto x = f.x();
        REQUIRE_THROWS_AS(DeJonquieresMap(Mobius::identity(f.f2),
                                          std::array<Polynomial, 4>{x, x, x, x}),
                          DegenerateFiberError);
    }
    SECTION("rational-function entries clear to the same normalized map") {
        Polynomial x = fx.x(), one = fx.one();
        Polynomial xx1 = fx.parse("x^2+x");
        std::array<RationalFunction, 4> fib = {
            RationalFunction(ex.P, x), RationalFunction(one, one),
            RationalFunction(one, xx1), RationalFunction(ex.P, x)};
        DeJonquieresMap g(Mobius::shift(fx.f2, 1), fib);
        // cleared: multiply through by x * x(x+1)
        DeJonquieresMap expected(
            Mobius::shift(fx.f2, 1),
            std::array<Polynomial, 4>{ex.P * xx1, x * xx1, x, ex.P * xx1});
        REQUIRE(g == expected);
    }
}

TEST_CASE("example construction") {
    Fixture fx;
    SECTION("P = x^2+x+1 gives m = 4") {
        auto ex = dj_example_build(fx.parse("x^2+x+1"));
        REQUIRE(ex.singular_fibres == 4);
    }
    SECTION("P = x^4+x+1 gives the threshold m = 8") {
        auto ex = dj_example_build(fx.parse("x^4+x+1"));
        REQUIRE(ex.singular_fibres == 8);
    }
    SECTION("P = x^2 is refused") {
        REQUIRE_THROWS_AS(dj_example_build(fx.parse("x^2")), NotSquarefreeError);
    }
    SECTION("wrong characteristic is refused") {
        Field f3 = field_make(3, 1);
        auto vs = parse_vars({"x"});
        REQUIRE_THROWS_AS(dj_example_build(parse_polynomial(f3, vs, "x")),
                          WrongCharacteristicError);
    }
}

TEST_CASE("the two displayed identities") {
    Fixture fx;
    REQUIRE(dj_identities_check(dj_example_build(fx.parse("x^2+x+1")).sigma));
    REQUIRE(dj_identities_check(dj_example_build(fx.parse("x^4+x+1")).sigma));
    SECTION("identity fiber fails them") {
        DeJonquieresMap g(Mobius::shift(fx.f2, 1),
                          std::array<Polynomial, 4>{fx.one(), Polynomial::zero(fx.f2, fx.vs),
                                                    Polynomial::zero(fx.f2, fx.vs), fx.one()});
        REQUIRE(!dj_identities_check(g));
    }
    SECTION("wrong base is an error") {
        auto ex = dj_example_build(fx.parse("x^2+x+1"));
        REQUIRE_THROWS_AS(dj_identities_check(compose(ex.sigma, ex.sigma)), WrongBaseError);
    }
}

TEST_CASE("orders") {
    Fixture fx;
    SECTION("the example map has order 4") {
        REQUIRE(dj_example_build(fx.parse("x^2+x+1")).sigma.order() == 4u);
    }
    SECTION("identity has order 1") {
        REQUIRE(DeJonquieresMap::identity(fx.f2, fx.vs).order() == 1u);
    }
    SECTION("(x, P(x)P(x+1)/y) has order 2") {
        auto ex = dj_example_build(fx.parse("x^2+x+1"));
        REQUIRE(dj_involution(ex.P * ex.P_shift).order() == 2u);
    }
}

TEST_CASE("whole squarefree family up to degree 4") {
    // The construction degenerates (fiber determinant 0) exactly when x P(x)
    // is invariant under x -> x+1, i.e. x P(x) lies in GF(2)[x^2+x].  Up to
    // degree 6 that happens for x+1, x^3+1 and x^5+x^4+x^2+1 only.
    Fixture fx;
    std::vector<std::string> degenerate;
    for (const Polynomial& P : squarefree_polys(fx, 4)) {
        Polynomial xP = fx.x() * P;
        bool shift_invariant = xP.subst_var(0, fx.x() + fx.one()) == xP;
        try {
            auto ex = dj_example_build(P);
            REQUIRE(!shift_invariant);
            REQUIRE(dj_identities_check(ex.sigma));
            REQUIRE(ex.sigma.order() == 4u);
            DeJonquieresMap sq = compose(ex.sigma, ex.sigma);
            REQUIRE(sq.fiber()[0].is_zero());
            REQUIRE(sq.fiber()[3].is_zero());
            RationalFunction R(ex.P * ex.P_shift, fx.parse("x^2+x"));
            DeJonquieresMap expected(
                Mobius::identity(fx.f2),
                std::array<Polynomial, 4>{Polynomial::zero(fx.f2, fx.vs), R.num(), R.den(),
                                          Polynomial::zero(fx.f2, fx.vs)});
            REQUIRE(sq == expected);
        } catch (const DegenerateFiberError&) {
            REQUIRE(shift_invariant);
            degenerate.push_back(P.str());
        }
    }
    REQUIRE(degenerate == std::vector<std::string>{"x + 1", "x^3 + 1"});
}

TEST_CASE("rescaling y by x(x+1)") {
    Fixture fx;
    auto ex = dj_example_build(fx.parse("x^2+x+1"));
    DeJonquieresMap sq = compose(ex.sigma, ex.sigma);
    Polynomial lambda = fx.parse("x^2+x");
    DeJonquieresMap h = dj_y_scaling(lambda);
    Polynomial PP = ex.P * ex.P_shift;

    SECTION("composing the rescaling after sigma^2 gives (x, P(x)P(x+1)/y) exactly") {
        REQUIRE(compose(h, sq) == dj_involution(PP));
    }
    SECTION("conjugation by the rescaling gives (x, x(x+1) P(x)P(x+1)/y)") {
        DeJonquieresMap conj = compose(compose(h, sq), h.inverse());
        REQUIRE(conj == dj_involution(lambda * PP));
        REQUIRE(conj.order() == 2u);
    }
    SECTION("conjugation preserves order") {
        DeJonquieresMap conj = compose(compose(h, ex.sigma), h.inverse());
        REQUIRE(conj.order() == 4u);
    }
}

TEST_CASE("composition is associative on seeded random maps") {
    Field f4 = field_make(2, 2);
    auto vs = parse_vars({"x"});
    Rng rng(11);
    auto random_map = [&]() {
        while (true) {
            std::array<code_t, 4> b;
            do {
                for (auto& c : b) c = static_cast<code_t>(rng.below(4));
            } while (f4.sub(f4.mul(b[0], b[3]), f4.mul(b[1], b[2])) == 0);
            std::array<Polynomial, 4> fib;
            for (auto& e : fib) {
                std::vector<code_t> coeffs(1 + rng.below(3), 0);
                for (auto& c : coeffs) c = static_cast<code_t>(rng.below(4));
                e = from_dense(f4, vs, 0, coeffs);
            }
            try {
                return DeJonquieresMap(Mobius(f4, b), fib);
            } catch (const DegenerateFiberError&) {
            }
        }
    };
    for (int iter = 0; iter < 10; ++iter) {
        DeJonquieresMap a = random_map(), b = random_map(), c = random_map();
        REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
}
