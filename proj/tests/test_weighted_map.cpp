#include <catch2/catch_amalgamated.hpp>

#include "cremona/weighted_map.hpp"

using namespace cremona;

namespace {

WeightedSelfMap p112_map(const Field& f, const std::string& t2_image) {
    auto vs = parse_vars({"t0:1", "t1:1", "t2:2"});
    return WeightedSelfMap({parse_polynomial(f, vs, "t0+t1"), parse_polynomial(f, vs, "t1"),
                            parse_polynomial(f, vs, t2_image)});
}

} // namespace

TEST_CASE("weighted self-maps of P(1,1,2)") {
    SECTION("characteristic 2: order 4 with square (t0, t1, t2 + t1^2)") {
        Field f2 = field_make(2, 1);
        WeightedSelfMap g = p112_map(f2, "t2 + t0*t1");
        REQUIRE(g.order() == 4u);
        WeightedSelfMap sq = compose(g, g);
        auto vs = g.vars();
        REQUIRE(sq.components()[0] == parse_polynomial(f2, vs, "t0"));
        REQUIRE(sq.components()[1] == parse_polynomial(f2, vs, "t1"));
        REQUIRE(sq.components()[2] == parse_polynomial(f2, vs, "t2 + t1^2"));
    }
    SECTION("characteristic 3: order 9 with cube (t0, t1, t2 + 2 t1^2)") {
        Field f3 = field_make(3, 1);
        WeightedSelfMap g = p112_map(f3, "t2 + t0^2");
        REQUIRE(g.order() == 9u);
        WeightedSelfMap cube = compose(compose(g, g), g);
        auto vs = g.vars();
        REQUIRE(cube.components()[2] == parse_polynomial(f3, vs, "t2 + 2*t1^2"));
    }
    SECTION("identity components have order 1") {
        Field f2 = field_make(2, 1);
        auto vs = parse_vars({"t0:1", "t1:1", "t2:2"});
        REQUIRE(WeightedSelfMap::identity(f2, vs).order() == 1u);
    }
    SECTION("non-homogeneous components rejected") {
        Field f2 = field_make(2, 1);
        auto vs = parse_vars({"t0:1", "t1:1", "t2:2"});
        REQUIRE_THROWS_AS(WeightedSelfMap({parse_polynomial(f2, vs, "t0"),
                                           parse_polynomial(f2, vs, "t1"),
                                           parse_polynomial(f2, vs, "t2 + t0")}),
                          NotHomogeneousError);
    }
    SECTION("singular linear part rejected") {
        Field f2 = field_make(2, 1);
        auto vs = parse_vars({"t0:1", "t1:1", "t2:2"});
        REQUIRE_THROWS_AS(WeightedSelfMap({parse_polynomial(f2, vs, "t0+t1"),
                                           parse_polynomial(f2, vs, "t0+t1"),
                                           parse_polynomial(f2, vs, "t2")}),
                          NonInvertibleLinearPartError);
    }
    SECTION("order of powers divides the order") {
        Field f3 = field_make(3, 1);
        WeightedSelfMap g = p112_map(f3, "t2 + t0^2"); // order 9
        WeightedSelfMap g3 = compose(compose(g, g), g);
        REQUIRE(g3.order() == 3u);
    }
}

TEST_CASE("shift sums of binary forms") {
    auto make_form = [](const Field& f, const std::string& s) {
        auto vs = parse_vars({"t0", "t1"});
        return parse_polynomial(f, vs, s);
    };
    SECTION("f = t1^n vanishes for any p") {
        for (code_t p : {2u, 3u, 5u}) {
            Field f = field_make(p, 1);
            REQUIRE(norm_sum(make_form(f, "t1^3"), p).is_zero());
        }
    }
    SECTION("f = t0 t1, p = 2 gives t1^2") {
        Field f2 = field_make(2, 1);
        REQUIRE(norm_sum(make_form(f2, "t0*t1"), 2) == make_form(f2, "t1^2"));
    }
    SECTION("f = t0^2, p = 3 gives 2 t1^2") {
        Field f3 = field_make(3, 1);
        REQUIRE(norm_sum(make_form(f3, "t0^2"), 3) == make_form(f3, "2*t1^2"));
    }
    SECTION("oracle and difference route agree on all monomials up to degree 6") {
        for (code_t p : {2u, 3u, 5u}) {
            Field f = field_make(p, 1);
            auto vs = parse_vars({"t0", "t1"});
            for (std::uint32_t n = 1; n <= 6; ++n)
                for (std::uint32_t i = 0; i <= n; ++i) {
                    Polynomial m = Polynomial::monomial(f, vs, Expo{i, n - i}, 1);
                    Polynomial direct = norm_sum(m, p);
                    REQUIRE(direct == norm_sum_oracle(m, p));
                    REQUIRE(direct == norm_sum_difference_route(m, p));
                }
        }
    }
    SECTION("non-forms are rejected") {
        Field f2 = field_make(2, 1);
        auto vs = parse_vars({"t0", "t1"});
        REQUIRE_THROWS_AS(norm_sum(parse_polynomial(f2, vs, "t0 + t0^2"), 2), NotBinaryFormError);
        auto vs3 = parse_vars({"t0", "t1", "t2"});
        REQUIRE_THROWS_AS(norm_sum(parse_polynomial(f2, vs3, "t0*t1"), 2), NotBinaryFormError);
    }
    SECTION("the vanishing claim fails already for the induced P(1,1,2) squares") {
        // the nonzero shift sums above are exactly the obstruction terms in
        // the squares/cubes computed in the first test case
        Field f2 = field_make(2, 1);
        REQUIRE(!norm_sum(make_form(f2, "t0*t1"), 2).is_zero());
        Field f3 = field_make(3, 1);
        REQUIRE(!norm_sum(make_form(f3, "t0^2"), 3).is_zero());
    }
}

TEST_CASE("product maps on P1 x P1") {
    Field f2 = field_make(2, 1);
    SECTION("(x, y) -> (y+1, x) has order 4 and square (x+1, y+1)") {
        ProductMap g(Mobius::shift(f2, 1), Mobius::identity(f2), true);
        REQUIRE(g.order() == 4u);
        ProductMap sq = compose(g, g);
        REQUIRE(!sq.swaps());
        REQUIRE(sq.phi() == Mobius::shift(f2, 1));
        REQUIRE(sq.psi() == Mobius::shift(f2, 1));
    }
    SECTION("identity") {
        REQUIRE(ProductMap::identity(f2).order() == 1u);
    }
    SECTION("pure swap has order 2") {
        ProductMap g(Mobius::identity(f2), Mobius::identity(f2), true);
        REQUIRE(g.order() == 2u);
    }
}
