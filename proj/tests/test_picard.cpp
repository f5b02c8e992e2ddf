#include <catch2/catch_amalgamated.hpp>

#include "cremona/picard.hpp"
#include "cremona/rng.hpp"

using namespace cremona;

namespace {

PicVec random_vec(const PicLattice& L, Rng& rng) {
    PicVec v(L.N + 1);
    for (auto& c : v) c = static_cast<long long>(rng.below(9)) - 4;
    return v;
}

} // namespace

TEST_CASE("intersection form") {
    PicLattice L(8);
    REQUIRE(L.dot(PicLattice::basis_vector(8, 1), PicLattice::basis_vector(8, 1)) == -1);
    REQUIRE(L.dot(L.K(), L.K()) == 1); // 9 - 8
    REQUIRE(L.dot(PicLattice::basis_vector(8, 1), L.K()) == -1);
    PicLattice L7(7);
    REQUIRE(L7.dot(L7.K(), L7.K()) == 2); // 9 - 7
    REQUIRE_THROWS_AS(L.dot(PicVec(3, 0), L.K()), DimensionMismatchError);
    REQUIRE_THROWS_AS(PicLattice(9), UnsupportedNError);
}

TEST_CASE("Geiser involution on N = 7") {
    PicLattice L(7);
    SECTION("fixes K") {
        REQUIRE(geiser(L, L.K()) == L.K());
    }
    SECTION("negates the K-perp basis") {
        for (const auto& v : L.kperp_basis()) {
            REQUIRE(L.dot(v, L.K()) == 0);
            REQUIRE(geiser(L, v) == pic_neg(v));
        }
    }
    SECTION("e1 maps to -e1 - K") {
        PicVec e1 = PicLattice::basis_vector(7, 1);
        PicVec img = geiser(L, e1);
        REQUIRE(img == pic_add(pic_neg(e1), pic_neg(L.K())));
        // explicitly: the cubic with a double point at p1;
        // self-intersection -1 and degree 3
        REQUIRE(img == PicVec{3, -2, -1, -1, -1, -1, -1, -1});
        REQUIRE(L.dot(img, img) == -1);
        REQUIRE(L.dot(img, L.K()) == -1);
    }
    SECTION("involution and form preservation on random vectors") {
        Rng rng(3);
        for (int i = 0; i < 50; ++i) {
            PicVec a = random_vec(L, rng), b = random_vec(L, rng);
            REQUIRE(geiser(L, geiser(L, a)) == a);
            REQUIRE(L.dot(geiser(L, a), geiser(L, b)) == L.dot(a, b));
        }
    }
    SECTION("wrong N") {
        PicLattice L8(8);
        REQUIRE_THROWS_AS(geiser(L8, L8.K()), WrongNError);
    }
}

TEST_CASE("Bertini involution on N = 8") {
    PicLattice L(8);
    SECTION("fixes K and negates K-perp") {
        REQUIRE(bertini(L, L.K()) == L.K());
        for (const auto& v : L.kperp_basis()) REQUIRE(bertini(L, v) == pic_neg(v));
    }
    SECTION("e1 maps to -e1 - 2K with intersection 3") {
        PicVec e1 = PicLattice::basis_vector(8, 1);
        PicVec img = bertini(L, e1);
        REQUIRE(img == PicVec{6, -3, -2, -2, -2, -2, -2, -2, -2});
        REQUIRE(L.dot(e1, img) == 3);
    }
    SECTION("involution and form preservation on random vectors") {
        Rng rng(4);
        for (int i = 0; i < 50; ++i) {
            PicVec a = random_vec(L, rng), b = random_vec(L, rng);
            REQUIRE(bertini(L, bertini(L, a)) == a);
            REQUIRE(L.dot(bertini(L, a), bertini(L, b)) == L.dot(a, b));
        }
    }
}

TEST_CASE("exceptional classes") {
    SECTION("counts are 27, 56, 240") {
        REQUIRE(exceptional_classes(PicLattice(6)).size() == 27);
        REQUIRE(exceptional_classes(PicLattice(7)).size() == 56);
        REQUIRE(exceptional_classes(PicLattice(8)).size() == 240);
    }
    SECTION("defining equations hold for every class") {
        PicLattice L(8);
        for (const auto& E : exceptional_classes(L)) {
            REQUIRE(L.dot(E, E) == -1);
            REQUIRE(L.dot(E, L.K()) == -1);
        }
    }
    SECTION("every class meets its Bertini image in 3 points") {
        PicLattice L(8);
        for (const auto& E : exceptional_classes(L)) REQUIRE(L.dot(E, bertini(L, E)) == 3);
    }
    SECTION("every class meets its Geiser image in 2 points") {
        PicLattice L(7);
        for (const auto& E : exceptional_classes(L)) REQUIRE(L.dot(E, geiser(L, E)) == 2);
    }
    SECTION("E + bertini(E) is the class -2K, of square 4 and K-degree -2") {
        PicLattice L(8);
        for (const auto& E : exceptional_classes(L)) {
            PicVec D = pic_add(E, bertini(L, E));
            REQUIRE(D == pic_scale(-2, L.K()));
            REQUIRE(L.dot(D, D) == 4);
            REQUIRE(L.dot(D, L.K()) == -2);
        }
    }
}

TEST_CASE("cross values of the four D_i") {
    PicLattice L(8);
    SECTION("classes built from exceptional curves") {
        auto es = exceptional_classes(L);
        std::array<PicVec, 4> D;
        for (int i = 0; i < 4; ++i) D[i] = pic_add(es[i], bertini(L, es[i]));
        CrossValues cv = di_cross_values(L, D);
        REQUIRE(cv.pair_sum == 48);
        REQUIRE(cv.common == 4);
    }
    SECTION("four copies of -2K") {
        std::array<PicVec, 4> D;
        for (auto& d : D) d = pic_scale(-2, L.K());
        CrossValues cv = di_cross_values(L, D);
        REQUIRE(cv.pair_sum == 48);
        REQUIRE(cv.common == 4);
        for (int i = 0; i < 4; ++i) REQUIRE(cv.table[i][i] == 4);
    }
    SECTION("violated preconditions are reported") {
        std::array<PicVec, 4> D;
        for (auto& d : D) d = L.K();
        REQUIRE_THROWS_AS(di_cross_values(L, D), PreconditionError);
        for (auto& d : D) d = pic_scale(-2, L.K());
        D[3] = pic_scale(2, L.K());
        REQUIRE_THROWS_AS(di_cross_values(L, D), PreconditionError);
    }
}
