#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fjd/classnumber.hpp"
#include "fjd/errors.hpp"

using namespace fjd;

TEST_CASE("class numbers by reduced forms") {
    CHECK(class_number_by_forms(-4) == 1);
    CHECK(class_number_by_forms(-24) == 2);
    CHECK(class_number_by_forms(-15) == 2);
    CHECK(class_number_by_forms(-20) == 2);
    CHECK(class_number_by_forms(-40) == 2);
    CHECK(class_number_by_forms(-56) == 4);
    // the classical class-number-one discriminants
    for (long d : {-3L, -4L, -7L, -8L, -11L, -19L, -43L, -67L, -163L})
        CHECK(class_number_by_forms(d) == 1);
    CHECK_THROWS_AS(class_number_by_forms(5), NotDiscriminant);
    CHECK_THROWS_AS(class_number_by_forms(-5), NotDiscriminant);   // -5 = 3 (mod 4)
    CHECK_THROWS_AS(class_number_by_forms(-12), NotDiscriminant);  // not fundamental
    CHECK_THROWS_AS(class_number_by_forms(-100), NotDiscriminant);
}

TEST_CASE("imaginary quadratic field data") {
    ImagQuadField k1 = imag_quad_field(1);
    CHECK(k1.disc == -4);
    CHECK(k1.class_number == 1);
    CHECK(k1.omega_t == 0);
    CHECK(k1.two_behavior == TwoBehavior::Ramified);
    CHECK(k1.unit_index == 2);
    CHECK(k1.mu == 0);

    ImagQuadField k3 = imag_quad_field(3);
    CHECK(k3.disc == -3);
    CHECK(k3.two_behavior == TwoBehavior::Inert);  // -3 = 5 (mod 8)
    CHECK(k3.unit_index == 3);
    CHECK(k3.mu == 1);

    ImagQuadField k15 = imag_quad_field(15);
    CHECK(k15.disc == -15);
    CHECK(k15.class_number == 2);
    CHECK(k15.omega_t == 2);
    CHECK(k15.two_behavior == TwoBehavior::Split);  // -15 = 1 (mod 8)
    CHECK(k15.unit_index == 1);
    CHECK(k15.mu == 2);

    CHECK(imag_quad_field(6).two_behavior == TwoBehavior::Ramified);
    CHECK_THROWS_AS(imag_quad_field(4), NotSquarefree);
    CHECK_THROWS_AS(imag_quad_field(12), NotSquarefree);
    CHECK_THROWS_AS(imag_quad_field(0), NotSquarefree);

    // trichotomy is total and matches disc parity
    for (long t = 1; t <= 100; ++t) {
        if (!is_squarefree_ll(t)) continue;
        ImagQuadField k = imag_quad_field(t);
        if (k.two_behavior == TwoBehavior::Ramified)
            CHECK(k.disc % 2 == 0);
        else if (k.two_behavior == TwoBehavior::Inert)
            CHECK(((-t) % 8 + 8) % 8 == 5);
        else
            CHECK(((-t) % 8 + 8) % 8 == 1);
    }
}

TEST_CASE("rank-1 index worked cases") {
    CHECK(rank1_index(1) == 1);
    CHECK(rank1_index(2) == 1);
    CHECK(rank1_index(3) == 1);
    CHECK(rank1_index(5) == 2);
    CHECK(rank1_index(6) == 1);
    CHECK(rank1_index(7) == 1);
    CHECK(rank1_index(10) == 1);
    CHECK(rank1_index(11) == 3);
    CHECK(rank1_index(13) == 2);
    CHECK(rank1_index(14) == 2);
    CHECK(rank1_index(15) == 1);
    CHECK_THROWS_AS(rank1_index(8), NotSquarefree);
}

TEST_CASE("admissibility criterion") {
    CHECK(is_admissible_rank1(2));
    CHECK(is_admissible_rank1(15));
    CHECK_FALSE(is_admissible_rank1(5));
    CHECK_THROWS_AS(is_admissible_rank1(9), NotSquarefree);

    // criterion and index computed independently must agree
    for (long t = 1; t <= 200; ++t) {
        if (!is_squarefree_ll(t)) continue;
        CHECK(is_admissible_rank1(t) == (rank1_index(t) == 1));
    }

    // inert branch: the index is exactly 3 c_K 2^{1-k}, never 1
    for (long t = 11; t <= 200; t += 8) {
        if (!is_squarefree_ll(t)) continue;
        ImagQuadField k = imag_quad_field(t);
        Rat idx = rank1_index(t);
        Rat expect = Rat(3) * Rat(k.class_number) * rat_pow(Int(2), 1 - k.omega_t);
        CHECK(idx == expect);
        CHECK(idx != 1);
    }
}

TEST_CASE("enumerate admissible") {
    CHECK(enumerate_admissible(3) == std::vector<long>{1, 2, 3});
    std::vector<long> upto15 = enumerate_admissible(15);
    for (long t : {1L, 2L, 3L, 6L, 10L, 15L})
        CHECK(std::find(upto15.begin(), upto15.end(), t) != upto15.end());
    CHECK(std::find(upto15.begin(), upto15.end(), 5L) == upto15.end());
    CHECK(upto15 == std::vector<long>{1, 2, 3, 6, 7, 10, 15});
    CHECK(enumerate_admissible(30) == std::vector<long>{1, 2, 3, 6, 7, 10, 15, 22, 30});
}
