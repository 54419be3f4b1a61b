#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fjd/errors.hpp"
#include "fjd/lattice.hpp"
#include "test_support.hpp"

using namespace fjd;

namespace {

// Exhaustive overlattice oracle: the lattice is maximal iff no nonzero dual
// class has integral half-norm.
bool maximal_oracle(const EvenLattice& lat) {
    const int n = lat.rank();
    Int det = lat.det();
    std::vector<Int> m(static_cast<size_t>(n), Int(0));
    while (true) {
        bool nonzero_class = false;
        // class of S^{-1} m mod Z^n is trivial iff det | (adj m)_i for all i
        std::vector<Int> am = lat.adjugate() * m;
        for (const Int& v : am)
            if (!divides(det, v)) { nonzero_class = true; break; }
        if (nonzero_class) {
            Int num(0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) num += m[static_cast<size_t>(i)] * lat.adjugate()(i, j) * m[static_cast<size_t>(j)];
            if (divides(2 * det, num)) return false;  // glue vector S^{-1} m
        }
        int i = 0;
        while (i < n) {
            m[static_cast<size_t>(i)] += 1;
            if (m[static_cast<size_t>(i)] < det) break;
            m[static_cast<size_t>(i)] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return true;
}

} // namespace

TEST_CASE("construction validates the even lattice invariants") {
    CHECK_THROWS_AS(EvenLattice(IntMat{{2, 1}, {0, 2}}), NotSymmetric);
    CHECK_THROWS_AS(EvenLattice(IntMat{{1, 0}, {0, 2}}), NotEven);
    CHECK_THROWS_AS(EvenLattice(IntMat{{2, 3}, {3, 2}}), NotPositiveDefinite);
    CHECK_THROWS_AS(EvenLattice(IntMat{{-2, 0}, {0, 2}}), NotPositiveDefinite);
    CHECK_NOTHROW(EvenLattice(IntMat{{2, 1}, {1, 2}}));  // odd off-diagonal is fine

    EvenLattice hex(fjd_test::hex_gram());
    CHECK(hex.det() == 3);
    EvenLattice s2(fjd_test::rank1_gram(1));
    CHECK(s2.det() == 2);
    CHECK(s2.rank() == 1);
}

TEST_CASE("level values") {
    CHECK(EvenLattice(fjd_test::hex_gram()).level() == 3);
    CHECK(EvenLattice(fjd_test::d15_gram()).level() == 15);
    for (long t : {1, 2, 3, 5, 6, 7, 10, 15})
        CHECK(EvenLattice(fjd_test::rank1_gram(t)).level() == 4 * t);
    // q S^{-1} = (q/2) I must have even diagonal: q = 4, not 2.
    CHECK(EvenLattice(IntMat{{2, 0}, {0, 2}}).level() == 4);
    const std::vector<long> expect_q{3, 15, 5, 3, 3, 1};
    for (size_t i = 0; i < fjd_test::six_matrices().size(); ++i)
        CHECK(EvenLattice(fjd_test::six_matrices()[i]).level() == expect_q[i]);
}

TEST_CASE("level is minimal: every proper divisor fails on some dual vector") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 1 + static_cast<int>(rng() % 3);
        EvenLattice lat(fjd_test::random_even_gram(rng, n));
        long q = to_ll(lat.level());
        CHECK(divides(lat.level(), 2 * lat.det() * 1));  // q | 2 det
        for (long qp : divisors_of(q)) {
            if (qp == q) continue;
            // scan the dual quotient for a vector with (1/2) qp S^{-1}[m] not integral
            bool broken = false;
            Int det = lat.det();
            std::vector<Int> m(static_cast<size_t>(n), Int(0));
            while (!broken) {
                Int num(0);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        num += m[static_cast<size_t>(i)] * lat.adjugate()(i, j) * m[static_cast<size_t>(j)];
                if (!divides(2 * det, num * qp)) broken = true;
                int i = 0;
                while (i < n) {
                    m[static_cast<size_t>(i)] += 1;
                    if (m[static_cast<size_t>(i)] < det) break;
                    m[static_cast<size_t>(i)] = 0;
                    ++i;
                }
                if (i == n) break;
            }
            CHECK(broken);
        }
    }
}

TEST_CASE("discriminant group") {
    EvenLattice hex(fjd_test::hex_gram());
    std::vector<Int> dg = hex.discriminant_group();
    CHECK(dg == std::vector<Int>{Int(1), Int(3)});
    CHECK(EvenLattice(fjd_test::rank1_gram(1)).discriminant_group() == std::vector<Int>{Int(2)});
    std::vector<Int> e8 = EvenLattice(fjd_test::six_matrices()[5]).discriminant_group();
    for (const Int& v : e8) CHECK(v == 1);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        EvenLattice lat(fjd_test::random_even_gram(rng, 1 + static_cast<int>(rng() % 4)));
        Int prod(1);
        for (const Int& v : lat.discriminant_group()) prod *= v;
        CHECK(prod == lat.det());
    }
}

TEST_CASE("maximality") {
    for (long t : {1, 2, 3, 5, 6, 7, 10, 15})
        CHECK(EvenLattice(fjd_test::rank1_gram(t)).is_maximal());
    CHECK_FALSE(EvenLattice(IntMat{{8}}).is_maximal());
    CHECK_FALSE(EvenLattice(IntMat{{2, 0}, {0, 6}}).is_maximal());
    for (const IntMat& m : fjd_test::six_matrices()) CHECK(EvenLattice(m).is_maximal());

    std::mt19937_64 rng(23);
    int done = 0;
    while (done < 30) {
        EvenLattice lat(fjd_test::random_even_gram(rng, 1 + static_cast<int>(rng() % 3), 3));
        if (lat.det() > 50) continue;
        ++done;
        CHECK(lat.is_maximal() == maximal_oracle(lat));
    }
}

TEST_CASE("support membership") {
    EvenLattice s2(fjd_test::rank1_gram(1));
    CHECK(s2.support_contains(Int(-4), {Int(0)}));  // D = -q, r = 0
    CHECK_FALSE(s2.support_contains(Int(-1), {Int(1)}));
    CHECK(s2.support_contains(Int(-3), {Int(1)}));
    EvenLattice hex(fjd_test::hex_gram());
    CHECK(hex.support_contains(Int(-3), {Int(0), Int(0)}));
    CHECK_FALSE(hex.support_contains(Int(3), {Int(0), Int(0)}));  // positive D
    CHECK_THROWS_AS(hex.support_contains(Int(-3), {Int(0)}), DimensionMismatch);
    CHECK_THROWS_AS(make_support_pair(s2, Int(-1), {Int(1)}), KeyOutsideSupport);
    CHECK_NOTHROW(make_support_pair(s2, Int(-4), {Int(0)}));
}

TEST_CASE("ambient forms") {
    for (const IntMat& m : fjd_test::six_matrices()) {
        EvenLattice lat(m);
        AmbientForms amb(lat);
        const int n = lat.rank();
        CHECK(amb.s0(0, n + 1) == 1);
        CHECK(amb.s0(1, 1) == -m(0, 0));
        CHECK(amb.s1(0, n + 3) == 1);
        CHECK(amb.s1(1, n + 2) == 1);  // embedded s0 corner
        std::vector<Rat> xi(amb.xi.begin(), amb.xi.end());
        CHECK(amb.phi0_norm(xi) == 1);
    }
}

TEST_CASE("xi_vector") {
    EvenLattice s2(fjd_test::rank1_gram(1));  // q = 4
    XiVector v = xi_vector(s2, Int(-4), Int(1), {Int(0)});
    CHECK(v.coords == std::vector<Rat>{Rat(1), Rat(0), Rat(1)});
    CHECK(v.verified);

    EvenLattice hex(fjd_test::hex_gram());  // q = 3
    XiVector w = xi_vector(hex, Int(-3), Int(1), {Int(0), Int(0)});
    CHECK(w.coords == std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(1)});

    CHECK_THROWS_AS(xi_vector(s2, Int(-4), Int(5), {Int(2)}), CongruenceViolated);
    XiVector u = xi_vector(s2, Int(-4), Int(5), {Int(4)});
    CHECK(u.coords == std::vector<Rat>{Rat(1), Rat(2), Rat(5)});
    CHECK(u.verified);

    // phi0-norm is -D/q for valid inputs across random admissible (d, s).
    std::mt19937_64 rng(3);
    AmbientForms amb(hex);
    int found = 0;
    while (found < 20) {
        long d = 1 + static_cast<long>(rng() % 12);
        std::vector<Int> s{Int(static_cast<long>(rng() % (3 * d))),
                           Int(static_cast<long>(rng() % (3 * d)))};
        Int f = hex.half_q_dual_norm(s);
        Int d_val = f - 3 * d * (1 + static_cast<long>(rng() % 3));
        if (d_val >= 0) continue;
        ++found;
        XiVector x = xi_vector(hex, d_val, Int(d), s);
        Rat expect(-d_val, 3);
        expect.canonicalize();
        CHECK(amb.phi0_norm(x.coords) == expect);
        if (int_gcd(Int(d), d_val) == 1) CHECK(x.verified);
    }
}
