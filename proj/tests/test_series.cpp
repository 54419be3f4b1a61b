#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fjd/errors.hpp"
#include "fjd/series.hpp"
#include "test_support.hpp"

using namespace fjd;

namespace {

std::vector<Rat> rats(std::initializer_list<long> vs) {
    std::vector<Rat> out;
    for (long v : vs) out.emplace_back(v);
    return out;
}

} // namespace

TEST_CASE("expand_local") {
    // (1 + X) / (1 - X) -> 1, 2, 2, 2
    LocalFactor f = make_local_factor(5, {Rat(1), Rat(1)}, {Rat(1), Rat(-1)});
    CHECK(expand_local(f, 3) == rats({1, 2, 2, 2}));
    // (1 + X) / (1 + X) reduces to 1
    LocalFactor g = make_local_factor(3, {Rat(1), Rat(1)}, {Rat(1), Rat(1)});
    CHECK(expand_local(g, 3) == rats({1, 0, 0, 0}));
    CHECK(g.num == Poly{Rat(1)});
    // geometric 1 / (1 - 7X)
    CHECK(expand_local(lf_geometric(7, Rat(7)), 3) == rats({1, 7, 49, 343}));
    CHECK_THROWS_AS(make_local_factor(5, {Rat(1)}, {Rat(0), Rat(1)}), DenominatorVanishesAtZero);
}

TEST_CASE("local factor shifts") {
    // X -> p^a X on a geometric factor multiplies the k-th coefficient by p^{ak}.
    for (long p : {3L, 5L}) {
        LocalFactor f = lf_geometric(p, Rat(1));
        for (long a : {1L, 2L, -1L}) {
            LocalFactor sh = shift_local(f, Rat(a));
            std::vector<Rat> base = expand_local(f, 4);
            std::vector<Rat> shifted = expand_local(sh, 4);
            for (int k = 0; k <= 4; ++k)
                CHECK(shifted[static_cast<size_t>(k)] ==
                      base[static_cast<size_t>(k)] * rat_pow(Int(p), a * k));
        }
    }
    // a half shift on an even-support polynomial is fine
    LocalFactor even = lf_poly(5, {Rat(1), Rat(0), Rat(3)});
    LocalFactor sh = shift_local(even, Rat(1, 2));
    CHECK(sh.num == Poly{Rat(1), Rat(0), Rat(15)});
    // a lone half shift on an odd-degree coefficient is refused
    CHECK_THROWS_AS(shift_local(lf_geometric(5, Rat(1)), Rat(1, 2)), HalfShiftUnpaired);
}

TEST_CASE("euler_to_series") {
    std::map<long, LocalFactor> zeta;
    for (long p : primes_up_to(20)) zeta[p] = lf_geometric(p, Rat(1));
    FormalDirichletSeries z = euler_to_series(zeta, 6, {});
    for (long n = 1; n <= 6; ++n) CHECK(z.at(n) == 1);

    // rank-1 factors for t = 1, bad = {2}: a5 = 2, a7 = 0, a9 = 0
    // (chi_1(3) = -1, so the factor at 3 is (1+X)/(1+X) = 1).
    std::map<long, LocalFactor> fs;
    for (long p : primes_up_to(10)) {
        if (p == 2) continue;
        fs[p] = make_local_factor(p, {Rat(1), Rat(1)}, {Rat(1), Rat(-chi_t(1, p))});
    }
    FormalDirichletSeries s = euler_to_series(fs, 10, {2});
    CHECK(s.at(1) == 1);
    CHECK(s.at(5) == 2);
    CHECK(s.at(7) == 0);
    CHECK(s.at(9) == 0);
    CHECK(s.at(4) == 0);  // deprived

    // factors (1+X)/(1 - chi_3(p) X): a7 = 1 + chi_3(7) = 2
    std::map<long, LocalFactor> f3;
    for (long p : primes_up_to(10)) {
        if (p == 2 || p == 3) continue;
        f3[p] = make_local_factor(p, {Rat(1), Rat(1)}, {Rat(1), Rat(-chi_t(3, p))});
    }
    CHECK(euler_to_series(f3, 10, {2, 3}).at(7) == 2);

    CHECK_THROWS_AS(euler_to_series(f3, 10, {2}), MissingPrime);
}

TEST_CASE("dirichlet multiplication") {
    std::mt19937_64 rng(13);
    auto random_series = [&](long n_max, std::set<long> bad) {
        FormalDirichletSeries s = zero_series(n_max, bad);
        for (long n = 1; n <= n_max; ++n)
            if (s.is_good(n)) s.coeff[static_cast<size_t>(n)] = Rat(static_cast<long>(rng() % 19) - 9);
        return s;
    };
    FormalDirichletSeries a = random_series(40, {2});
    FormalDirichletSeries b = random_series(40, {2});
    FormalDirichletSeries c = random_series(40, {2});
    // commutativity and associativity on truncations
    CHECK(compare_series(dirichlet_mul(a, b), dirichlet_mul(b, a)).empty());
    CHECK(compare_series(dirichlet_mul(dirichlet_mul(a, b), c),
                         dirichlet_mul(a, dirichlet_mul(b, c)))
              .empty());
    // convolution definition at a composite index
    Rat direct(0);
    for (long d : divisors_of(15)) direct += a.at(d) * b.at(15 / d);
    CHECK(dirichlet_mul(a, b).at(15) == direct);
}

TEST_CASE("zeta * zeta(2s)^{-1} has squarefree-indicator coefficients") {
    const long n_max = 120;
    FormalDirichletSeries zeta = character_zeta_truncation([](long) { return 1; }, 0, n_max, {});
    FormalDirichletSeries zeta2inv = zero_series(n_max, {});
    for (long m = 1; m * m <= n_max; ++m) {
        // mu(m) at the square m^2
        long mm = m;
        int mu = 1;
        bool sf = true;
        for (long p = 2; p * p <= mm; ++p)
            if (mm % p == 0) {
                mm /= p;
                mu = -mu;
                if (mm % p == 0) { sf = false; break; }
            }
        if (mm > 1) mu = -mu;
        zeta2inv.coeff[static_cast<size_t>(m * m)] = sf ? Rat(mu) : Rat(0);
    }
    FormalDirichletSeries prod = dirichlet_mul(zeta, zeta2inv);
    for (long n = 1; n <= n_max; ++n)
        CHECK(prod.at(n) == (is_squarefree_ll(n) ? 1 : 0));
}

TEST_CASE("euler products multiply factor-wise") {
    // euler(f) * euler(g) as Dirichlet series equals euler(f * g).
    std::mt19937_64 rng(61);
    const long n_max = 60;
    std::set<long> bad{2};
    std::map<long, LocalFactor> fs, gs, prod;
    for (long p : primes_up_to(n_max)) {
        if (bad.count(p)) continue;
        Poly fn{Rat(1), Rat(static_cast<long>(rng() % 7) - 3)};
        Poly gn{Rat(1), Rat(static_cast<long>(rng() % 7) - 3), Rat(static_cast<long>(rng() % 5) - 2)};
        fs[p] = make_local_factor(p, fn, {Rat(1), Rat(-1)});
        gs[p] = lf_poly(p, gn);
        prod[p] = lf_mul(fs[p], gs[p]);
    }
    FormalDirichletSeries lhs =
        dirichlet_mul(euler_to_series(fs, n_max, bad), euler_to_series(gs, n_max, bad));
    FormalDirichletSeries rhs = euler_to_series(prod, n_max, bad);
    CHECK(compare_series(lhs, rhs).empty());
}

TEST_CASE("zeta_xi series") {
    EvenLattice s2(fjd_test::rank1_gram(1));
    FormalDirichletSeries z = zeta_xi_series(s2, Int(-4), 10, {2});
    CHECK(z.at(1) == 1);
    CHECK(z.at(5) == 2);
    CHECK(z.at(7) == 0);
    CHECK(z.at(9) == 0);
    EvenLattice hex(fjd_test::hex_gram());
    CHECK(zeta_xi_series(hex, Int(-3), 7, {2, 3}).at(7) == 6);
}

TEST_CASE("verify_rank1_identity") {
    IdentityReport r1 = verify_rank1_identity(1, 60, {2});
    CHECK(r1.ok());
    IdentityReport r15 = verify_rank1_identity(15, 60, {2, 3, 5});
    CHECK(r15.ok());
    IdentityReport r5 = verify_rank1_identity(5, 40, {2, 5});  // non-admissible t still satisfies it
    CHECK(r5.ok());
    CHECK_THROWS_AS(verify_rank1_identity(4, 40, {2}), NotSquarefree);
    CHECK_THROWS_AS(verify_rank1_identity(3, 40, {2}), std::invalid_argument);  // 3 missing from bad
}

TEST_CASE("verify_evenrank_identity") {
    EvenLattice hex(fjd_test::hex_gram());
    IdentityReport rep = verify_evenrank_identity(hex, {5, 7, 11}, 2);
    CHECK(rep.ok());
    CHECK(rep.checked == 9);
    EvenLattice n4d9(fjd_test::six_matrices()[3]);
    CHECK(verify_evenrank_identity(n4d9, {5, 7}, 1).ok());
    CHECK_THROWS_AS(verify_evenrank_identity(EvenLattice(IntMat{{2, 0}, {0, 2}}), {5}, 1),
                    UnsupportedFamily);
    CHECK_THROWS_AS(verify_evenrank_identity(hex, {3}, 1), std::invalid_argument);  // 3 | det
}

TEST_CASE("assemble_main_theorem basics") {
    EvenLattice s2(fjd_test::rank1_gram(1));
    std::set<long> bad{2};
    auto ones = constant_opaque_factors(30, bad);
    // A(xi) = 0 gives the zero series
    FormalDirichletSeries z = assemble_main_theorem(s2, ones, Rat(0), 10, 30, bad);
    for (long n = 1; n <= 30; ++n) CHECK(z.at(n) == 0);
    // bad-prime coefficients vanish
    FormalDirichletSeries a = assemble_main_theorem(s2, ones, Rat(1), 10, 30, bad);
    CHECK(a.at(1) == 1);
    CHECK(a.at(2) == 0);
    CHECK(a.at(4) == 0);

    CHECK_THROWS_AS(assemble_main_theorem(s2, {}, Rat(1), 10, 30, bad), MissingPrime);
    // rank 3 is neither 1 nor even
    EvenLattice r3(IntMat{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
    CHECK_THROWS_AS(assemble_main_theorem(r3, ones, Rat(1), 10, 10, {2}), OddEvenMismatch);
    // a genuinely half-shifted opaque factor in odd rank is refused
    std::map<long, LocalFactor> odd_lf = ones;
    odd_lf[3] = lf_geometric(3, Rat(1));
    CHECK_THROWS_AS(assemble_main_theorem(s2, odd_lf, Rat(1), 10, 30, bad), HalfShiftUnpaired);
    // ... but an even-support opaque factor passes through the half shift
    odd_lf[3] = lf_poly(3, {Rat(1), Rat(0), Rat(1)});
    CHECK_NOTHROW(assemble_main_theorem(s2, odd_lf, Rat(1), 10, 30, bad));
}

TEST_CASE("even-rank assembly inverts to the delta series") {
    // With opaque L = 1 the even-rank assembly is A times a product of inverse
    // zeta factors; multiplying back the three zeta truncations must collapse
    // to the series with a_1 = A and nothing else.
    const long k = 9, n_max = 50;
    EvenLattice hex(fjd_test::hex_gram());
    const int n = hex.rank();
    std::set<long> bad{2, 3};
    const Rat a_xi(5, 3);
    FormalDirichletSeries assembled =
        assemble_main_theorem(hex, constant_opaque_factors(n_max, bad), a_xi, k, n_max, bad);

    // zeta(2s - 2k + n + 2): supported on squares m^2 with coefficient m^{2k-n-2}
    FormalDirichletSeries zeta_sq = zero_series(n_max, bad);
    for (long m = 1; m * m <= n_max; ++m)
        if (zeta_sq.is_good(m)) zeta_sq.coeff[static_cast<size_t>(m * m)] = rat_pow(Int(m), 2 * k - n - 2);
    // zeta(s - k + (n+4)/2, chi_S): the Kronecker symbol is multiplicative in
    // the bottom argument, so evaluating at composite j is fine.
    FormalDirichletSeries zeta_chi = character_zeta_truncation(
        [&](long j) { return kronecker_symbol(Int(-hex.det()), Int(j)); }, k - (n + 4) / 2, n_max, bad);
    FormalDirichletSeries product = dirichlet_mul(dirichlet_mul(assembled, zeta_sq), zeta_chi);
    for (int i = 1; i <= n - 1; ++i) {
        FormalDirichletSeries zi =
            character_zeta_truncation([](long) { return 1; }, k - (n + 2) + i, n_max, bad);
        product = dirichlet_mul(product, zi);
    }
    CHECK(product.at(1) == a_xi);
    for (long j = 2; j <= n_max; ++j) CHECK(product.at(j) == 0);
}

TEST_CASE("assemble matches the identity pipeline for rank 1, opaque = 1") {
    // With L = 1 the assembled series times zeta(s-k+2, psi) zeta(s-k+2)
    // equals zeta_xi(s-k+n+1) = zeta_xi(s-k+2) as truncations.
    const long k = 10, n_max = 40;
    std::set<long> bad{2};
    EvenLattice s2(fjd_test::rank1_gram(1));
    FormalDirichletSeries assembled =
        assemble_main_theorem(s2, constant_opaque_factors(n_max, bad), Rat(1), k, n_max, bad);
    FormalDirichletSeries zeta_psi = character_zeta_truncation(
        [](long n) { return kronecker_symbol(Int(-1), Int(n)); }, k - 2, n_max, bad);
    FormalDirichletSeries zeta_plain =
        character_zeta_truncation([](long) { return 1; }, k - 2, n_max, bad);
    FormalDirichletSeries lhs = dirichlet_mul(dirichlet_mul(assembled, zeta_psi), zeta_plain);

    FormalDirichletSeries zeta_xi_sh = zero_series(n_max, bad);
    for (long d = 1; d <= n_max; ++d) {
        if (!zeta_xi_sh.is_good(d)) continue;
        zeta_xi_sh.coeff[static_cast<size_t>(d)] =
            rat_pow(Int(d), k - 2) * Rat(count_congruence(s2, Int(-4), Int(d)).count);
    }
    CHECK(compare_series(lhs, zeta_xi_sh).empty());
}
