#ifndef FJD_SERIES_HPP
#define FJD_SERIES_HPP

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fjd/congruence.hpp"
#include "fjd/lattice.hpp"

namespace fjd {

// Polynomial in X with exact rational coefficients; coeff[i] multiplies X^i.
using Poly = std::vector<Rat>;

Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b);  // monic gcd over Q
bool poly_is_zero(const Poly& a);

// Rational function num/den in X = p^{-s}, normalized so den(0) = 1 and
// gcd(num, den) = 1.
struct LocalFactor {
    long p = 0;
    Poly num{Rat(1)};
    Poly den{Rat(1)};
};

LocalFactor make_local_factor(long p, Poly num, Poly den);
LocalFactor lf_one(long p);
// 1 / (1 - c X)
LocalFactor lf_geometric(long p, const Rat& c);
// plain polynomial factor
LocalFactor lf_poly(long p, Poly num);
LocalFactor lf_mul(const LocalFactor& a, const LocalFactor& b);

// Taylor coefficients c_0..c_k_max of num/den.
std::vector<Rat> expand_local(const LocalFactor& f, int k_max);

// Substitution X -> p^a X for exact rational a. Throws HalfShiftUnpaired when
// a fractional shift meets a nonzero coefficient of incompatible degree.
LocalFactor shift_local(const LocalFactor& f, const Rat& a);

// Truncated Dirichlet series with exact rational coefficients a_1..a_n_max,
// deprived at the bad primes (a_n = 0 whenever n meets one).
struct FormalDirichletSeries {
    long n_max = 0;
    std::vector<Rat> coeff;  // index 0 unused
    std::set<long> bad_primes;

    const Rat& at(long n) const;
    bool is_good(long n) const;
};

FormalDirichletSeries zero_series(long n_max, std::set<long> bad);

// a_n = prod over p^k || n of the k-th coefficient of the factor at p.
// Requires a factor for every good prime <= n_max.
FormalDirichletSeries euler_to_series(const std::map<long, LocalFactor>& factors,
                                      long n_max, std::set<long> bad);

// Truncated Dirichlet product; n_max = min of the two, bad = union (both
// operands implicitly deprived to the union first).
FormalDirichletSeries dirichlet_mul(const FormalDirichletSeries& f, const FormalDirichletSeries& g);

FormalDirichletSeries series_scale(const FormalDirichletSeries& f, const Rat& c);

// a_n = chi(n) * n^shift for good n (chi completely multiplicative).
FormalDirichletSeries character_zeta_truncation(const std::function<int(long)>& chi,
                                                long shift, long n_max,
                                                std::set<long> bad);

// a_n = n(xi; n) for good n.
FormalDirichletSeries zeta_xi_series(const EvenLattice& lat, const Int& d_val, long n_max,
                                     std::set<long> bad,
                                     CountMethod method = CountMethod::Auto);

struct Mismatch {
    std::string where;
    std::string lhs;
    std::string rhs;
};

struct IdentityReport {
    std::string identity;
    long checked = 0;
    std::vector<Mismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

std::vector<Mismatch> compare_series(const FormalDirichletSeries& lhs, const FormalDirichletSeries& rhs);

// zeta_xi = zeta * zeta(2s)^{-1} * L(chi_t) for S = (2t), coefficientwise to
// n_max, plus the per-prime rational-function form
// sum_k n(xi; p^k) X^k = (1 + X) / (1 - chi_t(p) X).
IdentityReport verify_rank1_identity(long t, long n_max, std::set<long> bad,
                                     CountMethod method = CountMethod::Auto);

// Per prime p: sum_k n(xi; p^k) X^k = (1 - chi_S(p) p^{n/2-1} X) / (1 - p^{n-1} X)
// up to degree k_max, for the even-rank reference matrices.
IdentityReport verify_evenrank_identity(const EvenLattice& lat, const std::vector<long>& primes,
                                        int k_max, CountMethod method = CountMethod::Auto);

// The h = 1 right-hand side with caller-supplied standard-L factors:
//  rank 1:   A * L(F; s-k+3/2) * zeta(2s-2k+4)^{-1} * zeta(s-k+2, chi_t) / zeta(s-k+2, psi)
//  rank even: A * L(F; s-k+(n+2)/2) * zeta(2s-2k+n+2)^{-1} * zeta(s-k+(n+4)/2, chi_S)^{-1}
//             * prod_{i=1}^{n-1} zeta(s-k+(n+2)-i)^{-1}
// Shifts s -> s-a act on local factors as X -> p^a X.
FormalDirichletSeries assemble_main_theorem(const EvenLattice& lat,
                                            const std::map<long, LocalFactor>& opaque_lf,
                                            const Rat& a_xi, long weight_k, long n_max,
                                            std::set<long> bad);

// Constant-1 opaque factors for every good prime <= n_max.
std::map<long, LocalFactor> constant_opaque_factors(long n_max, const std::set<long>& bad);

} // namespace fjd

#endif
