#include "fjd/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "fjd/errors.hpp"

namespace fjd {

namespace {

void poly_trim(Poly& a) {
    while (a.size() > 1 && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& b) {
    poly_trim(a);
    while (a.size() >= b.size() && !poly_is_zero(a)) {
        Rat f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        poly_trim(a);
        if (a.size() == 1 && a[0] == 0) break;
    }
    return a;
}

Poly poly_divexact(const Poly& a, const Poly& b) {
    Poly rem = a;
    poly_trim(rem);
    if (poly_is_zero(rem)) return Poly{Rat(0)};
    Poly q(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 1, Rat(0));
    while (rem.size() >= b.size() && !poly_is_zero(rem)) {
        Rat f = rem.back() / b.back();
        size_t off = rem.size() - b.size();
        q[off] = f;
        for (size_t i = 0; i < b.size(); ++i) rem[off + i] -= f * b[i];
        poly_trim(rem);
        if (rem.size() == 1 && rem[0] == 0) break;
    }
    if (!poly_is_zero(rem)) throw std::logic_error("poly_divexact: remainder nonzero");
    return q;
}

std::string where_n(long n) {
    std::ostringstream os;
    os << "n=" << n;
    return os.str();
}

std::string where_pk(long p, int k) {
    std::ostringstream os;
    os << "p=" << p << ",k=" << k;
    return os.str();
}

} // namespace

bool poly_is_zero(const Poly& a) {
    for (const Rat& c : a)
        if (c != 0) return false;
    return true;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    poly_trim(r);
    return r;
}

Poly poly_gcd(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!poly_is_zero(b)) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (poly_is_zero(a)) return Poly{Rat(1)};
    Rat lead = a.back();
    for (Rat& c : a) c /= lead;
    return a;
}

LocalFactor make_local_factor(long p, Poly num, Poly den) {
    poly_trim(num);
    poly_trim(den);
    if (poly_is_zero(den)) throw DenominatorVanishesAtZero("make_local_factor: zero denominator");
    if (den[0] == 0) throw DenominatorVanishesAtZero("make_local_factor: den(0) = 0");
    Poly g = poly_gcd(num, den);
    if (g.size() > 1) {
        num = poly_divexact(num, g);
        den = poly_divexact(den, g);
    }
    Rat d0 = den[0];
    for (Rat& c : num) c /= d0;
    for (Rat& c : den) c /= d0;
    LocalFactor f;
    f.p = p;
    f.num = std::move(num);
    f.den = std::move(den);
    return f;
}

LocalFactor lf_one(long p) { return make_local_factor(p, Poly{Rat(1)}, Poly{Rat(1)}); }

LocalFactor lf_geometric(long p, const Rat& c) {
    return make_local_factor(p, Poly{Rat(1)}, Poly{Rat(1), -c});
}

LocalFactor lf_poly(long p, Poly num) { return make_local_factor(p, std::move(num), Poly{Rat(1)}); }

LocalFactor lf_mul(const LocalFactor& a, const LocalFactor& b) {
    if (a.p != b.p) throw std::invalid_argument("lf_mul: factors at different primes");
    return make_local_factor(a.p, poly_mul(a.num, b.num), poly_mul(a.den, b.den));
}

std::vector<Rat> expand_local(const LocalFactor& f, int k_max) {
    if (f.den.empty() || f.den[0] == 0)
        throw DenominatorVanishesAtZero("expand_local: den(0) = 0");
    std::vector<Rat> c(static_cast<size_t>(k_max) + 1, Rat(0));
    for (int i = 0; i <= k_max; ++i) {
        Rat acc = (static_cast<size_t>(i) < f.num.size()) ? f.num[static_cast<size_t>(i)] : Rat(0);
        for (int j = 1; j <= i && static_cast<size_t>(j) < f.den.size(); ++j)
            acc -= f.den[static_cast<size_t>(j)] * c[static_cast<size_t>(i - j)];
        c[static_cast<size_t>(i)] = acc / f.den[0];
    }
    return c;
}

LocalFactor shift_local(const LocalFactor& f, const Rat& a) {
    Int u = a.get_num(), v = a.get_den();
    auto shift_poly = [&](const Poly& poly) {
        Poly out = poly;
        for (size_t j = 0; j < out.size(); ++j) {
            if (out[j] == 0) continue;
            Int e = u * static_cast<long>(j);
            if (!divides(v, e)) {
                std::ostringstream os;
                os << "shift_local: exponent " << a << " * " << j << " not integral at p = " << f.p;
                throw HalfShiftUnpaired(os.str());
            }
            Int ei;
            mpz_divexact(ei.get_mpz_t(), e.get_mpz_t(), v.get_mpz_t());
            if (!fits_ll(ei)) throw std::overflow_error("shift_local: exponent too large");
            out[j] *= rat_pow(Int(f.p), to_ll(ei));
        }
        return out;
    };
    return make_local_factor(f.p, shift_poly(f.num), shift_poly(f.den));
}

const Rat& FormalDirichletSeries::at(long n) const {
    if (n < 1 || n > n_max) throw std::out_of_range("FormalDirichletSeries::at");
    return coeff[static_cast<size_t>(n)];
}

bool FormalDirichletSeries::is_good(long n) const {
    for (long p : bad_primes)
        if (n % p == 0) return false;
    return true;
}

FormalDirichletSeries zero_series(long n_max, std::set<long> bad) {
    FormalDirichletSeries s;
    s.n_max = n_max;
    s.coeff.assign(static_cast<size_t>(n_max) + 1, Rat(0));
    s.bad_primes = std::move(bad);
    return s;
}

FormalDirichletSeries euler_to_series(const std::map<long, LocalFactor>& factors,
                                      long n_max, std::set<long> bad) {
    FormalDirichletSeries s = zero_series(n_max, std::move(bad));
    // Per-prime expansions to the needed degree.
    std::map<long, std::vector<Rat>> expansions;
    for (long p : primes_up_to(n_max)) {
        if (s.bad_primes.count(p)) continue;
        auto it = factors.find(p);
        if (it == factors.end()) {
            std::ostringstream os;
            os << "euler_to_series: no local factor at good prime " << p;
            throw MissingPrime(os.str());
        }
        int k_max = 0;
        long pk = p;
        while (pk <= n_max) { ++k_max; pk *= p; }
        expansions[p] = expand_local(it->second, k_max);
    }
    for (long n = 1; n <= n_max; ++n) {
        if (!s.is_good(n)) continue;
        Rat a(1);
        for (auto [p, e] : factorize_ll(n)) a *= expansions[p][static_cast<size_t>(e)];
        s.coeff[static_cast<size_t>(n)] = a;
    }
    return s;
}

FormalDirichletSeries dirichlet_mul(const FormalDirichletSeries& f, const FormalDirichletSeries& g) {
    std::set<long> bad = f.bad_primes;
    bad.insert(g.bad_primes.begin(), g.bad_primes.end());
    FormalDirichletSeries s = zero_series(std::min(f.n_max, g.n_max), std::move(bad));
    for (long n = 1; n <= s.n_max; ++n) {
        if (!s.is_good(n)) continue;
        Rat acc(0);
        for (long d = 1; d * d <= n; ++d) {
            if (n % d != 0) continue;
            acc += f.at(d) * g.at(n / d);
            if (d != n / d) acc += f.at(n / d) * g.at(d);
        }
        s.coeff[static_cast<size_t>(n)] = acc;
    }
    return s;
}

FormalDirichletSeries series_scale(const FormalDirichletSeries& f, const Rat& c) {
    FormalDirichletSeries s = f;
    for (Rat& a : s.coeff) a *= c;
    return s;
}

FormalDirichletSeries character_zeta_truncation(const std::function<int(long)>& chi,
                                                long shift, long n_max,
                                                std::set<long> bad) {
    FormalDirichletSeries s = zero_series(n_max, std::move(bad));
    for (long n = 1; n <= n_max; ++n) {
        if (!s.is_good(n)) continue;
        int c = chi(n);
        if (c == 0) continue;
        s.coeff[static_cast<size_t>(n)] = Rat(c) * rat_pow(Int(n), shift);
    }
    return s;
}

FormalDirichletSeries zeta_xi_series(const EvenLattice& lat, const Int& d_val, long n_max,
                                     std::set<long> bad, CountMethod method) {
    FormalDirichletSeries s = zero_series(n_max, std::move(bad));
    for (long n = 1; n <= n_max; ++n) {
        if (!s.is_good(n)) continue;
        s.coeff[static_cast<size_t>(n)] = Rat(count_congruence(lat, d_val, Int(n), method).count);
    }
    return s;
}

std::vector<Mismatch> compare_series(const FormalDirichletSeries& lhs, const FormalDirichletSeries& rhs) {
    std::vector<Mismatch> out;
    long n_max = std::min(lhs.n_max, rhs.n_max);
    for (long n = 1; n <= n_max; ++n)
        if (lhs.at(n) != rhs.at(n))
            out.push_back({where_n(n), rat_to_string(lhs.at(n)), rat_to_string(rhs.at(n))});
    return out;
}

IdentityReport verify_rank1_identity(long t, long n_max, std::set<long> bad,
                                     CountMethod method) {
    if (!is_squarefree_ll(t)) throw NotSquarefree("verify_rank1_identity: t must be squarefree");
    if (!bad.count(2)) throw std::invalid_argument("verify_rank1_identity: bad primes must contain 2");
    for (auto [p, e] : factorize_ll(t))
        if (!bad.count(p)) throw std::invalid_argument("verify_rank1_identity: bad primes must contain the primes of t");

    IdentityReport rep;
    rep.identity = "rank1";
    EvenLattice lat(IntMat{{2 * t}});
    const Int d_val = -lat.level();  // D = -q = -4t

    FormalDirichletSeries lhs = zeta_xi_series(lat, d_val, n_max, bad, method);
    std::map<long, LocalFactor> factors;
    for (long p : primes_up_to(n_max)) {
        if (bad.count(p)) continue;
        // (1 + X) / (1 - chi_t(p) X)
        factors[p] = make_local_factor(p, Poly{Rat(1), Rat(1)}, Poly{Rat(1), Rat(-chi_t(t, p))});
    }
    FormalDirichletSeries rhs = euler_to_series(factors, n_max, bad);
    for (Mismatch& m : compare_series(lhs, rhs)) rep.mismatches.push_back(std::move(m));
    rep.checked = n_max;

    // Local form: (1 - chi X) * sum_k n(xi; p^k) X^k = 1 + X up to degree 3.
    const int k_hi = 3;
    for (long p : primes_up_to(n_max)) {
        if (bad.count(p)) continue;
        int chi = chi_t(t, p);
        std::vector<Rat> counts(static_cast<size_t>(k_hi) + 1, Rat(1));  // k = 0 term is 1
        Int pk(1);
        for (int k = 1; k <= k_hi; ++k) {
            pk *= p;
            counts[static_cast<size_t>(k)] = Rat(count_congruence(lat, d_val, pk, method).count);
        }
        for (int k = 0; k <= k_hi; ++k) {
            Rat lhs_c = counts[static_cast<size_t>(k)] -
                        (k > 0 ? Rat(chi) * counts[static_cast<size_t>(k) - 1] : Rat(0));
            Rat rhs_c = (k == 0 || k == 1) ? Rat(1) : Rat(0);
            ++rep.checked;
            if (lhs_c != rhs_c)
                rep.mismatches.push_back({where_pk(p, k), rat_to_string(lhs_c), rat_to_string(rhs_c)});
        }
    }
    return rep;
}

IdentityReport verify_evenrank_identity(const EvenLattice& lat, const std::vector<long>& primes,
                                        int k_max, CountMethod method) {
    if (!is_evenrank_reference(lat))
        throw UnsupportedFamily("verify_evenrank_identity: lattice is not one of the reference matrices");
    const int n = lat.rank();
    IdentityReport rep;
    rep.identity = "evenrank";
    const Int d_val = -lat.level();

    for (long p : primes) {
        if (!is_prime_ll(p) || divides(Int(p), 2 * lat.det()))
            throw std::invalid_argument("verify_evenrank_identity: p must be prime, coprime to 2 det");
        LocalFactor f = make_local_factor(
            p, Poly{Rat(1), -Rat(chi_S(lat, p)) * rat_pow(Int(p), n / 2 - 1)},
            Poly{Rat(1), -rat_pow(Int(p), n - 1)});
        std::vector<Rat> expect = expand_local(f, k_max);
        Int pk(1);
        for (int k = 0; k <= k_max; ++k) {
            Rat got = (k == 0) ? Rat(1) : Rat(count_congruence(lat, d_val, pk, method).count);
            ++rep.checked;
            if (got != expect[static_cast<size_t>(k)])
                rep.mismatches.push_back({where_pk(p, k), rat_to_string(got),
                                          rat_to_string(expect[static_cast<size_t>(k)])});
            pk *= p;
        }
    }
    return rep;
}

std::map<long, LocalFactor> constant_opaque_factors(long n_max, const std::set<long>& bad) {
    std::map<long, LocalFactor> out;
    for (long p : primes_up_to(n_max)) {
        if (bad.count(p)) continue;
        out[p] = lf_one(p);
    }
    return out;
}

FormalDirichletSeries assemble_main_theorem(const EvenLattice& lat,
                                            const std::map<long, LocalFactor>& opaque_lf,
                                            const Rat& a_xi, long weight_k, long n_max,
                                            std::set<long> bad) {
    const int n = lat.rank();
    if (n != 1 && n % 2 != 0)
        throw OddEvenMismatch("assemble_main_theorem: rank must be 1 or even");

    std::map<long, LocalFactor> factors;
    for (long p : primes_up_to(n_max)) {
        if (bad.count(p)) continue;
        auto it = opaque_lf.find(p);
        if (it == opaque_lf.end()) {
            std::ostringstream os;
            os << "assemble_main_theorem: no opaque factor at good prime " << p;
            throw MissingPrime(os.str());
        }
        LocalFactor f;
        if (n == 1) {
            long t = to_ll(lat.gram()(0, 0)) / 2;
            // L(F; s-k+3/2)
            f = shift_local(it->second, Rat(2 * weight_k - 3, 2));
            // zeta(2s-2k+4)^{-1}
            f = lf_mul(f, lf_poly(p, Poly{Rat(1), Rat(0), -rat_pow(Int(p), 2 * weight_k - 4)}));
            // zeta(s-k+2, chi_t)
            f = lf_mul(f, lf_geometric(p, Rat(chi_t(t, p)) * rat_pow(Int(p), weight_k - 2)));
            // zeta(s-k+2, psi)^{-1}, psi(p) = (-1 | p)
            int psi = kronecker_symbol(Int(-1), Int(p));
            f = lf_mul(f, lf_poly(p, Poly{Rat(1), -Rat(psi) * rat_pow(Int(p), weight_k - 2)}));
        } else {
            // L(F; s-k+(n+2)/2)
            f = shift_local(it->second, Rat(weight_k - (n + 2) / 2));
            // zeta(2s-2k+n+2)^{-1}
            f = lf_mul(f, lf_poly(p, Poly{Rat(1), Rat(0), -rat_pow(Int(p), 2 * weight_k - n - 2)}));
            // zeta(s-k+(n+4)/2, chi_S)^{-1}
            f = lf_mul(f, lf_poly(p, Poly{Rat(1), -Rat(chi_S(lat, p)) * rat_pow(Int(p), weight_k - (n + 4) / 2)}));
            // prod_{i=1}^{n-1} zeta(s-k+(n+2)-i)^{-1}
            for (int i = 1; i <= n - 1; ++i)
                f = lf_mul(f, lf_poly(p, Poly{Rat(1), -rat_pow(Int(p), weight_k - (n + 2) + i)}));
        }
        factors[p] = std::move(f);
    }
    return series_scale(euler_to_series(factors, n_max, std::move(bad)), a_xi);
}

} // namespace fjd
