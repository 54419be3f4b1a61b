#include "fjd/congruence.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "fjd/errors.hpp"

namespace fjd {

namespace {

// ----- Enumerate route ------------------------------------------------------
//
// Coordinates: with P S Q = diag(a), s runs over Z^n / d S Z^n iff t = P s runs
// over prod_i Z / (d a_i); so sweep t_i in [0, d a_i) and set s = P^{-1} t.
// The congruence is evaluated through B = q adj(S):
//   (1/2) q S^{-1}[s] = D (mod q d)  <=>  s^t B s = 2 det D (mod 2 det q d).
// The innermost axis is updated incrementally: moving s -> s + c changes
// v = s^t B s by 2 c^t B s + c^t B c, and c^t B s itself changes by the
// constant c^t B c per step, so the hot loop is additions mod M only.

struct EnumeratePlan {
    int n;
    Int modulus;            // M = 2 det q d
    Int target;             // 2 det D mod M
    std::vector<Int> ranges;  // d * a_i
    IntMat b;               // q * adj(S)
    IntMat p_inv;
    int inner_axis;
    Int outer_total;        // product of ranges over non-inner axes
};

EnumeratePlan make_plan(const EvenLattice& lat, const Int& d_val, const Int& d) {
    EnumeratePlan pl;
    pl.n = lat.rank();
    pl.modulus = 2 * lat.det() * lat.level() * d;
    pl.target = mod_floor(2 * lat.det() * d_val, pl.modulus);
    pl.b = lat.adjugate();
    for (int i = 0; i < pl.n; ++i)
        for (int j = 0; j < pl.n; ++j) pl.b(i, j) *= lat.level();
    pl.p_inv = lat.p_inverse();
    pl.ranges.reserve(static_cast<size_t>(pl.n));
    for (const Int& a : lat.snf().diag) pl.ranges.push_back(d * a);
    // Largest range innermost (the last invariant factor).
    pl.inner_axis = pl.n - 1;
    pl.outer_total = 1;
    for (int i = 0; i < pl.n; ++i)
        if (i != pl.inner_axis) pl.outer_total *= pl.ranges[static_cast<size_t>(i)];
    return pl;
}

// Exact count over outer odometer indices [lo, hi), any integer size.
Int enumerate_block_mpz(const EnumeratePlan& pl, const Int& lo, const Int& hi) {
    const int n = pl.n;
    const int in = pl.inner_axis;
    std::vector<Int> c(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)] = pl.p_inv(i, in);
    std::vector<Int> bc = pl.b * c;
    Int cc(0);
    for (int i = 0; i < n; ++i) cc += c[static_cast<size_t>(i)] * bc[static_cast<size_t>(i)];
    cc = mod_floor(cc, pl.modulus);

    Int count(0);
    std::vector<Int> t(static_cast<size_t>(n), Int(0));
    for (Int outer = lo; outer < hi; ++outer) {
        // Decode the outer odometer (inner axis digit stays 0).
        Int rem = outer;
        for (int i = 0; i < n; ++i) {
            if (i == in) continue;
            Int digit = mod_floor(rem, pl.ranges[static_cast<size_t>(i)]);
            t[static_cast<size_t>(i)] = digit;
            rem = (rem - digit) / pl.ranges[static_cast<size_t>(i)];
        }
        t[static_cast<size_t>(in)] = 0;

        std::vector<Int> s = pl.p_inv * t;
        std::vector<Int> bs = pl.b * s;
        Int v(0), u(0);
        for (int i = 0; i < n; ++i) {
            v += s[static_cast<size_t>(i)] * bs[static_cast<size_t>(i)];
            u += c[static_cast<size_t>(i)] * bs[static_cast<size_t>(i)];
        }
        v = mod_floor(v, pl.modulus);
        u = mod_floor(u, pl.modulus);

        for (Int r(0); r < pl.ranges[static_cast<size_t>(in)]; ++r) {
            if (v == pl.target) ++count;
            v = mod_floor(v + 2 * u + cc, pl.modulus);
            u = mod_floor(u + cc, pl.modulus);
        }
    }
    return count;
}

// Worst-case |s^t B s| over the sweep, for the int64 overflow gate.
Int plan_value_bound(const EnumeratePlan& pl) {
    const int n = pl.n;
    std::vector<Int> smax(static_cast<size_t>(n), Int(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            smax[static_cast<size_t>(i)] += abs(pl.p_inv(i, j)) * (pl.ranges[static_cast<size_t>(j)] - 1);
    Int bound(0);
    for (int i = 0; i < n; ++i) {
        Int row(0);
        for (int j = 0; j < n; ++j) row += abs(pl.b(i, j)) * smax[static_cast<size_t>(j)];
        bound += smax[static_cast<size_t>(i)] * row;
    }
    return bound;
}

// int64 fast path; the caller guarantees |s^t B s| and the modulus fit.
Int enumerate_block_ll(const EnumeratePlan& pl, long lo, long hi) {
    const int n = pl.n;
    const int in = pl.inner_axis;
    const long m = to_ll(pl.modulus);
    const long target = to_ll(pl.target);
    const long inner_range = to_ll(pl.ranges[static_cast<size_t>(in)]);

    std::vector<long> c(static_cast<size_t>(n)), ranges(static_cast<size_t>(n));
    std::vector<long> b(static_cast<size_t>(n) * n), p_inv(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        c[static_cast<size_t>(i)] = to_ll(pl.p_inv(i, in));
        ranges[static_cast<size_t>(i)] = to_ll(pl.ranges[static_cast<size_t>(i)]);
        for (int j = 0; j < n; ++j) {
            b[static_cast<size_t>(i) * n + j] = to_ll(pl.b(i, j));
            p_inv[static_cast<size_t>(i) * n + j] = to_ll(pl.p_inv(i, j));
        }
    }
    long cc = 0;
    {
        long acc = 0;
        for (int i = 0; i < n; ++i) {
            long bc = 0;
            for (int j = 0; j < n; ++j) bc += b[static_cast<size_t>(i) * n + j] * c[static_cast<size_t>(j)];
            acc += c[static_cast<size_t>(i)] * bc;
        }
        cc = ((acc % m) + m) % m;
    }

    long count = 0;
    std::vector<long> t(static_cast<size_t>(n), 0), s(static_cast<size_t>(n), 0),
        bs(static_cast<size_t>(n), 0);
    for (long outer = lo; outer < hi; ++outer) {
        long rem = outer;
        for (int i = 0; i < n; ++i) {
            if (i == in) continue;
            t[static_cast<size_t>(i)] = rem % ranges[static_cast<size_t>(i)];
            rem /= ranges[static_cast<size_t>(i)];
        }
        t[static_cast<size_t>(in)] = 0;

        long v0 = 0, u0 = 0;
        for (int i = 0; i < n; ++i) {
            long si = 0;
            for (int j = 0; j < n; ++j) si += p_inv[static_cast<size_t>(i) * n + j] * t[static_cast<size_t>(j)];
            s[static_cast<size_t>(i)] = si;
        }
        for (int i = 0; i < n; ++i) {
            long bi = 0;
            for (int j = 0; j < n; ++j) bi += b[static_cast<size_t>(i) * n + j] * s[static_cast<size_t>(j)];
            bs[static_cast<size_t>(i)] = bi;
            v0 += s[static_cast<size_t>(i)] * bi;
            u0 += c[static_cast<size_t>(i)] * bi;
        }
        long v = ((v0 % m) + m) % m;
        long u = ((u0 % m) + m) % m;

        for (long r = 0; r < inner_range; ++r) {
            count += (v == target);
            v += 2 * u + cc;          // < 4M < 2^63
            v -= (v >= m) ? m : 0;
            v -= (v >= m) ? m : 0;
            v -= (v >= m) ? m : 0;
            u += cc;
            u -= (u >= m) ? m : 0;
        }
    }
    return Int(count);
}

Int run_enumerate(const EvenLattice& lat, const Int& d_val, const Int& d, unsigned threads) {
    EnumeratePlan pl = make_plan(lat, d_val, d);
    const bool small = pl.modulus < (Int(1) << 61) && fits_ll(pl.outer_total) &&
                       fits_ll(pl.ranges[static_cast<size_t>(pl.inner_axis)]) &&
                       plan_value_bound(pl) < (Int(1) << 62);

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    Int total(0);
    if (!small) {
        total = enumerate_block_mpz(pl, Int(0), pl.outer_total);
        return total;
    }
    const long outer_total = to_ll(pl.outer_total);
    long nblocks = std::min<long>(outer_total, static_cast<long>(threads) * 4);
    if (nblocks <= 1 || threads == 1) return enumerate_block_ll(pl, 0, outer_total);

    // Fixed block boundaries; summation in block order keeps the result
    // independent of scheduling.
    std::vector<std::future<Int>> futs;
    futs.reserve(static_cast<size_t>(nblocks));
    for (long b = 0; b < nblocks; ++b) {
        long lo = outer_total * b / nblocks;
        long hi = outer_total * (b + 1) / nblocks;
        futs.push_back(std::async(std::launch::async,
                                  [&pl, lo, hi] { return enumerate_block_ll(pl, lo, hi); }));
    }
    for (auto& f : futs) total += f.get();
    return total;
}

// ----- Factorized route -----------------------------------------------------

// #{classes s0 of Z^n/SZ^n : (1/2) q S^{-1}[s0] = D (mod q)}.
Int discriminant_fiber_count(const EvenLattice& lat, const Int& d_val) {
    const int n = lat.rank();
    const Int q = lat.level();
    Int m(0);
    std::vector<Int> t(static_cast<size_t>(n), Int(0));
    const std::vector<Int>& a = lat.snf().diag;
    while (true) {
        std::vector<Int> s0 = lat.p_inverse() * t;
        if (divides(q, lat.half_q_dual_norm(s0) - d_val)) ++m;
        int i = 0;
        while (i < n) {
            t[static_cast<size_t>(i)] += 1;
            if (t[static_cast<size_t>(i)] < a[static_cast<size_t>(i)]) break;
            t[static_cast<size_t>(i)] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return m;
}

// Symmetric congruence diagonalization of S mod p^k (p odd, p coprime to det):
// returns diagonal entries r with U^t S U = diag(r) (mod p^k), U invertible.
std::vector<long> diagonalize_mod(const EvenLattice& lat, long pk, long p) {
    const int n = lat.rank();
    std::vector<std::vector<long>> m(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = to_ll(mod_floor(lat.gram()(i, j), Int(pk)));

    IntMat u = IntMat::identity(n);
    auto addmul = [pk](long x, long y, long z) {  // x + y*z mod pk
        return static_cast<long>((static_cast<__int128>(y) * z + x) % pk);
    };

    for (int step = 0; step < n; ++step) {
        // Pivot with unit diagonal entry; if none, fold a unit off-diagonal in.
        int piv = -1;
        for (int i = step; i < n; ++i)
            if (m[static_cast<size_t>(i)][static_cast<size_t>(i)] % p != 0) { piv = i; break; }
        if (piv < 0) {
            bool fixed = false;
            for (int i = step; i < n && !fixed; ++i)
                for (int j = i + 1; j < n && !fixed; ++j)
                    if (m[static_cast<size_t>(i)][static_cast<size_t>(j)] % p != 0) {
                        // basis change e_i -> e_i + e_j makes the (i,i) entry a unit (p odd)
                        for (int r = 0; r < n; ++r)
                            m[static_cast<size_t>(r)][static_cast<size_t>(i)] =
                                addmul(m[static_cast<size_t>(r)][static_cast<size_t>(i)], 1,
                                       m[static_cast<size_t>(r)][static_cast<size_t>(j)]);
                        for (int cidx = 0; cidx < n; ++cidx)
                            m[static_cast<size_t>(i)][static_cast<size_t>(cidx)] =
                                addmul(m[static_cast<size_t>(i)][static_cast<size_t>(cidx)], 1,
                                       m[static_cast<size_t>(j)][static_cast<size_t>(cidx)]);
                        u.add_col(i, j, Int(1));
                        piv = i;
                        fixed = true;
                    }
            if (!fixed) throw std::logic_error("diagonalize_mod: no unit pivot (det not coprime to p?)");
        }
        if (piv != step) {
            for (int r = 0; r < n; ++r)
                std::swap(m[static_cast<size_t>(r)][static_cast<size_t>(piv)], m[static_cast<size_t>(r)][static_cast<size_t>(step)]);
            for (int cidx = 0; cidx < n; ++cidx)
                std::swap(m[static_cast<size_t>(piv)][static_cast<size_t>(cidx)], m[static_cast<size_t>(step)][static_cast<size_t>(cidx)]);
            u.swap_cols(step, piv);
        }
        long inv = mod_inverse_ll(m[static_cast<size_t>(step)][static_cast<size_t>(step)], pk);
        for (int j = step + 1; j < n; ++j) {
            long f = static_cast<long>((static_cast<__int128>(m[static_cast<size_t>(step)][static_cast<size_t>(j)]) * inv) % pk);
            if (f == 0) continue;
            long nf = pk - f;
            for (int r = 0; r < n; ++r)
                m[static_cast<size_t>(r)][static_cast<size_t>(j)] =
                    addmul(m[static_cast<size_t>(r)][static_cast<size_t>(j)], nf, m[static_cast<size_t>(r)][static_cast<size_t>(step)]);
            for (int cidx = 0; cidx < n; ++cidx)
                m[static_cast<size_t>(j)][static_cast<size_t>(cidx)] =
                    addmul(m[static_cast<size_t>(j)][static_cast<size_t>(cidx)], nf, m[static_cast<size_t>(step)][static_cast<size_t>(cidx)]);
            u.add_col(j, step, Int(pk - f));
        }
    }

    // Exact check of the congruence transform.
    IntMat chk = u.transpose() * lat.gram() * u;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int want = (i == j) ? Int(m[static_cast<size_t>(i)][static_cast<size_t>(i)]) : Int(0);
            if (mod_floor(chk(i, j) - want, Int(pk)) != 0)
                throw std::logic_error("diagonalize_mod: transform check failed");
        }
    if (mod_floor(u.det(), Int(p)) == 0) throw std::logic_error("diagonalize_mod: transform not invertible");

    std::vector<long> diag(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) diag[static_cast<size_t>(i)] = m[static_cast<size_t>(i)][static_cast<size_t>(i)];
    return diag;
}

// N = #{z in (Z/p^k)^n : z^t S z = c2 (mod p^k)} by convolving the value
// distributions of the diagonalized variables. Partial convolution values are
// bounded by p^{k n}; the u64 path requires that below 2^62.
template <typename Cnt>
Int count_mod_prime_power_impl(const EvenLattice& lat, long p, int k, long c2, long pk) {
    std::vector<long> diag = diagonalize_mod(lat, pk, p);
    const int n = lat.rank();

    auto square_dist = [pk](long coeff) {
        std::vector<Cnt> dist(static_cast<size_t>(pk), Cnt(0));
        for (long w = 0; w < pk; ++w) {
            long v = static_cast<long>((static_cast<__int128>(w) * w % pk) * coeff % pk);
            dist[static_cast<size_t>(v)] += 1;
        }
        return dist;
    };

    std::vector<Cnt> acc = square_dist(diag[0]);
    for (int i = 1; i + 1 < n; ++i) {
        std::vector<Cnt> di = square_dist(diag[static_cast<size_t>(i)]);
        std::vector<Cnt> next(static_cast<size_t>(pk), Cnt(0));
        for (long a = 0; a < pk; ++a) {
            if (acc[static_cast<size_t>(a)] == 0) continue;
            for (long b = 0; b < pk; ++b) {
                if (di[static_cast<size_t>(b)] == 0) continue;
                next[static_cast<size_t>((a + b) % pk)] +=
                    acc[static_cast<size_t>(a)] * di[static_cast<size_t>(b)];
            }
        }
        acc = std::move(next);
    }
    if (n == 1) return Int(acc[static_cast<size_t>(c2 % pk)]);
    std::vector<Cnt> last = square_dist(diag[static_cast<size_t>(n - 1)]);
    Cnt total(0);
    for (long a = 0; a < pk; ++a) {
        if (acc[static_cast<size_t>(a)] == 0) continue;
        long need = ((c2 - a) % pk + pk) % pk;
        total += acc[static_cast<size_t>(a)] * last[static_cast<size_t>(need)];
    }
    return Int(total);
}

Int count_mod_prime_power(const EvenLattice& lat, long p, int k, long c2) {
    long pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    double bits = static_cast<double>(k) * lat.rank() * std::log2(static_cast<double>(p));
    if (bits < 62.0) return count_mod_prime_power_impl<unsigned long>(lat, p, k, c2, pk);
    return count_mod_prime_power_impl<Int>(lat, p, k, c2, pk);
}

Int run_factorized(const EvenLattice& lat, const Int& d_val, const Int& d) {
    const Int q = lat.level();
    if (int_gcd(d, 2 * q * lat.det()) != 1)
        throw std::invalid_argument("count_congruence(Factorized): d not coprime to 2 q det");
    if (!fits_ll(d)) throw std::overflow_error("count_congruence(Factorized): d too large");

    Int m = discriminant_fiber_count(lat, d_val);
    if (m == 0) return Int(0);

    Int total = m;
    for (auto [p, e] : factorize_ll(to_ll(d))) {
        long pk = 1;
        for (int i = 0; i < e; ++i) pk *= p;
        // target c = D q^{-1} mod p^k for (1/2) S[z] = c, i.e. S[z] = 2c.
        long qinv = mod_inverse_ll(to_ll(mod_floor(q, Int(pk))), pk);
        long c = to_ll(mod_floor(d_val * qinv, Int(pk)));
        long c2 = static_cast<long>((static_cast<__int128>(c) * 2) % pk);
        total *= count_mod_prime_power(lat, p, e, c2);
    }
    return total;
}

} // namespace

CountResult count_congruence(const EvenLattice& lat, const Int& d_val, const Int& d,
                             CountMethod method, unsigned threads) {
    if (d < 1) throw std::invalid_argument("count_congruence: need d >= 1");
    if (d_val >= 0) throw std::invalid_argument("count_congruence: need D < 0");

    CountResult res;
    res.d = d;
    res.d_val = d_val;
    res.enumerated = int_pow(d, static_cast<unsigned long>(lat.rank())) * lat.det();

    const bool factorizable = fits_ll(d) && int_gcd(d, 2 * lat.level() * lat.det()) == 1;
    CountMethod chosen = method;
    if (method == CountMethod::Auto) {
        const Int small_cutoff(8000000);
        if (res.enumerated <= small_cutoff || !factorizable)
            chosen = CountMethod::Enumerate;
        else
            chosen = CountMethod::Factorized;
    }
    res.count = (chosen == CountMethod::Enumerate) ? run_enumerate(lat, d_val, d, threads)
                                                   : run_factorized(lat, d_val, d);
    return res;
}

int kronecker_symbol(const Int& a, const Int& m) {
    if (m == 0) throw ZeroModulus("kronecker_symbol: modulus is zero");
    Int aa = a, mm = m;
    int result = 1;
    if (mm < 0) {
        mm = -mm;
        if (aa < 0) result = -result;  // (a | -1)
    }
    if (mm == 1) return result;
    // factor out 2s of m
    while (mod_floor(mm, Int(2)) == 0) {
        mm /= 2;
        Int r8 = mod_floor(aa, Int(8));
        if (r8 == 0 || r8 == 2 || r8 == 4 || r8 == 6) return 0;
        if (r8 == 3 || r8 == 5) result = -result;
    }
    aa = mod_floor(aa, mm);
    // now mm odd positive; Jacobi by reciprocity
    while (aa != 0) {
        while (mod_floor(aa, Int(2)) == 0) {
            aa /= 2;
            Int r8 = mod_floor(mm, Int(8));
            if (r8 == 3 || r8 == 5) result = -result;
        }
        std::swap(aa, mm);
        if (mod_floor(aa, Int(4)) == 3 && mod_floor(mm, Int(4)) == 3) result = -result;
        aa = mod_floor(aa, mm);
    }
    return mm == 1 ? result : 0;
}

int chi_S(const EvenLattice& lat, long p) {
    if (lat.rank() % 2 != 0)
        throw OddRank("chi_S: rank must be even");
    Int sgn = (lat.rank() / 2) % 2 == 0 ? Int(1) : Int(-1);
    return kronecker_symbol(sgn * lat.det(), Int(p));
}

int chi_t(long t, long p) { return kronecker_symbol(Int(-t), Int(p)); }

const std::vector<IntMat>& evenrank_reference_matrices() {
    static const std::vector<IntMat> mats = {
        IntMat{{2, -1}, {-1, 2}},
        IntMat{{2, -1}, {-1, 8}},
        IntMat{{2, -1, -1, -1}, {-1, 2, 1, 0}, {-1, 1, 2, 0}, {-1, 0, 0, 2}},
        IntMat{{2, -1, 0, 0}, {-1, 2, 0, 0}, {0, 0, 2, -1}, {0, 0, -1, 2}},
        IntMat{{2, 1, -1, 1, -1, 1},
               {1, 2, 0, 1, -1, 1},
               {-1, 0, 2, -1, 1, 0},
               {1, 1, -1, 2, -1, 0},
               {-1, -1, 1, -1, 2, 0},
               {1, 1, 0, 0, 0, 2}},
        IntMat{{2, -1, 1, 1, -1, -1, 1, -1},
               {-1, 2, 0, -1, 1, 1, -1, 1},
               {1, 0, 2, 1, -1, 0, 0, 0},
               {1, -1, 1, 2, -1, -1, 0, -1},
               {-1, 1, -1, -1, 2, 1, -1, 1},
               {-1, 1, 0, -1, 1, 2, -1, 1},
               {1, -1, 0, 0, -1, -1, 2, -1},
               {-1, 1, 0, -1, 1, 1, -1, 2}},
    };
    return mats;
}

bool is_evenrank_reference(const EvenLattice& lat) {
    for (const IntMat& m : evenrank_reference_matrices())
        if (lat.gram() == m) return true;
    return false;
}

Int closed_form_count(const EvenLattice& lat, long p, int k) {
    if (k < 1) throw std::invalid_argument("closed_form_count: need k >= 1");
    if (p == 2 || !is_prime_ll(p) || divides(Int(p), lat.det()) || divides(Int(p), lat.level()))
        throw std::invalid_argument("closed_form_count: p must be an odd prime coprime to det and level");
    const int n = lat.rank();
    if (n == 1) {
        Int two_t = lat.gram()(0, 0);
        long t = to_ll(two_t) / 2;
        if (!is_squarefree_ll(t))
            throw UnsupportedFamily("closed_form_count: rank-1 requires S = 2t with t squarefree");
        return Int(1 + chi_t(t, p));
    }
    if (!is_evenrank_reference(lat))
        throw UnsupportedFamily("closed_form_count: lattice is not one of the even-rank reference matrices");
    long e_hi = static_cast<long>(k) * (n - 1);
    long e_lo = e_hi - n / 2;
    return int_pow(Int(p), static_cast<unsigned long>(e_hi)) -
           Int(chi_S(lat, p)) * int_pow(Int(p), static_cast<unsigned long>(e_lo));
}

bool is_square_in_Qp(const Rat& a, long p) {
    if (a == 0) throw std::invalid_argument("is_square_in_Qp: a must be nonzero");
    if (p < 2 || !is_prime_ll(p)) throw std::invalid_argument("is_square_in_Qp: p must be prime");
    Int num = a.get_num(), den = a.get_den();
    long val = 0;
    while (divides(Int(p), num)) { num /= p; ++val; }
    while (divides(Int(p), den)) { den /= p; --val; }
    if (val % 2 != 0) return false;
    // unit part num/den: at p = 2, den odd gives den^2 = 1 (mod 8), so
    // num/den = num * den (mod 8); square units are exactly 1 mod 8.
    if (p == 2) return mod_floor(num * den, Int(8)) == 1;
    return kronecker_symbol(num * den, Int(p)) == 1;
}

std::set<long> default_bad_primes(const EvenLattice& lat, const Int& d_val) {
    Int prod = 2 * lat.level() * lat.det() * abs(d_val);
    std::set<long> out;
    if (!fits_ll(prod)) throw std::overflow_error("default_bad_primes: product too large");
    for (auto [p, e] : factorize_ll(to_ll(prod))) out.insert(p);
    return out;
}

} // namespace fjd
