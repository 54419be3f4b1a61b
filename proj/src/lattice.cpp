#include "fjd/lattice.hpp"

#include <sstream>
#include <stdexcept>

#include "fjd/errors.hpp"

namespace fjd {

namespace {

// Odometer over t_i in [0, ranges[i]); fn receives the digit vector.
template <typename F>
void for_each_digits(const std::vector<Int>& ranges, F&& fn) {
    const size_t n = ranges.size();
    std::vector<Int> t(n, Int(0));
    while (true) {
        fn(t);
        size_t i = 0;
        while (i < n) {
            t[i] += 1;
            if (t[i] < ranges[i]) break;
            t[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
}

} // namespace

EvenLattice::EvenLattice(const IntMat& gram) : gram_(gram) {
    if (!gram.is_square()) throw DimensionMismatch("EvenLattice: Gram matrix not square");
    n_ = gram.rows();
    if (n_ == 0) throw DimensionMismatch("EvenLattice: empty matrix");
    if (!gram.is_symmetric()) throw NotSymmetric("EvenLattice: Gram matrix not symmetric");
    for (int i = 0; i < n_; ++i)
        if (mod_floor(gram(i, i), Int(2)) != 0) {
            std::ostringstream os;
            os << "EvenLattice: odd diagonal entry S(" << i << "," << i << ") = " << gram(i, i);
            throw NotEven(os.str());
        }
    for (int k = 1; k <= n_; ++k)
        if (gram.leading_minor(k) <= 0) {
            std::ostringstream os;
            os << "EvenLattice: leading principal minor " << k << " is not positive";
            throw NotPositiveDefinite(os.str());
        }
    det_ = gram.det();
    adj_ = gram.adjugate();
    snf_ = smith_normal_form(gram);

    // P unimodular: P^{-1} = adj(P) / det(P) with det(P) = +-1.
    IntMat padj = snf_.p_mat.adjugate();
    if (snf_.p_mat.det() == -1)
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) padj(i, j) = -padj(i, j);
    p_inv_ = padj;

    // Level: least q | 2 det with q S^{-1} integral and q (S^{-1})_ii even,
    // i.e. 2 det | q adj_ii and det | q adj_ij. Divisor descent from 2 det.
    Int two_det = 2 * det_;
    if (!fits_ll(two_det)) throw std::overflow_error("EvenLattice: determinant too large for level search");
    for (long q : divisors_of(to_ll(two_det))) {
        bool ok = true;
        for (int i = 0; i < n_ && ok; ++i) {
            if (!divides(two_det, Int(q) * adj_(i, i))) ok = false;
            for (int j = i + 1; j < n_ && ok; ++j)
                if (!divides(det_, Int(q) * adj_(i, j))) ok = false;
        }
        if (ok) {
            level_ = q;
            break;
        }
    }
    if (level_ == 0) throw std::logic_error("EvenLattice: no level divides 2 det");
}

Int EvenLattice::half_q_dual_norm(const std::vector<Int>& r) const {
    if (static_cast<int>(r.size()) != n_)
        throw DimensionMismatch("half_q_dual_norm: vector length differs from rank");
    Int num(0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) num += r[static_cast<size_t>(i)] * adj_(i, j) * r[static_cast<size_t>(j)];
    num *= level_;
    Int two_det = 2 * det_;
    if (!divides(two_det, num))
        throw std::logic_error("half_q_dual_norm: value not integral");
    Int out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), two_det.get_mpz_t());
    return out;
}

bool EvenLattice::support_contains(const Int& d_val, const std::vector<Int>& r) const {
    if (static_cast<int>(r.size()) != n_)
        throw DimensionMismatch("support_contains: vector length differs from rank");
    if (d_val > 0) return false;
    return divides(level_, half_q_dual_norm(r) - d_val);
}

bool EvenLattice::is_maximal() const {
    // Classes of S^{-1}Z^n / Z^n are Q diag(1/a_i) c with c_i in [0, a_i);
    // the class is nontrivial iff some c_i != 0. (1/2) S[v] for v = S^{-1} m
    // equals m^t adj m / (2 det); integrality of that value on a nonzero
    // class witnesses a glue vector.
    std::vector<Int> ranges = snf_.diag;
    bool maximal = true;
    const IntMat& q_mat = snf_.q_mat;
    for_each_digits(ranges, [&](const std::vector<Int>& c) {
        if (!maximal) return;
        bool zero = true;
        for (const Int& v : c)
            if (v != 0) { zero = false; break; }
        if (zero) return;
        // m = S v = S Q diag(1/a) c; with P S Q = diag(a): S Q diag(1/a) = P^{-1}.
        std::vector<Int> m = p_inv_ * c;
        Int num(0);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) num += m[static_cast<size_t>(i)] * adj_(i, j) * m[static_cast<size_t>(j)];
        if (divides(2 * det_, num)) maximal = false;
    });
    return maximal;
}

AmbientForms::AmbientForms(const EvenLattice& lat) {
    const int n = lat.rank();
    s0 = IntMat(n + 2, n + 2);
    s0(0, n + 1) = 1;
    s0(n + 1, 0) = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s0(i + 1, j + 1) = -lat.gram()(i, j);

    s1 = IntMat(n + 4, n + 4);
    s1(0, n + 3) = 1;
    s1(n + 3, 0) = 1;
    for (int i = 0; i < n + 2; ++i)
        for (int j = 0; j < n + 2; ++j) s1(i + 1, j + 1) = s0(i, j);

    xi.assign(static_cast<size_t>(n) + 2, Int(0));
    xi.front() = 1;
    xi.back() = 1;
}

Rat AmbientForms::phi0_norm(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != s0.rows())
        throw DimensionMismatch("phi0_norm: vector length differs from n + 2");
    Rat acc(0);
    for (int i = 0; i < s0.rows(); ++i)
        for (int j = 0; j < s0.cols(); ++j)
            if (s0(i, j) != 0) acc += x[static_cast<size_t>(i)] * Rat(s0(i, j)) * x[static_cast<size_t>(j)];
    acc /= 2;
    return acc;
}

SupportPair make_support_pair(const EvenLattice& lat, const Int& d_val, const std::vector<Int>& r) {
    if (!lat.support_contains(d_val, r)) {
        std::ostringstream os;
        os << "make_support_pair: (" << d_val << ", r) outside the support";
        throw KeyOutsideSupport(os.str());
    }
    return SupportPair{d_val, r};
}

XiVector xi_vector(const EvenLattice& lat, const Int& d_val, const Int& d, const std::vector<Int>& s) {
    const int n = lat.rank();
    if (static_cast<int>(s.size()) != n)
        throw DimensionMismatch("xi_vector: vector length differs from rank");
    if (d_val >= 0 || d < 1) throw std::invalid_argument("xi_vector: need D < 0 and d >= 1");
    const Int q = lat.level();
    Int f = lat.half_q_dual_norm(s);
    if (!divides(q * d, f - d_val)) {
        std::ostringstream os;
        os << "xi_vector: D = " << d_val << " is not (1/2) q S^{-1}[s] = " << f << " (mod " << (q * d) << ")";
        throw CongruenceViolated(os.str());
    }

    XiVector out;
    out.coords.assign(static_cast<size_t>(n) + 2, Rat(0));
    Int first;
    mpz_divexact(first.get_mpz_t(), Int(f - d_val).get_mpz_t(), Int(q * d).get_mpz_t());
    out.coords.front() = Rat(first);
    // S^{-1} s = adj(S) s / det.
    std::vector<Int> as = lat.adjugate() * s;
    for (int i = 0; i < n; ++i) {
        Rat c(as[static_cast<size_t>(i)], lat.det());
        c.canonicalize();
        out.coords[static_cast<size_t>(i) + 1] = c;
    }
    out.coords.back() = Rat(d);

    out.verified = false;
    if (int_gcd(d, d_val) == 1) {
        AmbientForms amb(lat);
        Rat norm = amb.phi0_norm(out.coords);
        Rat expect(-d_val, q);
        expect.canonicalize();
        if (norm != expect) throw std::logic_error("xi_vector: phi0-norm check failed");
        // Pairing values with the basis of Z^{n+2} are d, -s_i, first; their gcd is 1.
        Int g = int_gcd(d, first);
        for (const Int& si : s) g = int_gcd(g, si);
        if (g != 1) throw std::logic_error("xi_vector: pairing ideal not unit");
        out.verified = true;
    }
    return out;
}

} // namespace fjd
