#ifndef FJD_LATTICE_HPP
#define FJD_LATTICE_HPP

#include <memory>
#include <vector>

#include "fjd/matrix.hpp"
#include "fjd/snf.hpp"

namespace fjd {

// Even positive definite integral lattice (Z^n, x^t S y) with cached
// invariants: det(S), level q, adjugate, and the Smith decomposition of S
// used to coordinatize the quotients Z^n / d S Z^n.
class EvenLattice {
public:
    explicit EvenLattice(const IntMat& gram);

    int rank() const { return n_; }
    const IntMat& gram() const { return gram_; }
    const Int& det() const { return det_; }
    const Int& level() const { return level_; }
    const IntMat& adjugate() const { return adj_; }
    const SNFDecomposition& snf() const { return snf_; }

    // Elementary divisors d_1 | d_2 | ... | d_n of Z^n / S Z^n.
    std::vector<Int> discriminant_group() const { return snf_.diag; }

    // No nonzero class v in S^{-1}Z^n / Z^n has (1/2) S[v] integral.
    bool is_maximal() const;

    // (1/2) q S^{-1}[r] for integer r; always an integer by the level's definition.
    Int half_q_dual_norm(const std::vector<Int>& r) const;

    // D <= 0 and D = (1/2) q S^{-1}[r] (mod q).
    bool support_contains(const Int& d_val, const std::vector<Int>& r) const;

    bool operator==(const EvenLattice& o) const { return gram_ == o.gram_; }

private:
    int n_;
    IntMat gram_;
    Int det_;
    IntMat adj_;
    Int level_;
    SNFDecomposition snf_;
    IntMat p_inv_;  // integer inverse of snf_.p_mat

public:
    const IntMat& p_inverse() const { return p_inv_; }
};

// The block forms S0 ((n+2) x (n+2), corners 1, middle -S) and
// S1 ((n+4) x (n+4), corners 1, middle S0), with the distinguished
// vector xi = (1, 0, ..., 0, 1)^t of phi0-norm 1.
struct AmbientForms {
    explicit AmbientForms(const EvenLattice& lat);

    IntMat s0;
    IntMat s1;
    std::vector<Int> xi;

    // phi0[x] = (1/2) x^t S0 x, exact.
    Rat phi0_norm(const std::vector<Rat>& x) const;
};

// Pair (D, r) with D <= 0 and D = (1/2) q S^{-1}[r] (mod q); validated at
// construction via make_support_pair.
struct SupportPair {
    Int d_val;
    std::vector<Int> r;
};

SupportPair make_support_pair(const EvenLattice& lat, const Int& d_val, const std::vector<Int>& r);

struct XiVector {
    std::vector<Rat> coords;  // length n + 2
    bool verified;            // membership checks ran (gcd(d, D) = 1) and passed
};

// xi' = ((qS^{-1}[s]/2 - D)/(qd), S^{-1}s, d); requires D < 0 and
// D = (1/2) q S^{-1}[s] (mod q d). When gcd(d, D) = 1 the phi0-norm -D/q and
// the unit pairing ideal are asserted.
XiVector xi_vector(const EvenLattice& lat, const Int& d_val, const Int& d, const std::vector<Int>& s);

} // namespace fjd

#endif
