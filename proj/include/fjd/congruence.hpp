#ifndef FJD_CONGRUENCE_HPP
#define FJD_CONGRUENCE_HPP

#include <set>
#include <vector>

#include "fjd/lattice.hpp"

namespace fjd {

struct CountResult {
    Int d;
    Int d_val;       // the target D
    Int count;       // #{s in Z^n/dSZ^n : (1/2) q S^{-1}[s] = D (mod q d)}
    Int enumerated;  // order of the quotient, d^n * det(S)
};

enum class CountMethod {
    Auto,        // Enumerate when the quotient is small, else Factorized when applicable
    Enumerate,   // normative semantics: Smith-coordinate sweep of Z^n / d S Z^n
    Factorized,  // gcd(d, 2 q det) = 1 only: discriminant-class fiber times a
                 // diagonalized count mod each prime power of d
};

// Number of solutions n(xi; d) of (1/2) q S^{-1}[s] = D (mod q d) over
// s in Z^n / d S Z^n. The Factorized route computes the identical value via
//   n(xi; d) = m_q(D) * N_d(D q^{-1} mod d),
// where m_q(D) counts discriminant-group classes with the mod-q condition and
// N_d counts (1/2) S[z] = c over (Z/d)^n, multiplicative over prime powers.
CountResult count_congruence(const EvenLattice& lat, const Int& d_val, const Int& d,
                             CountMethod method = CountMethod::Auto, unsigned threads = 0);

// Kronecker symbol (a | m), m != 0.
int kronecker_symbol(const Int& a, const Int& m);

// chi_S(p) = ((-1)^{n/2} det S | p) for even rank; OddRank otherwise.
int chi_S(const EvenLattice& lat, long p);
// chi_t(p) = (-t | p).
int chi_t(long t, long p);

// Rank 1 (S = 2t, t squarefree): 1 + chi_t(p).
// One of the six even-rank reference matrices: p^{k(n-1)} - chi_S(p) p^{k(n-1)-n/2}.
// Requires p odd, p coprime to det(S) and to the level.
Int closed_form_count(const EvenLattice& lat, long p, int k);

// a is a square in Q_p: even valuation and square unit part
// (mod p for odd p, 1 mod 8 for p = 2).
bool is_square_in_Qp(const Rat& a, long p);

// Primes dividing 2 * q * det(S) * |D|; the default deprivation set.
std::set<long> default_bad_primes(const EvenLattice& lat, const Int& d_val);

// The six even-rank reference Gram matrices (ranks 2, 2, 4, 4, 6, 8).
const std::vector<IntMat>& evenrank_reference_matrices();
bool is_evenrank_reference(const EvenLattice& lat);

} // namespace fjd

#endif
