#ifndef FJD_CLASSNUMBER_HPP
#define FJD_CLASSNUMBER_HPP

#include <vector>

#include "fjd/numeric.hpp"

namespace fjd {

enum class TwoBehavior { Ramified, Inert, Split };

// Arithmetic data of K = Q(sqrt(-t)) for squarefree t >= 1.
struct ImagQuadField {
    long t;
    long disc;            // -t when t = 3 (mod 4), else -4t
    long class_number;    // via reduced-forms count
    int omega_t;               // number of prime factors of t
    TwoBehavior two_behavior;  // ramified iff 2 | disc; inert iff -t = 5 (8); split iff -t = 1 (8)
    long unit_index;      // [U : U'] = 2 (t=1), 3 (t=3), 1 otherwise
    int mu;                    // 0 for t = 1, else omega_t
};

ImagQuadField imag_quad_field(long t);

// Number of reduced primitive forms (a, b, c), b^2 - 4ac = disc,
// |b| <= a <= c, b >= 0 when |b| = a or a = c, gcd(a, b, c) = 1.
// disc must be a fundamental negative discriminant.
long class_number_by_forms(long disc);

// The adelic-to-rational index for the rank-1 lattice S = 2t:
//   c_K * 2^{1-mu-1} * 2 / [U:U'] * f2,
// f2 = 1 (2 ramified), 3 (2 inert), 1 (2 split).
Rat rank1_index(long t);

// t in {1,2,3}, or t != 3 (mod 4) with c_K = 2^{k-1}, or t = 7 (mod 8)
// with c_K = 2^{k-1}; equivalent to rank1_index(t) == 1.
bool is_admissible_rank1(long t);

std::vector<long> enumerate_admissible(long limit);

} // namespace fjd

#endif
