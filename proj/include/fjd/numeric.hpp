#ifndef FJD_NUMERIC_HPP
#define FJD_NUMERIC_HPP

#include <gmpxx.h>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace fjd {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// base^e for possibly negative e, as an exact rational.
inline Rat rat_pow(const Int& base, long e) {
    if (e >= 0) return Rat(int_pow(base, static_cast<unsigned long>(e)));
    Rat r(1, int_pow(base, static_cast<unsigned long>(-e)));
    r.canonicalize();
    return r;
}

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Nonnegative remainder of a mod m, m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool divides(const Int& d, const Int& a) {
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline bool fits_ll(const Int& a) { return a.fits_slong_p(); }

inline long to_ll(const Int& a) { return static_cast<long>(a.get_si()); }

std::vector<long> divisors_of(long n);
std::vector<long> primes_up_to(long n);
bool is_prime_ll(long n);
bool is_squarefree_ll(long n);
// Ordered prime factorization n = prod p_i^{e_i}.
std::vector<std::pair<long, int>> factorize_ll(long n);
long mod_inverse_ll(long a, long m);

// Rational from decimal-free string "n" or "n/d".
Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& r);

} // namespace fjd

#endif
