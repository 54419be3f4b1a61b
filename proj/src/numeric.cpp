#include "fjd/numeric.hpp"

#include <algorithm>
#include <stdexcept>

#include "fjd/errors.hpp"

namespace fjd {

std::vector<long> divisors_of(long n) {
    if (n < 0) n = -n;
    std::vector<long> out;
    for (long i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            out.push_back(i);
            if (i != n / i) out.push_back(n / i);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long> primes_up_to(long n) {
    std::vector<long> ps;
    if (n < 2) return ps;
    std::vector<bool> sieve(static_cast<size_t>(n) + 1, true);
    for (long p = 2; p <= n; ++p) {
        if (!sieve[static_cast<size_t>(p)]) continue;
        ps.push_back(p);
        for (long q = p * p; q <= n; q += p) sieve[static_cast<size_t>(q)] = false;
    }
    return ps;
}

bool is_prime_ll(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

bool is_squarefree_ll(long n) {
    if (n <= 0) return false;
    for (long p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
        while (n % p == 0) n /= p;
    }
    return true;
}

std::vector<std::pair<long, int>> factorize_ll(long n) {
    std::vector<std::pair<long, int>> out;
    if (n < 0) n = -n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

long mod_inverse_ll(long a, long m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), Int(a).get_mpz_t(), Int(m).get_mpz_t()) == 0)
        throw std::invalid_argument("mod_inverse_ll: not invertible");
    return to_ll(r);
}

Rat rat_from_string(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789/-+") != std::string::npos)
        throw std::invalid_argument("rat_from_string: malformed rational '" + s + "'");
    Rat r(s);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

} // namespace fjd
