#include "fjd/classnumber.hpp"

#include <numeric>
#include <sstream>

#include "fjd/errors.hpp"

namespace fjd {

namespace {

bool is_fundamental_discriminant(long disc) {
    if (disc >= 0) return false;
    long r = ((disc % 4) + 4) % 4;
    if (r == 1) return is_squarefree_ll(-disc);
    if (r == 0) {
        long m = disc / 4;
        long mr = ((m % 4) + 4) % 4;
        return (mr == 2 || mr == 3) && is_squarefree_ll(-m);
    }
    return false;
}

} // namespace

long class_number_by_forms(long disc) {
    if (!is_fundamental_discriminant(disc)) {
        std::ostringstream os;
        os << "class_number_by_forms: " << disc << " is not a fundamental negative discriminant";
        throw NotDiscriminant(os.str());
    }
    long h = 0;
    for (long b = ((-disc) % 2 == 0) ? 0 : 1; 3 * b * b <= -disc; b += 2) {
        long m = (b * b - disc) / 4;
        for (long a = std::max<long>(b, 1); a * a <= m; ++a) {
            if (m % a != 0) continue;
            long c = m / a;
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            // (a, b, c) with 0 <= b <= a <= c; the mirror (a, -b, c) is a
            // distinct reduced form unless b = 0, a = b or a = c.
            h += (b == 0 || a == b || a == c) ? 1 : 2;
        }
    }
    return h;
}

ImagQuadField imag_quad_field(long t) {
    if (t < 1 || !is_squarefree_ll(t)) {
        std::ostringstream os;
        os << "imag_quad_field: t = " << t << " is not a squarefree positive integer";
        throw NotSquarefree(os.str());
    }
    ImagQuadField k;
    k.t = t;
    k.disc = (t % 4 == 3) ? -t : -4 * t;
    k.class_number = class_number_by_forms(k.disc);
    k.omega_t = static_cast<int>(factorize_ll(t).size());
    if (t % 4 != 3)
        k.two_behavior = TwoBehavior::Ramified;
    else if (t % 8 == 3)  // -t = 5 (mod 8)
        k.two_behavior = TwoBehavior::Inert;
    else  // t = 7 (mod 8), -t = 1 (mod 8)
        k.two_behavior = TwoBehavior::Split;
    k.unit_index = (t == 1) ? 2 : (t == 3) ? 3 : 1;
    k.mu = (t == 1) ? 0 : k.omega_t;
    return k;
}

Rat rank1_index(long t) {
    ImagQuadField k = imag_quad_field(t);
    Rat f2 = (k.two_behavior == TwoBehavior::Inert) ? Rat(3) : Rat(1);
    Rat idx = Rat(k.class_number) * rat_pow(Int(2), 1 - k.mu - 1) * 2 / Rat(k.unit_index) * f2;
    idx.canonicalize();
    return idx;
}

bool is_admissible_rank1(long t) {
    if (t < 1 || !is_squarefree_ll(t)) {
        std::ostringstream os;
        os << "is_admissible_rank1: t = " << t << " is not a squarefree positive integer";
        throw NotSquarefree(os.str());
    }
    if (t == 1 || t == 2 || t == 3) return true;
    ImagQuadField k = imag_quad_field(t);
    Int genus = int_pow(Int(2), static_cast<unsigned long>(k.omega_t - 1));
    if (t % 4 != 3 && Int(k.class_number) == genus) return true;
    if (t % 8 == 7 && Int(k.class_number) == genus) return true;
    return false;
}

std::vector<long> enumerate_admissible(long limit) {
    std::vector<long> out;
    for (long t = 1; t <= limit; ++t)
        if (is_squarefree_ll(t) && is_admissible_rank1(t)) out.push_back(t);
    return out;
}

} // namespace fjd
