#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace weylchar {

using Int = mpz_class;
using Rat = mpq_class;
using Coord = long;  // 64-bit on LP64; plays well with the gmpxx overload set

inline long to_ll(const Int& a) { return mpz_get_si(a.get_mpz_t()); }

// Exact rational-to-integer conversion; throws when the value is not integral.
inline Int rat_to_int(const Rat& r) {
    if (r.get_den() != 1) throw std::invalid_argument("expected an integer, got " + r.get_str());
    return r.get_num();
}

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Coord ll_gcd(Coord a, Coord b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        Coord t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Coord ll_lcm(Coord a, Coord b) {
    if (a == 0 || b == 0) return 0;
    return a / ll_gcd(a, b) * b;
}

}  // namespace weylchar
