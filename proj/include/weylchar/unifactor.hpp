#pragma once

#include <cstdint>
#include <vector>

#include "weylchar/bigint.hpp"

namespace weylchar {

// Dense univariate integer polynomial, lowest coefficient first, no trailing zeros.
using UniPoly = std::vector<Int>;

int uni_deg(const UniPoly& f);  // -1 for zero
void uni_trim(UniPoly& f);
UniPoly uni_mul(const UniPoly& f, const UniPoly& g);
UniPoly uni_add(const UniPoly& f, const UniPoly& g);
UniPoly uni_sub(const UniPoly& f, const UniPoly& g);
UniPoly uni_derivative(const UniPoly& f);
Int uni_content(const UniPoly& f);
UniPoly uni_primitive(const UniPoly& f);
Int uni_eval(const UniPoly& f, const Int& x);
// quotient when g divides f exactly in Z[x]; empty optional otherwise
bool uni_exact_divide(const UniPoly& f, const UniPoly& g, UniPoly& q);
// primitive gcd with positive leading coefficient
UniPoly uni_gcd(UniPoly f, UniPoly g);

// resultant via the Sylvester matrix and fraction-free elimination
Int uni_resultant(const UniPoly& f, const UniPoly& g);

struct UniFactorization {
    Int content = 1;  // signed integer content
    std::vector<std::pair<UniPoly, int>> factors;  // primitive, positive lc, irreducible
};

// Complete factorization over Z: squarefree decomposition, factorization modulo
// a small prime, Hensel lifting, Zassenhaus subset recombination.
// max_subsets guards recombination; overruns throw std::runtime_error.
UniFactorization factor_univariate(const UniPoly& f, std::uint64_t seed = 1,
                                   std::size_t max_subsets = 1u << 22);

}  // namespace weylchar
