#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylchar/bigint.hpp"
#include "weylchar/unifactor.hpp"

namespace weylchar {

// Classical n-th cyclotomic polynomial (the irreducible one), cached.
// Distinct from phi_quotient below, which implements the (x^e-1)/(x-1) family.
const UniPoly& cyclotomic_poly(int n);

// Element of Z[zeta_n], stored as a residue modulo the classical cyclotomic
// polynomial, degree < phi(n).
struct CycloElem {
    int n = 1;
    UniPoly poly;

    static CycloElem from_poly(int n, UniPoly p);
    // zeta_n^k
    static CycloElem root_power(int n, long k);
    static CycloElem one(int n) { return from_poly(n, UniPoly{Int(1)}); }
};

CycloElem cyclo_add(const CycloElem& a, const CycloElem& b);
CycloElem cyclo_sub(const CycloElem& a, const CycloElem& b);
CycloElem cyclo_mul(const CycloElem& a, const CycloElem& b);
bool cyclo_is_zero(const CycloElem& a);

// Field norm from Q(zeta_n) down to Q: the resultant of the classical
// cyclotomic polynomial with the residue.
Int cyclo_norm(const CycloElem& a);

// |N(1 - zeta_e)| = 1 iff e is not a prime power (e >= 2).
bool unit_one_minus_zeta(int e);

// The quotient polynomials Phi_{e:f_1,...,f_k}(x) = Phi_e(x) / prod Phi_{f_i}(x)
// where Phi_e(x) = (x^e - 1)/(x - 1); fs must be pairwise coprime divisors of e.
UniPoly phi_quotient(long e, const std::vector<long>& fs);

// Roots of unity tracked symbolically as exponents k of zeta_e^k.
struct ObstructionReport {
    long e = 0, f = 0, d = 0;
    long bipartitions_checked = 0;
    bool all_rhs_units = false;  // Phi_{f:d}(delta) a unit for every delta in mu(e,d)
    struct Witness {
        long gamma_exp = -1;  // exponents of zeta_e
        long delta_exp = -1;
        long prime = 0;       // prime with gamma^{-1} delta of prime-power order
    };
    std::optional<Witness> witness;  // for the first bipartition, as a sample
    std::optional<std::pair<std::vector<long>, std::vector<long>>> no_obstruction_split;
    enum class Conclusion { ContradictionConfirmed, NoObstruction } conclusion =
        Conclusion::NoObstruction;
    std::string note;
};

// Checks the obstruction pattern: when gcd(e,f) = d, every bipartition of
// mu(e,d) admits a prime-power witness pair making the left side a non-unit
// while all right sides are units; when gcd(e,f) > d the pattern dissolves
// along a shared cyclotomic factor.
ObstructionReport arith_obstruction_report(long e, long f, long d, long conductor_cap = 360);

}  // namespace weylchar
