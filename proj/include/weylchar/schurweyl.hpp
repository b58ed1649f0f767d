#pragma once

#include <map>
#include <optional>
#include <vector>

#include "weylchar/grouplaurent.hpp"
#include "weylchar/rootsys.hpp"

namespace weylchar {

// S(lambda) = sum over W of epsilon(w) e^{w lambda}; zero iff lambda lies on a wall.
GroupLaurentPoly schur_weyl_sum(const RootSystemPtr& rs, const Weight& lambda);

// e^{-d rho} prod_{a in Phi+} (e^{da} - 1), or the dual version with short roots
// scaled by m(Phi) and rho~ in place of rho.  Equals S(d rho) resp. S(d rho~).
GroupLaurentPoly denominator_product(const RootSystemPtr& rs, Coord d, bool dual);

// Weyl character formula: chi_lambda = S(lambda + rho) / S(rho), division exact.
GroupLaurentPoly character(const RootSystemPtr& rs, const Weight& lambda_hw);

// Shared cache for repeated character computations (not thread safe).
class CharacterCache {
public:
    explicit CharacterCache(RootSystemPtr rs) : rs_(std::move(rs)) {}
    const GroupLaurentPoly& get(const Weight& lambda_hw);

private:
    RootSystemPtr rs_;
    std::map<Weight, GroupLaurentPoly> cache_;
};

struct CLambdaResult {
    Weight lambda;
    Coord d_lambda = 1;
    std::optional<Coord> d_star;
    GroupLaurentPoly D;
    GroupLaurentPoly C;
    LatticeClass branch;
    bool nmfg_flag = false;
};

// True for F4/G2 weights of the shape u*omega_short + v*omega_long + d(lambda)*rho
// with gcd(u,v) = d(lambda), m(Phi)v >= u + d and u >= v + d.
bool nmfg_shape(const RootSystem& rs, const Weight& lambda);

// D(lambda) via the closed-form branch on the lattice class; C = S(lambda)/D.
// Multiples of rho / rho~ come back with D = S(lambda), C = 1 and the branch flag.
// cross_check additionally verifies that D is a common multiple of every proper
// divisor-type factor S(d rho), S(e rho~) of S(lambda); since D is itself one of
// them, this certifies D = lcm.
CLambdaResult big_D_and_C(const RootSystemPtr& rs, const Weight& lambda, bool cross_check = false);

struct LeadingCofactorTerms {
    Rat top_degree;        // <omega*_alpha, lambda>
    Weight top_weight;     // lambda^alpha, over the corner subsystem
    Rat second_degree;     // top - m_alpha(lambda)
    Weight second_weight;  // (s_alpha lambda)^alpha
};

LeadingCofactorTerms leading_cofactor_terms(const RootSystemPtr& rs, const Weight& lambda, int alpha);

// Decomposes a product of irreducible characters into its constituents by
// peeling the term-order-maximal weight.  Returns highest weight -> multiplicity.
std::map<Weight, Coord> tensor_decompose(const RootSystemPtr& rs, const std::vector<Weight>& factors,
                                         CharacterCache* cache = nullptr);

// Sum of all coefficients (the dimension of the underlying module for characters).
Int dimension_of(const GroupLaurentPoly& chi);

}  // namespace weylchar
