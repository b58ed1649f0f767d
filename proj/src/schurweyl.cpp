#include "weylchar/schurweyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylchar {

GroupLaurentPoly schur_weyl_sum(const RootSystemPtr& rs, const Weight& lambda) {
    GroupLaurentPoly s(rs);
    for (const auto& w : rs->weyl()) s.add_term(rs->apply(w, lambda), Int(w.sign));
    return s;
}

GroupLaurentPoly denominator_product(const RootSystemPtr& rs, Coord d, bool dual) {
    if (d < 1) throw std::invalid_argument("denominator_product requires d >= 1");
    WeylVectors v = weyl_vectors(*rs);
    Weight base = dual ? v.rho_tilde : v.rho;
    GroupLaurentPoly prod = GroupLaurentPoly::monomial(rs, -(base * d), Int(1));

    // Multiply low-height binomials first; collisions then happen early and the
    // intermediate supports stay small.
    std::vector<int> order(rs->positive_roots().size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return rs->grade(rs->positive_roots()[static_cast<std::size_t>(a)]) <
               rs->grade(rs->positive_roots()[static_cast<std::size_t>(b)]);
    });
    for (int k : order) {
        const Weight& alpha = rs->positive_roots()[static_cast<std::size_t>(k)];
        Coord c = d;
        if (dual && !rs->positive_root_is_long(k)) c *= rs->m_phi();
        GroupLaurentPoly bin(rs);
        bin.add_term(alpha * c, Int(1));
        bin.add_term(Weight::zero(rs->rank()), Int(-1));
        prod = mul(prod, bin);
    }
    return prod;
}

GroupLaurentPoly character(const RootSystemPtr& rs, const Weight& lambda_hw) {
    if (!lambda_hw.dominant()) throw std::invalid_argument("character requires a dominant weight");
    WeylVectors v = weyl_vectors(*rs);
    GroupLaurentPoly num = schur_weyl_sum(rs, lambda_hw + v.rho);
    GroupLaurentPoly den = schur_weyl_sum(rs, v.rho);
    auto q = exact_divide(num, den);
    if (!q) throw std::runtime_error("Weyl character division left a remainder (arithmetic bug)");
    return *q;
}

const GroupLaurentPoly& CharacterCache::get(const Weight& lambda_hw) {
    auto it = cache_.find(lambda_hw);
    if (it == cache_.end()) it = cache_.emplace(lambda_hw, character(rs_, lambda_hw)).first;
    return it->second;
}

bool nmfg_shape(const RootSystem& rs, const Weight& lambda) {
    if (!(rs.family() == Family::F || rs.family() == Family::G)) return false;
    int short_corner = -1, long_corner = -1;
    for (int a : rs.corner_roots()) {
        if (rs.simple_root_is_long(a)) long_corner = a;
        else short_corner = a;
    }
    if (short_corner < 0 || long_corner < 0) return false;
    Coord d = coord_gcd(lambda);
    for (int i = 0; i < rs.rank(); ++i)
        if (i != short_corner && i != long_corner && lambda[i] != d) return false;
    Coord u = lambda[short_corner] - d;
    Coord v = lambda[long_corner] - d;
    if (u < 1 || v < 1) return false;
    if (ll_gcd(u, v) != d) return false;
    return rs.m_phi() * v >= u + d && u >= v + d;
}

CLambdaResult big_D_and_C(const RootSystemPtr& rs, const Weight& lambda, bool cross_check) {
    if (!lambda.dominant() || !lambda.regular())
        throw std::invalid_argument("big_D_and_C requires a dominant regular weight");
    GcdInvariants gi = gcd_invariants(*rs, lambda);
    LatticeClass lc = lattice_class(*rs, lambda);
    WeylVectors v = weyl_vectors(*rs);

    CLambdaResult res{lambda, gi.d, gi.d_star, GroupLaurentPoly(rs), GroupLaurentPoly(rs), lc,
                      nmfg_shape(*rs, lambda)};
    if (lc.kind == LatticeClass::Kind::MultipleOfRho || lc.kind == LatticeClass::Kind::MultipleOfRhoTilde) {
        res.D = schur_weyl_sum(rs, lambda);
        res.C = GroupLaurentPoly::constant(rs, 1);
        return res;
    }

    Weight dweight = lc.dual_branch() ? v.rho_tilde * *gi.d_star : v.rho * gi.d;
    res.D = schur_weyl_sum(rs, dweight);
    GroupLaurentPoly s = schur_weyl_sum(rs, lambda);
    auto q = exact_divide(s, res.D);
    if (!q) throw std::runtime_error("D(lambda) does not divide S(lambda) (arithmetic bug)");
    res.C = *q;

    if (cross_check) {
        // Every proper divisor-type factor of S(lambda) must divide D; as D is
        // itself such a factor, this pins D as the least common multiple.
        for (Coord d = 1; d <= gi.d; ++d) {
            if (gi.d % d != 0) continue;
            if (v.rho * d == lambda) continue;
            if (!exact_divide(res.D, schur_weyl_sum(rs, v.rho * d)))
                throw std::runtime_error("lcm cross-check failed at S(" + std::to_string(d) + " rho)");
        }
        if (gi.d_star) {
            for (Coord e = 1; e <= *gi.d_star; ++e) {
                if (*gi.d_star % e != 0) continue;
                if (v.rho_tilde * e == lambda) continue;
                if (!exact_divide(res.D, schur_weyl_sum(rs, v.rho_tilde * e)))
                    throw std::runtime_error("lcm cross-check failed at S(" + std::to_string(e) + " rho~)");
            }
        }
    }
    return res;
}

LeadingCofactorTerms leading_cofactor_terms(const RootSystemPtr& rs, const Weight& lambda, int alpha) {
    if (!lambda.dominant() || !lambda.regular())
        throw std::invalid_argument("leading_cofactor_terms requires a dominant regular weight");
    const CornerData& cd = rs->corner_data(alpha);
    LeadingCofactorTerms out;
    out.top_degree = 0;
    for (int b = 0; b < rs->rank(); ++b) out.top_degree += rs->pairing_w(alpha, b) * Rat(lambda[b]);
    out.second_degree = out.top_degree - Rat(lambda[alpha]);
    out.top_weight = rs->project(alpha, lambda);
    if (rs->rank() == 1) {
        out.second_weight = Weight::zero(0);
        return out;
    }
    int neighbor = -1;
    for (int j = 0; j < rs->rank(); ++j)
        if (j != alpha && rs->cartan(j, alpha) != 0) neighbor = j;
    Coord mult = rs->cartan(neighbor, alpha);
    if (mult < 0) mult = -mult;
    int sub_idx = -1;
    for (std::size_t i = 0; i < cd.sub_to_orig.size(); ++i)
        if (cd.sub_to_orig[i] == neighbor) sub_idx = static_cast<int>(i);
    out.second_weight = out.top_weight;
    out.second_weight[sub_idx] += mult * lambda[alpha];
    return out;
}

std::map<Weight, Coord> tensor_decompose(const RootSystemPtr& rs, const std::vector<Weight>& factors,
                                         CharacterCache* cache) {
    CharacterCache local(rs);
    CharacterCache& cc = cache ? *cache : local;
    GroupLaurentPoly prod = GroupLaurentPoly::constant(rs, 1);
    for (const Weight& f : factors) {
        if (!f.dominant()) throw std::invalid_argument("tensor factors must be dominant");
        prod = mul(prod, cc.get(f));
    }
    std::map<Weight, Coord> out;
    while (!prod.is_zero()) {
        const auto& lead = prod.leading();
        Weight mu(lead.first);
        if (!mu.dominant() || lead.second < 0)
            throw std::logic_error("tensor peeling hit a non-dominant or negative leading term");
        Coord c = to_ll(lead.second);
        out[mu] += c;
        GroupLaurentPoly piece = cc.get(mu);
        GroupLaurentPoly scaled(rs);
        for (const auto& [m, a] : piece.terms()) scaled.add_term(Weight(m), a * lead.second);
        prod = sub(prod, scaled);
    }
    return out;
}

Int dimension_of(const GroupLaurentPoly& chi) {
    Int s = 0;
    for (const auto& [m, c] : chi.terms()) s += c;
    return s;
}

}  // namespace weylchar
