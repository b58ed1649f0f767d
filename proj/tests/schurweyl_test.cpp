#include "weylchar/schurweyl.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace weylchar;
using namespace weylchar::testing;

TEST_CASE("schur_weyl_sum basics") {
    auto a1 = RootSystem::parse("A1");
    auto s = schur_weyl_sum(a1, Weight({1}));
    CHECK(s == sub(GroupLaurentPoly::monomial(a1, Weight({1}), 1), GroupLaurentPoly::monomial(a1, Weight({-1}), 1)));

    // weights on a wall cancel
    auto a2 = RootSystem::parse("A2");
    CHECK(schur_weyl_sum(a2, Weight({0, 3})).is_zero());
    CHECK(schur_weyl_sum(a2, Weight({2, 0})).is_zero());

    // leading term of S(lambda) is e^lambda for dominant regular lambda
    std::mt19937_64 rng(5);
    for (const char* name : {"A2", "A3", "B2", "B3", "G2", "C3", "D4"}) {
        auto rs = RootSystem::parse(name);
        for (int it = 0; it < 10; ++it) {
            Weight la = random_dominant_regular(rs, rng, 4);
            auto f = schur_weyl_sum(rs, la);
            CHECK(Weight(f.leading().first) == la);
            CHECK(f.leading().second == 1);
            CHECK(symmetry_check(f) == Symmetry::Alternating);
        }
    }
}

TEST_CASE("schur_weyl_sum agrees with the GL determinant expansion") {
    auto a2 = RootSystem::parse("A2");
    CHECK(schur_weyl_sum(a2, Weight({1, 1})) == gl_determinant_laurent(a2, {2, 1, 0}));
    CHECK(schur_weyl_sum(a2, Weight({2, 1})) == gl_determinant_laurent(a2, {3, 1, 0}));
    CHECK(schur_weyl_sum(a2, Weight({4, 2})) == gl_determinant_laurent(a2, {6, 2, 0}));
    auto a3 = RootSystem::parse("A3");
    CHECK(schur_weyl_sum(a3, Weight({1, 1, 1})) == gl_determinant_laurent(a3, {3, 2, 1, 0}));
    CHECK(schur_weyl_sum(a3, Weight({2, 1, 3})) == gl_determinant_laurent(a3, {6, 4, 3, 0}));
}

TEST_CASE("scaling identity [d]S(lambda) = S(d lambda)") {
    std::mt19937_64 rng(6);
    for (const char* name : {"A1", "A2", "B2", "G2"}) {
        auto rs = RootSystem::parse(name);
        for (int it = 0; it < 10; ++it) {
            Weight la = random_dominant_regular(rs, rng, 4);
            for (Coord d : {2, 3}) CHECK(scale(schur_weyl_sum(rs, la), d) == schur_weyl_sum(rs, la * d));
        }
    }
}

TEST_CASE("denominator product equals the alternating sum") {
    for (const char* name : {"A1", "A2", "A3", "B2", "B3", "G2"}) {
        CAPTURE(name);
        auto rs = RootSystem::parse(name);
        WeylVectors v = weyl_vectors(*rs);
        for (Coord d : {1, 2}) {
            CHECK(denominator_product(rs, d, false) == schur_weyl_sum(rs, v.rho * d));
            CHECK(denominator_product(rs, d, true) == schur_weyl_sum(rs, v.rho_tilde * d));
        }
    }
    CHECK_THROWS_AS(denominator_product(RootSystem::parse("A1"), 0, false), std::invalid_argument);
}

TEST_CASE("character: GL(2) quotients") {
    auto a1 = RootSystem::parse("A1");
    // chi_{(a,0)} restricted to SL(2): e^{a} + e^{a-2} + ... + e^{-a}
    for (Coord a : {1, 2, 3, 5}) {
        auto chi = character(a1, Weight({a}));
        CHECK(chi.num_terms() == static_cast<std::size_t>(a + 1));
        for (Coord k = -a; k <= a; k += 2) CHECK(chi.coeff(Weight({k})) == 1);
    }
}

TEST_CASE("character: examples and invariants") {
    auto a2 = RootSystem::parse("A2");
    CHECK(character(a2, Weight({0, 0})).is_one());
    auto std3 = character(a2, Weight({1, 0}));
    CHECK(std3.num_terms() == 3);
    for (const auto& [m, c] : std3.terms()) CHECK(c == 1);

    std::mt19937_64 rng(8);
    for (const char* name : {"A2", "B2", "G2", "A3"}) {
        CAPTURE(name);
        auto rs = RootSystem::parse(name);
        for (int it = 0; it < 8; ++it) {
            std::uniform_int_distribution<Coord> cd(0, 3);
            Weight hw = Weight::zero(rs->rank());
            for (int i = 0; i < rs->rank(); ++i) hw[i] = cd(rng);
            auto chi = character(rs, hw);
            CHECK(symmetry_check(chi) == Symmetry::Invariant);
            CHECK(Weight(chi.leading().first) == hw);
            for (const auto& [m, c] : chi.terms()) CHECK(c > 0);
            CHECK(dimension_of(chi) == weyl_dimension(*rs, hw));
        }
    }
    CHECK_THROWS_AS(character(a2, Weight({-1, 0})), std::invalid_argument);
}

TEST_CASE("big_D_and_C on GL(3) weights") {
    auto a2 = RootSystem::parse("A2");
    // GL(3) lambda = (3,1,0), coords (2,1): d = 1, D = S(rho), C = x1+x2+x3
    auto r1 = big_D_and_C(a2, Weight({2, 1}), true);
    CHECK(r1.d_lambda == 1);
    CHECK(r1.D == schur_weyl_sum(a2, Weight({1, 1})));
    GroupLaurentPoly std3(a2);
    std3.add_term(Weight({1, 0}), 1);   // x1
    std3.add_term(Weight({-1, 1}), 1);  // x2
    std3.add_term(Weight({0, -1}), 1);  // x3
    CHECK(r1.C == std3);
    CHECK_FALSE(r1.nmfg_flag);

    // GL(3) lambda = (6,2,0), coords (4,2): d = 2, D = S(2 rho)
    auto r2 = big_D_and_C(a2, Weight({4, 2}), true);
    CHECK(r2.d_lambda == 2);
    CHECK(r2.D == schur_weyl_sum(a2, Weight({2, 2})));
    CHECK(mul(r2.C, r2.D) == schur_weyl_sum(a2, Weight({4, 2})));
    CHECK(symmetry_check(r2.C) == Symmetry::Invariant);

    // multiples of rho return C = 1 with the branch flag
    auto r3 = big_D_and_C(a2, Weight({3, 3}));
    CHECK(r3.C.is_one());
    CHECK(r3.branch.kind == LatticeClass::Kind::MultipleOfRho);
    CHECK(r3.D == schur_weyl_sum(a2, Weight({3, 3})));
}

TEST_CASE("big_D_and_C dual branch on B2") {
    auto b2 = RootSystem::parse("B2");
    int sc = -1, lc = -1;
    for (int i = 0; i < 2; ++i) (b2->simple_root_is_long(i) ? lc : sc) = i;
    Weight la = Weight::zero(2);
    la[sc] = 4;
    la[lc] = 1;
    auto r = big_D_and_C(b2, la, true);
    CHECK(r.branch.dual_branch());
    REQUIRE(r.d_star.has_value());
    CHECK(*r.d_star == 1);
    CHECK(r.D == schur_weyl_sum(b2, weyl_vectors(*b2).rho_tilde));
    CHECK(mul(r.C, r.D) == schur_weyl_sum(b2, la));

    Weight rt = weyl_vectors(*b2).rho_tilde;
    auto rmul = big_D_and_C(b2, rt * 2);
    CHECK(rmul.C.is_one());
    CHECK(rmul.branch.kind == LatticeClass::Kind::MultipleOfRhoTilde);
}

TEST_CASE("C*D = S and C invariant across the suite") {
    std::mt19937_64 rng(17);
    for (const char* name : {"A2", "A3", "B2", "B3", "G2", "C3"}) {
        CAPTURE(name);
        auto rs = RootSystem::parse(name);
        for (int it = 0; it < 8; ++it) {
            Weight la = random_dominant_regular(rs, rng, 4);
            auto r = big_D_and_C(rs, la, true);
            CHECK(mul(r.C, r.D) == schur_weyl_sum(rs, la));
            CHECK(symmetry_check(r.C) != Symmetry::Neither);
            if (!r.C.is_one()) CHECK(symmetry_check(r.C) == Symmetry::Invariant);
        }
    }
}

TEST_CASE("NMFG shape detection on G2") {
    auto g2 = RootSystem::parse("G2");
    int sc = -1, lc = -1;
    for (int i = 0; i < 2; ++i) (g2->simple_root_is_long(i) ? lc : sc) = i;
    // u = 3, v = 2, d = gcd(3,2) = 1: m(Phi)v = 6 >= u+d = 4 and u = 3 >= v+d = 3
    Weight la = Weight::zero(2);
    la[sc] = 3 + 1;
    la[lc] = 2 + 1;
    CHECK(nmfg_shape(*g2, la));
    CHECK(big_D_and_C(g2, la).nmfg_flag);
    // u = 1, v = 1, d = 1: u >= v + d fails
    Weight lb = Weight::zero(2);
    lb[sc] = 2;
    lb[lc] = 2;
    CHECK_FALSE(nmfg_shape(*g2, lb));
    CHECK_FALSE(nmfg_shape(*RootSystem::parse("A2"), Weight({2, 1})));
}

TEST_CASE("leading cofactor terms match the expansion") {
    auto a2 = RootSystem::parse("A2");
    // GL(3) lambda = (3,1,0): x1-degrees 3 and 1, gap = m_0(lambda) = 2
    auto lt = leading_cofactor_terms(a2, Weight({2, 1}), 0);
    CHECK(lt.top_degree - lt.second_degree == Rat(2));

    std::mt19937_64 rng(23);
    for (const char* name : {"A1", "A2", "A3", "B2", "B3", "G2", "C3"}) {
        CAPTURE(name);
        auto rs = RootSystem::parse(name);
        for (int a : rs->corner_roots()) {
            for (int it = 0; it < 50; ++it) {
                Weight la = random_dominant_regular(rs, rng, 4);
                auto t = leading_cofactor_terms(rs, la, a);
                auto ce = cofactor_expand(schur_weyl_sum(rs, la), a);
                // top piece is S(lambda^alpha)
                CHECK(ce.degree(ce.top_scaled()) == t.top_degree);
                CHECK(ce.leading_coefficient() == schur_weyl_sum(ce.pieces.rbegin()->second.root_system(), t.top_weight));
                // second nonzero piece sits exactly m_alpha(lambda) below and is -S((s_a la)^alpha)
                auto it2 = ce.pieces.rbegin();
                ++it2;
                REQUIRE(it2 != ce.pieces.rend());
                CHECK(ce.degree(it2->first) == t.second_degree);
                CHECK(it2->second == -schur_weyl_sum(it2->second.root_system(), t.second_weight));
                // Eisenstein window: nothing strictly between the two degrees
                for (const auto& [sd, piece] : ce.pieces) {
                    Rat deg = ce.degree(sd);
                    CHECK_FALSE((deg > t.second_degree && deg < t.top_degree));
                }
            }
        }
    }
}

TEST_CASE("leading cofactor second weight formulas") {
    // GL(r): lambda^(2) = m_1(lambda) omega_1 + lambda^(1)
    auto a3 = RootSystem::parse("A3");
    Weight la({3, 1, 2});
    auto t = leading_cofactor_terms(a3, la, 0);
    Weight expect = t.top_weight;
    expect[0] += la[0];
    CHECK(t.second_weight == expect);

    // G2 long corner: multiplier |m_{alpha_n}(alpha)| = 3
    auto g2 = RootSystem::parse("G2");
    int lc = -1;
    for (int i = 0; i < 2; ++i)
        if (g2->simple_root_is_long(i)) lc = i;
    Weight mu({2, 1});
    auto tg = leading_cofactor_terms(g2, mu, lc);
    CHECK(tg.second_weight[0] - tg.top_weight[0] == 3 * mu[lc]);
}

TEST_CASE("tensor_decompose") {
    auto a1 = RootSystem::parse("A1");
    auto cg = tensor_decompose(a1, {Weight({1}), Weight({1})});
    CHECK(cg == std::map<Weight, Coord>{{Weight({2}), 1}, {Weight({0}), 1}});

    auto a2 = RootSystem::parse("A2");
    auto r = tensor_decompose(a2, {Weight({1, 0}), Weight({0, 1})});
    CHECK(r == std::map<Weight, Coord>{{Weight({1, 1}), 1}, {Weight({0, 0}), 1}});

    // V tensor trivial = V
    auto v = tensor_decompose(a2, {Weight({2, 1}), Weight({0, 0})});
    CHECK(v == std::map<Weight, Coord>{{Weight({2, 1}), 1}});

    // single factor round-trips
    std::mt19937_64 rng(31);
    for (int it = 0; it < 5; ++it) {
        Weight hw = random_dominant_regular(a2, rng, 3);
        CHECK(tensor_decompose(a2, {hw}) == std::map<Weight, Coord>{{hw, 1}});
    }

    // dimensions add up in a triple product
    CharacterCache cache(a2);
    std::vector<Weight> fs = {Weight({1, 0}), Weight({1, 0}), Weight({0, 1})};
    auto dec = tensor_decompose(a2, fs, &cache);
    Int total = 1;
    for (const auto& f : fs) total *= dimension_of(cache.get(f));
    Int sum = 0;
    for (const auto& [hw, mult] : dec) sum += mult * dimension_of(cache.get(hw));
    CHECK(sum == total);
}
