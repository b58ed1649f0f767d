#include "weylchar/cyclotomic.hpp"

#include <random>

#include "doctest.h"

using namespace weylchar;

namespace {
bool is_prime_power(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        return n == 1;
    }
    return true;  // prime
}
}  // namespace

TEST_CASE("classical cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == UniPoly{-1, 1});
    CHECK(cyclotomic_poly(2) == UniPoly{1, 1});
    CHECK(cyclotomic_poly(4) == UniPoly{1, 0, 1});
    CHECK(cyclotomic_poly(6) == UniPoly{1, -1, 1});
    CHECK(cyclotomic_poly(12) == UniPoly{1, 0, -1, 0, 1});
    // product over divisors reassembles x^n - 1
    for (int n : {6, 8, 12, 30}) {
        UniPoly prod{Int(1)};
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) prod = uni_mul(prod, cyclotomic_poly(d));
        UniPoly expect(static_cast<std::size_t>(n) + 1, Int(0));
        expect[0] = -1;
        expect[static_cast<std::size_t>(n)] = 1;
        CHECK(prod == expect);
    }
}

TEST_CASE("phi_quotient") {
    // Phi_e(1) = e
    for (long e : {2, 3, 6, 10, 12}) {
        UniPoly q = phi_quotient(e, {});
        CHECK(uni_eval(q, 1) == e);
    }
    // Phi_{p^k : p^{k-1}}(1) = p
    CHECK(uni_eval(phi_quotient(8, {4}), 1) == 2);
    CHECK(uni_eval(phi_quotient(9, {3}), 1) == 3);
    CHECK(uni_eval(phi_quotient(25, {5}), 1) == 5);
    // Phi_{6:2,3} = x^2 - x + 1
    CHECK(phi_quotient(6, {2, 3}) == UniPoly{1, -1, 1});
    CHECK(uni_eval(phi_quotient(6, {2, 3}), 1) == 1);

    // reassembly: phi_quotient(e, fs) * prod Phi_{f_i} = Phi_e
    for (long e : {12, 30}) {
        std::vector<long> fs = {3, 4};
        if (e == 30) fs = {5, 6};
        UniPoly prod = phi_quotient(e, fs);
        for (long f : fs) {
            UniPoly den(static_cast<std::size_t>(f), Int(1));
            prod = uni_mul(prod, den);
        }
        UniPoly full(static_cast<std::size_t>(e), Int(1));
        CHECK(prod == full);
    }

    CHECK_THROWS_AS(phi_quotient(12, {4, 6}), std::invalid_argument);  // not coprime
    CHECK_THROWS_AS(phi_quotient(12, {5}), std::invalid_argument);     // not a divisor
}

TEST_CASE("cyclo_norm") {
    // n=4: N(1 - i) = 2
    CycloElem a4 = cyclo_sub(CycloElem::one(4), CycloElem::root_power(4, 1));
    CHECK(cyclo_norm(a4) == 2);
    // n=6: 1 - zeta_6 is a unit
    CycloElem a6 = cyclo_sub(CycloElem::one(6), CycloElem::root_power(6, 1));
    CHECK(abs(cyclo_norm(a6)) == 1);
    // n=5: norm 5
    CycloElem a5 = cyclo_sub(CycloElem::one(5), CycloElem::root_power(5, 1));
    CHECK(cyclo_norm(a5) == 5);
}

TEST_CASE("cyclo_norm is multiplicative") {
    std::mt19937_64 rng(404);
    std::uniform_int_distribution<long> c(-3, 3);
    for (int n : {5, 8, 12, 15, 24}) {
        for (int it = 0; it < 10; ++it) {
            UniPoly pa, pb;
            for (int k = 0; k < 4; ++k) pa.push_back(Int(c(rng)));
            for (int k = 0; k < 4; ++k) pb.push_back(Int(c(rng)));
            uni_trim(pa);
            uni_trim(pb);
            CycloElem a = CycloElem::from_poly(n, pa);
            CycloElem b = CycloElem::from_poly(n, pb);
            CHECK(cyclo_norm(cyclo_mul(a, b)) == cyclo_norm(a) * cyclo_norm(b));
        }
    }
}

TEST_CASE("unit_one_minus_zeta matches the prime-power dichotomy up to 100") {
    CHECK(unit_one_minus_zeta(6));
    CHECK_FALSE(unit_one_minus_zeta(9));
    CHECK_FALSE(unit_one_minus_zeta(2));
    for (int e = 2; e <= 100; ++e) {
        CAPTURE(e);
        CHECK(unit_one_minus_zeta(e) == !is_prime_power(e));
    }
}

TEST_CASE("arith_obstruction_report examples") {
    auto r1 = arith_obstruction_report(4, 6, 2);
    CHECK(r1.conclusion == ObstructionReport::Conclusion::ContradictionConfirmed);
    CHECK(r1.all_rhs_units);
    CHECK(r1.bipartitions_checked == 1);  // mu(4,2) = {i, -i}: one split
    REQUIRE(r1.witness.has_value());
    CHECK(r1.witness->prime == 2);

    auto r2 = arith_obstruction_report(4, 8, 2);
    CHECK(r2.conclusion == ObstructionReport::Conclusion::NoObstruction);
    REQUIRE(r2.no_obstruction_split.has_value());
    CHECK_FALSE(r2.no_obstruction_split->first.empty());
    CHECK_FALSE(r2.no_obstruction_split->second.empty());

    CHECK_THROWS_AS(arith_obstruction_report(4, 4, 4), std::invalid_argument);   // e = d
    CHECK_THROWS_AS(arith_obstruction_report(6, 4, 2), std::invalid_argument);   // d does not divide e... (it does; f fails)
    CHECK_THROWS_AS(arith_obstruction_report(400, 6, 2), std::invalid_argument); // cap
}

TEST_CASE("obstruction conclusion matches the gcd predicate on a small grid") {
    for (long d = 1; d <= 4; ++d)
        for (long e = 2 * d; e <= 12; e += d)
            for (long f = d; f <= 12; f += d) {
                if (e % d || f % d || e == d) continue;
                CAPTURE(e);
                CAPTURE(f);
                CAPTURE(d);
                auto r = arith_obstruction_report(e, f, d);
                bool expect_contradiction = ll_gcd(e, f) == d;
                CHECK((r.conclusion == ObstructionReport::Conclusion::ContradictionConfirmed) ==
                      expect_contradiction);
            }
}
