#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylchar/ordpoly.hpp"

namespace weylchar {

struct PolyFactorOptions {
    Coord max_abs_degree = 40;    // total-degree cap for the kernel method
    Coord max_kron_degree = 200;  // univariate degree cap after Kronecker substitution
    int trials = 3;               // independent specializations that must agree
    int max_retries = 8;          // fresh substitutions allowed per trial slot
    std::uint64_t seed = 1;
    std::size_t max_subsets = 1u << 22;
    bool assume_squarefree = false;  // skip the internal separability re-check
};

struct DegreeCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SpecializationDisagreement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Number of absolutely irreducible factors of a squarefree non-unit polynomial:
// random affine specialization to two variables, then the dimension of the
// kernel of the Ruppert/Gao linear system, computed exactly (modular elimination
// certified by exact kernel vectors).
int absolute_factor_count(const OrdinaryPoly& p, const PolyFactorOptions& opts = {});

struct RationalFactorization {
    Int content = 1;
    std::vector<std::pair<OrdinaryPoly, int>> factors;  // primitive, positive leading coeff
    bool skipped = false;
    std::string skip_reason;
};

// Complete factorization into Q-irreducibles: squarefree reduction, Kronecker
// substitution, univariate factorization over Z, subset recombination validated
// by exact division.  Homogeneous inputs are dehomogenized first.
RationalFactorization factor_over_rationals(const OrdinaryPoly& p, const PolyFactorOptions& opts = {});

enum class FactorVerdict { AbsolutelyIrreducible, Reducible, Unit, Skipped };
std::string verdict_name(FactorVerdict v);

struct FactorReport {
    std::string input_id;
    std::optional<RationalFactorization> q_factors;
    int absolute_count = 0;
    bool separable = false;
    FactorVerdict verdict = FactorVerdict::Skipped;
    std::vector<std::string> witnesses;  // serialized factors when reducible
    int trials = 0;
    std::string note;  // cap/disagreement details for skipped entries
};

FactorReport analyze_poly(const std::string& input_id, const OrdinaryPoly& p, const PolyFactorOptions& opts = {},
                          bool with_rational_factors = false);

}  // namespace weylchar
