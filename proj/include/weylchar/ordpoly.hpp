#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "weylchar/bigint.hpp"
#include "weylchar/grouplaurent.hpp"

namespace weylchar {

// Integer polynomial in nvars variables, exponents >= 0.  `shift` records the
// monomial e^{-mu_min} applied when converting from Z[P]; pure bookkeeping.
class OrdinaryPoly {
public:
    using TermMap = std::map<std::vector<Coord>, Int>;

    OrdinaryPoly() = default;
    explicit OrdinaryPoly(int nvars) : nvars_(nvars) {}
    static OrdinaryPoly constant(int nvars, Int c);
    static OrdinaryPoly variable(int nvars, int var, Coord power = 1);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    bool is_constant() const;
    bool is_single_term() const { return terms_.size() == 1; }

    const std::vector<Coord>& shift() const { return shift_; }
    void set_shift(std::vector<Coord> s) { shift_ = std::move(s); }

    void add_term(const std::vector<Coord>& expo, const Int& c);
    Int coeff(const std::vector<Coord>& expo) const;

    Coord degree(int var) const;            // -1 for the zero polynomial
    std::vector<Coord> degrees() const;     // per-variable degrees
    Coord total_degree() const;
    bool is_homogeneous() const;
    std::vector<int> effective_vars() const;  // variables with positive degree

    // Leading term in graded-lex order (total degree, then lex).
    const std::pair<const std::vector<Coord>, Int>& leading() const;

    Int content() const;  // gcd of coefficients, sign of the leading one
    OrdinaryPoly primitive_part() const;

    OrdinaryPoly operator-() const;
    bool operator==(const OrdinaryPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const OrdinaryPoly& o) const { return !(*this == o); }

    std::string str() const;

private:
    int nvars_ = 0;
    TermMap terms_;
    std::vector<Coord> shift_;
};

OrdinaryPoly add(const OrdinaryPoly& f, const OrdinaryPoly& g);
OrdinaryPoly sub(const OrdinaryPoly& f, const OrdinaryPoly& g);
OrdinaryPoly mul(const OrdinaryPoly& f, const OrdinaryPoly& g);
OrdinaryPoly mul_scalar(const OrdinaryPoly& f, const Int& c);
std::optional<OrdinaryPoly> exact_divide(const OrdinaryPoly& f, const OrdinaryPoly& g);
OrdinaryPoly derivative(const OrdinaryPoly& f, int var);

// Substitutes x_var := value, keeping nvars.
OrdinaryPoly substitute_value(const OrdinaryPoly& f, int var, const Int& value);
// x_i := a_i u + b_i v + c_i for every variable; result is bivariate in (u, v).
OrdinaryPoly substitute_affine_bivariate(const OrdinaryPoly& f, const std::vector<Coord>& a,
                                         const std::vector<Coord>& b, const std::vector<Coord>& c);

// Divides out each variable's minimum exponent; the removed monomial is returned.
std::vector<Coord> strip_monomial(OrdinaryPoly& f);

// Conversion bases for Z[P] -> ordinary polynomials.
enum class PolyBasis {
    FundamentalCoords,  // one variable per fundamental weight, shifted to >= 0
    AmbientX,           // type A only: GL(r+1) x-variables via the homogeneous lift
};

OrdinaryPoly laurent_to_poly(const GroupLaurentPoly& f, PolyBasis basis);
// Reads exponent vectors back as fundamental-weight coordinates (ignores shift).
GroupLaurentPoly poly_to_laurent(const OrdinaryPoly& p, const RootSystemPtr& rs);

// Primitive multivariate gcd (subresultant-style primitive PRS); the result has
// a positive leading coefficient.
OrdinaryPoly gcd_poly(const OrdinaryPoly& f, const OrdinaryPoly& g);

// True iff gcd(p, dp/dx_i for all i) is a monomial times a constant.  Sound
// certificates come from mod-p univariate specializations; an exact gcd run
// confirms any negative answer.
bool separability_check(const OrdinaryPoly& p, std::uint64_t seed = 0);

}  // namespace weylchar
