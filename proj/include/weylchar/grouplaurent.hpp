#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylchar/bigint.hpp"
#include "weylchar/rootsys.hpp"
#include "weylchar/weight.hpp"

namespace weylchar {

// Comparator putting the term-order-largest exponent first.
struct TermGreater {
    const RootSystem* rs = nullptr;
    bool operator()(const std::vector<Coord>& a, const std::vector<Coord>& b) const {
        return rs->term_less(b, a);
    }
};

// Element of the group algebra Z[P]: finitely supported map e^mu -> coefficient.
class GroupLaurentPoly {
public:
    using TermMap = std::map<std::vector<Coord>, Int, TermGreater>;

    explicit GroupLaurentPoly(RootSystemPtr rs) : rs_(std::move(rs)), terms_(TermGreater{rs_.get()}) {}

    static GroupLaurentPoly zero(RootSystemPtr rs) { return GroupLaurentPoly(std::move(rs)); }
    static GroupLaurentPoly constant(RootSystemPtr rs, Int c);
    static GroupLaurentPoly monomial(RootSystemPtr rs, const Weight& mu, Int c);

    const RootSystemPtr& root_system() const { return rs_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->second == 1 && Weight(terms_.begin()->first).is_zero();
    }
    // Single term, any exponent (a unit of the Laurent ring up to scalars).
    bool is_monomial() const { return terms_.size() == 1; }

    void add_term(const Weight& mu, const Int& c);
    Int coeff(const Weight& mu) const;

    // Leading term with respect to the ambient term order; poly must be nonzero.
    const std::pair<const std::vector<Coord>, Int>& leading() const { return *terms_.begin(); }

    GroupLaurentPoly operator-() const;
    bool operator==(const GroupLaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const GroupLaurentPoly& o) const { return !(*this == o); }

    std::string str() const;
    // Canonical term list "c1*e(c,c,..);c2*e(..)" sorted leading-first; used for
    // hashing and report serialization.
    std::string canonical_string() const;

private:
    RootSystemPtr rs_;
    TermMap terms_;
};

GroupLaurentPoly add(const GroupLaurentPoly& f, const GroupLaurentPoly& g);
GroupLaurentPoly sub(const GroupLaurentPoly& f, const GroupLaurentPoly& g);
GroupLaurentPoly mul(const GroupLaurentPoly& f, const GroupLaurentPoly& g);
GroupLaurentPoly mul_term(const GroupLaurentPoly& f, const Weight& mu, const Int& c);

enum class RingOp { Add, Sub, Mul };
GroupLaurentPoly ring_arith(const GroupLaurentPoly& f, const GroupLaurentPoly& g, RingOp op);

// Exact division in Z[P]; absent when no quotient exists (including when the
// quotient would need rational coefficients).
std::optional<GroupLaurentPoly> exact_divide(const GroupLaurentPoly& f, const GroupLaurentPoly& g);

GroupLaurentPoly weyl_act(const WeylElement& w, const GroupLaurentPoly& f);

// The scaling map [d]: every exponent mu becomes d*mu.
GroupLaurentPoly scale(const GroupLaurentPoly& f, Coord d);

enum class Symmetry { Invariant, Alternating, Neither };
Symmetry symmetry_check(const GroupLaurentPoly& f);
std::string symmetry_name(Symmetry s);

// Canonical form under the unit group of C[P]: translate so the coordinate-wise
// minimum exponent is zero and make the leading coefficient positive.
GroupLaurentPoly unit_normalize(const GroupLaurentPoly& f);

// Graded decomposition along a corner root alpha.  Piece keys are the degrees
// <omega*_alpha, mu> scaled by `den` so they stay integral; the pieces live over
// the corner subsystem.
struct CofactorExpansion {
    RootSystemPtr rs;
    int alpha = -1;
    Coord den = 1;
    std::map<Coord, GroupLaurentPoly> pieces;  // scaled degree -> coefficient

    Coord top_scaled() const { return pieces.rbegin()->first; }
    Rat degree(Coord scaled) const { return Rat(scaled) / den; }
    const GroupLaurentPoly& leading_coefficient() const { return pieces.rbegin()->second; }
};

CofactorExpansion cofactor_expand(const GroupLaurentPoly& f, int alpha);
GroupLaurentPoly reassemble(const CofactorExpansion& ce);

bool is_monic_along(const GroupLaurentPoly& f, int alpha);

}  // namespace weylchar
