#include "weylchar/grouplaurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylchar {

GroupLaurentPoly GroupLaurentPoly::constant(RootSystemPtr rs, Int c) {
    GroupLaurentPoly f(std::move(rs));
    if (c != 0) f.terms_.emplace(std::vector<Coord>(static_cast<std::size_t>(f.rs_->rank()), 0), std::move(c));
    return f;
}

GroupLaurentPoly GroupLaurentPoly::monomial(RootSystemPtr rs, const Weight& mu, Int c) {
    GroupLaurentPoly f(std::move(rs));
    if (c != 0) f.terms_.emplace(mu.coords, std::move(c));
    return f;
}

void GroupLaurentPoly::add_term(const Weight& mu, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(mu.coords);
    if (it == terms_.end()) {
        terms_.emplace(mu.coords, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Int GroupLaurentPoly::coeff(const Weight& mu) const {
    auto it = terms_.find(mu.coords);
    return it == terms_.end() ? Int(0) : it->second;
}

GroupLaurentPoly GroupLaurentPoly::operator-() const {
    GroupLaurentPoly r(rs_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

std::string GroupLaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += (c > 0 ? " + " : " - ");
        else if (c < 0) s += "-";
        Int a = abs(c);
        if (a != 1 || Weight(m).is_zero()) s += a.get_str();
        if (!Weight(m).is_zero()) {
            if (a != 1) s += "*";
            s += "e" + Weight(m).str();
        }
    }
    return s;
}

std::string GroupLaurentPoly::canonical_string() const {
    std::string s;
    for (const auto& [m, c] : terms_) {
        s += c.get_str();
        s += "*e";
        s += Weight(m).str();
        s += ";";
    }
    return s;
}

namespace {
void require_same_rs(const GroupLaurentPoly& f, const GroupLaurentPoly& g) {
    if (f.root_system().get() != g.root_system().get())
        throw std::invalid_argument("operands belong to different root systems");
}
}  // namespace

GroupLaurentPoly add(const GroupLaurentPoly& f, const GroupLaurentPoly& g) {
    require_same_rs(f, g);
    GroupLaurentPoly r = f;
    for (const auto& [m, c] : g.terms()) r.add_term(Weight(m), c);
    return r;
}

GroupLaurentPoly sub(const GroupLaurentPoly& f, const GroupLaurentPoly& g) {
    require_same_rs(f, g);
    GroupLaurentPoly r = f;
    for (const auto& [m, c] : g.terms()) r.add_term(Weight(m), -c);
    return r;
}

GroupLaurentPoly mul(const GroupLaurentPoly& f, const GroupLaurentPoly& g) {
    require_same_rs(f, g);
    GroupLaurentPoly r(f.root_system());
    const GroupLaurentPoly& small = f.num_terms() <= g.num_terms() ? f : g;
    const GroupLaurentPoly& large = f.num_terms() <= g.num_terms() ? g : f;
    for (const auto& [ms, cs] : small.terms()) {
        Weight w(ms);
        for (const auto& [ml, cl] : large.terms()) r.add_term(Weight(ml) + w, cs * cl);
    }
    return r;
}

GroupLaurentPoly mul_term(const GroupLaurentPoly& f, const Weight& mu, const Int& c) {
    GroupLaurentPoly r(f.root_system());
    if (c == 0) return r;
    for (const auto& [m, a] : f.terms()) r.add_term(Weight(m) + mu, a * c);
    return r;
}

GroupLaurentPoly ring_arith(const GroupLaurentPoly& f, const GroupLaurentPoly& g, RingOp op) {
    switch (op) {
        case RingOp::Add: return add(f, g);
        case RingOp::Sub: return sub(f, g);
        case RingOp::Mul: return mul(f, g);
    }
    throw std::logic_error("bad op");
}

namespace {
struct Box {
    std::vector<Coord> lo, hi;
    bool contains(const std::vector<Coord>& v) const {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] < lo[i] || v[i] > hi[i]) return false;
        return true;
    }
};

// Coordinate-wise support bounds of any exact quotient f/g: both the min and
// the max exponent of a product add up coordinate-wise.
std::optional<Box> quotient_box(const GroupLaurentPoly& f, const GroupLaurentPoly& g) {
    int rank = f.root_system()->rank();
    std::vector<Coord> fmin, fmax, gmin, gmax;
    auto bounds = [rank](const GroupLaurentPoly& p, std::vector<Coord>& lo, std::vector<Coord>& hi) {
        lo.assign(static_cast<std::size_t>(rank), 0);
        hi.assign(static_cast<std::size_t>(rank), 0);
        bool first = true;
        for (const auto& [m, c] : p.terms()) {
            for (int i = 0; i < rank; ++i) {
                Coord v = m[static_cast<std::size_t>(i)];
                if (first || v < lo[static_cast<std::size_t>(i)]) lo[static_cast<std::size_t>(i)] = v;
                if (first || v > hi[static_cast<std::size_t>(i)]) hi[static_cast<std::size_t>(i)] = v;
            }
            first = false;
        }
    };
    bounds(f, fmin, fmax);
    bounds(g, gmin, gmax);
    Box b;
    b.lo.resize(static_cast<std::size_t>(rank));
    b.hi.resize(static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i) {
        b.lo[static_cast<std::size_t>(i)] = fmin[static_cast<std::size_t>(i)] - gmin[static_cast<std::size_t>(i)];
        b.hi[static_cast<std::size_t>(i)] = fmax[static_cast<std::size_t>(i)] - gmax[static_cast<std::size_t>(i)];
        if (b.lo[static_cast<std::size_t>(i)] > b.hi[static_cast<std::size_t>(i)]) return std::nullopt;
    }
    return b;
}
}  // namespace

std::optional<GroupLaurentPoly> exact_divide(const GroupLaurentPoly& f, const GroupLaurentPoly& g) {
    require_same_rs(f, g);
    if (g.is_zero()) throw std::invalid_argument("division by zero");
    GroupLaurentPoly q(f.root_system());
    if (f.is_zero()) return q;
    auto box = quotient_box(f, g);
    if (!box) return std::nullopt;

    GroupLaurentPoly r = f;
    const auto& glead = g.leading();
    int rank = f.root_system()->rank();
    while (!r.is_zero()) {
        const auto& rlead = r.leading();
        std::vector<Coord> t(static_cast<std::size_t>(rank));
        for (int i = 0; i < rank; ++i)
            t[static_cast<std::size_t>(i)] = rlead.first[static_cast<std::size_t>(i)] - glead.first[static_cast<std::size_t>(i)];
        if (!box->contains(t)) return std::nullopt;
        Int c, rem;
        mpz_tdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), rlead.second.get_mpz_t(), glead.second.get_mpz_t());
        if (rem != 0) return std::nullopt;
        Weight tw(t);
        q.add_term(tw, c);
        r = sub(r, mul_term(g, tw, c));
    }
    return q;
}

GroupLaurentPoly weyl_act(const WeylElement& w, const GroupLaurentPoly& f) {
    GroupLaurentPoly r(f.root_system());
    const RootSystem& rs = *f.root_system();
    for (const auto& [m, c] : f.terms()) r.add_term(rs.apply(w, Weight(m)), c);
    return r;
}

GroupLaurentPoly scale(const GroupLaurentPoly& f, Coord d) {
    if (d < 1) throw std::invalid_argument("scale requires d >= 1");
    GroupLaurentPoly r(f.root_system());
    for (const auto& [m, c] : f.terms()) r.add_term(Weight(m) * d, c);
    return r;
}

Symmetry symmetry_check(const GroupLaurentPoly& f) {
    const RootSystem& rs = *f.root_system();
    bool invariant = true, alternating = !f.is_zero();
    for (int i = 0; i < rs.rank() && (invariant || alternating); ++i) {
        GroupLaurentPoly s = weyl_act(rs.simple_reflection(i), f);
        if (s != f) invariant = false;
        if (s != -f) alternating = false;
    }
    if (invariant) return Symmetry::Invariant;
    if (alternating) return Symmetry::Alternating;
    return Symmetry::Neither;
}

std::string symmetry_name(Symmetry s) {
    switch (s) {
        case Symmetry::Invariant: return "invariant";
        case Symmetry::Alternating: return "alternating";
        case Symmetry::Neither: return "neither";
    }
    return "?";
}

GroupLaurentPoly unit_normalize(const GroupLaurentPoly& f) {
    if (f.is_zero()) return f;
    int rank = f.root_system()->rank();
    std::vector<Coord> mn;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        if (first) mn = m;
        else
            for (int i = 0; i < rank; ++i)
                mn[static_cast<std::size_t>(i)] = std::min(mn[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(i)]);
        first = false;
    }
    Weight shift = -Weight(mn);
    GroupLaurentPoly r(f.root_system());
    for (const auto& [m, c] : f.terms()) r.add_term(Weight(m) + shift, c);
    if (r.leading().second < 0) return -r;
    return r;
}

CofactorExpansion cofactor_expand(const GroupLaurentPoly& f, int alpha) {
    const RootSystemPtr& rs = f.root_system();
    const CornerData& cd = rs->corner_data(alpha);  // throws if not a corner
    int rank = rs->rank();

    CofactorExpansion ce;
    ce.rs = rs;
    ce.alpha = alpha;
    Coord den = 1;
    for (int b = 0; b < rank; ++b) {
        Int d = rs->pairing_w(alpha, b).get_den();
        den = ll_lcm(den, to_ll(d));
    }
    ce.den = den;
    std::vector<Coord> dw(static_cast<std::size_t>(rank));
    for (int b = 0; b < rank; ++b) {
        Rat v = rs->pairing_w(alpha, b) * den;
        dw[static_cast<std::size_t>(b)] = to_ll(rat_to_int(v));
    }
    for (const auto& [m, c] : f.terms()) {
        Coord sdeg = 0;
        for (int b = 0; b < rank; ++b) sdeg += dw[static_cast<std::size_t>(b)] * m[static_cast<std::size_t>(b)];
        auto it = ce.pieces.find(sdeg);
        if (it == ce.pieces.end()) it = ce.pieces.emplace(sdeg, GroupLaurentPoly(cd.sub)).first;
        it->second.add_term(rs->project(alpha, Weight(m)), c);
    }
    return ce;
}

GroupLaurentPoly reassemble(const CofactorExpansion& ce) {
    const RootSystemPtr& rs = ce.rs;
    const CornerData& cd = rs->corner_data(ce.alpha);
    int rank = rs->rank();
    GroupLaurentPoly out(rs);
    for (const auto& [sdeg, piece] : ce.pieces) {
        for (const auto& [pm, c] : piece.terms()) {
            Weight mu = Weight::zero(rank);
            for (int i = 0; i + 1 < rank; ++i) mu[cd.sub_to_orig[static_cast<std::size_t>(i)]] = pm[static_cast<std::size_t>(i)];
            // recover the alpha coordinate from the scaled degree
            Rat rest(0);
            for (int b = 0; b < rank; ++b)
                if (b != ce.alpha) rest += rs->pairing_w(ce.alpha, b) * Rat(mu[b]);
            Rat ma = (Rat(sdeg) / ce.den - rest) / rs->pairing_w(ce.alpha, ce.alpha);
            mu[ce.alpha] = to_ll(rat_to_int(ma));
            out.add_term(mu, c);
        }
    }
    return out;
}

bool is_monic_along(const GroupLaurentPoly& f, int alpha) {
    if (f.is_zero()) throw std::invalid_argument("is_monic_along requires a nonzero element");
    CofactorExpansion ce = cofactor_expand(f, alpha);
    return ce.leading_coefficient().num_terms() == 1;
}

}  // namespace weylchar
