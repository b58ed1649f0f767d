#include "weylchar/ordpoly.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace weylchar {

namespace {
Coord vec_total(const std::vector<Coord>& v) {
    Coord s = 0;
    for (Coord x : v) s += x;
    return s;
}

bool glex_less(const std::vector<Coord>& a, const std::vector<Coord>& b) {
    Coord ta = vec_total(a), tb = vec_total(b);
    if (ta != tb) return ta < tb;
    return a < b;
}
}  // namespace

OrdinaryPoly OrdinaryPoly::constant(int nvars, Int c) {
    OrdinaryPoly p(nvars);
    if (c != 0) p.terms_.emplace(std::vector<Coord>(static_cast<std::size_t>(nvars), 0), std::move(c));
    return p;
}

OrdinaryPoly OrdinaryPoly::variable(int nvars, int var, Coord power) {
    OrdinaryPoly p(nvars);
    std::vector<Coord> e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(var)] = power;
    p.terms_.emplace(std::move(e), 1);
    return p;
}

bool OrdinaryPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && vec_total(terms_.begin()->first) == 0;
}

void OrdinaryPoly::add_term(const std::vector<Coord>& expo, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(expo);
    if (it == terms_.end()) {
        terms_.emplace(expo, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Int OrdinaryPoly::coeff(const std::vector<Coord>& expo) const {
    auto it = terms_.find(expo);
    return it == terms_.end() ? Int(0) : it->second;
}

Coord OrdinaryPoly::degree(int var) const {
    Coord d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(var)]);
    return d;
}

std::vector<Coord> OrdinaryPoly::degrees() const {
    std::vector<Coord> d(static_cast<std::size_t>(nvars_), -1);
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < nvars_; ++i) d[static_cast<std::size_t>(i)] = std::max(d[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i)]);
    return d;
}

Coord OrdinaryPoly::total_degree() const {
    Coord d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, vec_total(e));
    return d;
}

bool OrdinaryPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    Coord d = vec_total(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (vec_total(e) != d) return false;
    return true;
}

std::vector<int> OrdinaryPoly::effective_vars() const {
    std::vector<int> out;
    std::vector<Coord> d = degrees();
    for (int i = 0; i < nvars_; ++i)
        if (d[static_cast<std::size_t>(i)] > 0) out.push_back(i);
    return out;
}

const std::pair<const std::vector<Coord>, Int>& OrdinaryPoly::leading() const {
    if (terms_.empty()) throw std::logic_error("leading() on zero polynomial");
    auto best = terms_.begin();
    for (auto it = terms_.begin(); it != terms_.end(); ++it)
        if (glex_less(best->first, it->first)) best = it;
    return *best;
}

Int OrdinaryPoly::content() const {
    Int g = 0;
    for (const auto& [e, c] : terms_) g = int_gcd(g, c);
    if (g != 0 && leading().second < 0) g = -g;
    return g;
}

OrdinaryPoly OrdinaryPoly::primitive_part() const {
    if (terms_.empty()) return *this;
    Int c = content();
    OrdinaryPoly out(nvars_);
    for (const auto& [e, a] : terms_) out.terms_.emplace(e, a / c);
    out.shift_ = shift_;
    return out;
}

OrdinaryPoly OrdinaryPoly::operator-() const {
    OrdinaryPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    out.shift_ = shift_;
    return out;
}

std::string OrdinaryPoly::str() const {
    if (terms_.empty()) return "0";
    // print leading-first in graded lex
    std::vector<const std::pair<const std::vector<Coord>, Int>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) { return glex_less(b->first, a->first); });
    std::string s;
    for (auto* t : ts) {
        const auto& [e, c] = *t;
        if (!s.empty()) s += (c > 0) ? " + " : " - ";
        else if (c < 0) s += "-";
        Int a = abs(c);
        bool has_var = vec_total(e) != 0;
        if (a != 1 || !has_var) s += a.get_str();
        bool first = !has_var || a != 1;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!first || a != 1) s += "*";
            first = false;
            s += "x" + std::to_string(i + 1);
            if (e[i] != 1) s += "^" + std::to_string(e[i]);
        }
    }
    return s;
}

namespace {
void check_nvars(const OrdinaryPoly& f, const OrdinaryPoly& g) {
    if (f.nvars() != g.nvars()) throw std::invalid_argument("variable count mismatch");
}
}  // namespace

OrdinaryPoly add(const OrdinaryPoly& f, const OrdinaryPoly& g) {
    check_nvars(f, g);
    OrdinaryPoly out = f;
    for (const auto& [e, c] : g.terms()) out.add_term(e, c);
    return out;
}

OrdinaryPoly sub(const OrdinaryPoly& f, const OrdinaryPoly& g) {
    check_nvars(f, g);
    OrdinaryPoly out = f;
    for (const auto& [e, c] : g.terms()) out.add_term(e, -c);
    return out;
}

OrdinaryPoly mul(const OrdinaryPoly& f, const OrdinaryPoly& g) {
    check_nvars(f, g);
    OrdinaryPoly out(f.nvars());
    std::vector<Coord> e(static_cast<std::size_t>(f.nvars()));
    for (const auto& [ef, cf] : f.terms())
        for (const auto& [eg, cg] : g.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ef[i] + eg[i];
            out.add_term(e, cf * cg);
        }
    return out;
}

OrdinaryPoly mul_scalar(const OrdinaryPoly& f, const Int& c) {
    OrdinaryPoly out(f.nvars());
    if (c == 0) return out;
    for (const auto& [e, a] : f.terms()) out.add_term(e, a * c);
    return out;
}

std::optional<OrdinaryPoly> exact_divide(const OrdinaryPoly& f, const OrdinaryPoly& g) {
    check_nvars(f, g);
    if (g.is_zero()) throw std::invalid_argument("division by zero");
    OrdinaryPoly q(f.nvars());
    OrdinaryPoly r = f;
    const auto& gl = g.leading();
    while (!r.is_zero()) {
        const auto& rl = r.leading();
        std::vector<Coord> t(rl.first.size());
        for (std::size_t i = 0; i < t.size(); ++i) {
            t[i] = rl.first[i] - gl.first[i];
            if (t[i] < 0) return std::nullopt;
        }
        Int c, rem;
        mpz_tdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), rl.second.get_mpz_t(), gl.second.get_mpz_t());
        if (rem != 0) return std::nullopt;
        q.add_term(t, c);
        OrdinaryPoly piece(f.nvars());
        piece.add_term(t, c);
        r = sub(r, mul(piece, g));
    }
    return q;
}

OrdinaryPoly derivative(const OrdinaryPoly& f, int var) {
    OrdinaryPoly out(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        Coord k = e[static_cast<std::size_t>(var)];
        if (k == 0) continue;
        std::vector<Coord> e2 = e;
        e2[static_cast<std::size_t>(var)] = k - 1;
        out.add_term(e2, c * k);
    }
    return out;
}

OrdinaryPoly substitute_value(const OrdinaryPoly& f, int var, const Int& value) {
    OrdinaryPoly out(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        Coord k = e[static_cast<std::size_t>(var)];
        Int v;
        mpz_pow_ui(v.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(k));
        std::vector<Coord> e2 = e;
        e2[static_cast<std::size_t>(var)] = 0;
        out.add_term(e2, c * v);
    }
    return out;
}

OrdinaryPoly substitute_affine_bivariate(const OrdinaryPoly& f, const std::vector<Coord>& a,
                                         const std::vector<Coord>& b, const std::vector<Coord>& c) {
    std::vector<Coord> degs = f.degrees();
    std::vector<std::vector<OrdinaryPoly>> pows(static_cast<std::size_t>(f.nvars()));
    for (int i = 0; i < f.nvars(); ++i) {
        OrdinaryPoly lin(2);
        lin.add_term({1, 0}, Int(a[static_cast<std::size_t>(i)]));
        lin.add_term({0, 1}, Int(b[static_cast<std::size_t>(i)]));
        lin.add_term({0, 0}, Int(c[static_cast<std::size_t>(i)]));
        auto& pv = pows[static_cast<std::size_t>(i)];
        pv.push_back(OrdinaryPoly::constant(2, 1));
        for (Coord k = 1; k <= std::max<Coord>(degs[static_cast<std::size_t>(i)], 0); ++k)
            pv.push_back(mul(pv.back(), lin));
    }
    OrdinaryPoly out(2);
    for (const auto& [e, coef] : f.terms()) {
        OrdinaryPoly term = OrdinaryPoly::constant(2, coef);
        for (int i = 0; i < f.nvars(); ++i)
            if (e[static_cast<std::size_t>(i)] > 0)
                term = mul(term, pows[static_cast<std::size_t>(i)][static_cast<std::size_t>(e[static_cast<std::size_t>(i)])]);
        out = add(out, term);
    }
    return out;
}

std::vector<Coord> strip_monomial(OrdinaryPoly& f) {
    std::vector<Coord> mins(static_cast<std::size_t>(f.nvars()), 0);
    if (f.is_zero()) return mins;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        for (std::size_t i = 0; i < mins.size(); ++i)
            mins[i] = first ? e[i] : std::min(mins[i], e[i]);
        first = false;
    }
    bool trivial = true;
    for (Coord m : mins) trivial = trivial && m == 0;
    if (trivial) return mins;
    OrdinaryPoly out(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        std::vector<Coord> e2 = e;
        for (std::size_t i = 0; i < mins.size(); ++i) e2[i] -= mins[i];
        out.add_term(e2, c);
    }
    out.set_shift(f.shift());
    f = out;
    return mins;
}

OrdinaryPoly laurent_to_poly(const GroupLaurentPoly& f, PolyBasis basis) {
    const RootSystem& rs = *f.root_system();
    int rank = rs.rank();
    if (basis == PolyBasis::FundamentalCoords) {
        OrdinaryPoly out(rank);
        if (f.is_zero()) return out;
        std::vector<Coord> mn(static_cast<std::size_t>(rank), 0);
        bool first = true;
        for (const auto& [m, c] : f.terms()) {
            for (int i = 0; i < rank; ++i)
                mn[static_cast<std::size_t>(i)] = first ? m[static_cast<std::size_t>(i)]
                                                        : std::min(mn[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(i)]);
            first = false;
        }
        for (const auto& [m, c] : f.terms()) {
            std::vector<Coord> e(static_cast<std::size_t>(rank));
            for (int i = 0; i < rank; ++i) e[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(i)] - mn[static_cast<std::size_t>(i)];
            out.add_term(e, c);
        }
        out.set_shift(mn);
        return out;
    }

    // AmbientX: GL(r+1) exponents.  First the cumulative-sum lift with last
    // coordinate zero, then a per-term multiple of (1,..,1) so total degrees
    // agree (the lift of a homogeneous GL element), then a shift to >= 0.
    if (rs.family() != Family::A) throw std::invalid_argument("ambient basis is defined for type A only");
    int n = rank + 1;
    OrdinaryPoly out(n);
    if (f.is_zero()) return out;
    std::vector<std::pair<std::vector<Coord>, Int>> lifted;
    Coord dmax = 0;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        std::vector<Coord> v(static_cast<std::size_t>(n), 0);
        for (int i = rank - 1; i >= 0; --i)
            v[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i) + 1] + m[static_cast<std::size_t>(i)];
        Coord t = vec_total(v);
        dmax = first ? t : std::max(dmax, t);
        first = false;
        lifted.emplace_back(std::move(v), c);
    }
    for (auto& [v, c] : lifted) {
        Coord diff = dmax - vec_total(v);
        if (diff % n != 0)
            throw std::invalid_argument("element does not lift to a homogeneous GL polynomial");
        Coord k = diff / n;
        for (auto& x : v) x += k;
    }
    std::vector<Coord> mn = lifted.front().first;
    for (const auto& [v, c] : lifted)
        for (int i = 0; i < n; ++i) mn[static_cast<std::size_t>(i)] = std::min(mn[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i)]);
    for (auto& [v, c] : lifted) {
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] -= mn[static_cast<std::size_t>(i)];
        out.add_term(v, c);
    }
    out.set_shift(mn);
    return out;
}

GroupLaurentPoly poly_to_laurent(const OrdinaryPoly& p, const RootSystemPtr& rs) {
    if (p.nvars() != rs->rank())
        throw std::invalid_argument("poly_to_laurent expects one variable per fundamental weight");
    GroupLaurentPoly out(rs);
    for (const auto& [e, c] : p.terms()) out.add_term(Weight(e), c);
    return out;
}

// ---------------------------------------------------------------------------
// multivariate gcd: primitive PRS
// ---------------------------------------------------------------------------

namespace {

// f as a polynomial in x_var with OrdinaryPoly coefficients (var-free).
std::map<Coord, OrdinaryPoly> split_by_var(const OrdinaryPoly& f, int var) {
    std::map<Coord, OrdinaryPoly> out;
    for (const auto& [e, c] : f.terms()) {
        Coord k = e[static_cast<std::size_t>(var)];
        std::vector<Coord> e2 = e;
        e2[static_cast<std::size_t>(var)] = 0;
        auto it = out.find(k);
        if (it == out.end()) it = out.emplace(k, OrdinaryPoly(f.nvars())).first;
        it->second.add_term(e2, c);
    }
    return out;
}

OrdinaryPoly normalize_sign(const OrdinaryPoly& f) {
    if (f.is_zero()) return f;
    return f.leading().second < 0 ? -f : f;
}

OrdinaryPoly content_by_var(const OrdinaryPoly& f, int var) {
    OrdinaryPoly c(f.nvars());
    for (const auto& [k, coef] : split_by_var(f, var)) {
        c = gcd_poly(c, coef);
        if (c.is_constant() && !c.is_zero() && c.leading().second == 1) break;
    }
    return c;
}

// pseudo-remainder of f by g in x_var: lc(g)^(df-dg+1) f = q g + r
OrdinaryPoly pseudo_rem(const OrdinaryPoly& f, const OrdinaryPoly& g, int var) {
    auto gs = split_by_var(g, var);
    Coord dg = gs.rbegin()->first;
    OrdinaryPoly lcg = gs.rbegin()->second;
    OrdinaryPoly r = f;
    Coord df = r.degree(var);
    while (!r.is_zero() && (df = r.degree(var)) >= dg) {
        auto rsplit = split_by_var(r, var);
        OrdinaryPoly lcr = rsplit.rbegin()->second;
        // r <- lc(g) * r - lc(r) * x^{df-dg} * g
        OrdinaryPoly shifted(g.nvars());
        for (const auto& [e, c] : g.terms()) {
            std::vector<Coord> e2 = e;
            e2[static_cast<std::size_t>(var)] += df - dg;
            shifted.add_term(e2, c);
        }
        r = sub(mul(r, lcg), mul(shifted, lcr));
    }
    return r;
}

}  // namespace

OrdinaryPoly gcd_poly(const OrdinaryPoly& f, const OrdinaryPoly& g) {
    check_nvars(f, g);
    if (f.is_zero()) return normalize_sign(g);
    if (g.is_zero()) return normalize_sign(f);
    if (f.is_constant() || g.is_constant())
        return OrdinaryPoly::constant(f.nvars(), int_gcd(abs(f.content()), abs(g.content())));
    int var = -1;
    Coord best = -1;
    std::vector<Coord> df = f.degrees(), dg = g.degrees();
    for (int i = 0; i < f.nvars(); ++i) {
        Coord a = df[static_cast<std::size_t>(i)], b = dg[static_cast<std::size_t>(i)];
        if (a > 0 && b > 0) {
            Coord m = std::max(a, b);
            if (var < 0 || m < best) {
                var = i;
                best = m;
            }
        }
    }
    if (var < 0) {
        // no shared variable: only the integer contents can divide both
        return OrdinaryPoly::constant(f.nvars(), int_gcd(abs(f.content()), abs(g.content())));
    }

    OrdinaryPoly cf = content_by_var(f, var);
    OrdinaryPoly cg = content_by_var(g, var);
    OrdinaryPoly c = gcd_poly(cf, cg);
    OrdinaryPoly fp = *exact_divide(f, cf);
    OrdinaryPoly gp = *exact_divide(g, cg);
    if (fp.degree(var) < gp.degree(var)) std::swap(fp, gp);
    while (!gp.is_zero()) {
        if (gp.degree(var) == 0) {
            // primitive and var-free: unit in the PRS
            fp = OrdinaryPoly::constant(f.nvars(), 1);
            break;
        }
        OrdinaryPoly r = pseudo_rem(fp, gp, var);
        fp = gp;
        if (r.is_zero()) {
            gp = r;
        } else {
            OrdinaryPoly cr = content_by_var(r, var);
            gp = *exact_divide(r, cr);
        }
    }
    OrdinaryPoly pp = *exact_divide(fp, content_by_var(fp, var));
    return normalize_sign(mul(c, pp));
}

// ---------------------------------------------------------------------------
// separability
// ---------------------------------------------------------------------------

namespace {

constexpr std::array<std::uint64_t, 8> kSepPrimes = {2147483647ull, 2147483629ull, 2147483587ull,
                                                     2147483579ull, 2147483563ull, 2147483549ull,
                                                     2147483543ull, 2147483497ull};

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = (unsigned __int128)r * b % p;
        b = (unsigned __int128)b * b % p;
        e >>= 1;
    }
    return r;
}

// univariate image mod p with all variables except `var` set to `pts`
std::vector<std::uint64_t> univ_image_mod(const OrdinaryPoly& f, int var, const std::vector<std::uint64_t>& pts,
                                          std::uint64_t p) {
    std::vector<std::uint64_t> img(static_cast<std::size_t>(std::max<Coord>(f.degree(var), 0)) + 1, 0);
    for (const auto& [e, c] : f.terms()) {
        std::uint64_t v = mpz_fdiv_ui(c.get_mpz_t(), p);
        for (int i = 0; i < f.nvars(); ++i) {
            if (i == var || e[static_cast<std::size_t>(i)] == 0) continue;
            v = (unsigned __int128)v * pow_mod(pts[static_cast<std::size_t>(i)], static_cast<std::uint64_t>(e[static_cast<std::size_t>(i)]), p) % p;
        }
        std::size_t k = static_cast<std::size_t>(e[static_cast<std::size_t>(var)]);
        img[k] = (img[k] + v) % p;
    }
    while (!img.empty() && img.back() == 0) img.pop_back();
    return img;
}

int univ_gcd_degree_mod(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b, std::uint64_t p) {
    auto deg = [](const std::vector<std::uint64_t>& v) { return static_cast<int>(v.size()) - 1; };
    while (!b.empty()) {
        // a mod b
        std::uint64_t inv = pow_mod(b.back(), p - 2, p);
        while (deg(a) >= deg(b)) {
            std::uint64_t f = (unsigned __int128)a.back() * inv % p;
            std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                std::uint64_t t = (unsigned __int128)f * b[i] % p;
                a[off + i] = (a[off + i] + p - t) % p;
            }
            while (!a.empty() && a.back() == 0) a.pop_back();
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return deg(a);
}

}  // namespace

bool separability_check(const OrdinaryPoly& p_in, std::uint64_t seed) {
    if (p_in.is_zero()) throw std::invalid_argument("separability_check requires a nonzero polynomial");
    OrdinaryPoly f = p_in;
    strip_monomial(f);  // monomial-times-constant gcds count as separable
    std::vector<int> vars = f.effective_vars();
    if (vars.empty()) return true;

    if (vars.size() == 1) {
        OrdinaryPoly g = gcd_poly(f, derivative(f, vars[0]));
        return g.is_single_term();
    }

    std::mt19937_64 rng(seed ^ 0x5eabf00dULL);
    bool all_certified = true;
    for (int var : vars) {
        OrdinaryPoly df = derivative(f, var);
        bool certified = false;
        for (int trial = 0; trial < 3 && !certified; ++trial) {
            std::uint64_t p = kSepPrimes[(static_cast<std::size_t>(trial) + static_cast<std::size_t>(var)) % kSepPrimes.size()];
            std::vector<std::uint64_t> pts(static_cast<std::size_t>(f.nvars()), 0);
            for (int i = 0; i < f.nvars(); ++i) pts[static_cast<std::size_t>(i)] = 1 + rng() % (p - 1);
            auto fi = univ_image_mod(f, var, pts, p);
            if (static_cast<Coord>(fi.size()) - 1 != f.degree(var)) continue;  // degree dropped, retry
            auto di = univ_image_mod(df, var, pts, p);
            if (di.empty()) continue;
            // a constant gcd here is a sound certificate: any repeated factor
            // with positive degree in this variable survives the specialization
            if (univ_gcd_degree_mod(fi, di, p) == 0) certified = true;
        }
        if (!certified) all_certified = false;
    }
    if (all_certified) return true;
    // certificates failed somewhere: settle it with the exact gcd chain
    OrdinaryPoly g = f;
    for (int var : vars) {
        g = gcd_poly(g, derivative(f, var));
        if (g.is_single_term()) return true;
    }
    return g.is_single_term();
}

}  // namespace weylchar
