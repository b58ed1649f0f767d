#include "weylchar/polyfactor.hpp"

#include <algorithm>
#include <random>

#include "weylchar/modlinalg.hpp"
#include "weylchar/unifactor.hpp"

namespace weylchar {

std::string verdict_name(FactorVerdict v) {
    switch (v) {
        case FactorVerdict::AbsolutelyIrreducible: return "absolutely_irreducible";
        case FactorVerdict::Reducible: return "reducible";
        case FactorVerdict::Unit: return "unit";
        case FactorVerdict::Skipped: return "skipped";
    }
    return "?";
}

namespace {

// ---- Ruppert/Gao kernel for a bivariate squarefree polynomial --------------
//
// Unknowns g (deg_u <= m-1, deg_v <= n) and h (deg_u <= m, deg_v <= n-1) with
// f (dg/dv - dh/du) = g df/dv - h df/du; the solution dimension equals the
// number of absolutely irreducible factors of f.

struct GaoSystem {
    SparseIntMatrix mat;
    int m = 0, n = 0;
    int cols_g = 0, cols_h = 0;
};

GaoSystem build_gao_system(const OrdinaryPoly& f) {
    GaoSystem sys;
    sys.m = static_cast<int>(f.degree(0));
    sys.n = static_cast<int>(f.degree(1));
    int m = sys.m, n = sys.n;
    sys.cols_g = m * (n + 1);
    sys.cols_h = (m + 1) * n;
    sys.mat.rows = (2 * m) * (2 * n);
    sys.mat.cols = sys.cols_g + sys.cols_h;
    auto row_id = [n](Coord s, Coord t) { return static_cast<int>(s * (2 * n) + t); };
    auto g_col = [n](Coord a, Coord b) { return static_cast<int>(a * (n + 1) + b); };
    auto h_col = [this_cols_g = sys.cols_g, n](Coord c, Coord d) {
        return this_cols_g + static_cast<int>(c * n + d);
    };
    for (const auto& [e, coef] : f.terms()) {
        Coord i = e[0], j = e[1];
        // from g_{ab}: row (i+a, j+b-1) gains coef * (b - j)
        for (Coord a = 0; a <= m - 1; ++a)
            for (Coord b = 0; b <= n; ++b) {
                if (b == j) continue;
                Coord t = j + b - 1;
                if (t < 0 || t > 2 * n - 1) continue;
                Coord s = i + a;
                if (s > 2 * m - 1) continue;
                sys.mat.add(row_id(s, t), g_col(a, b), coef * Int(b - j));
            }
        // from h_{cd}: row (i+c-1, j+d) gains coef * (i - c)
        for (Coord c = 0; c <= m; ++c)
            for (Coord d = 0; d <= n - 1; ++d) {
                if (c == i) continue;
                Coord s = i + c - 1;
                if (s < 0 || s > 2 * m - 1) continue;
                Coord t = j + d;
                if (t > 2 * n - 1) continue;
                sys.mat.add(row_id(s, t), h_col(c, d), coef * Int(i - c));
            }
    }
    return sys;
}

// Exact kernel dimension: a mod-p rank bounds the kernel from above; exact
// verified kernel vectors (CRT + rational reconstruction) bound it from below.
// The trivial solution (f_u, f_v) makes dimension 1 free, so a kernel of mod-p
// dimension 1 is already certified.
std::optional<int> certified_kernel_dim(const SparseIntMatrix& a) {
    const auto& primes = elimination_primes();
    std::vector<std::vector<Int>> crt_basis;  // entries as CRT residues
    std::vector<int> pivot_ref;
    Int modulus = 1;
    int k_claim = -1;
    std::size_t used = 0, next_attempt = 1;
    {
        // cheap forward-only pass: most inputs are irreducible and certify here
        ModKernel probe = modp_kernel(a, primes[0], false);
        if (a.cols - probe.rank <= 1) return 1;
    }
    for (std::size_t pi = 0; pi < primes.size(); ++pi) {
        std::uint64_t p = primes[pi];
        ModKernel ker = modp_kernel(a, p, true);
        int k = a.cols - ker.rank;
        if (k <= 1) return 1;  // rank >= cols-1 certifies dimension exactly 1
        if (k_claim < 0 || k < k_claim) {
            // higher rank: previous primes were unlucky; restart accumulation
            k_claim = k;
            pivot_ref = ker.pivot_cols;
            crt_basis.assign(static_cast<std::size_t>(k), std::vector<Int>(static_cast<std::size_t>(a.cols), Int(0)));
            modulus = 1;
            used = 0;
            next_attempt = 1;
        } else if (k > k_claim || ker.pivot_cols != pivot_ref) {
            continue;  // unlucky prime
        }
        // accumulate CRT residues
        Int pInt(static_cast<unsigned long>(p));
        for (std::size_t v = 0; v < crt_basis.size(); ++v)
            for (int c = 0; c < a.cols; ++c) {
                Int& cur = crt_basis[v][static_cast<std::size_t>(c)];
                Int val(static_cast<unsigned long>(ker.basis[v][static_cast<std::size_t>(c)]));
                if (modulus == 1) {
                    cur = val;
                } else {
                    Int inv;
                    if (mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), pInt.get_mpz_t()) == 0)
                        throw std::logic_error("CRT modulus collision");
                    Int t = ((val - cur) % pInt + pInt) % pInt;
                    t = (t * inv) % pInt;
                    cur += modulus * t;
                }
            }
        modulus *= static_cast<unsigned long>(p);
        ++used;
        if (used < next_attempt) continue;  // let the modulus grow before retrying
        next_attempt = used + (used + 1) / 2;

        // attempt rational reconstruction + exact verification
        bool all_ok = true;
        for (std::size_t v = 0; v < crt_basis.size() && all_ok; ++v) {
            std::vector<Rat> vec(static_cast<std::size_t>(a.cols));
            for (int c = 0; c < a.cols && all_ok; ++c) {
                auto r = rational_reconstruct(crt_basis[v][static_cast<std::size_t>(c)], modulus);
                if (!r) all_ok = false;
                else vec[static_cast<std::size_t>(c)] = *r;
            }
            if (!all_ok) break;
            Int den = 1;
            for (const auto& q : vec) {
                Int d = q.get_den();
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
            }
            std::vector<Int> nums(static_cast<std::size_t>(a.cols));
            for (int c = 0; c < a.cols; ++c) nums[static_cast<std::size_t>(c)] = rat_to_int(vec[static_cast<std::size_t>(c)] * Rat(den));
            if (!sparse_maps_to_zero(a, nums)) all_ok = false;
        }
        if (all_ok) return k_claim;
    }
    return std::nullopt;
}

int bivariate_abs_count(const OrdinaryPoly& f2) {
    GaoSystem sys = build_gao_system(f2);
    auto k = certified_kernel_dim(sys.mat);
    if (!k) throw SpecializationDisagreement("kernel dimension could not be certified");
    return *k;
}

}  // namespace

int absolute_factor_count(const OrdinaryPoly& p_in, const PolyFactorOptions& opts) {
    OrdinaryPoly p = p_in;
    strip_monomial(p);
    if (p.is_zero() || p.is_constant() || p.is_single_term())
        throw std::invalid_argument("absolute_factor_count requires a non-unit");
    if (p.total_degree() > opts.max_abs_degree)
        throw DegreeCapExceeded("total degree " + std::to_string(p.total_degree()) + " exceeds cap " +
                                std::to_string(opts.max_abs_degree));
    if (!opts.assume_squarefree && !separability_check(p, opts.seed))
        throw std::invalid_argument("absolute_factor_count requires a squarefree input");

    std::vector<int> vars = p.effective_vars();
    if (vars.size() == 1) return static_cast<int>(p.degree(vars[0]));

    std::mt19937_64 rng(opts.seed ^ 0xabcdef1234ull);
    std::uniform_int_distribution<Coord> small(-7, 7);
    Coord d_total = p.total_degree();
    int n = p.nvars();

    std::vector<int> counts;
    int attempts_left = opts.trials * opts.max_retries;
    while (static_cast<int>(counts.size()) < opts.trials && attempts_left-- > 0) {
        std::vector<Coord> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n)), c(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            a[static_cast<std::size_t>(i)] = small(rng);
            b[static_cast<std::size_t>(i)] = small(rng);
            c[static_cast<std::size_t>(i)] = small(rng);
        }
        bool rank2 = false;
        for (int i = 0; i < n && !rank2; ++i)
            for (int j = i + 1; j < n && !rank2; ++j)
                rank2 = (a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)] -
                         a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(i)]) != 0;
        if (!rank2) continue;
        OrdinaryPoly f2 = substitute_affine_bivariate(p, a, b, c);
        if (f2.total_degree() != d_total) continue;
        if (f2.degree(0) < 1 || f2.degree(1) < 1) continue;
        if (!separability_check(f2, opts.seed + static_cast<std::uint64_t>(attempts_left))) continue;
        counts.push_back(bivariate_abs_count(f2));
    }
    if (static_cast<int>(counts.size()) < opts.trials)
        throw SpecializationDisagreement("could not collect enough valid specializations");
    for (int c : counts)
        if (c != counts[0])
            throw SpecializationDisagreement("specializations disagree on the factor count");
    return counts[0];
}

// ---------------------------------------------------------------------------
// factorization over Q
// ---------------------------------------------------------------------------

namespace {

OrdinaryPoly normalize_factor(OrdinaryPoly f) {
    f = f.primitive_part();
    if (!f.is_zero() && f.leading().second < 0) f = -f;
    return f;
}

UniPoly kronecker_image(const OrdinaryPoly& f, const std::vector<Coord>& radix, Coord deg) {
    UniPoly u(static_cast<std::size_t>(deg) + 1, Int(0));
    for (const auto& [e, c] : f.terms()) {
        Coord pos = 0, scale = 1;
        for (std::size_t i = 0; i < e.size(); ++i) {
            pos += e[i] * scale;
            scale *= radix[i];
        }
        u[static_cast<std::size_t>(pos)] += c;
    }
    uni_trim(u);
    return u;
}

OrdinaryPoly kronecker_preimage(const UniPoly& u, const std::vector<Coord>& radix, int nvars) {
    OrdinaryPoly f(nvars);
    for (std::size_t k = 0; k < u.size(); ++k) {
        if (u[k] == 0) continue;
        Coord pos = static_cast<Coord>(k);
        std::vector<Coord> e(static_cast<std::size_t>(nvars), 0);
        for (int i = 0; i < nvars; ++i) {
            e[static_cast<std::size_t>(i)] = pos % radix[static_cast<std::size_t>(i)];
            pos /= radix[static_cast<std::size_t>(i)];
        }
        f.add_term(e, u[k]);
    }
    return f;
}

OrdinaryPoly from_uni(const UniPoly& u, int nvars, int var) {
    OrdinaryPoly f(nvars);
    std::vector<Coord> e(static_cast<std::size_t>(nvars), 0);
    for (std::size_t k = 0; k < u.size(); ++k) {
        if (u[k] == 0) continue;
        e[static_cast<std::size_t>(var)] = static_cast<Coord>(k);
        f.add_term(e, u[k]);
    }
    return f;
}

UniPoly to_uni(const OrdinaryPoly& f, int var) {
    UniPoly u(static_cast<std::size_t>(std::max<Coord>(f.degree(var), 0)) + 1, Int(0));
    for (const auto& [e, c] : f.terms()) u[static_cast<std::size_t>(e[static_cast<std::size_t>(var)])] += c;
    uni_trim(u);
    return u;
}

OrdinaryPoly homogenize(const OrdinaryPoly& f, int var, Coord degree) {
    OrdinaryPoly out(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        Coord t = 0;
        for (Coord x : e) t += x;
        std::vector<Coord> e2 = e;
        e2[static_cast<std::size_t>(var)] += degree - t;
        out.add_term(e2, c);
    }
    return out;
}

void factor_multivariate(const OrdinaryPoly& prim, const PolyFactorOptions& opts, RationalFactorization& out);

// squarefree part = f / gcd(f, all partials)
OrdinaryPoly squarefree_part(const OrdinaryPoly& f) {
    OrdinaryPoly g = f;
    for (int v : f.effective_vars()) {
        g = gcd_poly(g, derivative(f, v));
        if (g.is_constant()) break;
    }
    return *exact_divide(f, g);
}

void factor_multivariate(const OrdinaryPoly& prim, const PolyFactorOptions& opts, RationalFactorization& out) {
    std::vector<int> vars = prim.effective_vars();
    if (vars.empty()) return;
    if (vars.size() == 1) {
        UniFactorization uf = factor_univariate(to_uni(prim, vars[0]), opts.seed, opts.max_subsets);
        for (auto& [g, e] : uf.factors) out.factors.emplace_back(from_uni(g, prim.nvars(), vars[0]), e);
        return;
    }
    if (prim.is_homogeneous()) {
        int var = vars.back();
        OrdinaryPoly dehom = substitute_value(prim, var, 1);
        RationalFactorization sub;
        sub.skipped = false;
        factor_multivariate(dehom.primitive_part(), opts, sub);
        if (sub.skipped) {
            out.skipped = true;
            out.skip_reason = sub.skip_reason;
            return;
        }
        OrdinaryPoly check = OrdinaryPoly::constant(prim.nvars(), prim.content());
        for (auto& [g, e] : sub.factors) {
            OrdinaryPoly hg = normalize_factor(homogenize(g, var, g.total_degree()));
            out.factors.emplace_back(hg, e);
            for (int k = 0; k < e; ++k) check = mul(check, hg);
        }
        if (check != prim && check != -prim) throw std::logic_error("homogenization mismatch in factorization");
        return;
    }

    OrdinaryPoly sf = squarefree_part(prim);
    std::vector<Coord> degs = sf.degrees();
    std::vector<Coord> radix(degs.size());
    Coord kron_deg = 0, scale = 1;
    for (std::size_t i = 0; i < degs.size(); ++i) {
        radix[i] = std::max<Coord>(degs[i], 0) + 1;
        kron_deg += std::max<Coord>(degs[i], 0) * scale;
        scale *= radix[i];
    }
    if (kron_deg > opts.max_kron_degree) {
        out.skipped = true;
        out.skip_reason = "kronecker degree " + std::to_string(kron_deg) + " exceeds cap " +
                          std::to_string(opts.max_kron_degree);
        return;
    }
    UniPoly uni = kronecker_image(sf, radix, kron_deg);
    UniFactorization uf;
    try {
        uf = factor_univariate(uni, opts.seed, opts.max_subsets);
    } catch (const std::runtime_error& e) {
        out.skipped = true;
        out.skip_reason = e.what();
        return;
    }

    // expand with multiplicity, enumerate sub-multisets by size
    std::vector<UniPoly> pieces;
    for (auto& [g, e] : uf.factors)
        for (int k = 0; k < e; ++k) pieces.push_back(g);

    std::vector<OrdinaryPoly> irreducibles;
    OrdinaryPoly rest = sf;
    std::size_t budget = opts.max_subsets;
    bool aborted = false;
    auto advance = [](std::vector<std::size_t>& idx, std::size_t n) {
        std::size_t k = idx.size();
        for (std::size_t i = k; i-- > 0;) {
            if (idx[i] != i + n - k) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    while (!rest.is_constant() && !pieces.empty() && !aborted) {
        bool found = false;
        for (std::size_t k = 1; 2 * k <= pieces.size() && !found && !aborted; ++k) {
            std::vector<std::size_t> idx(k);
            for (std::size_t i = 0; i < k; ++i) idx[i] = i;
            do {
                if (budget-- == 0) {
                    aborted = true;
                    break;
                }
                UniPoly cand_uni = {Int(1)};
                for (std::size_t i : idx) cand_uni = uni_mul(cand_uni, pieces[i]);
                OrdinaryPoly cand = normalize_factor(kronecker_preimage(cand_uni, radix, sf.nvars()));
                if (cand.is_constant()) continue;
                auto q = exact_divide(rest, cand);
                if (!q) continue;
                irreducibles.push_back(cand);
                rest = *q;
                std::vector<UniPoly> keep;
                for (std::size_t i = 0, j = 0; i < pieces.size(); ++i) {
                    if (j < idx.size() && idx[j] == i) {
                        ++j;
                        continue;
                    }
                    keep.push_back(pieces[i]);
                }
                pieces = std::move(keep);
                found = true;
                break;
            } while (advance(idx, pieces.size()));
        }
        if (!found) break;
    }
    if (aborted) {
        out.skipped = true;
        out.skip_reason = "recombination budget exceeded";
        return;
    }
    if (!rest.is_constant()) irreducibles.push_back(normalize_factor(rest));

    // multiplicities against the full primitive input
    OrdinaryPoly work = prim;
    for (const auto& f : irreducibles) {
        int e = 0;
        while (true) {
            auto q = exact_divide(work, f);
            if (!q) break;
            work = *q;
            ++e;
        }
        if (e > 0) out.factors.emplace_back(f, e);
    }
    if (!work.is_constant()) throw std::logic_error("factor recombination left a non-constant cofactor");
}

}  // namespace

RationalFactorization factor_over_rationals(const OrdinaryPoly& p, const PolyFactorOptions& opts) {
    if (p.is_zero()) throw std::invalid_argument("factor_over_rationals requires a nonzero polynomial");
    RationalFactorization out;
    out.content = p.content();
    OrdinaryPoly prim = p.primitive_part();
    std::vector<Coord> mono = strip_monomial(prim);
    for (std::size_t i = 0; i < mono.size(); ++i)
        if (mono[i] > 0)
            out.factors.emplace_back(OrdinaryPoly::variable(p.nvars(), static_cast<int>(i)), static_cast<int>(mono[i]));
    factor_multivariate(prim, opts, out);
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.total_degree() != b.first.total_degree()) return a.first.total_degree() < b.first.total_degree();
        return a.first.str() < b.first.str();
    });
    return out;
}

FactorReport analyze_poly(const std::string& input_id, const OrdinaryPoly& p, const PolyFactorOptions& opts,
                          bool with_rational_factors) {
    FactorReport rep;
    rep.input_id = input_id;
    rep.trials = opts.trials;
    if (p.is_zero()) throw std::invalid_argument("analyze_poly requires a nonzero polynomial");
    if (p.is_single_term()) {
        rep.verdict = FactorVerdict::Unit;
        rep.separable = true;
        rep.absolute_count = 0;
        return rep;
    }
    rep.separable = separability_check(p, opts.seed);
    try {
        PolyFactorOptions o = opts;
        o.assume_squarefree = true;  // separability already recorded above
        if (!rep.separable) {
            rep.verdict = FactorVerdict::Skipped;
            rep.note = "input is not separable";
            return rep;
        }
        rep.absolute_count = absolute_factor_count(p, o);
        rep.verdict = rep.absolute_count == 1 ? FactorVerdict::AbsolutelyIrreducible : FactorVerdict::Reducible;
    } catch (const DegreeCapExceeded& e) {
        rep.verdict = FactorVerdict::Skipped;
        rep.note = e.what();
        return rep;
    } catch (const SpecializationDisagreement& e) {
        rep.verdict = FactorVerdict::Skipped;
        rep.note = e.what();
        return rep;
    }
    if (with_rational_factors || rep.verdict == FactorVerdict::Reducible) {
        rep.q_factors = factor_over_rationals(p, opts);
        if (rep.verdict == FactorVerdict::Reducible && !rep.q_factors->skipped)
            for (const auto& [f, e] : rep.q_factors->factors)
                rep.witnesses.push_back(f.str() + (e > 1 ? "^" + std::to_string(e) : ""));
    }
    return rep;
}

}  // namespace weylchar
