#include "weylchar/unifactor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "weylchar/modlinalg.hpp"

namespace weylchar {

int uni_deg(const UniPoly& f) { return static_cast<int>(f.size()) - 1; }

void uni_trim(UniPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

UniPoly uni_mul(const UniPoly& f, const UniPoly& g) {
    if (f.empty() || g.empty()) return {};
    UniPoly r(f.size() + g.size() - 1, Int(0));
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j) r[i + j] += f[i] * g[j];
    }
    uni_trim(r);
    return r;
}

UniPoly uni_add(const UniPoly& f, const UniPoly& g) {
    UniPoly r(std::max(f.size(), g.size()), Int(0));
    for (std::size_t i = 0; i < f.size(); ++i) r[i] += f[i];
    for (std::size_t i = 0; i < g.size(); ++i) r[i] += g[i];
    uni_trim(r);
    return r;
}

UniPoly uni_sub(const UniPoly& f, const UniPoly& g) {
    UniPoly r(std::max(f.size(), g.size()), Int(0));
    for (std::size_t i = 0; i < f.size(); ++i) r[i] += f[i];
    for (std::size_t i = 0; i < g.size(); ++i) r[i] -= g[i];
    uni_trim(r);
    return r;
}

UniPoly uni_derivative(const UniPoly& f) {
    if (f.size() <= 1) return {};
    UniPoly r(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = f[i] * static_cast<long>(i);
    uni_trim(r);
    return r;
}

Int uni_content(const UniPoly& f) {
    Int g = 0;
    for (const auto& c : f) g = int_gcd(g, c);
    if (g != 0 && !f.empty() && f.back() < 0) g = -g;
    return g;
}

UniPoly uni_primitive(const UniPoly& f) {
    if (f.empty()) return f;
    Int c = uni_content(f);
    UniPoly r = f;
    for (auto& x : r) x /= c;
    return r;
}

Int uni_eval(const UniPoly& f, const Int& x) {
    Int r = 0;
    for (std::size_t i = f.size(); i-- > 0;) r = r * x + f[i];
    return r;
}

bool uni_exact_divide(const UniPoly& f, const UniPoly& g, UniPoly& q) {
    if (g.empty()) throw std::invalid_argument("division by zero");
    q.clear();
    if (f.empty()) return true;
    if (f.size() < g.size()) return false;
    UniPoly r = f;
    q.assign(f.size() - g.size() + 1, Int(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        if (r.size() < g.size() + k) continue;
        Int c, rem;
        if (r.size() != g.size() + k) continue;
        mpz_tdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), r.back().get_mpz_t(), g.back().get_mpz_t());
        if (rem != 0) return false;
        q[k] = c;
        for (std::size_t i = 0; i < g.size(); ++i) r[k + i] -= c * g[i];
        uni_trim(r);
    }
    return r.empty();
}

UniPoly uni_gcd(UniPoly f, UniPoly g) {
    uni_trim(f);
    uni_trim(g);
    if (f.empty()) return g.empty() || g.back() > 0 ? g : uni_primitive(g);
    if (g.empty()) return f.back() > 0 ? f : UniPoly(uni_primitive(f));
    Int cont = int_gcd(abs(uni_content(f)), abs(uni_content(g)));
    f = uni_primitive(f);
    g = uni_primitive(g);
    if (uni_deg(f) < uni_deg(g)) std::swap(f, g);
    // primitive PRS
    while (!g.empty()) {
        // pseudo-remainder of f by g
        UniPoly r = f;
        Int lg = g.back();
        int dg = uni_deg(g);
        while (uni_deg(r) >= dg && !r.empty()) {
            Int lr = r.back();
            int k = uni_deg(r) - dg;
            for (auto& c : r) c *= lg;
            for (int i = 0; i <= dg; ++i) r[static_cast<std::size_t>(k + i)] -= lr * g[static_cast<std::size_t>(i)];
            uni_trim(r);
        }
        f = g;
        g = r.empty() ? r : uni_primitive(r);
    }
    UniPoly out = uni_primitive(f);
    if (!out.empty() && out.back() < 0)
        for (auto& c : out) c = -c;
    for (auto& c : out) c *= cont;
    return out;
}

Int uni_resultant(const UniPoly& f, const UniPoly& g) {
    int m = uni_deg(f), n = uni_deg(g);
    if (m < 0 || n < 0) return 0;
    if (m == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), f[0].get_mpz_t(), static_cast<unsigned long>(n));
        return r;
    }
    if (n == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), g[0].get_mpz_t(), static_cast<unsigned long>(m));
        return r;
    }
    std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Int>> syl(size, std::vector<Int>(size, Int(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) syl[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = f[static_cast<std::size_t>(m - j)];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) syl[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = g[static_cast<std::size_t>(n - j)];
    return bareiss_det(std::move(syl));
}

// ---------------------------------------------------------------------------
// factorization over Z
// ---------------------------------------------------------------------------

namespace {

using ModPoly = std::vector<std::uint64_t>;  // lowest first, trimmed

void mp_trim(ModPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t mp_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = (unsigned __int128)r * b % p;
        b = (unsigned __int128)b * b % p;
        e >>= 1;
    }
    return r;
}

ModPoly mp_mul(const ModPoly& f, const ModPoly& g, std::uint64_t p) {
    if (f.empty() || g.empty()) return {};
    ModPoly r(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!f[i]) continue;
        for (std::size_t j = 0; j < g.size(); ++j) r[i + j] = (r[i + j] + (unsigned __int128)f[i] * g[j]) % p;
    }
    mp_trim(r);
    return r;
}

ModPoly mp_rem(ModPoly f, const ModPoly& g, std::uint64_t p) {
    std::uint64_t inv = mp_pow(g.back(), p - 2, p);
    while (f.size() >= g.size() && !f.empty()) {
        std::uint64_t c = (unsigned __int128)f.back() * inv % p;
        std::size_t off = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::uint64_t t = (unsigned __int128)c * g[i] % p;
            f[off + i] = (f[off + i] + p - t) % p;
        }
        mp_trim(f);
    }
    return f;
}

ModPoly mp_gcd(ModPoly f, ModPoly g, std::uint64_t p) {
    while (!g.empty()) {
        ModPoly r = mp_rem(std::move(f), g, p);
        f = std::move(g);
        g = std::move(r);
    }
    if (!f.empty()) {
        std::uint64_t inv = mp_pow(f.back(), p - 2, p);
        for (auto& c : f) c = (unsigned __int128)c * inv % p;
    }
    return f;
}

ModPoly mp_powmod(ModPoly base, Int e, const ModPoly& m, std::uint64_t p) {
    ModPoly r = {1};
    base = mp_rem(std::move(base), m, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mp_rem(mp_mul(r, base, p), m, p);
        base = mp_rem(mp_mul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

ModPoly mp_monic(ModPoly f, std::uint64_t p) {
    if (f.empty()) return f;
    std::uint64_t inv = mp_pow(f.back(), p - 2, p);
    for (auto& c : f) c = (unsigned __int128)c * inv % p;
    return f;
}

ModPoly mp_derivative(const ModPoly& f, std::uint64_t p) {
    if (f.size() <= 1) return {};
    ModPoly r(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = f[i] * (i % p) % p;
    mp_trim(r);
    return r;
}

ModPoly reduce_mod(const UniPoly& f, std::uint64_t p) {
    ModPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
    mp_trim(r);
    return r;
}

// distinct degree + equal degree (Cantor-Zassenhaus), p odd
void mp_factor_squarefree(const ModPoly& f, std::uint64_t p, std::mt19937_64& rng, std::vector<ModPoly>& out) {
    ModPoly x = {0, 1};
    ModPoly h = x;
    ModPoly rest = mp_monic(f, p);
    int d = 0;
    std::vector<std::pair<ModPoly, int>> classes;  // (product of irreducibles of degree d, d)
    auto monic_quotient = [p](const ModPoly& num_in, const ModPoly& g) {
        ModPoly num = num_in, quo(num_in.size() - g.size() + 1, 0);
        std::uint64_t lginv = mp_pow(g.back(), p - 2, p);
        while (num.size() >= g.size() && !num.empty()) {
            std::uint64_t c = (unsigned __int128)num.back() * lginv % p;
            std::size_t off = num.size() - g.size();
            quo[off] = c;
            for (std::size_t i = 0; i < g.size(); ++i) {
                std::uint64_t t = (unsigned __int128)c * g[i] % p;
                num[off + i] = (num[off + i] + p - t) % p;
            }
            mp_trim(num);
        }
        mp_trim(quo);
        return quo;
    };
    while (static_cast<int>(rest.size()) - 1 >= 2 * (d + 1)) {
        ++d;
        h = mp_powmod(std::move(h), Int(static_cast<unsigned long>(p)), rest, p);
        ModPoly diff = h;  // h - x
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        mp_trim(diff);
        ModPoly g = mp_gcd(rest, diff, p);
        if (g.size() > 1) {
            classes.emplace_back(g, d);
            rest = monic_quotient(rest, g);
            if (rest.size() <= 1) break;
            h = mp_rem(std::move(h), rest, p);
        }
    }
    if (static_cast<int>(rest.size()) - 1 > 0) classes.emplace_back(rest, static_cast<int>(rest.size()) - 1);

    // split each class into its equal-degree irreducibles
    for (auto& [cls, deg] : classes) {
        std::vector<ModPoly> stack = {cls};
        while (!stack.empty()) {
            ModPoly cur = stack.back();
            stack.pop_back();
            int n = static_cast<int>(cur.size()) - 1;
            if (n == deg) {
                out.push_back(mp_monic(cur, p));
                continue;
            }
            // random split
            ModPoly r(static_cast<std::size_t>(n), 0);
            for (auto& c : r) c = rng() % p;
            mp_trim(r);
            if (r.size() <= 1) {
                stack.push_back(cur);
                continue;
            }
            Int e = (Int(static_cast<unsigned long>(p)));
            Int pe;
            mpz_pow_ui(pe.get_mpz_t(), e.get_mpz_t(), static_cast<unsigned long>(deg));
            Int half = (pe - 1) / 2;
            ModPoly t = mp_powmod(std::move(r), half, cur, p);
            if (t.empty()) {
                stack.push_back(cur);
                continue;
            }
            t[0] = (t[0] + p - 1) % p;
            mp_trim(t);
            ModPoly g = mp_gcd(cur, t, p);
            if (g.size() <= 1 || g.size() == cur.size()) {
                stack.push_back(cur);
                continue;
            }
            // cur / g
            ModPoly num = cur, quo(cur.size() - g.size() + 1, 0);
            while (num.size() >= g.size() && !num.empty()) {
                std::uint64_t c = (unsigned __int128)num.back() * mp_pow(g.back(), p - 2, p) % p;
                std::size_t off = num.size() - g.size();
                quo[off] = c;
                for (std::size_t i = 0; i < g.size(); ++i) {
                    std::uint64_t tt = (unsigned __int128)c * g[i] % p;
                    num[off + i] = (num[off + i] + p - tt) % p;
                }
                mp_trim(num);
            }
            mp_trim(quo);
            stack.push_back(g);
            stack.push_back(quo);
        }
    }
}

// Linear multifactor Hensel lifting: f == lc * prod(lifted_i) mod p^k.
std::vector<UniPoly> hensel_lift(const UniPoly& f, const std::vector<ModPoly>& facs, std::uint64_t p,
                                 const Int& bound) {
    std::size_t r = facs.size();
    // Bezout data: sigma_i = (prod_{j!=i} f_j)^{-1} mod (f_i, p)
    std::vector<ModPoly> sigma(r);
    for (std::size_t i = 0; i < r; ++i) {
        ModPoly prod = {1};
        for (std::size_t j = 0; j < r; ++j)
            if (j != i) prod = mp_rem(mp_mul(prod, facs[j], p), facs[i], p);
        // inverse of prod mod (facs[i], p) by extended Euclid
        ModPoly a = facs[i], b = prod;
        ModPoly s0 = {}, s1 = {1};  // coefficients on b
        while (!b.empty()) {
            // a = q b + rem
            ModPoly rem = a, q(std::max<std::size_t>(a.size() - b.size() + 1, 1), 0);
            std::uint64_t inv = mp_pow(b.back(), p - 2, p);
            while (rem.size() >= b.size() && !rem.empty()) {
                std::uint64_t c = (unsigned __int128)rem.back() * inv % p;
                std::size_t off = rem.size() - b.size();
                q[off] = c;
                for (std::size_t k = 0; k < b.size(); ++k) {
                    std::uint64_t t = (unsigned __int128)c * b[k] % p;
                    rem[off + k] = (rem[off + k] + p - t) % p;
                }
                mp_trim(rem);
            }
            mp_trim(q);
            // (a, b) <- (b, rem); (s0, s1) <- (s1, s0 - q s1)
            ModPoly qs = mp_mul(q, s1, p);
            ModPoly s2(std::max(s0.size(), qs.size()), 0);
            for (std::size_t k = 0; k < s0.size(); ++k) s2[k] = s0[k];
            for (std::size_t k = 0; k < qs.size(); ++k) s2[k] = (s2[k] + p - qs[k]) % p;
            mp_trim(s2);
            a = std::move(b);
            b = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // a = gcd (constant, nonzero); scale s0 by a^{-1}
        if (a.size() != 1) throw std::runtime_error("Hensel: factors not coprime mod p");
        std::uint64_t ainv = mp_pow(a[0], p - 2, p);
        for (auto& c : s0) c = (unsigned __int128)c * ainv % p;
        sigma[i] = mp_rem(std::move(s0), facs[i], p);
    }

    const Int& lc = f.back();
    std::uint64_t lcp_inv = mp_pow(mpz_fdiv_ui(lc.get_mpz_t(), p), p - 2, p);

    std::vector<UniPoly> lifted(r);
    for (std::size_t i = 0; i < r; ++i) {
        lifted[i].resize(facs[i].size());
        for (std::size_t k = 0; k < facs[i].size(); ++k) lifted[i][k] = Int(static_cast<unsigned long>(facs[i][k]));
    }
    Int pk(static_cast<unsigned long>(p));
    Int target = 2 * bound * abs(lc) + 1;
    while (pk < target) {
        // error = (f - lc * prod lifted) / p^k
        UniPoly prod = {lc};
        for (const auto& g : lifted) prod = uni_mul(prod, g);
        UniPoly err = uni_sub(f, prod);
        ModPoly c(err.size());
        bool zero = true;
        for (std::size_t k = 0; k < err.size(); ++k) {
            Int q, rem;
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), err[k].get_mpz_t(), pk.get_mpz_t());
            if (rem != 0) throw std::runtime_error("Hensel: invariant broken");
            c[k] = mpz_fdiv_ui(q.get_mpz_t(), p);
            zero = zero && c[k] == 0;
        }
        mp_trim(c);
        if (!zero && !c.empty()) {
            // fold lc^{-1} into the correction
            for (auto& x : c) x = (unsigned __int128)x * lcp_inv % p;
            for (std::size_t i = 0; i < r; ++i) {
                ModPoly delta = mp_rem(mp_mul(c, sigma[i], p), facs[i], p);
                for (std::size_t k = 0; k < delta.size(); ++k)
                    lifted[i][k] += pk * Int(static_cast<unsigned long>(delta[k]));
            }
        }
        pk *= static_cast<unsigned long>(p);
    }
    // balance coefficients into (-p^k/2, p^k/2]
    for (auto& g : lifted)
        for (auto& x : g) {
            Int m = ((x % pk) + pk) % pk;
            if (m * 2 > pk) m -= pk;
            x = m;
        }
    return lifted;
}

Int mignotte_bound(const UniPoly& f) {
    Int maxc = 0;
    for (const auto& c : f) maxc = std::max(maxc, Int(abs(c)));
    Int b = maxc + 1;
    mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), f.size());  // (maxc+1) * 2^(deg+1)
    return b;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] != i + n - k) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Zassenhaus recombination of lifted modular factors.
void recombine(UniPoly f, std::vector<UniPoly> mods, const Int& pk, std::size_t max_subsets,
               std::vector<std::pair<UniPoly, int>>& out) {
    auto balanced = [&](Int x) {
        Int m = ((x % pk) + pk) % pk;
        if (m * 2 > pk) m -= pk;
        return m;
    };
    std::size_t tried = 0;
    std::size_t k = 1;
    while (2 * k <= mods.size()) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        bool found = false;
        do {
            if (++tried > max_subsets) throw std::runtime_error("recombination budget exceeded");
            UniPoly cand = {f.back()};
            for (std::size_t i : idx) cand = uni_mul(cand, mods[i]);
            for (auto& c : cand) c = balanced(c);
            uni_trim(cand);
            if (cand.empty()) continue;
            cand = uni_primitive(cand);
            if (!cand.empty() && cand.back() < 0)
                for (auto& c : cand) c = -c;
            UniPoly q;
            if (!uni_exact_divide(f, cand, q)) continue;
            out.emplace_back(cand, 1);
            std::vector<UniPoly> rest;
            for (std::size_t i = 0, j = 0; i < mods.size(); ++i) {
                if (j < idx.size() && idx[j] == i) {
                    ++j;
                    continue;
                }
                rest.push_back(mods[i]);
            }
            mods = std::move(rest);
            f = uni_primitive(q);
            found = true;
            break;
        } while (next_combination(idx, mods.size()));
        if (!found) ++k;
    }
    if (uni_deg(f) > 0) {
        if (!f.empty() && f.back() < 0)
            for (auto& c : f) c = -c;
        out.emplace_back(uni_primitive(f), 1);
    }
}

std::vector<std::pair<UniPoly, int>> yun_squarefree(const UniPoly& f) {
    // char 0 squarefree decomposition
    std::vector<std::pair<UniPoly, int>> parts;
    UniPoly d = uni_derivative(f);
    UniPoly a = uni_gcd(f, d);
    UniPoly b, c;
    uni_exact_divide(f, a, b);
    uni_exact_divide(d, a, c);
    int i = 1;
    while (uni_deg(b) > 0) {
        UniPoly db = uni_derivative(b);
        UniPoly diff = uni_sub(c, db);
        UniPoly p = uni_gcd(b, diff);
        if (uni_deg(p) > 0) parts.emplace_back(uni_primitive(p), i);
        UniPoly nb, nc;
        uni_exact_divide(b, p, nb);
        uni_exact_divide(diff, p, nc);
        b = nb;
        c = nc;
        ++i;
    }
    return parts;
}

}  // namespace

UniFactorization factor_univariate(const UniPoly& f_in, std::uint64_t seed, std::size_t max_subsets) {
    UniFactorization out;
    UniPoly f = f_in;
    uni_trim(f);
    if (f.empty()) throw std::invalid_argument("factor of zero polynomial");
    out.content = uni_content(f);
    f = uni_primitive(f);
    // strip x^k
    std::size_t low = 0;
    while (low < f.size() && f[low] == 0) ++low;
    if (low > 0) {
        f.erase(f.begin(), f.begin() + static_cast<long>(low));
        out.factors.emplace_back(UniPoly{0, 1}, static_cast<int>(low));
    }
    if (uni_deg(f) == 0) return out;
    if (uni_deg(f) == 1) {
        out.factors.emplace_back(f, 1);
        return out;
    }

    std::mt19937_64 rng(seed);
    for (auto& [sf, mult] : yun_squarefree(f)) {
        if (uni_deg(sf) == 1) {
            out.factors.emplace_back(sf, mult);
            continue;
        }
        // pick an odd prime where sf stays squarefree, preferring few factors
        static const std::uint64_t primes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                               37, 41, 43, 47, 53, 59, 61, 67, 71, 73};
        std::vector<ModPoly> best;
        std::uint64_t best_p = 0;
        int tried_ok = 0;
        for (std::uint64_t p : primes) {
            if (mpz_fdiv_ui(sf.back().get_mpz_t(), p) == 0) continue;
            ModPoly fp = reduce_mod(sf, p);
            ModPoly g = mp_gcd(fp, mp_derivative(fp, p), p);
            if (g.size() != 1) continue;
            std::vector<ModPoly> facs;
            mp_factor_squarefree(fp, p, rng, facs);
            if (best.empty() || facs.size() < best.size()) {
                best = std::move(facs);
                best_p = p;
            }
            if (++tried_ok >= 4 || best.size() == 1) break;
        }
        if (best.empty()) throw std::runtime_error("no usable prime for factorization");
        if (best.size() == 1) {
            out.factors.emplace_back(sf, mult);
            continue;
        }
        Int bound = mignotte_bound(sf);
        std::vector<UniPoly> lifted = hensel_lift(sf, best, best_p, bound);
        Int pk(static_cast<unsigned long>(best_p));
        Int target = 2 * bound * abs(sf.back()) + 1;
        while (pk < target) pk *= static_cast<unsigned long>(best_p);
        std::vector<std::pair<UniPoly, int>> irr;
        recombine(sf, lifted, pk, max_subsets, irr);
        for (auto& [g, e] : irr) out.factors.emplace_back(g, e * mult);
    }
    return out;
}

}  // namespace weylchar
