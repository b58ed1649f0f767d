#include "weylchar/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace weylchar {

namespace {
std::mutex g_cyclo_mutex;
std::map<int, UniPoly> g_cyclo_cache;

UniPoly x_pow_minus_one(long n) {
    UniPoly f(static_cast<std::size_t>(n) + 1, Int(0));
    f[0] = -1;
    f[static_cast<std::size_t>(n)] = 1;
    return f;
}

// division by a monic divisor, remainder must vanish
UniPoly exact_monic_quotient(const UniPoly& f, const UniPoly& g) {
    UniPoly q;
    if (!uni_exact_divide(f, g, q)) throw std::logic_error("expected exact division");
    return q;
}
}  // namespace

const UniPoly& cyclotomic_poly(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_poly requires n >= 1");
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    auto it = g_cyclo_cache.find(n);
    if (it != g_cyclo_cache.end()) return it->second;
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up
    for (int m = 1; m <= n; ++m) {
        if (g_cyclo_cache.count(m) || n % m != 0) continue;
        UniPoly num = x_pow_minus_one(m);
        for (int d = 1; d < m; ++d)
            if (m % d == 0) num = exact_monic_quotient(num, g_cyclo_cache.at(d));
        g_cyclo_cache.emplace(m, std::move(num));
    }
    return g_cyclo_cache.at(n);
}

CycloElem CycloElem::from_poly(int n, UniPoly p) {
    const UniPoly& mod = cyclotomic_poly(n);
    // monic reduction
    while (uni_deg(p) >= uni_deg(mod)) {
        Int c = p.back();
        std::size_t off = p.size() - mod.size();
        for (std::size_t i = 0; i < mod.size(); ++i) p[off + i] -= c * mod[i];
        uni_trim(p);
    }
    return CycloElem{n, std::move(p)};
}

CycloElem CycloElem::root_power(int n, long k) {
    k %= n;
    if (k < 0) k += n;
    UniPoly p(static_cast<std::size_t>(k) + 1, Int(0));
    p[static_cast<std::size_t>(k)] = 1;
    return from_poly(n, std::move(p));
}

CycloElem cyclo_add(const CycloElem& a, const CycloElem& b) {
    if (a.n != b.n) throw std::invalid_argument("conductor mismatch");
    return CycloElem::from_poly(a.n, uni_add(a.poly, b.poly));
}

CycloElem cyclo_sub(const CycloElem& a, const CycloElem& b) {
    if (a.n != b.n) throw std::invalid_argument("conductor mismatch");
    return CycloElem::from_poly(a.n, uni_sub(a.poly, b.poly));
}

CycloElem cyclo_mul(const CycloElem& a, const CycloElem& b) {
    if (a.n != b.n) throw std::invalid_argument("conductor mismatch");
    return CycloElem::from_poly(a.n, uni_mul(a.poly, b.poly));
}

bool cyclo_is_zero(const CycloElem& a) { return a.poly.empty(); }

Int cyclo_norm(const CycloElem& a) {
    if (a.poly.empty()) return 0;
    return uni_resultant(cyclotomic_poly(a.n), a.poly);
}

bool unit_one_minus_zeta(int e) {
    if (e < 2) throw std::invalid_argument("unit_one_minus_zeta requires e >= 2");
    CycloElem one_minus = CycloElem::from_poly(e, UniPoly{Int(1), Int(-1)});
    Int n = cyclo_norm(one_minus);
    return abs(n) == 1;
}

UniPoly phi_quotient(long e, const std::vector<long>& fs) {
    if (e < 1) throw std::invalid_argument("phi_quotient requires e >= 1");
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i] < 1 || e % fs[i] != 0)
            throw std::invalid_argument("phi_quotient: each f must divide e");
        for (std::size_t j = i + 1; j < fs.size(); ++j)
            if (ll_gcd(fs[i], fs[j]) != 1)
                throw std::invalid_argument("phi_quotient: moduli must be pairwise coprime");
    }
    // Phi_e(x) = 1 + x + ... + x^{e-1}
    UniPoly num(static_cast<std::size_t>(e), Int(1));
    for (long f : fs) {
        if (f == 1) continue;
        UniPoly den(static_cast<std::size_t>(f), Int(1));
        UniPoly q;
        if (!uni_exact_divide(num, den, q)) throw std::logic_error("phi_quotient: non-exact division");
        num = std::move(q);
    }
    return num;
}

namespace {

// evaluate an integer polynomial at zeta_m^k inside Z[zeta_m]
CycloElem eval_at_root(const UniPoly& q, int m, long k) {
    UniPoly acc(static_cast<std::size_t>(m), Int(0));
    for (std::size_t j = 0; j < q.size(); ++j) {
        if (q[j] == 0) continue;
        long ex = ((static_cast<long>(j) * (k % m)) % m + m) % m;
        acc[static_cast<std::size_t>(ex)] += q[j];
    }
    uni_trim(acc);
    return CycloElem::from_poly(m, std::move(acc));
}

bool prime_power_order(long n, long* prime_out) {
    if (n < 2) return false;
    long p = 2;
    while (p * p <= n) {
        if (n % p == 0) break;
        ++p;
    }
    if (p * p > n) p = n;  // n prime
    long m = n;
    while (m % p == 0) m /= p;
    if (m == 1) {
        if (prime_out) *prime_out = p;
        return true;
    }
    return false;
}

}  // namespace

ObstructionReport arith_obstruction_report(long e, long f, long d, long conductor_cap) {
    if (d < 1 || e % d != 0 || f % d != 0) throw std::invalid_argument("need d | e and d | f");
    if (e == d) throw std::invalid_argument("need e != d");
    if (e > conductor_cap || f > conductor_cap)
        throw std::invalid_argument("conductor cap exceeded");

    ObstructionReport rep;
    rep.e = e;
    rep.f = f;
    rep.d = d;

    // mu(e,d): exponents k with zeta_e^{kd} != 1
    std::vector<long> K;
    for (long k = 0; k < e; ++k)
        if ((k * d) % e != 0) K.push_back(k);

    // right-hand sides: Phi_{f:d}(delta) for delta in mu(e,d)
    UniPoly q = phi_quotient(f, {d});
    bool all_units = true;
    std::vector<bool> rhs_zero(K.size(), false);
    for (std::size_t i = 0; i < K.size(); ++i) {
        long g = ll_gcd(e, K[i]);
        int order = static_cast<int>(e / g);
        CycloElem val = eval_at_root(q, order, K[i] / g);
        Int nrm = cyclo_norm(val);
        if (abs(nrm) != 1) all_units = false;
        if (nrm == 0) rhs_zero[i] = true;
    }
    rep.all_rhs_units = all_units;

    long gcd_ef = ll_gcd(e, f);
    if (gcd_ef > d) {
        rep.conclusion = ObstructionReport::Conclusion::NoObstruction;
        // witness split along the shared cyclotomic factor: collect the shared
        // roots (order dividing f) on one side
        std::vector<long> zv, zu;
        for (std::size_t i = 0; i < K.size(); ++i) (rhs_zero[i] ? zv : zu).push_back(K[i]);
        if (zu.empty() && zv.size() >= 2) {
            zu.push_back(zv.back());
            zv.pop_back();
        }
        if (!zu.empty() && !zv.empty()) {
            rep.no_obstruction_split = std::make_pair(zu, zv);
        } else {
            rep.note = "mu(e,d) admits no bipartition into two nonempty parts";
        }
        return rep;
    }

    // gcd(e,f) = d: every bipartition must expose a prime-power witness pair.
    // Precompute, per exponent difference, whether zeta_e^diff has prime-power
    // order, and that 1 - zeta of that order is a non-unit.
    std::vector<long> diff_prime(static_cast<std::size_t>(e), 0);
    for (long diff = 1; diff < e; ++diff) {
        long ord = e / ll_gcd(e, diff);
        long pr = 0;
        if (prime_power_order(ord, &pr) && !unit_one_minus_zeta(static_cast<int>(ord)))
            diff_prime[static_cast<std::size_t>(diff)] = pr;
    }

    std::size_t n = K.size();
    if (n < 2) {
        rep.conclusion = ObstructionReport::Conclusion::ContradictionConfirmed;
        rep.note = "no bipartition exists; a two-non-unit factorization is impossible";
        rep.bipartitions_checked = 0;
        return rep;
    }
    bool all_have_witness = true;
    long checked = 0;
    // K[0] stays on the U side; masks choose the V side among the rest
    for (unsigned long mask = 1; mask < (1ul << (n - 1)); ++mask) {
        ++checked;
        bool found = false;
        ObstructionReport::Witness wit;
        for (std::size_t i = 0; i < n && !found; ++i) {
            bool i_in_v = i > 0 && (mask >> (i - 1)) & 1;
            if (i_in_v) continue;  // gamma from Z_U
            for (std::size_t j = 1; j < n && !found; ++j) {
                if (!((mask >> (j - 1)) & 1)) continue;  // delta from Z_V
                long diff = ((K[i] - K[j]) % e + e) % e;
                if (diff != 0 && diff_prime[static_cast<std::size_t>(diff)] != 0) {
                    found = true;
                    wit.gamma_exp = K[i];
                    wit.delta_exp = K[j];
                    wit.prime = diff_prime[static_cast<std::size_t>(diff)];
                }
            }
        }
        if (!found) {
            all_have_witness = false;
            break;
        }
        if (!rep.witness) rep.witness = wit;
    }
    rep.bipartitions_checked = checked;
    rep.conclusion = (all_have_witness && all_units)
                         ? ObstructionReport::Conclusion::ContradictionConfirmed
                         : ObstructionReport::Conclusion::NoObstruction;
    return rep;
}

}  // namespace weylchar
