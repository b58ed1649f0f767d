#include "weylchar/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace weylchar {

std::string family_name(Family f) { return std::string(1, static_cast<char>(f)); }

std::string LatticeClass::kind_name() const {
    switch (kind) {
        case Kind::InMiPNotMi1Pstar: return "in_miP_not_mi1Pstar";
        case Kind::InMi1PstarNotMi1P: return "in_mi1Pstar_not_mi1P";
        case Kind::MultipleOfRho: return "multiple_of_rho";
        case Kind::MultipleOfRhoTilde: return "multiple_of_rho_tilde";
    }
    return "?";
}

namespace {

// Ambient realizations of the simple roots, scaled so all entries are integers.
// Uniform scaling leaves Cartan integers and length ratios unchanged.
struct AmbientBase {
    int dim = 0;
    std::vector<std::vector<Coord>> roots;  // one vector per simple root
};

AmbientBase ambient_base(Family fam, int rank) {
    AmbientBase b;
    auto unit = [&](int i, int j, Coord ci, Coord cj) {
        std::vector<Coord> v(static_cast<std::size_t>(b.dim), 0);
        v[static_cast<std::size_t>(i)] = ci;
        if (j >= 0) v[static_cast<std::size_t>(j)] = cj;
        return v;
    };
    switch (fam) {
        case Family::A:
            if (rank < 1) throw std::invalid_argument("A requires rank >= 1");
            b.dim = rank + 1;
            for (int i = 0; i < rank; ++i) b.roots.push_back(unit(i, i + 1, 1, -1));
            break;
        case Family::B:
            if (rank < 2) throw std::invalid_argument("B requires rank >= 2");
            b.dim = rank;
            for (int i = 0; i + 1 < rank; ++i) b.roots.push_back(unit(i, i + 1, 1, -1));
            b.roots.push_back(unit(rank - 1, -1, 1, 0));
            break;
        case Family::C:
            if (rank < 2) throw std::invalid_argument("C requires rank >= 2");
            b.dim = rank;
            for (int i = 0; i + 1 < rank; ++i) b.roots.push_back(unit(i, i + 1, 1, -1));
            b.roots.push_back(unit(rank - 1, -1, 2, 0));
            break;
        case Family::D:
            if (rank < 4) throw std::invalid_argument("D requires rank >= 4");
            b.dim = rank;
            for (int i = 0; i + 1 < rank; ++i) b.roots.push_back(unit(i, i + 1, 1, -1));
            b.roots.push_back(unit(rank - 2, rank - 1, 1, 1));
            break;
        case Family::E: {
            if (rank < 6 || rank > 8) throw std::invalid_argument("E requires rank in {6,7,8}");
            b.dim = 8;
            // Bourbaki base of E8, doubled; E6/E7 take the first 6/7 roots.
            std::vector<Coord> a1 = {1, -1, -1, -1, -1, -1, -1, 1};
            b.roots.push_back(a1);
            b.roots.push_back({2, 2, 0, 0, 0, 0, 0, 0});
            for (int i = 0; i + 2 < rank; ++i) {
                std::vector<Coord> v(8, 0);
                v[static_cast<std::size_t>(i)] = -2;
                v[static_cast<std::size_t>(i) + 1] = 2;
                b.roots.push_back(v);
            }
            break;
        }
        case Family::F: {
            if (rank != 4) throw std::invalid_argument("F requires rank 4");
            b.dim = 4;
            b.roots.push_back({0, 2, -2, 0});
            b.roots.push_back({0, 0, 2, -2});
            b.roots.push_back({0, 0, 0, 2});
            b.roots.push_back({1, -1, -1, -1});
            break;
        }
        case Family::G:
            if (rank != 2) throw std::invalid_argument("G requires rank 2");
            b.dim = 3;
            b.roots.push_back({1, -1, 0});
            b.roots.push_back({-2, 1, 1});
            break;
    }
    return b;
}

Coord dot(const std::vector<Coord>& a, const std::vector<Coord>& b) {
    Coord s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Cartan matrix C[i][j] = <alpha_i^*, alpha_j> = 2(a_i,a_j)/(a_i,a_i).
std::vector<Coord> cartan_of(Family fam, int rank, std::vector<bool>* is_long = nullptr) {
    AmbientBase b = ambient_base(fam, rank);
    std::vector<Coord> cart(static_cast<std::size_t>(rank * rank), 0);
    Coord min_len = 0, max_len = 0;
    for (int i = 0; i < rank; ++i) {
        Coord len = dot(b.roots[static_cast<std::size_t>(i)], b.roots[static_cast<std::size_t>(i)]);
        min_len = (i == 0) ? len : std::min(min_len, len);
        max_len = (i == 0) ? len : std::max(max_len, len);
        for (int j = 0; j < rank; ++j) {
            Coord num = 2 * dot(b.roots[static_cast<std::size_t>(i)], b.roots[static_cast<std::size_t>(j)]);
            if (num % len != 0) throw std::logic_error("non-integral Cartan entry");
            cart[static_cast<std::size_t>(i * rank + j)] = num / len;
        }
    }
    if (is_long) {
        is_long->assign(static_cast<std::size_t>(rank), false);
        for (int i = 0; i < rank; ++i)
            (*is_long)[static_cast<std::size_t>(i)] =
                (max_len != min_len) &&
                dot(b.roots[static_cast<std::size_t>(i)], b.roots[static_cast<std::size_t>(i)]) == max_len;
    }
    return cart;
}

int m_phi_of(Family fam) {
    switch (fam) {
        case Family::B:
        case Family::C:
        case Family::F: return 2;
        case Family::G: return 3;
        default: return 1;
    }
}

// Exact inverse via Gauss-Jordan over the rationals.
std::vector<Rat> invert(const std::vector<Coord>& m, int n) {
    std::vector<std::vector<Rat>> a(static_cast<std::size_t>(n),
                                    std::vector<Rat>(static_cast<std::size_t>(2 * n), Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = Rat(m[static_cast<std::size_t>(i * n + j)]);
        a[i][static_cast<std::size_t>(n + i)] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) { piv = r; break; }
        if (piv < 0) throw std::logic_error("singular Cartan matrix");
        std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(piv)]);
        Rat d = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        for (auto& x : a[static_cast<std::size_t>(col)]) x /= d;
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            Rat f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int c = 0; c < 2 * n; ++c)
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
        }
    }
    std::vector<Rat> inv(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv[static_cast<std::size_t>(i * n + j)] = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)];
    return inv;
}

}  // namespace

std::shared_ptr<RootSystem> RootSystem::build_impl(Family family, int rank, std::size_t weyl_cap) {
    auto rs = std::shared_ptr<RootSystem>(new RootSystem());
    rs->family_ = family;
    rs->rank_ = rank;
    if (rank == 0) {  // empty system, used as the base of corner recursion
        rs->m_phi_ = 1;
        rs->weyl_.push_back(WeylElement{{}, 1, 0});
        return rs;
    }
    rs->cartan_ = cartan_of(family, rank, &rs->simple_is_long_);
    rs->m_phi_ = m_phi_of(family);
    for (int j = 0; j < rank; ++j) {
        Weight col = Weight::zero(rank);
        for (int i = 0; i < rank; ++i) col[i] = rs->cartan(i, j);
        rs->simple_roots_.push_back(col);
    }
    rs->inv_cartan_ = invert(rs->cartan_, rank);

    // Term-order grade: column sums of the inverse Cartan matrix (the value of
    // the Weyl-height functional on each fundamental weight), scaled to integers.
    {
        std::vector<Rat> col_sum(static_cast<std::size_t>(rank), Rat(0));
        Int den = 1;
        for (int b = 0; b < rank; ++b) {
            for (int a = 0; a < rank; ++a) col_sum[static_cast<std::size_t>(b)] += rs->pairing_w(a, b);
            Int d = col_sum[static_cast<std::size_t>(b)].get_den();
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        }
        rs->grade_vec_.resize(static_cast<std::size_t>(rank));
        for (int b = 0; b < rank; ++b) {
            Rat v = col_sum[static_cast<std::size_t>(b)] * Rat(den);
            rs->grade_vec_[static_cast<std::size_t>(b)] = to_ll(rat_to_int(v));
            if (rs->grade_vec_[static_cast<std::size_t>(b)] <= 0) throw std::logic_error("grade must be positive");
        }
    }

    // Simple reflections as matrices on fundamental-weight coordinates:
    // (s_i mu)_j = mu_j - C_{ji} mu_i.
    std::vector<WeylElement> gens;
    for (int i = 0; i < rank; ++i) {
        WeylElement g;
        g.matrix.assign(static_cast<std::size_t>(rank * rank), 0);
        for (int j = 0; j < rank; ++j)
            for (int k = 0; k < rank; ++k) {
                Coord v = (j == k) ? 1 : 0;
                if (k == i) v -= rs->cartan(j, i);
                g.matrix[static_cast<std::size_t>(j * rank + k)] = v;
            }
        g.sign = -1;
        g.length = 1;
        gens.push_back(g);
    }

    // Breadth-first closure of the simple reflections.
    std::map<std::vector<Coord>, int> seen;
    std::vector<WeylElement> group;
    WeylElement id;
    id.matrix.assign(static_cast<std::size_t>(rank * rank), 0);
    for (int i = 0; i < rank; ++i) id.matrix[static_cast<std::size_t>(i * rank + i)] = 1;
    group.push_back(id);
    seen[id.matrix] = 0;
    for (std::size_t head = 0; head < group.size(); ++head) {
        WeylElement cur = group[head];  // copy: group may reallocate
        for (const auto& g : gens) {
            WeylElement nxt;
            nxt.matrix.assign(static_cast<std::size_t>(rank * rank), 0);
            for (int i = 0; i < rank; ++i)
                for (int j = 0; j < rank; ++j) {
                    Coord s = 0;
                    for (int k = 0; k < rank; ++k)
                        s += g.matrix[static_cast<std::size_t>(i * rank + k)] *
                             cur.matrix[static_cast<std::size_t>(k * rank + j)];
                    nxt.matrix[static_cast<std::size_t>(i * rank + j)] = s;
                }
            if (seen.count(nxt.matrix)) continue;
            nxt.length = cur.length + 1;
            nxt.sign = -cur.sign;
            seen[nxt.matrix] = static_cast<int>(group.size());
            group.push_back(nxt);
            if (group.size() > weyl_cap)
                throw std::runtime_error("Weyl group of " + rs->name() + " exceeds cap " +
                                         std::to_string(weyl_cap));
        }
    }
    rs->weyl_ = std::move(group);

    // Roots: the W-orbit of the simple roots; lengths carry over from the seed.
    std::map<std::vector<Coord>, bool> roots;
    for (int i = 0; i < rank; ++i)
        for (const auto& w : rs->weyl_) {
            Weight r = rs->apply(w, rs->simple_root(i));
            roots[r.coords] = rs->simple_is_long_[static_cast<std::size_t>(i)];
        }
    for (auto& [coords, is_long] : roots) {
        // positive iff the expansion over simple roots has positive entries;
        // the first nonzero coefficient decides the sign of the whole root.
        Rat lead(0);
        for (int a = 0; a < rank && lead == 0; ++a) {
            Rat s(0);
            for (int b = 0; b < rank; ++b) s += rs->pairing_w(a, b) * Rat(coords[static_cast<std::size_t>(b)]);
            lead = s;
        }
        if (lead > 0) {
            rs->positive_roots_.push_back(Weight(coords));
            rs->pos_root_is_long_.push_back(is_long);
        }
    }

    // Corner roots: at most one Dynkin neighbor.
    for (int i = 0; i < rank; ++i) {
        int nbrs = 0;
        for (int j = 0; j < rank; ++j)
            if (j != i && rs->cartan(i, j) != 0) ++nbrs;
        if (nbrs <= 1) rs->corners_.push_back(i);
    }

    rs->corner_data_.resize(static_cast<std::size_t>(rank));
    for (int a : rs->corners_) {
        CornerData cd;
        std::vector<int> kept;
        for (int j = 0; j < rank; ++j)
            if (j != a) kept.push_back(j);
        int sr = rank - 1;
        if (sr == 0) {
            cd.sub = build_impl(Family::A, 0, weyl_cap);
        } else {
            // Identify (family, rank-1) and the relabeling onto our kept rows.
            bool found = false;
            std::vector<std::pair<Family, int>> cands;
            for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G}) {
                try {
                    cartan_of(f, sr);
                    cands.emplace_back(f, sr);
                } catch (const std::invalid_argument&) {
                }
            }
            for (auto [f, r2] : cands) {
                std::vector<Coord> can = cartan_of(f, r2);
                std::vector<int> perm(static_cast<std::size_t>(sr));
                std::iota(perm.begin(), perm.end(), 0);
                do {
                    bool ok = true;
                    for (int i = 0; i < sr && ok; ++i)
                        for (int j = 0; j < sr && ok; ++j) {
                            Coord sub_ij = rs->cartan(kept[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])],
                                                      kept[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])]);
                            if (sub_ij != can[static_cast<std::size_t>(i * sr + j)]) ok = false;
                        }
                    if (ok) {
                        cd.sub = build_impl(f, sr, std::max(weyl_cap, rs->weyl_.size()));
                        cd.sub_to_orig.resize(static_cast<std::size_t>(sr));
                        for (int i = 0; i < sr; ++i)
                            cd.sub_to_orig[static_cast<std::size_t>(i)] =
                                kept[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
                        found = true;
                        break;
                    }
                } while (std::next_permutation(perm.begin(), perm.end()));
                if (found) break;
            }
            if (!found) throw std::logic_error("could not classify corner subsystem of " + rs->name());
        }
        rs->corner_data_[static_cast<std::size_t>(a)] = std::move(cd);
    }
    return rs;
}

RootSystemPtr RootSystem::build(Family family, int rank, std::size_t weyl_cap) {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    return build_impl(family, rank, weyl_cap);
}

RootSystemPtr RootSystem::parse(const std::string& name, std::size_t weyl_cap) {
    if (name.size() < 2) throw std::invalid_argument("bad root system name: " + name);
    Family fam;
    switch (name[0]) {
        case 'A': fam = Family::A; break;
        case 'B': fam = Family::B; break;
        case 'C': fam = Family::C; break;
        case 'D': fam = Family::D; break;
        case 'E': fam = Family::E; break;
        case 'F': fam = Family::F; break;
        case 'G': fam = Family::G; break;
        default: throw std::invalid_argument("bad root system name: " + name);
    }
    int rank = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9') throw std::invalid_argument("bad root system name: " + name);
        rank = rank * 10 + (name[i] - '0');
    }
    return build(fam, rank, weyl_cap);
}

std::string RootSystem::name() const { return family_name(family_) + std::to_string(rank_); }

Weight RootSystem::apply(const WeylElement& w, const Weight& mu) const {
    Weight out = Weight::zero(rank_);
    for (int i = 0; i < rank_; ++i) {
        Coord s = 0;
        for (int k = 0; k < rank_; ++k) s += w.matrix[static_cast<std::size_t>(i * rank_ + k)] * mu[k];
        out[i] = s;
    }
    return out;
}

Coord RootSystem::grade(const std::vector<Coord>& coords) const {
    Coord s = 0;
    for (int i = 0; i < rank_; ++i) s += grade_vec_[static_cast<std::size_t>(i)] * coords[static_cast<std::size_t>(i)];
    return s;
}

bool RootSystem::term_less(const std::vector<Coord>& a, const std::vector<Coord>& b) const {
    Coord ga = grade(a), gb = grade(b);
    if (ga != gb) return ga < gb;
    return a < b;
}

bool RootSystem::is_corner(int a) const {
    return std::find(corners_.begin(), corners_.end(), a) != corners_.end();
}

const CornerData& RootSystem::corner_data(int a) const {
    if (a < 0 || a >= rank_ || !corner_data_[static_cast<std::size_t>(a)])
        throw std::invalid_argument("index " + std::to_string(a) + " is not a corner root of " + name());
    return *corner_data_[static_cast<std::size_t>(a)];
}

Weight RootSystem::project(int a, const Weight& mu) const {
    const CornerData& cd = corner_data(a);
    Weight out = Weight::zero(rank_ - 1);
    for (int i = 0; i + 1 < rank_; ++i) out[i] = mu[cd.sub_to_orig[static_cast<std::size_t>(i)]];
    return out;
}

WeylVectors weyl_vectors(const RootSystem& rs) {
    WeylVectors v;
    v.rho = Weight(std::vector<Coord>(static_cast<std::size_t>(rs.rank()), 1));
    v.rho_tilde = v.rho;
    for (int i = 0; i < rs.rank(); ++i)
        if (!rs.simple_root_is_long(i)) v.rho_tilde[i] = rs.m_phi();
    return v;
}

GcdInvariants gcd_invariants(const RootSystem& rs, const Weight& lambda) {
    if (!lambda.dominant() || !lambda.regular())
        throw std::invalid_argument("gcd_invariants requires a dominant regular weight");
    GcdInvariants g;
    g.d = coord_gcd(lambda);
    Weight rt = weyl_vectors(rs).rho_tilde;
    if (weight_divides(rt, lambda)) {
        Coord e = 0;
        for (int i = 0; i < rs.rank(); ++i) e = ll_gcd(e, lambda[i] / rt[i]);
        g.d_star = e;
    }
    return g;
}

namespace {
// lambda in m^k P* iff m^k divides every short simple coordinate and m^{k-1}
// every long one (omega*_a = omega_a for short a, omega_a / m(Phi) for long).
bool in_mk_pstar(const RootSystem& rs, const Weight& lambda, int k) {
    if (k <= 0) return true;
    Coord mk = 1;
    for (int t = 0; t < k; ++t) mk *= rs.m_phi();
    for (int i = 0; i < rs.rank(); ++i) {
        Coord need = rs.simple_root_is_long(i) ? mk / rs.m_phi() : mk;
        if (lambda[i] % need != 0) return false;
    }
    return true;
}
}  // namespace

LatticeClass lattice_class(const RootSystem& rs, const Weight& lambda) {
    if (!lambda.dominant() || !lambda.regular())
        throw std::invalid_argument("lattice_class requires a dominant regular weight");
    LatticeClass lc;
    WeylVectors v = weyl_vectors(rs);
    if (weight_divides(v.rho, lambda)) {
        bool mult = true;
        Coord q = lambda[0];
        for (int i = 0; i < rs.rank(); ++i) mult = mult && lambda[i] == q;
        if (mult) {
            lc.kind = LatticeClass::Kind::MultipleOfRho;
            return lc;
        }
    }
    {
        bool mult = weight_divides(v.rho_tilde, lambda);
        if (mult) {
            Coord q = lambda[0] / v.rho_tilde[0];
            for (int i = 0; i < rs.rank(); ++i) mult = mult && lambda[i] == q * v.rho_tilde[i];
            if (mult) {
                lc.kind = LatticeClass::Kind::MultipleOfRhoTilde;
                return lc;
            }
        }
    }
    if (rs.m_phi() == 1) {
        lc.i = 0;
        lc.kind = LatticeClass::Kind::InMiPNotMi1Pstar;
        return lc;
    }
    Coord d = coord_gcd(lambda);
    int i = 0;
    Coord p = 1;
    while (d % (p * rs.m_phi()) == 0) {
        p *= rs.m_phi();
        ++i;
    }
    lc.i = i;
    lc.kind = in_mk_pstar(rs, lambda, i + 1) ? LatticeClass::Kind::InMi1PstarNotMi1P
                                             : LatticeClass::Kind::InMiPNotMi1Pstar;
    return lc;
}

bool has_minus_one(const RootSystem& rs) {
    for (const auto& w : rs.weyl()) {
        bool neg = true;
        for (int i = 0; i < rs.rank() && neg; ++i)
            for (int j = 0; j < rs.rank() && neg; ++j) {
                Coord want = (i == j) ? -1 : 0;
                if (w.matrix[static_cast<std::size_t>(i * rs.rank() + j)] != want) neg = false;
            }
        if (neg) return true;
    }
    return false;
}

}  // namespace weylchar
