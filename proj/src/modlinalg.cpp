#include "weylchar/modlinalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylchar {

namespace {
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    std::uint64_t r = 1, e = p - 2, b = a % p;
    while (e) {
        if (e & 1) r = (unsigned __int128)r * b % p;
        b = (unsigned __int128)b * b % p;
        e >>= 1;
    }
    return r;
}
}  // namespace

ModKernel modp_kernel(const SparseIntMatrix& a, std::uint64_t p, bool want_basis) {
    ModKernel out;
    out.p = p;
    std::size_t R = static_cast<std::size_t>(a.rows), C = static_cast<std::size_t>(a.cols);
    std::vector<std::vector<std::uint64_t>> m(R, std::vector<std::uint64_t>(C, 0));
    for (const auto& e : a.entries) {
        std::uint64_t v = mpz_fdiv_ui(e.val.get_mpz_t(), p);
        auto& cell = m[static_cast<std::size_t>(e.row)][static_cast<std::size_t>(e.col)];
        cell = (cell + v) % p;
    }

    std::vector<int> pivot_row_of_col(C, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < C && row < R; ++col) {
        std::size_t piv = row;
        while (piv < R && m[piv][col] == 0) ++piv;
        if (piv == R) continue;
        std::swap(m[row], m[piv]);
        std::uint64_t inv = inv_mod(m[row][col], p);
        std::uint64_t* prow = m[row].data();
        for (std::size_t j = col; j < C; ++j) prow[j] = prow[j] * inv % p;  // fits: both < 2^31
        // full reduction only when the kernel basis is wanted; the rank needs
        // just the forward sweep
        std::size_t start = want_basis ? 0 : row + 1;
        for (std::size_t i = start; i < R; ++i) {
            if (i == row || m[i][col] == 0) continue;
            std::uint64_t fneg = p - m[i][col];
            std::uint64_t* ri = m[i].data();
            for (std::size_t j = col; j < C; ++j) ri[j] = (ri[j] + fneg * prow[j]) % p;
        }
        pivot_row_of_col[col] = static_cast<int>(row);
        out.pivot_cols.push_back(static_cast<int>(col));
        ++row;
    }
    out.rank = static_cast<int>(row);
    for (std::size_t c = 0; c < C; ++c)
        if (pivot_row_of_col[c] < 0) out.free_cols.push_back(static_cast<int>(c));

    if (want_basis) {
        for (int fc : out.free_cols) {
            std::vector<std::uint64_t> v(C, 0);
            v[static_cast<std::size_t>(fc)] = 1;
            for (std::size_t c = 0; c < C; ++c) {
                int pr = pivot_row_of_col[c];
                if (pr < 0) continue;
                std::uint64_t val = m[static_cast<std::size_t>(pr)][static_cast<std::size_t>(fc)];
                v[c] = (p - val) % p;
            }
            out.basis.push_back(std::move(v));
        }
    }
    return out;
}

bool sparse_maps_to_zero(const SparseIntMatrix& a, const std::vector<Int>& x_num) {
    std::vector<Int> acc(static_cast<std::size_t>(a.rows), Int(0));
    for (const auto& e : a.entries) acc[static_cast<std::size_t>(e.row)] += e.val * x_num[static_cast<std::size_t>(e.col)];
    for (const auto& v : acc)
        if (v != 0) return false;
    return true;
}

std::optional<Rat> rational_reconstruct(const Int& x, const Int& m) {
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), Int(m / 2).get_mpz_t());
    Int r0 = m, r1 = ((x % m) + m) % m;
    Int t0 = 0, t1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0) return std::nullopt;
    if (abs(t1) > bound) return std::nullopt;
    Int num = r1, den = t1;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (int_gcd(abs(num), den) != 1) return std::nullopt;
    Rat out(num, den);
    out.canonicalize();
    return out;
}

Int bareiss_det(std::vector<std::vector<Int>> a) {
    std::size_t n = a.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

const std::vector<std::uint64_t>& elimination_primes() {
    static const std::vector<std::uint64_t> primes = {
        2147483647ull, 2147483629ull, 2147483587ull, 2147483579ull, 2147483563ull, 2147483549ull,
        2147483543ull, 2147483497ull, 2147483489ull, 2147483477ull, 2147483423ull, 2147483399ull,
        2147483353ull, 2147483323ull, 2147483269ull, 2147483249ull, 2147483237ull, 2147483179ull,
        2147483171ull, 2147483137ull, 2147483123ull, 2147483077ull, 2147483069ull, 2147483059ull,
    };
    return primes;
}

}  // namespace weylchar
