#include "trunczeta/ring.hpp"

#include <stdexcept>

namespace trunczeta {

const RingStructure& RingStructure::truncated_polynomial() {
    static const RingStructure ring = [] {
        RingStructure r;
        // basis order (t^3, t^2, t, 1): index i carries degree 3-i, and
        // t^a * t^b = t^{a+b} when a+b <= 3, else 0.
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                int deg = (3 - i) + (3 - j);
                if (deg <= 3) r.c_[i][j][3 - deg] = 1;
            }
        }
        return r;
    }();
    return ring;
}

Vec4 RingStructure::multiply(const Vec4& u, const Vec4& v) const {
    Vec4 out{Int(0), Int(0), Int(0), Int(0)};
    for (int i = 0; i < 4; ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < 4; ++j) {
            if (v[j] == 0) continue;
            Int coef = u[i] * v[j];
            for (int m = 0; m < 4; ++m)
                if (c_[i][j][m]) out[m] += coef * c_[i][j][m];
        }
    }
    return out;
}

std::array<Vec4, 4> HnfMatrix::rows() const {
    return {Vec4{pk(), Int(0), Int(0), Int(0)},
            Vec4{Int(a21), pl(), Int(0), Int(0)},
            Vec4{Int(a31), Int(a32), pr(), Int(0)},
            Vec4{Int(0), Int(0), Int(0), Int(1)}};
}

std::optional<Vec4> hnf_membership(const HnfMatrix& M, const Vec4& w) {
    Int pk = M.pk(), pl = M.pl(), pr = M.pr();
    Vec4 c{Int(0), Int(0), Int(0), Int(0)};
    c[3] = w[3];
    if (!mpz_divisible_p(w[2].get_mpz_t(), pr.get_mpz_t())) return std::nullopt;
    c[2] = w[2] / pr;
    Int t = w[1] - c[2] * M.a32;
    if (!mpz_divisible_p(t.get_mpz_t(), pl.get_mpz_t())) return std::nullopt;
    c[1] = t / pl;
    t = w[0] - c[1] * M.a21 - c[2] * M.a31;
    if (!mpz_divisible_p(t.get_mpz_t(), pk.get_mpz_t())) return std::nullopt;
    c[0] = t / pk;
    return c;
}

bool lattice_closed(const HnfMatrix& M, const RingStructure& ring) {
    auto rows = M.rows();
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            Vec4 prod = ring.multiply(rows[static_cast<size_t>(i)], rows[static_cast<size_t>(j)]);
            if (!hnf_membership(M, prod)) return false;
        }
    return true;
}

bool is_subring(const HnfMatrix& M) {
    return lattice_closed(M, RingStructure::truncated_polynomial());
}

bool closure_conditions(const HnfMatrix& M) {
    if (M.l > 2 * M.r) return false;
    if (M.k > M.l + M.r) return false;
    long need = static_cast<long>(M.k) + M.l - M.r;
    if (need <= 0) return true;
    Int w = 2 * M.pl() * M.a32 - M.pr() * M.a21;
    return valuation(w, M.p) >= need;
}

namespace {

Int det3(const std::array<Vec4, 4>& m, int r0, int r1, int r2, int c0, int c1, int c2) {
    const auto& a = m[static_cast<size_t>(r0)];
    const auto& b = m[static_cast<size_t>(r1)];
    const auto& c = m[static_cast<size_t>(r2)];
    return a[c0] * (b[c1] * c[c2] - b[c2] * c[c1]) -
           a[c1] * (b[c0] * c[c2] - b[c2] * c[c0]) +
           a[c2] * (b[c0] * c[c1] - b[c1] * c[c0]);
}

// gcd of all size-k minors, k = 1..4; gcd(empty/all-zero) = 0
std::array<Int, 4> minor_gcds(const HnfMatrix& M) {
    auto rows = M.rows();
    std::array<Int, 4> g{Int(0), Int(0), Int(0), Int(0)};

    for (const auto& row : rows)
        for (const auto& e : row) g[0] = gcd(g[0], e);

    for (int r0 = 0; r0 < 4; ++r0)
        for (int r1 = r0 + 1; r1 < 4; ++r1)
            for (int c0 = 0; c0 < 4; ++c0)
                for (int c1 = c0 + 1; c1 < 4; ++c1) {
                    Int d = rows[static_cast<size_t>(r0)][c0] * rows[static_cast<size_t>(r1)][c1] -
                            rows[static_cast<size_t>(r0)][c1] * rows[static_cast<size_t>(r1)][c0];
                    g[1] = gcd(g[1], d);
                }

    for (int skip_r = 0; skip_r < 4; ++skip_r)
        for (int skip_c = 0; skip_c < 4; ++skip_c) {
            int rs[3], cs[3], ri = 0, ci = 0;
            for (int i = 0; i < 4; ++i) {
                if (i != skip_r) rs[ri++] = i;
                if (i != skip_c) cs[ci++] = i;
            }
            g[2] = gcd(g[2], det3(rows, rs[0], rs[1], rs[2], cs[0], cs[1], cs[2]));
        }

    g[3] = M.index();  // triangular determinant
    return g;
}

}  // namespace

std::array<Int, 4> cotype(const HnfMatrix& M) {
    auto g = minor_gcds(M);
    // alpha_{4-k+1} * ... * alpha_4 = g[k-1]
    std::array<Int, 4> alpha;
    alpha[3] = g[0];
    alpha[2] = g[1] / g[0];
    alpha[1] = g[2] / g[1];
    alpha[0] = g[3] / g[2];
    return alpha;
}

bool is_cocyclic(const HnfMatrix& M) {
    // explicit form of the 3x3-minor gcd for this matrix shape
    Int explicit_gcd = M.index();
    explicit_gcd = gcd(explicit_gcd, pow_int(M.p, static_cast<unsigned long>(M.l + M.r)));
    explicit_gcd = gcd(explicit_gcd, Int(M.pr() * M.a21));
    explicit_gcd = gcd(explicit_gcd, Int(Int(M.a21) * M.a32 - M.pl() * M.a31));
    explicit_gcd = gcd(explicit_gcd, pow_int(M.p, static_cast<unsigned long>(M.k + M.r)));
    explicit_gcd = gcd(explicit_gcd, Int(M.pk() * M.a32));
    explicit_gcd = gcd(explicit_gcd, pow_int(M.p, static_cast<unsigned long>(M.k + M.l)));

    Int generic_gcd = minor_gcds(M)[2];
    if (explicit_gcd != generic_gcd)
        throw std::logic_error("is_cocyclic: explicit gcd and generic 3x3-minor gcd disagree");
    return explicit_gcd == 1;
}

}  // namespace trunczeta
