#pragma once

#include <array>
#include <optional>

#include "trunczeta/exact.hpp"

namespace trunczeta {

using Vec4 = std::array<Int, 4>;

// Rank-4 commutative unital ring given by structure constants on Z^4:
// basis_i * basis_j = sum_m c(i,j)[m] * basis_m. The wired instance is
// Z[t]/(t^4) with basis order (t^3, t^2, t, 1), so that the identity sits
// in the last coordinate and Hermite bases end with the row (0,0,0,1).
class RingStructure {
public:
    static const RingStructure& truncated_polynomial();  // t^4 = 0

    Vec4 multiply(const Vec4& u, const Vec4& v) const;

    const std::array<std::array<std::array<int, 4>, 4>, 4>& constants() const {
        return c_;
    }

private:
    RingStructure() = default;
    std::array<std::array<std::array<int, 4>, 4>, 4> c_{};  // c_[i][j][m]
};

// Lower-triangular Hermite-form lattice basis of Z^4 with diagonal
// (p^k, p^l, p^r, 1) and last row (0,0,0,1):
//
//   [ p^k   0    0    0 ]
//   [ a21  p^l   0    0 ]
//   [ a31  a32  p^r   0 ]
//   [  0    0    0    1 ]
//
// Off-diagonal ranges 0 <= a21, a31 < p^k and 0 <= a32 < p^l. The spanned
// lattice has index p^{k+l+r}.
struct HnfMatrix {
    Int p;
    int k = 0, l = 0, r = 0;
    long a21 = 0, a31 = 0, a32 = 0;

    Int pk() const { return pow_int(p, static_cast<unsigned long>(k)); }
    Int pl() const { return pow_int(p, static_cast<unsigned long>(l)); }
    Int pr() const { return pow_int(p, static_cast<unsigned long>(r)); }
    Int index() const { return pow_int(p, static_cast<unsigned long>(k + l + r)); }
    std::array<Vec4, 4> rows() const;
};

// Coefficients (c1..c4) with w = sum c_i * row_i over Z, or nullopt when w
// is outside the row span. Back substitution through the triangle.
std::optional<Vec4> hnf_membership(const HnfMatrix& M, const Vec4& w);

// Generic closure oracle: every pairwise product of basis rows (under the
// given ring's structure constants) lies back in the row span. The last
// row is the ring identity, so closure makes the lattice a unital subring.
bool lattice_closed(const HnfMatrix& M, const RingStructure& ring);

// lattice_closed against Z[t]/(t^4)
bool is_subring(const HnfMatrix& M);

// Fast path: l <= 2r, k <= l+r, and v_p(2 p^l a32 - p^r a21) >= k+l-r,
// with v_p(0) treated as +infinity.
bool closure_conditions(const HnfMatrix& M);

// (alpha_1..alpha_4) with alpha_{i+1} | alpha_i and Z^4/L isomorphic to
// the direct sum of Z/alpha_i. Computed from gcds of k x k minors.
std::array<Int, 4> cotype(const HnfMatrix& M);

// True iff Z^4/L is cyclic (alpha_2 == 1). Evaluates both the explicit
// seven-term gcd
//   gcd(p^{k+l+r}, p^{l+r}, p^r a21, a21 a32 - p^l a31, p^{k+r}, p^k a32, p^{k+l})
// and the generic gcd of all 3x3 minors; throws std::logic_error if the
// two ever disagree.
bool is_cocyclic(const HnfMatrix& M);

}  // namespace trunczeta
