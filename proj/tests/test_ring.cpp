#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trunczeta/ring.hpp"

using namespace trunczeta;

namespace {

Vec4 vec(long a, long b, long c, long d) { return {Int(a), Int(b), Int(c), Int(d)}; }

}  // namespace

TEST_CASE("structure constants of the truncated polynomial ring") {
    const auto& ring = RingStructure::truncated_polynomial();
    const auto& c = ring.constants();

    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            // commutative
            CHECK(c[i][j] == c[j][i]);
            // index 3 is the identity
            for (int m = 0; m < 4; ++m) CHECK(c[i][3][m] == (m == i ? 1 : 0));
        }

    // coordinates (t^3, t^2, t, 1): t * t = t^2, t^2 * t = t^3, t^2 * t^2 = 0
    CHECK(ring.multiply(vec(0, 0, 1, 0), vec(0, 0, 1, 0)) == vec(0, 1, 0, 0));
    CHECK(ring.multiply(vec(0, 1, 0, 0), vec(0, 0, 1, 0)) == vec(1, 0, 0, 0));
    CHECK(ring.multiply(vec(0, 1, 0, 0), vec(0, 1, 0, 0)) == vec(0, 0, 0, 0));
    CHECK(ring.multiply(vec(1, 0, 0, 0), vec(0, 0, 1, 0)) == vec(0, 0, 0, 0));
    // (t^2 + 2t)(3t + 1) = 3t^3 + t^2 + 6t^2 + 2t
    CHECK(ring.multiply(vec(0, 1, 2, 0), vec(0, 0, 3, 1)) == vec(3, 7, 2, 0));
}

TEST_CASE("hnf_membership") {
    HnfMatrix identity{Int(2), 0, 0, 0, 0, 0, 0};
    auto c = hnf_membership(identity, vec(5, -2, 0, 7));
    REQUIRE(c.has_value());
    CHECK(*c == vec(5, -2, 0, 7));

    HnfMatrix M{Int(2), 0, 0, 1, 0, 0, 0};  // third row is 2t
    auto d = hnf_membership(M, vec(0, 0, 2, 0));
    REQUIRE(d.has_value());
    CHECK(*d == vec(0, 0, 1, 0));
    CHECK_FALSE(hnf_membership(M, vec(0, 0, 1, 0)).has_value());

    // coefficients can be negative
    HnfMatrix N{Int(3), 1, 1, 1, 2, 1, 2};
    auto e = hnf_membership(N, vec(-4, -1, 3, 0));
    REQUIRE(e.has_value());
    CHECK(*e == vec(-1, -1, 1, 0));
}

TEST_CASE("is_subring") {
    CHECK(is_subring(HnfMatrix{Int(2), 0, 0, 1, 0, 0, 0}));   // span{t^3,t^2,2t,1}
    CHECK_FALSE(is_subring(HnfMatrix{Int(3), 1, 0, 0, 0, 0, 0}));  // t*t^2 escapes
    CHECK(is_subring(HnfMatrix{Int(5), 0, 0, 0, 0, 0, 0}));   // the whole ring
}

TEST_CASE("closure_conditions") {
    // valuation of zero counts as infinite
    CHECK(closure_conditions(HnfMatrix{Int(3), 1, 1, 1, 0, 2, 0}));
    // v_3(2*3*0 - 3*1) = 1 < k+l-r = 2
    CHECK_FALSE(closure_conditions(HnfMatrix{Int(3), 2, 1, 1, 1, 0, 0}));
    // p = 2: v_2(2*2*1 - 2*1) = 1 >= 1
    CHECK(closure_conditions(HnfMatrix{Int(2), 1, 1, 1, 1, 0, 1}));
    // diagonal constraints
    CHECK_FALSE(closure_conditions(HnfMatrix{Int(3), 0, 1, 0, 0, 0, 0}));  // l > 2r
    CHECK_FALSE(closure_conditions(HnfMatrix{Int(3), 2, 0, 1, 0, 0, 0}));  // k > l+r
}

TEST_CASE("cotype") {
    auto scalar = cotype(HnfMatrix{Int(3), 1, 1, 1, 0, 0, 0});
    CHECK(scalar == std::array<Int, 4>{3, 3, 3, 1});

    auto cyclic = cotype(HnfMatrix{Int(2), 0, 0, 2, 0, 0, 0});
    CHECK(cyclic == std::array<Int, 4>{4, 1, 1, 1});

    auto mixed = cotype(HnfMatrix{Int(2), 1, 0, 1, 0, 1, 0});
    CHECK(mixed == std::array<Int, 4>{4, 1, 1, 1});

    // divisibility chain and product == index
    for (long a21 = 0; a21 < 4; ++a21)
        for (long a31 = 0; a31 < 4; ++a31)
            for (long a32 = 0; a32 < 2; ++a32) {
                HnfMatrix M{Int(2), 2, 1, 1, a21, a31, a32};
                auto alpha = cotype(M);
                CHECK(alpha[0] % alpha[1] == 0);
                CHECK(alpha[1] % alpha[2] == 0);
                CHECK(alpha[2] % alpha[3] == 0);
                CHECK(alpha[0] * alpha[1] * alpha[2] * alpha[3] == M.index());
            }
}

TEST_CASE("is_cocyclic") {
    CHECK(is_cocyclic(HnfMatrix{Int(2), 0, 1, 1, 0, 0, 1}));
    CHECK_FALSE(is_cocyclic(HnfMatrix{Int(2), 0, 1, 1, 0, 0, 0}));
    CHECK(is_cocyclic(HnfMatrix{Int(3), 0, 0, 2, 0, 0, 0}));
    CHECK_FALSE(is_cocyclic(HnfMatrix{Int(3), 1, 1, 1, 0, 0, 0}));  // (Z/p)^3 quotient

    // agrees with alpha_2 == 1 everywhere in a small box
    for (long p : {2L, 3L})
        for (int k = 0; k <= 2; ++k)
            for (int l = 0; l <= 2; ++l)
                for (int r = 0; r <= 2; ++r) {
                    long pk = pow_int(p, static_cast<unsigned long>(k)).get_si();
                    long pl = pow_int(p, static_cast<unsigned long>(l)).get_si();
                    for (long a21 = 0; a21 < pk; ++a21)
                        for (long a31 = 0; a31 < pk; ++a31)
                            for (long a32 = 0; a32 < pl; ++a32) {
                                HnfMatrix M{Int(p), k, l, r, a21, a31, a32};
                                CHECK(is_cocyclic(M) == (cotype(M)[1] == 1));
                            }
                }
}
