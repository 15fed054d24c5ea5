#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "trunczeta/dirichlet.hpp"
#include "trunczeta/enumerate.hpp"
#include "trunczeta/formulas.hpp"

using namespace trunczeta;

TEST_CASE("coefficient") {
    CHECK(coefficient(1, CountKind::subring) == 1);
    CHECK(coefficient(12, CountKind::subring) == 7);  // a(4)*a(3) = 7*1
    CHECK(coefficient(9, CountKind::cocyclic) == 9);
    CHECK(coefficient(64, CountKind::subring) == 427);
    CHECK(coefficient(6, CountKind::subring) == 1);
    CHECK_THROWS_AS(coefficient(0, CountKind::subring), std::domain_error);
    CHECK_THROWS_AS(coefficient(Int("10000000000001"), CountKind::subring), BudgetExceeded);
}

TEST_CASE("every local factor has X^1 coefficient 1") {
    // justifies treating unfactored large-prime parts as contributing 1
    for (long p : {2L, 3L, 5L, 101L}) {
        CHECK(local_coefficients(p, CountKind::subring, 1)[1] == 1);
        CHECK(local_coefficients(p, CountKind::cocyclic, 1)[1] == 1);
    }
}

TEST_CASE("coefficient is multiplicative on coprime pairs") {
    const long pairs[][2] = {{4, 9}, {8, 27}, {16, 81}, {25, 8}, {9, 128},
                             {49, 4}, {121, 27}, {343, 100}, {64, 729}};
    for (const auto& [a, b] : pairs) {
        CAPTURE(a);
        CAPTURE(b);
        for (CountKind kind : {CountKind::subring, CountKind::cocyclic})
            CHECK(coefficient(Int(a) * Int(b), kind) ==
                  coefficient(a, kind) * coefficient(b, kind));
    }
}

TEST_CASE("coefficient at prime powers matches enumeration") {
    for (long p : {2L, 3L, 5L})
        for (int m = 0; m <= 6; ++m) {
            Int pm = pow_int(p, static_cast<unsigned long>(m));
            CHECK(coefficient(pm, CountKind::subring) == count_subrings(p, m));
            CHECK(coefficient(pm, CountKind::cocyclic) == count_cocyclic(p, m));
        }
}

TEST_CASE("partial_sum") {
    CHECK(partial_sum(1, CountKind::subring) == 1);
    CHECK(partial_sum(4, CountKind::subring) == 10);  // 1+1+1+7
    CHECK(partial_sum(9, CountKind::cocyclic, IndexFilter::odd_index) == 13);
    CHECK(partial_sum(100, CountKind::subring) ==
          [] {
              Int s = 0;
              for (long n = 1; n <= 100; ++n) s += coefficient(n, CountKind::subring);
              return s;
          }());
    CHECK_THROWS_AS(partial_sum(10'000'000'0L, CountKind::subring), BudgetExceeded);
}

TEST_CASE("riemann_zeta_real") {
    CHECK(std::abs(riemann_zeta_real(2.0) - std::numbers::pi * std::numbers::pi / 6.0) < 1e-10);
    double z4 = std::pow(std::numbers::pi, 4) / 90.0;
    CHECK(std::abs(riemann_zeta_real(4.0) - z4) < 1e-10);
    CHECK(riemann_zeta_real(1.5) == doctest::Approx(2.6123753486854883).epsilon(1e-10));
    // stable under doubling the tolerance-derived cutoff
    CHECK(std::abs(riemann_zeta_real(1.5, 1e-10) - riemann_zeta_real(1.5, 1e-12)) < 1e-10);
    CHECK_THROWS_AS(riemann_zeta_real(1.0), std::domain_error);
}

TEST_CASE("constant_C") {
    auto c4 = constant_C(10000);
    auto c5 = constant_C(100000);
    CHECK(c4.value == doctest::Approx(4.3110305985).epsilon(1e-6));
    CHECK(std::abs(c5.value - c4.value) / c5.value < 1e-4);
    CHECK(std::abs(c5.value - c4.value) < c4.tail_bound * c4.value);

    // the algebraic prefactor alone
    QuadraticRational pre(make_rat(29256, 194481), make_rat(18556, 194481));
    CHECK(pre.to_double() == doctest::Approx(0.2853653923).epsilon(1e-9));
}

TEST_CASE("constant_C per-prime factor equals the odd numerator at X = p^{-3/2}") {
    const auto& odd = subring_local_factor(Parity::odd);
    for (long p : {3L, 5L, 7L, 11L}) {
        double u = 1.0 / std::sqrt(static_cast<double>(p));
        double u2 = u * u, u4 = u2 * u2, u5 = u4 * u, u8 = u4 * u4;
        double f = 1.0 + u4 + u5 - u5 * u2 - 2.0 * u8 - 2.0 * u8 * u - u8 * u2 + u8 * u4 +
                   u8 * u5 + u8 * u8 * u;
        double x = std::pow(static_cast<double>(p), -1.5);
        double num = odd.num.eval_real(static_cast<double>(p), x);
        CHECK(std::abs(f - num) < 1e-12);
    }
}

TEST_CASE("constant_D") {
    auto d4 = constant_D(10000);
    auto d5 = constant_D(100000);
    CHECK(d4.value == doctest::Approx(1.5222075427).epsilon(1e-6));
    CHECK(std::abs(d5.value - d4.value) / d5.value < 1e-4);
    CHECK(std::abs(d5.value - d4.value) < d4.tail_bound * d4.value);

    // A + B sqrt2 = special value / 8
    QuadraticRational ab = cocyclic_two_special_value(false);
    ab *= QuadraticRational(make_rat(1, 8), Rat(0));
    CHECK(ab == QuadraticRational(make_rat(758, 2688), make_rat(277, 2688)));
    CHECK(ab.to_double() == doctest::Approx(0.42773).epsilon(1e-4));

    // per-prime factor at p = 3, equal to the odd cocyclic numerator at
    // X = 3^{-3/2}
    double f3 = 1.0 + 2.0 * std::pow(3.0, -1.5) - std::pow(3.0, -2.5) - std::pow(3.0, -3.0) -
                std::pow(3.0, -3.5);
    CHECK(f3 == doctest::Approx(1.2623298).epsilon(1e-6));
    const auto& thm = cocyclic_local_factor(Parity::odd, CocyclicForm::theorem);
    CHECK(std::abs(thm.num.eval_real(3.0, std::pow(3.0, -1.5)) - f3) < 1e-12);
}

TEST_CASE("growth_diagnostic") {
    auto rows = growth_diagnostic({1, 100}, CountKind::subring, IndexFilter::all);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].ratio == doctest::Approx(1.0));
    CHECK(rows[1].sum == partial_sum(100, CountKind::subring));
}
