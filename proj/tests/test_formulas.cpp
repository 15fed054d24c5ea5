#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trunczeta/enumerate.hpp"
#include "trunczeta/formulas.hpp"

using namespace trunczeta;

TEST_CASE("catalog lookup") {
    CHECK_NOTHROW(case_sum("F1"));
    CHECK_NOTHROW(case_sum("E6C"));
    CHECK_THROWS_AS(case_sum("F9"), std::out_of_range);
    CHECK(catalog_names().size() == 29);
    // (two, derived) is not a thing
    CHECK_THROWS_AS(cocyclic_local_factor(Parity::two, CocyclicForm::derived),
                    std::domain_error);
}

TEST_CASE("series of the consolidated factors") {
    CHECK(rf_series(subring_local_factor(Parity::odd), 3, 8) ==
          std::vector<Int>{1, 1, 13, 49, 238, 562, 3235, 7609, 36769});
    CHECK(rf_series(subring_local_factor(Parity::odd), 5, 1) == std::vector<Int>{1, 1});
    CHECK(rf_series(subring_local_factor(Parity::two), 2, 2) == std::vector<Int>{1, 1, 5});
    CHECK(rf_series(cocyclic_local_factor(Parity::odd, CocyclicForm::theorem), 3, 2) ==
          std::vector<Int>{1, 1, 9});
    CHECK(rf_series(cocyclic_local_factor(Parity::two, CocyclicForm::theorem), 2, 3) ==
          std::vector<Int>{1, 1, 4, 8});
}

TEST_CASE("case sums") {
    // lowest term of the first odd case sum sits at X^4 with value p^4
    auto f1 = rf_series(case_sum("F1"), 3, 4);
    CHECK(f1 == std::vector<Int>{0, 0, 0, 0, 81});

    auto z1 = rf_series(case_sum("Z1"), 5, 1);
    CHECK(z1 == std::vector<Int>{1, 1});

    // displayed sixth p=2 cocyclic sum starts at X^6 (with a negative term,
    // one symptom of its mis-simplification)
    auto e6 = rf_series(case_sum("E6"), 2, 6);
    CHECK(e6 == std::vector<Int>{0, 0, 0, 0, 0, 0, -16});
    // the completed form starts where its lowest cell (5,2,3) sits
    auto e6c = rf_series(case_sum("E6C"), 2, 10);
    CHECK(e6c[10] == 1024);
    for (int i = 0; i < 10; ++i) CHECK(e6c[static_cast<size_t>(i)] == 0);
}

TEST_CASE("T case sum at p=2") {
    auto t = rf_series(subring_two_case_sum(), 2, 12);
    CHECK(t == std::vector<Int>{1, 1, 7, 19, 59, 107, 427, 619, 2091, 4011, 11435, 19115, 60075});
}

TEST_CASE("E case sums at p=2") {
    auto verbatim = rf_series(cocyclic_two_case_sum(), 2, 12);
    CHECK(verbatim == std::vector<Int>{1, 1, 4, 8, 16, 32, 112, 128, 512, 1024, 2048, 4096, 12288});
    auto completed = rf_series(cocyclic_two_enumeration_form(), 2, 12);
    CHECK(completed == std::vector<Int>{1, 1, 4, 8, 16, 32, 128, 128, 512, 1024, 3072, 4096, 12288});
}

TEST_CASE("verify_case_identities") {
    auto report = verify_case_identities();

    CHECK(report.find("F-sum vs SUBRING_ODD").equal);
    CHECK(report.find("Z-sum vs COCYCLIC_ODD_ALT").equal);

    const auto& t = report.find("T-sum vs SUBRING_TWO_DISPLAYED");
    CHECK_FALSE(t.equal);
    CHECK(t.first_mismatch_order == 2);
    CHECK(t.lhs_coeff == "7");
    CHECK(t.rhs_coeff == "5");

    const auto& e = report.find("E-sum vs COCYCLIC_TWO_DISPLAYED");
    CHECK_FALSE(e.equal);
    CHECK(e.first_mismatch_order == 6);
    CHECK(e.lhs_coeff == "112");
    CHECK(e.rhs_coeff == "176");

    const auto& ec = report.find("E-sum vs E-sum-completed");
    CHECK_FALSE(ec.equal);
    CHECK(ec.first_mismatch_order == 6);
}

TEST_CASE("the two odd cocyclic forms are one identity") {
    // cross-multiplication: num_alt * (1 + PX) == num_thm over matching factors
    CHECK(rf_equal(cocyclic_local_factor(Parity::odd, CocyclicForm::theorem),
                   cocyclic_local_factor(Parity::odd, CocyclicForm::derived)));
}

TEST_CASE("functional_equation_monomial") {
    auto fe = functional_equation_monomial(subring_local_factor(Parity::odd));
    REQUIRE(fe.has_value());
    CHECK(fe->p_exp == 3);
    CHECK(fe->x_exp == 3);
    CHECK(fe->sign == -1);

    auto geo = make_rf(BivariatePolynomial::constant(1), {{0, 1}});
    auto fe2 = functional_equation_monomial(geo);
    REQUIRE(fe2.has_value());
    CHECK(fe2->p_exp == 0);
    CHECK(fe2->x_exp == 1);
    CHECK(fe2->sign == -1);

    // no monomial for the odd cocyclic factor (report-only finding)
    CHECK_FALSE(functional_equation_monomial(
                    cocyclic_local_factor(Parity::odd, CocyclicForm::theorem))
                    .has_value());
}

TEST_CASE("exact p=2 special values") {
    auto displayed = rf_eval_quadratic(cocyclic_two_case_sum());
    CHECK(displayed == QuadraticRational(make_rat(758, 336), make_rat(277, 336)));
    CHECK(displayed.to_double() == doctest::Approx(3.42184).epsilon(5e-4));

    auto corrected = rf_eval_quadratic(cocyclic_two_enumeration_form());
    CHECK(corrected == QuadraticRational(make_rat(14, 6), make_rat(5, 6)));

    // the display itself evaluates to yet another number
    auto disp = rf_eval_quadratic(cocyclic_local_factor(Parity::two, CocyclicForm::theorem));
    CHECK(disp == QuadraticRational(make_rat(822, 336), make_rat(293, 336)));
}

TEST_CASE("series non-negativity of the enumeration-backed factors") {
    for (long p : {3L, 5L, 7L}) {
        for (const auto& c : rf_series(subring_local_factor(Parity::odd), p, 12)) CHECK(c >= 0);
        for (const auto& c :
             rf_series(cocyclic_local_factor(Parity::odd, CocyclicForm::theorem), p, 12))
            CHECK(c >= 0);
    }
    for (const auto& c : rf_series(subring_two_case_sum(), 2, 12)) CHECK(c >= 0);
    for (const auto& c : rf_series(cocyclic_two_enumeration_form(), 2, 12)) CHECK(c >= 0);
}

TEST_CASE("series == enumeration in the small range") {
    for (long p : {3L, 5L}) {
        auto s = rf_series(subring_local_factor(Parity::odd), p, 5);
        auto cc = rf_series(cocyclic_local_factor(Parity::odd, CocyclicForm::theorem), p, 5);
        for (int m = 0; m <= 5; ++m) {
            CHECK(s[static_cast<size_t>(m)] == count_subrings(p, m));
            CHECK(cc[static_cast<size_t>(m)] == count_cocyclic(p, m));
        }
    }
    auto t = rf_series(subring_two_case_sum(), 2, 8);
    auto e = rf_series(cocyclic_two_enumeration_form(), 2, 8);
    for (int m = 0; m <= 8; ++m) {
        CHECK(t[static_cast<size_t>(m)] == count_subrings(2, m));
        CHECK(e[static_cast<size_t>(m)] == count_cocyclic(2, m));
    }
}
