#include "trunczeta/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "trunczeta/dirichlet.hpp"
#include "trunczeta/enumerate.hpp"
#include "trunczeta/formulas.hpp"
#include "trunczeta/ring.hpp"
#include "trunczeta/volume.hpp"

namespace trunczeta {

namespace {

const long kSmallPrimes[] = {2, 3, 5};

std::string cell_str(const Cell& c) {
    std::ostringstream os;
    os << "(" << c.k << "," << c.l << "," << c.r << ")";
    return os.str();
}

}  // namespace

SuiteReport run_lemma_suite(int max_m) {
    SuiteReport rep{"lemma", {}, {}};

    bool equiv = true, a31_free = true;
    std::string where;
    for (long p : kSmallPrimes) {
        for (int m = 0; m <= max_m && equiv; ++m) {
            for (const Cell& c : valid_cells(m)) {
                long pk = pow_int(p, static_cast<unsigned long>(c.k)).get_si();
                long pl = pow_int(p, static_cast<unsigned long>(c.l)).get_si();
                HnfMatrix M{Int(p), c.k, c.l, c.r, 0, 0, 0};
                for (long a21 = 0; a21 < pk; ++a21)
                    for (long a31 = 0; a31 < pk; ++a31)
                        for (long a32 = 0; a32 < pl; ++a32) {
                            M.a21 = a21;
                            M.a31 = a31;
                            M.a32 = a32;
                            bool oracle = is_subring(M);
                            if (oracle != closure_conditions(M)) {
                                equiv = false;
                                where = "p=" + std::to_string(p) + " cell " + cell_str(c);
                            }
                            if (a31 > 0) {
                                HnfMatrix M0 = M;
                                M0.a31 = 0;
                                if (oracle != is_subring(M0)) a31_free = false;
                            }
                        }
            }
        }
        // invalid diagonals support no subring at all (sweep capped; the
        // interesting failures sit on the cone boundary)
        for (int m = 0; m <= max_m; ++m)
            for (int k = 0; k <= m; ++k)
                for (int l = 0; k + l <= m; ++l) {
                    Cell c{k, l, m - k - l};
                    if (c.valid()) continue;
                    if (pow_int(p, static_cast<unsigned long>(2 * c.k + c.l)) > 200'000) continue;
                    HnfMatrix M{Int(p), c.k, c.l, c.r, 0, 0, 0};
                    long pk = pow_int(p, static_cast<unsigned long>(c.k)).get_si();
                    long pl = pow_int(p, static_cast<unsigned long>(c.l)).get_si();
                    for (long a21 = 0; a21 < pk && equiv; ++a21)
                        for (long a31 = 0; a31 < pk; ++a31)
                            for (long a32 = 0; a32 < pl; ++a32) {
                                M.a21 = a21;
                                M.a31 = a31;
                                M.a32 = a32;
                                if (is_subring(M)) {
                                    equiv = false;
                                    where = "invalid cell admits a subring: p=" +
                                            std::to_string(p) + " " + cell_str(c);
                                }
                            }
                }
    }
    rep.checks.push_back({"closure oracle == valuation conditions on every residue (p in {2,3,5}, k+l+r <= " +
                              std::to_string(max_m) + ")",
                          equiv, where});
    rep.checks.push_back({"a31 never affects closure", a31_free, ""});
    return rep;
}

SuiteReport run_volume_suite(int max_e, int series_m) {
    SuiteReport rep{"volumes", {}, {}};

    bool vols = true, counts = true, powers = true;
    std::string where;
    for (long p : kSmallPrimes)
        for (int k = 0; k <= max_e; ++k)
            for (int l = 0; l <= max_e; ++l)
                for (int r = 0; r <= max_e; ++r) {
                    Cell c{k, l, r};
                    if (!c.valid()) continue;
                    Rat closed = mu_closed(p, c);
                    if (closed != mu_oracle(p, c)) {
                        vols = false;
                        where = "p=" + std::to_string(p) + " cell " + cell_str(c);
                    }
                    Rat scaled = pow_int(p, static_cast<unsigned long>(2 * k + l)) * closed;
                    if (scaled != Rat(count_cell(p, c))) counts = false;
                    if (closed > 1 || closed <= 0) powers = false;
                    // integer power of p: numerator 1, denominator a p-power
                    Int den = closed.get_den();
                    while (den % p == 0) den /= p;
                    if (closed.get_num() != 1 || den != 1) powers = false;
                }
    rep.checks.push_back({"mu_closed == mu_oracle (k,l,r <= " + std::to_string(max_e) + ", p in {2,3,5})",
                          vols, where});
    rep.checks.push_back({"p^{2k+l} * mu == count_cell on the same range", counts, ""});
    rep.checks.push_back({"volumes are integer powers of p in (0,1]", powers, ""});

    bool series_ok = true;
    for (long p : kSmallPrimes) {
        auto series = local_series_via_cells(p, series_m);
        for (int m = 0; m <= series_m; ++m)
            if (series[static_cast<size_t>(m)] != count_subrings(p, m)) series_ok = false;
    }
    rep.checks.push_back({"cell series == enumerated counts (m <= " + std::to_string(series_m) +
                              ", p in {2,3,5})",
                          series_ok, ""});
    return rep;
}

namespace {

// first index where the two sequences differ, -1 if none
int first_diff(const std::vector<Int>& a, const std::vector<Int>& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return static_cast<int>(i);
    return -1;
}

std::string diff_note(const std::string& label, const std::vector<Int>& display,
                      const std::vector<Int>& truth, const std::string& truth_label) {
    int i = first_diff(display, truth);
    std::ostringstream os;
    os << label << ": first divergence from " << truth_label << " at X^" << i << " ("
       << display[static_cast<size_t>(i)].get_str() << " vs "
       << truth[static_cast<size_t>(i)].get_str() << ")";
    return os.str();
}

}  // namespace

SuiteReport run_formula_suite() {
    SuiteReport rep{"formulas", {}, {}};

    // odd subring counts
    bool odd_ok = true;
    for (long p : {3L, 5L, 7L}) {
        auto series = rf_series(subring_local_factor(Parity::odd), p, 8);
        for (int m = 0; m <= 8; ++m)
            if (series[static_cast<size_t>(m)] != count_subrings(p, m)) odd_ok = false;
    }
    rep.checks.push_back({"odd subring factor series == enumeration (p in {3,5,7}, m <= 8)", odd_ok, ""});

    // p = 2 subring counts: the T case sum is the enumeration-verified object
    std::vector<Int> enum2(11);
    for (int m = 0; m <= 10; ++m) enum2[static_cast<size_t>(m)] = count_subrings(2, m);
    auto tsum = rf_series(subring_two_case_sum(), 2, 10);
    rep.checks.push_back({"p=2 subring case-sum series == enumeration (m <= 10)", tsum == enum2, ""});

    auto disp2 = rf_series(subring_local_factor(Parity::two), 2, 10);
    if (disp2 != enum2)
        rep.display_mismatches.push_back(
            diff_note("SUBRING_TWO_DISPLAYED", disp2, enum2, "enumeration"));

    // odd cocyclic counts
    bool coc_odd = true;
    for (long p : {3L, 5L}) {
        auto series = rf_series(cocyclic_local_factor(Parity::odd, CocyclicForm::theorem), p, 8);
        for (int m = 0; m <= 8; ++m)
            if (series[static_cast<size_t>(m)] != count_cocyclic(p, m)) coc_odd = false;
    }
    rep.checks.push_back({"odd cocyclic factor series == enumeration (p in {3,5}, m <= 8)", coc_odd, ""});

    // p = 2 cocyclic counts
    std::vector<Int> cenum(11);
    for (int m = 0; m <= 10; ++m) cenum[static_cast<size_t>(m)] = count_cocyclic(2, m);
    auto cdisp = rf_series(cocyclic_local_factor(Parity::two, CocyclicForm::theorem), 2, 10);
    auto csum = rf_series(cocyclic_two_case_sum(), 2, 10);
    auto cfix = rf_series(cocyclic_two_enumeration_form(), 2, 10);

    bool hand_range = std::vector<Int>(cdisp.begin(), cdisp.begin() + 4) ==
                      std::vector<Int>{Int(1), Int(1), Int(4), Int(8)};
    rep.checks.push_back(
        {"p=2 cocyclic display matches enumeration through m = 3 (1,1,4,8)",
         hand_range && std::equal(cenum.begin(), cenum.begin() + 4, cdisp.begin()), ""});
    rep.checks.push_back(
        {"p=2 cocyclic completed case sum == enumeration (m <= 10)", cfix == cenum, ""});

    if (cdisp != cenum)
        rep.display_mismatches.push_back(
            diff_note("COCYCLIC_TWO_DISPLAYED", cdisp, cenum, "enumeration"));
    if (csum != cenum)
        rep.display_mismatches.push_back(
            diff_note("E-sum (displayed sixth case)", csum, cenum, "enumeration"));

    // non-negative integer series for the enumeration-backed factors
    bool nonneg = true;
    auto check_nonneg = [&nonneg](const std::vector<Int>& s) {
        for (const auto& c : s)
            if (c < 0) nonneg = false;
    };
    for (long p : {3L, 5L, 7L}) {
        check_nonneg(rf_series(subring_local_factor(Parity::odd), p, 12));
        check_nonneg(rf_series(cocyclic_local_factor(Parity::odd, CocyclicForm::theorem), p, 12));
    }
    check_nonneg(rf_series(subring_two_case_sum(), 2, 12));
    check_nonneg(rf_series(cocyclic_two_enumeration_form(), 2, 12));
    rep.checks.push_back({"series of enumeration-backed factors are non-negative (N = 12)", nonneg, ""});

    // the displays are only checked and reported
    for (const char* name : {"SUBRING_TWO_DISPLAYED", "COCYCLIC_TWO_DISPLAYED", "E6"}) {
        auto s = rf_series(case_sum(name), 2, 12);
        for (size_t i = 0; i < s.size(); ++i)
            if (s[i] < 0) {
                rep.display_mismatches.push_back(
                    std::string(name) + ": series coefficient at X^" + std::to_string(i) +
                    " is " + s[i].get_str() + "; a count series cannot be negative");
                break;
            }
    }

    return rep;
}

SuiteReport run_identity_suite() {
    SuiteReport rep{"identities", {}, {}};

    auto report = verify_case_identities();
    rep.checks.push_back({"F1+...+F5 == SUBRING_ODD (exact, bivariate)",
                          report.find("F-sum vs SUBRING_ODD").equal, ""});
    rep.checks.push_back({"Z1+...+Z6 == COCYCLIC_ODD_ALT (exact, bivariate)",
                          report.find("Z-sum vs COCYCLIC_ODD_ALT").equal, ""});
    rep.checks.push_back({"COCYCLIC_ODD_THM == COCYCLIC_ODD_ALT (cross-multiplication)",
                          rf_equal(cocyclic_local_factor(Parity::odd, CocyclicForm::theorem),
                                   cocyclic_local_factor(Parity::odd, CocyclicForm::derived)),
                          ""});

    for (const auto& v : report.verdicts) {
        if (v.equal) continue;
        std::ostringstream os;
        os << v.name << ": first mismatching series coefficient at X^" << v.first_mismatch_order
           << " (" << v.lhs_coeff << " vs " << v.rhs_coeff << ")";
        rep.display_mismatches.push_back(os.str());
    }

    auto fe = functional_equation_monomial(subring_local_factor(Parity::odd));
    rep.checks.push_back({"functional equation of SUBRING_ODD: monomial (3,3,-1)",
                          fe && fe->p_exp == 3 && fe->x_exp == 3 && fe->sign == -1, ""});
    // the cocyclic factors carry no claimed functional equation; report only
    auto fe_coc = functional_equation_monomial(
        cocyclic_local_factor(Parity::odd, CocyclicForm::theorem));
    rep.display_mismatches.push_back(
        std::string("functional equation of COCYCLIC_ODD_THM: ") +
        (fe_coc ? "monomial found" : "no monomial (report only)"));

    // exact 2-adic special values at s = 3/2
    QuadraticRational displayed = cocyclic_two_special_value(false);
    QuadraticRational corrected = cocyclic_two_special_value(true);
    QuadraticRational paper_value(make_rat(758, 336), make_rat(277, 336));
    QuadraticRational corrected_expect(make_rat(14, 6), make_rat(5, 6));
    rep.checks.push_back({"case-sum special value == (758+277*sqrt2)/336 exactly",
                          displayed == paper_value, displayed.to_string()});
    rep.checks.push_back({"enumeration-corrected special value == (14+5*sqrt2)/6 exactly",
                          corrected == corrected_expect, corrected.to_string()});
    rep.display_mismatches.push_back(
        "2-adic cocyclic value at s=3/2: displayed case sums give " + paper_value.to_string() +
        " ~= 3.42184 (the stated constant); the enumeration-corrected factor gives " +
        corrected_expect.to_string() + " ~= 3.51184");

    // the two evaluation paths agree
    bool eval_agree = true;
    for (const char* name : {"T1", "T2", "E1", "E2", "E3", "E4", "E5", "E6", "E6C",
                             "SUBRING_TWO_DISPLAYED", "COCYCLIC_TWO_DISPLAYED"}) {
        const auto& f = case_sum(name);
        double direct = rf_eval_real(f, 2.0, 1.5);
        double viaq = rf_eval_quadratic(f).to_double();
        if (std::abs(direct - viaq) > 1e-12 * std::max(1.0, std::abs(viaq))) eval_agree = false;
    }
    rep.checks.push_back({"rf_eval_real and rf_eval_quadratic agree to 1e-12 at (2, 3/2)",
                          eval_agree, ""});

    return rep;
}

std::vector<SuiteReport> run_suites(const std::string& which) {
    std::vector<SuiteReport> out;
    if (which == "lemma" || which == "all") out.push_back(run_lemma_suite());
    if (which == "volumes" || which == "all") out.push_back(run_volume_suite());
    if (which == "formulas" || which == "all") out.push_back(run_formula_suite());
    if (which == "identities" || which == "all") out.push_back(run_identity_suite());
    if (out.empty()) throw std::invalid_argument("unknown suite: " + which);
    return out;
}

}  // namespace trunczeta
