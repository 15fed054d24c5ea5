#pragma once

#include <string>
#include <vector>

#include "trunczeta/exact.hpp"

namespace trunczeta {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;  // empty when there is nothing to add
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    // findings about displays that disagree with enumeration; reported,
    // never failed
    std::vector<std::string> display_mismatches;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Generic closure oracle == valuation fast path on every HNF residue,
// and a31 never influences closure. p in {2,3,5}, all valid cells with
// k+l+r <= max_m.
SuiteReport run_lemma_suite(int max_m = 5);

// mu_closed == mu_oracle, p^{2k+l} mu == count_cell (cells with
// k,l,r <= max_e), and cell series == enumerated counts (m <= series_m).
SuiteReport run_volume_suite(int max_e = 4, int series_m = 8);

// Series of the consolidated factors and case sums against enumeration,
// for both kinds, both parities; display divergences reported.
SuiteReport run_formula_suite();

// Symbolic identities, the functional-equation monomial, and the exact
// p = 2 special values.
SuiteReport run_identity_suite();

std::vector<SuiteReport> run_suites(const std::string& which);  // name or "all"

}  // namespace trunczeta
