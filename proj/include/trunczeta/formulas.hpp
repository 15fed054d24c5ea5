#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trunczeta/bivariate.hpp"

namespace trunczeta {

enum class Parity { odd, two };
enum class CocyclicForm { theorem, derived };

// Catalog of the displayed rational functions: consolidated local factors
// and the per-case partial sums, transcribed verbatim. Keys:
//   SUBRING_ODD, SUBRING_TWO_DISPLAYED,
//   COCYCLIC_ODD_THM, COCYCLIC_ODD_ALT, COCYCLIC_TWO_DISPLAYED,
//   F1..F5   odd-p subring case sums,
//   T1..T6   p=2 subring case sums (T3..T6 coincide with F2..F5),
//   Z1..Z6   odd-p cocyclic case sums,
//   E1..E6   p=2 cocyclic case sums,
//   E6C      completion of the sixth p=2 cocyclic sum over its full
//            index range k <= l+r (the displayed E6 stops one short and
//            mis-simplifies; E6C is what the cell counts actually sum to).
// The displays with explicit powers of 2 are stored with P-exponents and
// only carry meaning at P = 2.
const BivariateRationalFunction& case_sum(const std::string& name);
std::vector<std::string> catalog_names();

const BivariateRationalFunction& subring_local_factor(Parity parity);
BivariateRationalFunction subring_two_case_sum();  // T1+...+T6

const BivariateRationalFunction& cocyclic_local_factor(Parity parity, CocyclicForm form);
BivariateRationalFunction cocyclic_two_case_sum();          // E1+...+E6 verbatim
BivariateRationalFunction cocyclic_two_enumeration_form();  // E1+...+E5+E6C

struct CaseIdentityVerdict {
    std::string name;
    bool symbolic;  // bivariate identity; otherwise compared at P = 2
    bool equal;
    int first_mismatch_order = -1;
    std::string lhs_coeff, rhs_coeff;
};

struct CaseIdentityReport {
    std::vector<CaseIdentityVerdict> verdicts;
    const CaseIdentityVerdict& find(const std::string& name) const;
};

// Exact equality verdicts of every consolidated display against its
// case-sum, plus the enumeration-form comparisons. Mismatches are data,
// not errors.
CaseIdentityReport verify_case_identities();

struct FunctionalEquationMonomial {
    long p_exp;
    long x_exp;
    int sign;
};

// (u, v, sign) with f(P^-1, X^-1) == sign * P^u * X^v * f(P, X), if such
// a monomial exists.
std::optional<FunctionalEquationMonomial> functional_equation_monomial(
    const BivariateRationalFunction& f);

}  // namespace trunczeta
