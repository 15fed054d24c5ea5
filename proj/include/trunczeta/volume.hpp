#pragma once

#include <functional>
#include <string>
#include <vector>

#include "trunczeta/enumerate.hpp"
#include "trunczeta/exact.hpp"

namespace trunczeta {

// One closed-form rule for the Haar volume mu_p(k,l,r) of the closure
// condition on the off-diagonal entries of a cell. For each parity the
// rules partition the valid-cell cone: exactly one applies per cell.
struct VolumeCaseRule {
    std::string label;
    std::function<bool(const Cell&)> applies;
    // exponent e with mu = p^e (every volume is an integer power of p)
    std::function<long(const Cell&)> exponent;
};

const std::vector<VolumeCaseRule>& volume_rules_odd();
const std::vector<VolumeCaseRule>& volume_rules_two();

// Closed-form volume; throws std::domain_error on an invalid cell and
// std::logic_error if the rules fail to pick exactly one case.
Rat mu_closed(const Int& p, const Cell& c);

// Independent residue-counting oracle for the same volume. The closure
// condition on (a21, a32) in Z_p^2 is decided modulo p^{k+l+1}; since it
// only depends on a21 mod p^{max(0,k+l-2r)} and a32 mod p^{max(0,k-r-v(2))},
// the count runs over those residues and rescales.
Rat mu_oracle(const Int& p, const Cell& c);

// Coefficients c_m = sum over cells of weight m of p^{2k+l} * mu_closed.
// Throws std::logic_error if any cell product is non-integral.
std::vector<Int> local_series_via_cells(const Int& p, int order);

}  // namespace trunczeta
