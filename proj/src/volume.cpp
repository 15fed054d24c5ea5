#include "trunczeta/volume.hpp"

#include <algorithm>
#include <stdexcept>

namespace trunczeta {

// Odd p: within a valid cell the condition v(2 p^l a32 - p^r a21) >= k+l-r
// pins a32 modulo p^{k-r} when r >= l, and a21 modulo p^{k+l-2r} when
// r < l; each congruence costs one factor of p in volume.
const std::vector<VolumeCaseRule>& volume_rules_odd() {
    static const std::vector<VolumeCaseRule> rules = {
        {"odd, r>=l, r>=k",
         [](const Cell& c) { return c.r >= c.l && c.r >= c.k; },
         [](const Cell&) { return 0L; }},
        {"odd, r>=l, r<k",
         [](const Cell& c) { return c.r >= c.l && c.r < c.k; },
         [](const Cell& c) { return static_cast<long>(c.r) - c.k; }},
        {"odd, r<l, r<k",
         [](const Cell& c) { return c.r < c.l && c.r < c.k; },
         [](const Cell& c) { return 2L * c.r - c.k - c.l; }},
        {"odd, r<l, r>=k, k+l>2r",
         [](const Cell& c) { return c.r < c.l && c.r >= c.k && c.k + c.l > 2 * c.r; },
         [](const Cell& c) { return 2L * c.r - c.k - c.l; }},
        {"odd, r<l, r>=k, k+l<=2r",
         [](const Cell& c) { return c.r < c.l && c.r >= c.k && c.k + c.l <= 2 * c.r; },
         [](const Cell&) { return 0L; }},
    };
    return rules;
}

// p = 2: the factor 2 in 2 p^l a32 contributes one extra unit of
// valuation, so the r >= l cases split at r = l versus r > l; the r < l
// cases coincide with odd p.
const std::vector<VolumeCaseRule>& volume_rules_two() {
    static const std::vector<VolumeCaseRule> rules = {
        {"two, r>=l, r>=k",
         [](const Cell& c) { return c.r >= c.l && c.r >= c.k; },
         [](const Cell&) { return 0L; }},
        {"two, r>l, r<k",
         [](const Cell& c) { return c.r > c.l && c.r < c.k; },
         [](const Cell& c) { return static_cast<long>(c.r) - c.k + 1; }},
        {"two, r=l, r<k",
         [](const Cell& c) { return c.r == c.l && c.r < c.k; },
         [](const Cell& c) { return static_cast<long>(c.r) - c.k; }},
        {"two, r<l, r<k",
         [](const Cell& c) { return c.r < c.l && c.r < c.k; },
         [](const Cell& c) { return 2L * c.r - c.k - c.l; }},
        {"two, r<l, r>=k, k+l>2r",
         [](const Cell& c) { return c.r < c.l && c.r >= c.k && c.k + c.l > 2 * c.r; },
         [](const Cell& c) { return 2L * c.r - c.k - c.l; }},
        {"two, r<l, r>=k, k+l<=2r",
         [](const Cell& c) { return c.r < c.l && c.r >= c.k && c.k + c.l <= 2 * c.r; },
         [](const Cell&) { return 0L; }},
    };
    return rules;
}

Rat mu_closed(const Int& p, const Cell& c) {
    if (!c.valid()) throw std::domain_error("mu_closed: invalid cell");
    const auto& rules = (p == 2) ? volume_rules_two() : volume_rules_odd();
    const VolumeCaseRule* hit = nullptr;
    for (const auto& rule : rules) {
        if (rule.applies(c)) {
            if (hit) throw std::logic_error("mu_closed: overlapping volume rules");
            hit = &rule;
        }
    }
    if (!hit) throw std::logic_error("mu_closed: no volume rule applies");
    long e = hit->exponent(c);
    if (e > 0) throw std::logic_error("mu_closed: volume above 1");
    return make_rat(1, pow_int(p, static_cast<unsigned long>(-e)));
}

Rat mu_oracle(const Int& p, const Cell& c) {
    if (!c.valid()) throw std::domain_error("mu_oracle: invalid cell");
    long need = static_cast<long>(c.k) + c.l - c.r;
    long v2 = (p == 2) ? 1 : 0;
    long ea = std::max(0L, need - c.r);        // a21 matters mod p^ea
    long eb = std::max(0L, need - c.l - v2);   // a32 matters mod p^eb
    Int pa = pow_int(p, static_cast<unsigned long>(ea));
    Int pb = pow_int(p, static_cast<unsigned long>(eb));
    Int pl = pow_int(p, static_cast<unsigned long>(c.l));
    Int pr = pow_int(p, static_cast<unsigned long>(c.r));
    Int modulus = (need > 0) ? pow_int(p, static_cast<unsigned long>(need)) : Int(1);

    Int count = 0;
    Int two_pl = 2 * pl;
    for (Int a = 0; a < pa; ++a) {
        Int rhs = pr * a;
        for (Int b = 0; b < pb; ++b) {
            Int w = two_pl * b - rhs;
            if (need <= 0 || mpz_divisible_p(w.get_mpz_t(), modulus.get_mpz_t())) ++count;
        }
    }
    return make_rat(count, pa * pb);
}

std::vector<Int> local_series_via_cells(const Int& p, int order) {
    std::vector<Int> out(static_cast<size_t>(order) + 1);
    for (int m = 0; m <= order; ++m) {
        Rat sum = 0;
        for (const Cell& c : valid_cells(m))
            sum += pow_int(p, static_cast<unsigned long>(2 * c.k + c.l)) * mu_closed(p, c);
        if (sum.get_den() != 1)
            throw std::logic_error("local_series_via_cells: non-integer cell sum");
        out[static_cast<size_t>(m)] = sum.get_num();
    }
    return out;
}

}  // namespace trunczeta
