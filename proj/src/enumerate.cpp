#include "trunczeta/enumerate.hpp"

#include <stdexcept>

namespace trunczeta {

std::vector<Cell> valid_cells(int m) {
    std::vector<Cell> cells;
    for (int k = 0; k <= m; ++k)
        for (int l = 0; k + l <= m; ++l) {
            Cell c{k, l, m - k - l};
            if (c.valid()) cells.push_back(c);
        }
    return cells;
}

namespace {

void require_valid(const Cell& c) {
    if (!c.valid()) throw std::domain_error("invalid cell: needs l <= 2r and k <= l+r");
}

void require_loop_budget(const Int& iterations, long budget, const char* what) {
    if (iterations > budget)
        throw BudgetExceeded(std::string(what) + ": residue loop exceeds budget");
}

}  // namespace

Int count_cell(const Int& p, const Cell& c, long budget) {
    require_valid(c);
    Int pk = pow_int(p, static_cast<unsigned long>(c.k));
    Int pl = pow_int(p, static_cast<unsigned long>(c.l));
    Int pr = pow_int(p, static_cast<unsigned long>(c.r));
    require_loop_budget(pk * pl, budget, "count_cell");

    long need = static_cast<long>(c.k) + c.l - c.r;
    Int pairs = 0;
    Int two_pl = 2 * pl;
    for (Int a21 = 0; a21 < pk; ++a21) {
        Int rhs = pr * a21;
        for (Int a32 = 0; a32 < pl; ++a32) {
            if (need <= 0 || valuation(Int(two_pl * a32 - rhs), p) >= need) ++pairs;
        }
    }
    return pairs * pk;  // a31 is free
}

Int count_cell_oracle(const Int& p, const Cell& c, long budget) {
    require_valid(c);
    Int pk = pow_int(p, static_cast<unsigned long>(c.k));
    Int pl = pow_int(p, static_cast<unsigned long>(c.l));
    require_loop_budget(pk * pk * pl, budget, "count_cell_oracle");

    long pkl = pk.get_si(), pll = pl.get_si();
    Int count = 0;
    HnfMatrix M{p, c.k, c.l, c.r, 0, 0, 0};
    for (long a21 = 0; a21 < pkl; ++a21)
        for (long a31 = 0; a31 < pkl; ++a31)
            for (long a32 = 0; a32 < pll; ++a32) {
                M.a21 = a21;
                M.a31 = a31;
                M.a32 = a32;
                if (is_subring(M)) ++count;
            }
    return count;
}

Int count_subrings(const Int& p, int m, long budget) {
    Int total = 0;
    for (const Cell& c : valid_cells(m)) total += count_cell(p, c, budget);
    return total;
}

namespace {

// Number of a31 in [0, p^k) making the closed matrix cocyclic, for fixed
// (a21, a32). The seven-term gcd is 1 iff some term is a p-unit; only the
// mixed minor a21*a32 - p^l*a31 involves a31, and only when l == 0.
Int cocyclic_a31_count(const Int& p, const Cell& c, const Int& a21, const Int& a32,
                       const Int& pk) {
    bool unit = (c.k + c.l + c.r == 0) || (c.l + c.r == 0) || (c.k + c.r == 0) ||
                (c.k + c.l == 0) || (c.r == 0 && a21 % p != 0) ||
                (c.k == 0 && a32 % p != 0);
    if (unit) return pk;
    if (c.l >= 1) {
        // mixed minor == a21*a32 mod p
        return (a21 * a32) % p != 0 ? pk : Int(0);
    }
    // l == 0 forces a32 == 0; mixed minor == -a31, so count p-units
    return c.k >= 1 ? Int(pk - pk / p) : Int(0);
}

}  // namespace

Int count_cocyclic(const Int& p, int m, long budget) {
    Int total = 0;
    for (const Cell& c : valid_cells(m)) {
        Int pk = pow_int(p, static_cast<unsigned long>(c.k));
        Int pl = pow_int(p, static_cast<unsigned long>(c.l));
        Int pr = pow_int(p, static_cast<unsigned long>(c.r));
        require_loop_budget(pk * pl, budget, "count_cocyclic");

        long need = static_cast<long>(c.k) + c.l - c.r;
        Int two_pl = 2 * pl;
        for (Int a21 = 0; a21 < pk; ++a21) {
            Int rhs = pr * a21;
            for (Int a32 = 0; a32 < pl; ++a32) {
                if (need > 0 && valuation(Int(two_pl * a32 - rhs), p) < need) continue;
                total += cocyclic_a31_count(p, c, a21, a32, pk);
            }
        }
    }
    return total;
}

}  // namespace trunczeta
