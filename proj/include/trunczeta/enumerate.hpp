#pragma once

#include <vector>

#include "trunczeta/exact.hpp"
#include "trunczeta/ring.hpp"

namespace trunczeta {

// Diagonal exponents (k, l, r) of an HNF family with diagonal
// (p^k, p^l, p^r, 1). Valid iff l <= 2r and k <= l+r; no other diagonal
// supports a multiplicatively closed lattice.
struct Cell {
    int k = 0, l = 0, r = 0;
    bool valid() const { return l <= 2 * r && k <= l + r; }
    friend bool operator==(const Cell& a, const Cell& b) {
        return a.k == b.k && a.l == b.l && a.r == b.r;
    }
};

// All valid cells with k+l+r = m, lexicographic in (k, l, r).
std::vector<Cell> valid_cells(int m);

// |{(a21, a31, a32) in HNF ranges : closure holds}| for one cell.
// Fast path: iterates (a21 mod p^k, a32 mod p^l) against the valuation
// condition and multiplies by p^k for the free a31.
Int count_cell(const Int& p, const Cell& c, long budget = default_budget());

// Same contract, computed independently: full loop over all residue
// triples calling the generic closure oracle is_subring().
Int count_cell_oracle(const Int& p, const Cell& c, long budget = default_budget());

// Subrings of index p^m: sum of count_cell over valid cells.
Int count_subrings(const Int& p, int m, long budget = default_budget());

// Cocyclic subrings of index p^m: enumerated subring matrices whose
// additive quotient is cyclic.
Int count_cocyclic(const Int& p, int m, long budget = default_budget());

}  // namespace trunczeta
