#pragma once

#include <vector>

#include "trunczeta/exact.hpp"
#include "trunczeta/quadratic.hpp"

namespace trunczeta {

enum class CountKind { subring, cocyclic };
enum class IndexFilter { all, odd_index };

// a(p^0..p^order) for one prime and kind, from the enumeration-verified
// rational forms: odd primes use the consolidated theorem factors, p = 2
// uses the case sums (subrings) / the completed case sum (cocyclic).
std::vector<Int> local_coefficients(const Int& p, CountKind kind, int order);

// a(n) = prod over prime powers p^e || n of the local coefficient at X^e.
// Trial-division factorization; supports n up to 10^12.
Int coefficient(const Int& n, CountKind kind);

// sum of a(n) over n <= B (n odd only under odd_index), via a
// smallest-prime-factor sieve. Exact.
Int partial_sum(long B, CountKind kind, IndexFilter filter = IndexFilter::all,
                long budget = default_sieve_budget());

// zeta(s) for real s > 1 to absolute error <= tol; direct summation with
// Euler-Maclaurin tail corrections, cutoff chosen from the tolerance.
double riemann_zeta_real(double s, double tol = 1e-10);

struct ConstantEstimate {
    double value;
    long prime_bound;
    double tail_bound;  // bound on |log(truncated) - log(full)|
};

// Growth constant of the subring count: the algebraic prefactor
// (29256 + 18556 sqrt2)/194481 (exact, then converted), zeta(3/2)^2
// zeta(2) zeta(4), and the odd-prime product of
//   1 + p^-2 + p^-5/2 - p^-7/2 - 2p^-4 - 2p^-9/2 - p^-5 + p^-6 + p^-13/2 + p^-17/2
// truncated at prime_bound.
ConstantEstimate constant_C(long prime_bound);

// Growth constant of the odd-index cocyclic count: zeta(2) * (A + B sqrt2)
// * prod over odd p of (1 + 2p^-3/2 - p^-5/2 - p^-3 - p^-7/2), with
// A + B sqrt2 the exact 2-adic special value / 8. The product converges
// like sum p^-3/2, so it is evaluated in the accelerated form
//   (zeta(3/2) (1 - 2^-3/2))^2 * prod f(p) (1 - p^-3/2)^2,
// which is the same constant with an O(p^-5/2) tail.
ConstantEstimate constant_D(long prime_bound);

// The two readings of the 2-adic cocyclic special value at s = 3/2:
// the displayed case sums give (758 + 277 sqrt2)/336, the
// enumeration-corrected factor gives (14 + 5 sqrt2)/6.
QuadraticRational cocyclic_two_special_value(bool enumeration_corrected);

struct GrowthRow {
    long B;
    Int sum;
    double ratio;  // sum / B^(3/2)
};

std::vector<GrowthRow> growth_diagnostic(const std::vector<long>& bounds, CountKind kind,
                                         IndexFilter filter,
                                         long budget = default_sieve_budget());

std::vector<long> primes_up_to(long n);

}  // namespace trunczeta
