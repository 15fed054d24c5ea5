#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace trunczeta {

// Exact arithmetic substrate. All counts, volumes and polynomial
// coefficients are arbitrary-precision integers / rationals.
using Int = mpz_class;
using Rat = mpq_class;

// Thrown when an enumeration or sieve would exceed the configured
// iteration cap (see default_budget()).
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int pow_int(long base, unsigned long e) { return pow_int(Int(base), e); }

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// p-adic valuation of a nonzero integer; valuation_infinity for 0.
inline constexpr long valuation_infinity = std::numeric_limits<long>::max();

inline long valuation(const Int& n, const Int& p) {
    if (n == 0) return valuation_infinity;
    Int rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

// Iteration caps for the enumeration oracles and the coefficient sieve.
// TRUNCZETA_BUDGET overrides both when set.
inline long budget_from_env(long fallback) {
    const char* s = std::getenv("TRUNCZETA_BUDGET");
    if (!s || !*s) return fallback;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    return (end && *end == '\0' && v > 0) ? v : fallback;
}

inline long default_budget() { return budget_from_env(10'000'000); }        // residue loops
inline long default_sieve_budget() { return budget_from_env(1'000'000); }   // partial sums

}  // namespace trunczeta
