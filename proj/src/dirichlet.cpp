#include "trunczeta/dirichlet.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "trunczeta/formulas.hpp"

namespace trunczeta {

std::vector<long> primes_up_to(long n) {
    std::vector<bool> composite(static_cast<size_t>(n) + 1, false);
    std::vector<long> primes;
    for (long i = 2; i <= n; ++i) {
        if (composite[static_cast<size_t>(i)]) continue;
        primes.push_back(i);
        for (long j = i * i; j <= n; j += i) composite[static_cast<size_t>(j)] = true;
    }
    return primes;
}

std::vector<Int> local_coefficients(const Int& p, CountKind kind, int order) {
    if (kind == CountKind::subring) {
        if (p == 2) return rf_series(subring_two_case_sum(), p, order);
        return rf_series(subring_local_factor(Parity::odd), p, order);
    }
    if (p == 2) return rf_series(cocyclic_two_enumeration_form(), p, order);
    return rf_series(cocyclic_local_factor(Parity::odd, CocyclicForm::theorem), p, order);
}

Int coefficient(const Int& n, CountKind kind) {
    if (n < 1) throw std::domain_error("coefficient: n must be positive");
    if (n > Int("1000000000000"))
        throw BudgetExceeded("coefficient: n above the trial-division budget (10^12)");
    Int rest = n, result = 1;
    for (Int p = 2; p * p <= rest && p <= 1'000'000; p == 2 ? p = 3 : p += 2) {
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        result *= local_coefficients(p, kind, e)[static_cast<size_t>(e)];
    }
    // For n <= 10^12 the remainder after stripping primes <= 10^6 is 1 or
    // a single prime (two factors above 10^6 would exceed 10^12), and the
    // X^1 coefficient of every local factor is 1 (asserted in tests).
    return result;
}

namespace {

// per-prime local coefficients in machine integers for the sieve hot path
class SieveCache {
public:
    SieveCache(CountKind kind, long bound) : kind_(kind), bound_(bound) {}

    long long get(long p, int e) {
        if (e == 1) return 1;  // X^1 coefficient of every local factor
        auto it = cache_.find(p);
        if (it == cache_.end()) {
            int emax = static_cast<int>(std::log2(static_cast<double>(bound_)) /
                                        std::log2(static_cast<double>(p))) + 1;
            auto series = local_coefficients(Int(p), kind_, emax);
            std::vector<long long> small(series.size());
            for (size_t i = 0; i < series.size(); ++i) {
                if (!series[i].fits_slong_p())
                    throw BudgetExceeded("partial_sum: coefficient exceeds 64-bit range");
                small[i] = series[i].get_si();
            }
            it = cache_.emplace(p, std::move(small)).first;
        }
        return it->second[static_cast<size_t>(e)];
    }

private:
    CountKind kind_;
    long bound_;
    std::map<long, std::vector<long long>> cache_;
};

}  // namespace

Int partial_sum(long B, CountKind kind, IndexFilter filter, long budget) {
    if (B < 1) throw std::domain_error("partial_sum: B must be positive");
    if (B > budget) throw BudgetExceeded("partial_sum: B above sieve budget");
    if (B > 2'000'000'000L) throw BudgetExceeded("partial_sum: B beyond the 32-bit sieve table");

    // smallest prime factor table
    std::vector<int32_t> spf(static_cast<size_t>(B) + 1);
    for (long i = 0; i <= B; ++i) spf[static_cast<size_t>(i)] = static_cast<int32_t>(i);
    for (long i = 2; i * i <= B; ++i)
        if (spf[static_cast<size_t>(i)] == i)
            for (long j = i * i; j <= B; j += i)
                if (spf[static_cast<size_t>(j)] == j) spf[static_cast<size_t>(j)] = static_cast<int32_t>(i);

    SieveCache cache(kind, B);
    // a(n) <= n^{3/2+o(1)}, so every term and the full sum stay far below
    // the 64-bit limit for B within the sieve budget.
    long long total = 0;
    long step = (filter == IndexFilter::odd_index) ? 2 : 1;
    for (long n = 1; n <= B; n += step) {
        long rest = n;
        long long a = 1;
        while (rest > 1) {
            long p = spf[static_cast<size_t>(rest)];
            int e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            a *= cache.get(p, e);
        }
        total += a;
    }
    return Int(static_cast<long>(total));
}

double riemann_zeta_real(double s, double tol) {
    if (s <= 1.0) throw std::domain_error("riemann_zeta_real: needs s > 1");
    // after the N^{1-s}/(s-1) - N^-s/2 + s/12 N^{-s-1} corrections the
    // error is below s(s+1)(s+2)/720 * N^{-s-3}
    double N = std::pow(s * (s + 1) * (s + 2) / (720.0 * tol) * 4.0, 1.0 / (s + 3.0));
    long cut = std::max(64L, static_cast<long>(N) + 1);
    double sum = 0.0;
    for (long n = cut; n >= 1; --n) sum += std::pow(static_cast<double>(n), -s);
    double Nd = static_cast<double>(cut);
    sum += std::pow(Nd, 1.0 - s) / (s - 1.0) - 0.5 * std::pow(Nd, -s) +
           s / 12.0 * std::pow(Nd, -s - 1.0);
    return sum;
}

ConstantEstimate constant_C(long prime_bound) {
    if (prime_bound < 3) throw std::domain_error("constant_C: prime bound must be >= 3");
    const QuadraticRational prefactor(make_rat(29256, 194481), make_rat(18556, 194481));
    double value = prefactor.to_double();
    double z32 = riemann_zeta_real(1.5);
    value *= z32 * z32 * riemann_zeta_real(2.0) * riemann_zeta_real(4.0);
    for (long p : primes_up_to(prime_bound)) {
        if (p == 2) continue;
        double u = 1.0 / std::sqrt(static_cast<double>(p));
        double u2 = u * u, u4 = u2 * u2, u5 = u4 * u, u8 = u4 * u4;
        // numerator of the odd local factor at X = p^{-3/2}
        double f = 1.0 + u4 + u5 - u5 * u2 - 2.0 * u8 - 2.0 * u8 * u - u8 * u2 + u8 * u4 +
                   u8 * u5 + u8 * u8 * u;
        value *= f;
    }
    // |log f_p| <= 2 p^-2 for p >= 3, so the tail is below sum_{n>P} 2 n^-2
    return {value, prime_bound, 2.0 / static_cast<double>(prime_bound)};
}

QuadraticRational cocyclic_two_special_value(bool enumeration_corrected) {
    return rf_eval_quadratic(enumeration_corrected ? cocyclic_two_enumeration_form()
                                                   : cocyclic_two_case_sum());
}

ConstantEstimate constant_D(long prime_bound) {
    if (prime_bound < 3) throw std::domain_error("constant_D: prime bound must be >= 3");
    QuadraticRational ab = cocyclic_two_special_value(false);
    ab *= QuadraticRational(make_rat(1, 8), Rat(0));
    double z32 = riemann_zeta_real(1.5);
    double base = z32 * (1.0 - std::pow(2.0, -1.5));
    double value = riemann_zeta_real(2.0) * ab.to_double() * base * base;
    for (long p : primes_up_to(prime_bound)) {
        if (p == 2) continue;
        double u = 1.0 / std::sqrt(static_cast<double>(p));
        double u3 = u * u * u;
        double f = 1.0 + 2.0 * u3 - u3 * u * u - u3 * u3 - u3 * u3 * u;
        double comp = 1.0 - u3;
        value *= f * comp * comp;
    }
    // compensated factors are 1 - p^-5/2 - 4p^-3 - ...; |log| <= 5 p^-5/2,
    // so the tail is below sum_{n>P} 5 n^-5/2 <= (10/3) P^-3/2
    return {value, prime_bound, 3.4 * std::pow(static_cast<double>(prime_bound), -1.5)};
}

std::vector<GrowthRow> growth_diagnostic(const std::vector<long>& bounds, CountKind kind,
                                         IndexFilter filter, long budget) {
    std::vector<GrowthRow> rows;
    for (long B : bounds) {
        Int s = partial_sum(B, kind, filter, budget);
        double ratio = s.get_d() / std::pow(static_cast<double>(B), 1.5);
        rows.push_back({B, s, ratio});
    }
    return rows;
}

}  // namespace trunczeta
