#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "trunczeta/exact.hpp"
#include "trunczeta/quadratic.hpp"

namespace trunczeta {

// Exponent pair (P-exponent, X-exponent). P stands for the prime, X for
// p^{-s}; every displayed local zeta factor lives in Z[P,X] localized at
// products of (1 - P^a X^b).
using Monomial = std::pair<int, int>;

class BivariatePolynomial {
public:
    BivariatePolynomial() = default;

    static BivariatePolynomial monomial(Int coeff, int p_exp, int x_exp);
    static BivariatePolynomial constant(Int c) { return monomial(std::move(c), 0, 0); }

    // Terms as {coeff, p_exp, x_exp} triples; duplicates accumulate.
    struct Term {
        Int coeff;
        int p_exp;
        int x_exp;
    };
    BivariatePolynomial(std::initializer_list<Term> ts);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Int>& terms() const { return terms_; }

    void add_term(const Int& coeff, int p_exp, int x_exp);

    BivariatePolynomial operator-() const;
    BivariatePolynomial& operator+=(const BivariatePolynomial& o);
    BivariatePolynomial& operator-=(const BivariatePolynomial& o);

    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
        a += b;
        return a;
    }
    friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) {
        a -= b;
        return a;
    }
    friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
    friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        return a.terms_ == b.terms_;
    }

    // Largest (p_exp, x_exp) taken coordinatewise over all terms.
    Monomial max_exponents() const;
    Monomial min_exponents() const;

    // Multiply by P^dp X^dx; negative shifts require divisibility.
    BivariatePolynomial shifted(int dp, int dx) const;

    // Coefficients of X^0..X^order after substituting P := p.
    std::vector<Int> specialize(const Int& p, int order) const;

    double eval_real(double p, double x) const;
    QuadraticRational eval_quadratic(const Int& p, const QuadraticRational& x) const;

    std::string to_string() const;

private:
    std::map<Monomial, Int> terms_;  // no zero coefficients
};

// (1 - P^a X^b)^multiplicity factors; X-exponent b >= 1 always.
struct DenominatorFactor {
    int p_exp;
    int x_exp;
    int multiplicity = 1;
};

// multiset of factors, keyed by (p_exp, x_exp)
using DenominatorSet = std::map<Monomial, int>;

// Formal rational function N(P,X) / prod (1 - P^a X^b)^m. Equality is
// decided by cross-multiplication, never by floating point. The constant
// function has an empty factor multiset.
struct BivariateRationalFunction {
    BivariatePolynomial num;
    DenominatorSet den;
};

BivariateRationalFunction make_rf(BivariatePolynomial num,
                                  std::initializer_list<DenominatorFactor> factors);

BivariatePolynomial expand_denominator(const DenominatorSet& den);

BivariateRationalFunction rf_add(const BivariateRationalFunction& f,
                                 const BivariateRationalFunction& g);

bool rf_equal(const BivariateRationalFunction& f, const BivariateRationalFunction& g);

// Equality after specializing P := p (the p = 2 displays only carry
// meaning at their own prime).
bool rf_equal_at(const BivariateRationalFunction& f, const BivariateRationalFunction& g,
                 const Int& p);

// Power-series coefficients c_0..c_order in X after P := p. Exact; the
// denominator factors specialize to 1 - p^a X^b, so the division stays
// integral.
std::vector<Int> rf_series(const BivariateRationalFunction& f, const Int& p, int order);

// f(P^-1, X^-1) = sign * P^u X^v * fn, with fn renormalized so that its
// numerator has monomial content 1 and a positive leading (lowest X, then
// lowest P) coefficient, and the same (1 - P^a X^b) factor multiset as f.
struct VariableInversion {
    int sign;  // +1 or -1
    long p_exp;
    long x_exp;
    BivariateRationalFunction fn;
};

VariableInversion rf_invert_variables(const BivariateRationalFunction& f);

// Exact evaluation at P = 2, X = 2^{-3/2} = sqrt(2)/4, inside Q(sqrt 2).
QuadraticRational rf_eval_quadratic(const BivariateRationalFunction& f);

// Double-precision evaluation at X = p^{-s}. Throws std::domain_error on a
// vanishing denominator factor. No exactness claim beyond IEEE rounding.
double rf_eval_real(const BivariateRationalFunction& f, double p, double s);

std::string rf_to_string(const BivariateRationalFunction& f);

}  // namespace trunczeta
