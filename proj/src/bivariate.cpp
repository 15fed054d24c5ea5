#include "trunczeta/bivariate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace trunczeta {

BivariatePolynomial BivariatePolynomial::monomial(Int coeff, int p_exp, int x_exp) {
    BivariatePolynomial r;
    r.add_term(coeff, p_exp, x_exp);
    return r;
}

BivariatePolynomial::BivariatePolynomial(std::initializer_list<Term> ts) {
    for (const auto& t : ts) add_term(t.coeff, t.p_exp, t.x_exp);
}

void BivariatePolynomial::add_term(const Int& coeff, int p_exp, int x_exp) {
    if (coeff == 0) return;
    auto key = Monomial{p_exp, x_exp};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

BivariatePolynomial BivariatePolynomial::operator-() const {
    BivariatePolynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(c, m.first, m.second);
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(-c, m.first, m.second);
    return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    BivariatePolynomial r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ca * cb, ma.first + mb.first, ma.second + mb.second);
    return r;
}

Monomial BivariatePolynomial::max_exponents() const {
    Monomial m{0, 0};
    bool first = true;
    for (const auto& [k, c] : terms_) {
        (void)c;
        if (first) {
            m = k;
            first = false;
        } else {
            m.first = std::max(m.first, k.first);
            m.second = std::max(m.second, k.second);
        }
    }
    return m;
}

Monomial BivariatePolynomial::min_exponents() const {
    Monomial m{0, 0};
    bool first = true;
    for (const auto& [k, c] : terms_) {
        (void)c;
        if (first) {
            m = k;
            first = false;
        } else {
            m.first = std::min(m.first, k.first);
            m.second = std::min(m.second, k.second);
        }
    }
    return m;
}

BivariatePolynomial BivariatePolynomial::shifted(int dp, int dx) const {
    BivariatePolynomial r;
    for (const auto& [m, c] : terms_) {
        int a = m.first + dp, b = m.second + dx;
        if (a < 0 || b < 0)
            throw std::domain_error("BivariatePolynomial::shifted: negative exponent");
        r.terms_.emplace(Monomial{a, b}, c);
    }
    return r;
}

std::vector<Int> BivariatePolynomial::specialize(const Int& p, int order) const {
    std::vector<Int> out(static_cast<size_t>(order) + 1, Int(0));
    for (const auto& [m, c] : terms_) {
        if (m.second <= order)
            out[static_cast<size_t>(m.second)] += c * pow_int(p, static_cast<unsigned long>(m.first));
    }
    return out;
}

double BivariatePolynomial::eval_real(double p, double x) const {
    double acc = 0.0;
    for (const auto& [m, c] : terms_)
        acc += c.get_d() * std::pow(p, m.first) * std::pow(x, m.second);
    return acc;
}

QuadraticRational BivariatePolynomial::eval_quadratic(const Int& p,
                                                      const QuadraticRational& x) const {
    QuadraticRational acc;
    for (const auto& [m, c] : terms_) {
        QuadraticRational term = QuadraticRational::integer(c * pow_int(p, static_cast<unsigned long>(m.first)));
        acc += term * x.pow(static_cast<unsigned long>(m.second));
    }
    return acc;
}

std::string BivariatePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        if (m.first) os << "*P^" << m.first;
        if (m.second) os << "*X^" << m.second;
    }
    return os.str();
}

BivariateRationalFunction make_rf(BivariatePolynomial num,
                                  std::initializer_list<DenominatorFactor> factors) {
    BivariateRationalFunction f;
    f.num = std::move(num);
    for (const auto& d : factors) {
        if (d.x_exp < 1) throw std::domain_error("denominator factor needs X-exponent >= 1");
        f.den[{d.p_exp, d.x_exp}] += d.multiplicity;
    }
    return f;
}

BivariatePolynomial expand_denominator(const DenominatorSet& den) {
    BivariatePolynomial r = BivariatePolynomial::constant(1);
    for (const auto& [m, mult] : den) {
        BivariatePolynomial factor{{Int(1), 0, 0}, {Int(-1), m.first, m.second}};
        for (int i = 0; i < mult; ++i) r = r * factor;
    }
    return r;
}

namespace {

DenominatorSet den_union(const DenominatorSet& a, const DenominatorSet& b) {
    DenominatorSet u = a;
    for (const auto& [m, mult] : b) {
        auto it = u.find(m);
        if (it == u.end())
            u.emplace(m, mult);
        else
            it->second = std::max(it->second, mult);
    }
    return u;
}

// product of the factors in `target` not already accounted for by `have`
BivariatePolynomial cofactor(const DenominatorSet& target, const DenominatorSet& have) {
    BivariatePolynomial r = BivariatePolynomial::constant(1);
    for (const auto& [m, mult] : target) {
        auto it = have.find(m);
        int missing = mult - (it == have.end() ? 0 : it->second);
        BivariatePolynomial factor{{Int(1), 0, 0}, {Int(-1), m.first, m.second}};
        for (int i = 0; i < missing; ++i) r = r * factor;
    }
    return r;
}

}  // namespace

BivariateRationalFunction rf_add(const BivariateRationalFunction& f,
                                 const BivariateRationalFunction& g) {
    BivariateRationalFunction s;
    s.den = den_union(f.den, g.den);
    s.num = f.num * cofactor(s.den, f.den) + g.num * cofactor(s.den, g.den);
    return s;
}

bool rf_equal(const BivariateRationalFunction& f, const BivariateRationalFunction& g) {
    return f.num * expand_denominator(g.den) == g.num * expand_denominator(f.den);
}

namespace {

// univariate coefficients (index = X-exponent) after P := p, up to `order`
std::vector<Int> specialize_denominator(const DenominatorSet& den, const Int& p, int order) {
    std::vector<Int> d(static_cast<size_t>(order) + 1, Int(0));
    d[0] = 1;
    for (const auto& [m, mult] : den) {
        Int pa = pow_int(p, static_cast<unsigned long>(m.first));
        for (int rep = 0; rep < mult; ++rep) {
            // multiply by (1 - p^a X^b), truncated
            for (int i = order; i >= m.second; --i) d[static_cast<size_t>(i)] -= pa * d[static_cast<size_t>(i - m.second)];
        }
    }
    return d;
}

}  // namespace

bool rf_equal_at(const BivariateRationalFunction& f, const BivariateRationalFunction& g,
                 const Int& p) {
    // cross-multiplied univariate polynomials in X at P := p
    auto deg = [](const BivariateRationalFunction& h) {
        int d = h.num.max_exponents().second;
        for (const auto& [m, mult] : h.den) d += m.second * mult;
        return d;
    };
    int order = deg(f) + deg(g) + 1;
    auto nf = f.num.specialize(p, order);
    auto ng = g.num.specialize(p, order);
    auto df = specialize_denominator(f.den, p, order);
    auto dg = specialize_denominator(g.den, p, order);
    auto convolve = [order](const std::vector<Int>& a, const std::vector<Int>& b) {
        std::vector<Int> c(static_cast<size_t>(order) + 1, Int(0));
        for (int i = 0; i <= order; ++i) {
            if (a[static_cast<size_t>(i)] == 0) continue;
            for (int j = 0; i + j <= order; ++j)
                c[static_cast<size_t>(i + j)] += a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
        }
        return c;
    };
    return convolve(nf, dg) == convolve(ng, df);
}

std::vector<Int> rf_series(const BivariateRationalFunction& f, const Int& p, int order) {
    auto num = f.num.specialize(p, order);
    auto den = specialize_denominator(f.den, p, order);
    // den[0] == 1, so the long division stays in Z
    std::vector<Int> out(static_cast<size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        Int c = num[static_cast<size_t>(n)];
        for (int j = 1; j <= n; ++j) c -= den[static_cast<size_t>(j)] * out[static_cast<size_t>(n - j)];
        out[static_cast<size_t>(n)] = c;
    }
    return out;
}

VariableInversion rf_invert_variables(const BivariateRationalFunction& f) {
    if (f.num.is_zero())
        throw std::domain_error("rf_invert_variables: zero numerator");

    // Each factor: (1 - P^-a X^-b) = -P^-a X^-b (1 - P^a X^b).
    long sum_a = 0, sum_b = 0, nfactors = 0;
    for (const auto& [m, mult] : f.den) {
        sum_a += static_cast<long>(m.first) * mult;
        sum_b += static_cast<long>(m.second) * mult;
        nfactors += mult;
    }

    // Numerator: N(1/P,1/X) = P^-A X^-B * reverse(N) with A,B the max exponents.
    Monomial mx = f.num.max_exponents();
    BivariatePolynomial rev;
    for (const auto& [m, c] : f.num.terms())
        rev.add_term(c, mx.first - m.first, mx.second - m.second);

    // pull out the monomial content so the result numerator touches both axes
    Monomial mn = rev.min_exponents();
    rev = rev.shifted(-mn.first, -mn.second);

    int sign = (nfactors % 2 == 0) ? 1 : -1;
    // sign convention: positive coefficient on the lowest (X, then P) term
    auto lead = std::min_element(rev.terms().begin(), rev.terms().end(),
                                 [](const auto& a, const auto& b) {
                                     return std::pair{a.first.second, a.first.first} <
                                            std::pair{b.first.second, b.first.first};
                                 });
    if (lead->second < 0) {
        rev = -rev;
        sign = -sign;
    }

    VariableInversion res;
    res.sign = sign;
    res.p_exp = sum_a - mx.first + mn.first;
    res.x_exp = sum_b - mx.second + mn.second;
    res.fn.num = std::move(rev);
    res.fn.den = f.den;
    return res;
}

QuadraticRational rf_eval_quadratic(const BivariateRationalFunction& f) {
    const Int p(2);
    const QuadraticRational x(Rat(0), make_rat(1, 4));  // 2^{-3/2} = (1/4) sqrt 2
    QuadraticRational value = f.num.eval_quadratic(p, x);
    for (const auto& [m, mult] : f.den) {
        QuadraticRational factor =
            QuadraticRational::integer(1) -
            QuadraticRational::integer(pow_int(p, static_cast<unsigned long>(m.first))) *
                x.pow(static_cast<unsigned long>(m.second));
        if (factor.is_zero())
            throw std::domain_error("rf_eval_quadratic: denominator factor vanishes");
        QuadraticRational inv = factor.inverse();
        for (int i = 0; i < mult; ++i) value *= inv;
    }
    return value;
}

double rf_eval_real(const BivariateRationalFunction& f, double p, double s) {
    double x = std::pow(p, -s);
    double value = f.num.eval_real(p, x);
    for (const auto& [m, mult] : f.den) {
        double factor = 1.0 - std::pow(p, m.first) * std::pow(x, m.second);
        if (factor == 0.0)
            throw std::domain_error("rf_eval_real: pole (denominator factor vanishes)");
        value /= std::pow(factor, mult);
    }
    return value;
}

std::string rf_to_string(const BivariateRationalFunction& f) {
    std::ostringstream os;
    os << "(" << f.num.to_string() << ")";
    for (const auto& [m, mult] : f.den) {
        os << " / (1 - P^" << m.first << " X^" << m.second << ")";
        if (mult > 1) os << "^" << mult;
    }
    return os.str();
}

}  // namespace trunczeta
