#pragma once

#include <string>

#include "trunczeta/exact.hpp"

namespace trunczeta {

// Element a + b*sqrt(2) of Q(sqrt 2), with reduced rational parts.
// Inversion is defined iff a^2 != 2 b^2, i.e. for every nonzero element.
class QuadraticRational {
public:
    QuadraticRational() : a_(0), b_(0) {}
    QuadraticRational(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {
        a_.canonicalize();
        b_.canonicalize();
    }
    static QuadraticRational integer(const Int& n) { return {Rat(n), Rat(0)}; }

    const Rat& rational_part() const { return a_; }
    const Rat& sqrt2_part() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QuadraticRational operator-() const { return {-a_, -b_}; }
    QuadraticRational& operator+=(const QuadraticRational& o);
    QuadraticRational& operator-=(const QuadraticRational& o);
    QuadraticRational& operator*=(const QuadraticRational& o);

    friend QuadraticRational operator+(QuadraticRational x, const QuadraticRational& y) {
        x += y;
        return x;
    }
    friend QuadraticRational operator-(QuadraticRational x, const QuadraticRational& y) {
        x -= y;
        return x;
    }
    friend QuadraticRational operator*(QuadraticRational x, const QuadraticRational& y) {
        x *= y;
        return x;
    }
    friend bool operator==(const QuadraticRational& x, const QuadraticRational& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

    // (a - b sqrt2) / (a^2 - 2 b^2); throws std::domain_error at zero.
    QuadraticRational inverse() const;
    friend QuadraticRational operator/(const QuadraticRational& x, const QuadraticRational& y) {
        return x * y.inverse();
    }

    QuadraticRational pow(unsigned long e) const;

    double to_double() const;
    std::string to_string() const;

private:
    Rat a_, b_;
};

}  // namespace trunczeta
