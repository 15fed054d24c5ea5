#include "trunczeta/quadratic.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace trunczeta {

QuadraticRational& QuadraticRational::operator+=(const QuadraticRational& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadraticRational& QuadraticRational::operator-=(const QuadraticRational& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadraticRational& QuadraticRational::operator*=(const QuadraticRational& o) {
    // (a + b r)(c + d r) = (ac + 2bd) + (ad + bc) r,  r = sqrt 2
    Rat na = a_ * o.a_ + 2 * b_ * o.b_;
    Rat nb = a_ * o.b_ + b_ * o.a_;
    a_ = na;
    b_ = nb;
    return *this;
}

QuadraticRational QuadraticRational::inverse() const {
    Rat norm = a_ * a_ - 2 * b_ * b_;
    if (norm == 0)
        throw std::domain_error("QuadraticRational: inverse of zero (a^2 == 2 b^2)");
    return {a_ / norm, -b_ / norm};
}

QuadraticRational QuadraticRational::pow(unsigned long e) const {
    QuadraticRational acc(Rat(1), Rat(0));
    QuadraticRational base = *this;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

double QuadraticRational::to_double() const {
    static const double sqrt2 = std::sqrt(2.0);
    return a_.get_d() + b_.get_d() * sqrt2;
}

std::string QuadraticRational::to_string() const {
    std::ostringstream os;
    os << a_.get_str() << " + " << b_.get_str() << "*sqrt(2)";
    return os.str();
}

}  // namespace trunczeta
