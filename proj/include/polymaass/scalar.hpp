#pragma once

#include <map>
#include <ostream>
#include <string>

#include "polymaass/rational.hpp"

namespace pm {

// Finite Laurent polynomial in pi with rational coefficients.
class Scalar {
public:
    Scalar() = default;
    Scalar(int n) : Scalar(Rational(n)) {}
    Scalar(const Rational& q) { if (!q.is_zero()) terms_[0] = q; }
    static Scalar pi_power(int e, const Rational& q = Rational(1));

    const std::map<int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.count(0)); }
    Rational rational() const;  // throws unless is_rational()
    double to_double() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o) { return *this += -o; }
    Scalar& operator*=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

private:
    void add(int e, const Rational& q);
    std::map<int, Rational> terms_;
};

}  // namespace pm
