#include "polymaass/scalar.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pm {

Scalar Scalar::pi_power(int e, const Rational& q) {
    Scalar s;
    s.add(e, q);
    return s;
}

void Scalar::add(int e, const Rational& q) {
    if (q.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, q);
    if (inserted) return;
    it->second += q;
    if (it->second.is_zero()) terms_.erase(it);
}

Rational Scalar::rational() const {
    if (!is_rational()) throw std::domain_error("scalar " + str() + " carries powers of pi");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

double Scalar::to_double() const {
    double v = 0;
    for (const auto& [e, q] : terms_) v += q.to_double() * std::pow(std::numbers::pi, e);
    return v;
}

Scalar Scalar::operator-() const {
    Scalar out;
    for (const auto& [e, q] : terms_) out.terms_.emplace(e, -q);
    return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    for (const auto& [e, q] : o.terms_) add(e, q);
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    Scalar out;
    for (const auto& [e1, q1] : terms_)
        for (const auto& [e2, q2] : o.terms_) out.add(e1 + e2, q1 * q2);
    terms_ = std::move(out.terms_);
    return *this;
}

std::string Scalar::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [e, q] = *it;
        std::string part;
        if (e == 0) {
            part = q.str();
        } else {
            Rational a = abs(q);
            std::string coef = a == Rational(1) ? "" : a.str();
            std::string pi = e == 1 ? "π" : "π^" + std::to_string(e);
            part = (q.sign() < 0 ? "-" : "") + coef + pi;
        }
        if (!first) out += part[0] == '-' ? " - " + part.substr(1) : " + " + part;
        else out = part;
        first = false;
    }
    return terms_.size() > 1 ? "(" + out + ")" : out;
}

}  // namespace pm
