#pragma once

#include <stdexcept>
#include <string>

#include "voa/rational.hpp"

namespace voa {

// Element a + b*sqrt(2) of the real quadratic field Q(sqrt 2).
class Quad {
public:
    Quad() : a_(0), b_(0) {}
    Quad(long n) : a_(n, 1), b_(0) {}  // NOLINT(google-explicit-constructor)
    Quad(Rational a) : a_(std::move(a)), b_(0) {}  // NOLINT(google-explicit-constructor)
    Quad(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static Quad sqrt2() { return Quad(Rational(0), Rational(1)); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    Quad operator-() const { return Quad(-a_, -b_); }
    Quad operator+(const Quad& o) const { return Quad(a_ + o.a_, b_ + o.b_); }
    Quad operator-(const Quad& o) const { return Quad(a_ - o.a_, b_ - o.b_); }
    Quad operator*(const Quad& o) const {
        return Quad(a_ * o.a_ + 2 * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
    }
    Quad& operator+=(const Quad& o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    Quad& operator-=(const Quad& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    Quad& operator*=(const Quad& o) {
        *this = *this * o;
        return *this;
    }

    // Galois conjugate a - b*sqrt(2); norm a^2 - 2 b^2 is rational and
    // vanishes only at zero.
    Quad conj() const { return Quad(a_, -b_); }
    Rational norm() const { return a_ * a_ - 2 * b_ * b_; }

    Quad inverse() const {
        if (is_zero()) throw std::domain_error("Quad: division by zero");
        Rational n = norm();
        return Quad(a_ / n, -b_ / n);
    }
    Quad operator/(const Quad& o) const { return *this * o.inverse(); }

    bool operator==(const Quad& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const Quad& o) const { return !(*this == o); }

    // Total order (coordinatewise lexicographic), used for canonical term
    // ordering — not the real-number order.
    int cmp_key(const Quad& o) const {
        int c = cmp(a_, o.a_);
        if (c != 0) return c;
        return cmp(b_, o.b_);
    }

    std::string str() const;

private:
    Rational a_, b_;
};

}  // namespace voa
