#pragma once

#include <string>
#include <variant>

#include "voa/poly.hpp"
#include "voa/quad.hpp"
#include "voa/rational.hpp"

namespace voa {

// Exact element of the coefficient tower Q ⊂ Q(sqrt 2) ⊂ Q(sqrt 2)(x),
// where x is the formal momentum parameter. Values are kept in the
// narrowest variant that represents them exactly, so structural equality
// is value equality.
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    Scalar(long n) : v_(Rational(n)) {}         // NOLINT(google-explicit-constructor)
    Scalar(Rational r) : v_(std::move(r)) {}    // NOLINT(google-explicit-constructor)
    Scalar(Quad q) : v_(std::move(q)) { narrow(); }        // NOLINT
    Scalar(Poly p) : v_(RatFunc(std::move(p))) { narrow(); }  // NOLINT
    Scalar(RatFunc f) : v_(std::move(f)) { narrow(); }     // NOLINT

    static Scalar sqrt2() { return Scalar(Quad::sqrt2()); }
    static Scalar momentum_var() { return Scalar(Poly::variable()); }

    enum class Kind { rational, quad, ratfunc };
    Kind kind() const { return static_cast<Kind>(v_.index()); }

    bool is_zero() const;
    bool is_one() const { return *this == Scalar(1); }
    bool is_rational() const { return kind() == Kind::rational; }

    const Rational& as_rational() const;  // throws unless rational
    Quad as_quad() const;                 // throws unless quad or narrower
    RatFunc as_ratfunc() const;           // always widens

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar pow(unsigned e) const;

    // Substitute a concrete value for the momentum variable.
    Scalar eval_momentum(const Quad& x) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Total order for canonical term ordering and deterministic printing.
    int cmp_key(const Scalar& o) const;

    std::string str() const;

private:
    void narrow();
    std::variant<Rational, Quad, RatFunc> v_;
};

inline Scalar operator*(long k, const Scalar& s) { return Scalar(k) * s; }
inline Scalar operator*(const Rational& k, const Scalar& s) { return Scalar(k) * s; }

}  // namespace voa
