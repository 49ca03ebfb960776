#pragma once

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "voa/rational.hpp"

namespace voa {

// Exact multiple of 1/2, stored as twice the value. Mode depths and mode
// indices live here: integers in untwisted sectors, half-odd integers in
// twisted/Weyl sectors.
class HalfInt {
public:
    constexpr HalfInt() : t_(0) {}
    constexpr explicit HalfInt(long whole) : t_(2 * whole) {}

    static constexpr HalfInt from_twice(long t) {
        HalfInt h;
        h.t_ = t;
        return h;
    }
    static constexpr HalfInt half() { return from_twice(1); }

    constexpr long twice() const { return t_; }
    constexpr bool is_integer() const { return t_ % 2 == 0; }
    constexpr bool is_half_odd() const { return t_ % 2 != 0; }
    long floor() const { return (t_ >= 0 ? t_ / 2 : (t_ - 1) / 2); }

    long as_integer() const {
        if (!is_integer()) throw std::domain_error("HalfInt: not an integer: " + str());
        return t_ / 2;
    }
    Rational as_rational() const { return rat(t_, 2); }

    constexpr HalfInt operator-() const { return from_twice(-t_); }
    constexpr HalfInt operator+(HalfInt o) const { return from_twice(t_ + o.t_); }
    constexpr HalfInt operator-(HalfInt o) const { return from_twice(t_ - o.t_); }
    constexpr friend HalfInt operator*(long k, HalfInt h) { return from_twice(k * h.t_); }
    HalfInt& operator+=(HalfInt o) {
        t_ += o.t_;
        return *this;
    }
    HalfInt& operator-=(HalfInt o) {
        t_ -= o.t_;
        return *this;
    }

    constexpr auto operator<=>(const HalfInt&) const = default;
    constexpr bool operator==(const HalfInt&) const = default;

    std::string str() const {
        if (is_integer()) return std::to_string(t_ / 2);
        return std::to_string(t_) + "/2";
    }

private:
    long t_;
};

}  // namespace voa
