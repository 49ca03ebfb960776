#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace voa {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer factorial(unsigned n) {
    Integer f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= static_cast<long>(i);
    return f;
}

// Generalized binomial coefficient: top*(top-1)*...*(top-k+1)/k! for an
// arbitrary rational top. binom(t, 0) = 1.
inline Rational binom(const Rational& top, unsigned k) {
    Rational p = 1;
    Rational t = top;
    for (unsigned i = 0; i < k; ++i) {
        p *= t;
        t -= 1;
    }
    return p / Rational(factorial(k));
}

inline Rational pow_rat(const Rational& base, unsigned e) {
    Rational p = 1;
    for (unsigned i = 0; i < e; ++i) p *= base;
    return p;
}

std::string rat_str(const Rational& r);

}  // namespace voa
