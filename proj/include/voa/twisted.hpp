#pragma once

#include <map>

#include "voa/fock.hpp"

namespace voa {

// Coefficient c_{mn} of the quadratic correction exp(sum c_{mn} a(m)a(n)
// z^{-m-n}) that turns the bare half-integer-mode fields into module
// vertex operators. Generating series:
//   sum_{m,n>=0} c_{mn} x^m y^n = -log( (sqrt(1+x) + sqrt(1+y)) / 2 ).
// The table is built once, to a fixed order, and shared read-only.
Rational delta_coefficient(unsigned m, unsigned n);

// exp-correction applied to an untwisted momentum-0 state, split by the
// z-power it contributes: result[p] is the coefficient state of z^{-p}.
std::map<long, FockState> delta_apply(const FockState& v, long max_zpower);

// Twisted mode action of an untwisted momentum-0 operator state on a
// twisted module state. Off-grid indices (wrong theta-parity) give zero.
FockState twisted_mode(const FockState& u, ModeIndex n, const FockState& v);

// L(k) on twisted states (weighted mode k of the conformal vector).
FockState twisted_virasoro(long k, const FockState& v);

}  // namespace voa
