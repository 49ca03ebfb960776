#pragma once

#include "voa/mode.hpp"
#include "voa/state.hpp"

namespace voa {

// Weight of a homogeneous momentum-0 untwisted state (its depth).
long fock_weight(const FockState& u);

// Single Heisenberg mode a(k): creation for k < 0, the momentum eigenvalue
// for k = 0, annihilation (with [a(k), a(-k)] = k) for k > 0. Works in both
// sectors; the twisted sector has no k = 0.
FockState apply_heis_mode(HalfInt k, const FockState& v);

// u_(n) v for u in the momentum-0 untwisted Fock algebra acting on an
// untwisted module state v, by normal-ordered field expansion.
FockState fock_mode(const FockState& u, long n_formal, const FockState& v);

// Same product computed by the mode-peeling recursion
//   (a_(-m) u')_(n) v = sum_i (-1)^i C(-m,i) a_(-m-i) (u'_(n+i) v)
//                     - sum_i (-1)^{m+i} C(-m,i) u'_(n-m-i) (a_(i) v).
// Structurally independent of fock_mode; the two must agree everywhere.
FockState fock_mode_recursive(const FockState& u, long n_formal, const FockState& v);

FockState fock_mode(const FockState& u, ModeIndex n, const FockState& v);
FockState fock_mode_recursive(const FockState& u, ModeIndex n, const FockState& v);

// Generators of the orbifold subalgebra: the conformal vector and the
// weight-4 singular vector J = a(-1)^4 - 2 a(-3)a(-1) + 3/2 a(-2)^2.
FockState fock_omega();
FockState fock_J();

// L(k) v = omega_(k+1) v on untwisted Fock states.
FockState fock_virasoro(long k, const FockState& v);

}  // namespace voa
