#pragma once

#include <string>
#include <vector>

#include "voa/fock.hpp"
#include "voa/mode.hpp"
#include "voa/state.hpp"

namespace voa {

// Rank-1 even lattice Z*gamma with (gamma,gamma) = 2. Algebra elements
// carry integer exponential momenta; the shifted coset carries half-odd
// momenta and never acts.

// u_(n) v by normal-ordered expansion with exponential factors.
LatticeState lattice_mode(const LatticeState& u, long n_formal, const LatticeState& v);
LatticeState lattice_mode(const LatticeState& u, ModeIndex n, const LatticeState& v);

// Independent route: operator parts peeled by the iterate recursion, module
// parts commuted through the exponential one mode at a time.
LatticeState lattice_mode_recursive(const LatticeState& u, long n_formal,
                                    const LatticeState& v);

// Weight of a homogeneous lattice state.
Rational lattice_op_weight(const LatticeState& u);

// Single gamma-mode: creation for k < 0, (gamma, r gamma) = 2r for k = 0,
// annihilation with pairing 2 for k > 0.
LatticeState apply_gamma_mode(HalfInt k, const LatticeState& v);

// sl2 zero modes: E = (e^{gamma})_0, F = (e^{-gamma})_0, H = gamma(0).
LatticeState sl2_E(const LatticeState& v);
LatticeState sl2_F(const LatticeState& v);
LatticeState sl2_H(const LatticeState& v);

// M(1) operators rewritten in gamma-modes: a(-n) = gamma(-n)/sqrt2.
LatticeState fock_to_lattice(const FockState& u);
// Momentum-sector states back in the alpha presentation: the monomial over
// e^{r gamma} maps to sqrt2^{length} times the alpha-monomial at momentum
// r*sqrt2.
FockState lattice_to_fock(const LatticeState& s);

LatticeState lattice_omega();  // (1/4) gamma(-1)^2
LatticeState lattice_virasoro(long k, const LatticeState& v);

// Terms with exponential momentum exactly r.
LatticeState momentum_component(const LatticeState& s, HalfInt r);

// Basis of the momentum-r sector at Heisenberg depth d.
std::vector<LatticeMono> sector_basis(HalfInt r, long depth);

// F^k e^{(m/2+k) gamma}, the Virasoro highest-weight vector of weight
// (m/2+k)^2 in the momentum-(m/2) sector.
LatticeState build_hwv(long m, long k);

struct HwReport {
    bool is_hw = false;
    Rational weight;
};
// is_hw iff L(1)v = L(2)v = 0; weight is the L(0) eigenvalue. Throws on
// non-homogeneous input.
HwReport hw_check(const LatticeState& v);

// ---------------------------------------------------------------------------
// Verification reports
// ---------------------------------------------------------------------------

struct ReductionConstant {
    long i = 0, j = 0;
    Scalar value;  // coefficient on the top exponential
};

struct KeyLemmaReport {
    long m = 0, k = 0;
    bool formal_reaches_level = false;    // formal mode index lands on wt (m/2+k+2)^2
    bool weighted_reaches_level = false;  // the weighted reading does
    Scalar sigma;                         // base constant, (i,j) = (2,k)
    std::vector<ReductionConstant> constants;
    bool pattern_ok = false;      // constants match i(i-1)/2 * sigma
    bool top_route_nonzero = false;
    Scalar C;                     // coefficient of the next highest-weight vector
    bool C_nonzero = false;
    Scalar C_top_route;           // same coefficient via the E-string route
    bool routes_agree = false;
    long projection_dim = 0;      // ambient dimension at the target depth
    long descendant_rows = 0;
    bool ok() const {
        return formal_reaches_level && !weighted_reaches_level && pattern_ok &&
               top_route_nonzero && C_nonzero && routes_agree;
    }
};

KeyLemmaReport verify_keylemma(long m, long k);

struct SpanningDepth {
    long depth = 0;
    long rank = 0;
    long dim = 0;  // p(depth)
    long vectors = 0;
};

struct SpanningReport {
    long m = 0;
    std::vector<SpanningDepth> depths;
    bool full_rank() const {
        for (const auto& d : depths)
            if (d.rank != d.dim) return false;
        return true;
    }
};

// Rank evidence for the spanning set J_(-i1)...J_(-ia) L_{-j1}...L_{-jb}
// v_m^{(t)}, t = 0,1, inside the momentum-(m/2) sector, per depth <= cutoff.
SpanningReport spanning_check(long m, long depth_cutoff);

}  // namespace voa
