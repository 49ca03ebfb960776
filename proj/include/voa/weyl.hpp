#pragma once

#include <string>
#include <vector>

#include "voa/fock.hpp"
#include "voa/mode.hpp"
#include "voa/state.hpp"

namespace voa {

// Rank-n Weyl algebra: n pairs of weight-1/2 bosonic fields with
// [a_i^+(r), a_j^-(s)] = delta_{r+s,0} delta_{ij}.

// Single mode a_{idx}^{sign}(r): creation for r < 0, annihilation for
// r > 0 (pairing +1 when a^+ meets a^-, -1 when a^- meets a^+).
WeylState apply_weyl_mode(int idx, int sign, HalfInt r, const WeylState& v);

// u_(n) v by normal-ordered expansion; formal indices are integers.
WeylState weyl_mode(const WeylState& u, long n_formal, const WeylState& v);
WeylState weyl_mode(const WeylState& u, ModeIndex n, const WeylState& v);
// Iterate-recursion route.
WeylState weyl_mode_recursive(const WeylState& u, long n_formal, const WeylState& v);

// Conformal vector (1/2) sum_i (a_i^-(-3/2) a_i^+(-1/2) - a_i^+(-3/2) a_i^-(-1/2)).
WeylState weyl_omega(int rank);
WeylState weyl_virasoro(long k, const WeylState& v);

// Charge field H = sum_i a_i^+(-1/2) a_i^-(-1/2) 1. Level computation from
// the relations gives [H(m), H(s)] = -rank * m * delta_{m+s,0}; H(0) acts
// as minus the charge.
WeylState charge_field(int rank);
WeylState charge_mode(long m, const WeylState& v);

// The symplectic involution of an even-rank algebra S(2n):
//   a_i^+ -> a_{2n+1-i}^-,  a_{2n+1-i}^+ -> -a_i^-,
//   a_i^- -> -a_{2n+1-i}^+, a_{2n+1-i}^- -> a_i^+   (i = 1..n).
WeylState symplectic_involution(const WeylState& v);

// ---------------------------------------------------------------------------
// Tensor products S(rank) (x) M(1)
// ---------------------------------------------------------------------------

// (a (x) b)_(n) (x (x) y) = sum_j a_(j) x (x) b_(n-1-j) y.
TensorState tensor_mode(const TensorState& u, long n_formal, const TensorState& v);
TensorState tensor_mode(const TensorState& u, ModeIndex n, const TensorState& v);
// Same sum with both factor products computed by the recursion oracles.
TensorState tensor_mode_recursive(const TensorState& u, long n_formal, const TensorState& v);

TensorState tensor_omega(int rank);
TensorState tensor_virasoro(long k, const TensorState& v);

// sigma (x) theta: -1 on odd-parity Weyl factors, theta on the Heisenberg
// factor. The fixed subspace is the orbifold subalgebra.
TensorState parity_involution(const TensorState& v);
TensorState project_fixed(const TensorState& v, int sign);

// factor states as tensors
TensorState weyl_in_tensor(const WeylState& w);
TensorState heis_in_tensor(int rank, const FockState& f);

// All monomials of the given depth (basis of the graded piece).
std::vector<WeylMono> weyl_basis(int rank, HalfInt depth);

// ---------------------------------------------------------------------------
// Generator identity suite in S(n-1) (x) M(1)
// ---------------------------------------------------------------------------

struct IdentityCase {
    std::string name;
    bool pass = false;
    std::string expected;
    std::string computed;
};

struct GeneratorReport {
    int n = 2;  // tensor factor is S(n-1)
    std::vector<IdentityCase> identities;
    bool reaches_J = false;  // 1 (x) J lies in the weight-4 reachable span
    long weight4_dim = 0;
    long reachable_rank = 0;
    bool all_pass() const {
        if (!reaches_J) return false;
        for (const auto& c : identities)
            if (!c.pass) return false;
        return true;
    }
};

GeneratorReport verify_generator_identities(int n);

}  // namespace voa
