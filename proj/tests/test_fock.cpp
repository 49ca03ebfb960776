#include "doctest.h"

#include <random>

#include "voa/fock.hpp"

using namespace voa;

namespace {

std::mt19937_64 rng(77001);

// random untwisted momentum-0 monomial state of weight <= maxwt
FockState rand_operator(long maxwt) {
    std::uniform_int_distribution<long> wt(0, maxwt);
    long budget = wt(rng);
    std::vector<long> parts;
    while (budget > 0) {
        std::uniform_int_distribution<long> part(1, budget);
        long p = part(rng);
        parts.push_back(p);
        budget -= p;
    }
    return fock_monomial_int(parts);
}

FockState rand_module_state(long maxdepth, const Scalar& momentum) {
    FockState s = Scalar(0) * fock_vacuum(Sector::untwisted, momentum);
    std::uniform_int_distribution<long> nterms(1, 3), coeff(-5, 5);
    for (long t = nterms(rng); t > 0; --t) {
        std::uniform_int_distribution<long> wt(0, maxdepth);
        long budget = wt(rng);
        std::vector<long> parts;
        while (budget > 0) {
            std::uniform_int_distribution<long> part(1, budget);
            long p = part(rng);
            parts.push_back(p);
            budget -= p;
        }
        s = s + Scalar(coeff(rng)) * fock_monomial_int(parts, momentum);
    }
    return s;
}

}  // namespace

TEST_CASE("heisenberg relation forces a(1) a(-1) |0> = |0>") {
    FockState v = fock_monomial_int({1});
    CHECK(fock_mode(fock_monomial_int({1}), 1, fock_monomial_int({1})) == fock_vacuum());
    CHECK(apply_heis_mode(HalfInt(1), v) == fock_vacuum());
}

TEST_CASE("alpha(0) eigenvalue on e^lambda") {
    Scalar lam = Scalar::momentum_var();
    FockState elam = fock_vacuum(Sector::untwisted, lam);
    FockState got = fock_mode(fock_monomial_int({1}), 0, elam);
    CHECK(got == lam * elam);
}

TEST_CASE("zero-mode eigenvalues of omega and J on module tops") {
    Scalar lam = Scalar::momentum_var();
    FockState elam = fock_vacuum(Sector::untwisted, lam);

    // o(omega) = L(0): lambda^2/2
    FockState l0 = fock_mode(fock_omega(), ModeIndex::weighted(0), elam);
    CHECK(l0 == Scalar(rat(1, 2)) * lam * lam * elam);

    // o(J): lambda^4 - lambda^2/2
    FockState j0 = fock_mode(fock_J(), ModeIndex::weighted(0), elam);
    CHECK(j0 == (lam.pow(4) - Scalar(rat(1, 2)) * lam.pow(2)) * elam);

    // tops of the fixed-point algebra and its odd part
    FockState vac = fock_vacuum();
    FockState a1 = fock_monomial_int({1});
    CHECK(fock_mode(fock_J(), ModeIndex::weighted(0), vac).is_zero());
    CHECK(fock_mode(fock_omega(), ModeIndex::weighted(0), vac).is_zero());
    CHECK(fock_mode(fock_omega(), ModeIndex::weighted(0), a1) == a1);
    CHECK(fock_mode(fock_J(), ModeIndex::weighted(0), a1) == Scalar(-6) * a1);
}

TEST_CASE("J is a weight-4 singular vector") {
    CHECK(fock_virasoro(1, fock_J()).is_zero());
    CHECK(fock_virasoro(2, fock_J()).is_zero());
    CHECK(fock_virasoro(0, fock_J()) == Scalar(4) * fock_J());
}

TEST_CASE("L(0) grading and vacuum translation") {
    Scalar lam = Scalar::momentum_var();
    CHECK(fock_virasoro(-1, fock_vacuum()).is_zero());
    FockState v = fock_monomial_int({2}, lam);
    FockState expect =
        (Scalar(rat(1, 2)) * lam * lam + Scalar(2)) * v;
    CHECK(fock_virasoro(0, v) == expect);
}

TEST_CASE("creation identity u_(-1)|0> = u") {
    for (int t = 0; t < 30; ++t) {
        FockState u = rand_operator(8);
        CHECK(fock_mode(u, -1, fock_vacuum()) == u);
        CHECK(fock_mode_recursive(u, -1, fock_vacuum()) == u);
    }
}

TEST_CASE("oracle equivalence on random triples") {
    Scalar momenta[3] = {Scalar(0), Scalar(rat(2, 3)), Scalar::momentum_var()};
    for (int t = 0; t < 60; ++t) {
        FockState u = rand_operator(6);
        FockState v = rand_module_state(6, momenta[t % 3]);
        std::uniform_int_distribution<long> mode(-6, 8);
        long n = mode(rng);
        CHECK(fock_mode(u, n, v) == fock_mode_recursive(u, n, v));
    }
}

TEST_CASE("grading of homogeneous products") {
    for (int t = 0; t < 30; ++t) {
        FockState u = rand_operator(5);
        if (u.is_zero()) continue;
        long wu = fock_weight(u);
        FockState v = rand_operator(5);  // homogeneous monomial, momentum 0
        if (v.is_zero()) continue;
        std::uniform_int_distribution<long> mode(-4, 8);
        long n = mode(rng);
        FockState p = fock_mode(u, n, v);
        if (p.is_zero()) continue;
        CHECK(Rational(fock_depth(p)) == Rational(fock_weight(v) + wu - n - 1));
    }
}

TEST_CASE("truncation: u_(n) v = 0 when n >= wt(u) + depth(v)") {
    FockState u = fock_monomial_int({2, 1});
    FockState v = fock_monomial_int({1, 1});
    CHECK(fock_mode(u, 5, v).is_zero());
    CHECK(fock_mode(u, 6, v).is_zero());
    CHECK_FALSE(fock_mode(u, 4, v).is_zero());
}

TEST_CASE("skew symmetry via exp(L(-1)) twist") {
    for (int t = 0; t < 20; ++t) {
        FockState u = rand_operator(4);
        FockState v = rand_operator(4);
        std::uniform_int_distribution<long> mode(-3, 5);
        long n = mode(rng);
        FockState lhs = fock_mode(u, n, v);
        FockState rhs;
        rhs.sector = Sector::untwisted;
        long bound = fock_weight(u) + fock_weight(v);
        Scalar fact(1);
        for (long i = 0; n + i <= bound; ++i) {
            if (i > 0) fact = fact * Scalar(rat(1, i));
            FockState term = fock_mode(v, n + i, u);
            for (long j = 0; j < i; ++j) term = fock_virasoro(-1, term);
            long sgn = ((n + i + 1) % 2 == 0) ? 1 : -1;
            rhs = rhs + Scalar(sgn) * fact * term;
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("virasoro bracket with central charge 1") {
    // [L(m), L(n)] = (m-n) L(m+n) + delta_{m+n,0} (m^3-m)/12 c, c = 1
    std::vector<FockState> basis;
    for (auto parts : std::vector<std::vector<long>>{{}, {1}, {2}, {1, 1}, {2, 1}, {3}})
        basis.push_back(fock_monomial_int(parts));
    for (long m = -2; m <= 2; ++m) {
        for (long n = -2; n <= 2; ++n) {
            for (const auto& v : basis) {
                FockState lhs = fock_virasoro(m, fock_virasoro(n, v)) -
                                fock_virasoro(n, fock_virasoro(m, v));
                FockState rhs = Scalar(m - n) * fock_virasoro(m + n, v);
                if (m + n == 0) rhs = rhs + Scalar(rat(m * m * m - m, 12)) * v;
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("commutator of L with the modes of J") {
    // With formal J-modes: [L(m), J_(n)] = (3(m+1) - n) J_(m+n).
    // The same bracket with weighted J-modes picks up (3m - n); both are
    // checked so the convention stays pinned.
    FockState J = fock_J();
    std::vector<FockState> basis;
    for (auto parts : std::vector<std::vector<long>>{{}, {1}, {2, 1}, {3}})
        basis.push_back(fock_monomial_int(parts));
    for (long m = -2; m <= 2; ++m) {
        for (long n = -2; n <= 2; ++n) {
            for (const auto& v : basis) {
                FockState lhs = fock_virasoro(m, fock_mode(J, n, v)) -
                                fock_mode(J, n, fock_virasoro(m, v));
                FockState rhs = Scalar(3 * (m + 1) - n) * fock_mode(J, m + n, v);
                CHECK(lhs == rhs);

                FockState lhs_w =
                    fock_virasoro(m, fock_mode(J, ModeIndex::weighted(n), v)) -
                    fock_mode(J, ModeIndex::weighted(n), fock_virasoro(m, v));
                FockState rhs_w =
                    Scalar(3 * m - n) * fock_mode(J, ModeIndex::weighted(m + n), v);
                CHECK(lhs_w == rhs_w);
            }
        }
    }
}
