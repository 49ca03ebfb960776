#include "doctest.h"

#include <random>

#include "voa/state.hpp"

using namespace voa;

namespace {
std::mt19937_64 rng(424242);

FockState rand_fock(Sector sector, long maxdepth) {
    FockState s;
    s.sector = sector;
    std::uniform_int_distribution<long> nterms(0, 4), coeff(-6, 6);
    for (long t = nterms(rng); t > 0; --t) {
        long budget = std::uniform_int_distribution<long>(0, maxdepth)(rng);
        std::vector<HalfInt> parts;
        if (sector == Sector::untwisted) {
            while (budget > 0) {
                long p = std::uniform_int_distribution<long>(1, budget)(rng);
                parts.push_back(HalfInt(p));
                budget -= p;
            }
        } else {
            long twice_budget = 2 * budget + (std::uniform_int_distribution<int>(0, 1)(rng));
            while (twice_budget > 0) {
                long p = std::uniform_int_distribution<long>(0, (twice_budget - 1) / 2)(rng) * 2 + 1;
                parts.push_back(HalfInt::from_twice(p));
                twice_budget -= p;
            }
        }
        s = s + Scalar(coeff(rng)) * fock_monomial(parts, Scalar(0), sector);
    }
    return s;
}
}  // namespace

TEST_CASE("canonical form: additive inverses cancel") {
    FockState a = fock_monomial_int({1});
    CHECK((a + Scalar(-1) * a).is_zero());
}

TEST_CASE("two-term sum keeps distinct monomials") {
    FockState s = fock_monomial_int({2}) + fock_monomial_int({1, 1});
    CHECK(s.lc.size() == 2);
    CHECK(depth_component(s, HalfInt(2)) == s);
    CHECK(depth_component(s, HalfInt(1)).is_zero());
}

TEST_CASE("ratfunc coefficients merge") {
    Scalar lam = Scalar::momentum_var();
    FockState e = fock_vacuum(Sector::untwisted, lam);
    FockState s = lam * e + lam * e;
    CHECK(s == (Scalar(2) * lam) * e);
}

TEST_CASE("space mismatch is rejected with both descriptors named") {
    FockState a = fock_vacuum(Sector::untwisted);
    FockState b = fock_vacuum(Sector::twisted);
    CHECK_THROWS_WITH_AS(a + b, "space mismatch: Fock[untwisted] vs Fock[twisted]",
                         std::invalid_argument);
}

TEST_CASE("theta involution") {
    CHECK(theta_involution(fock_vacuum()) == fock_vacuum());
    FockState a1 = fock_monomial_int({1});
    CHECK(theta_involution(a1) == Scalar(-1) * a1);
    FockState tw = fock_monomial({HalfInt::from_twice(3), HalfInt::from_twice(1)}, Scalar(0),
                                 Sector::twisted);
    CHECK(theta_involution(tw) == tw);
    FockState charged = fock_vacuum(Sector::untwisted, Scalar(1));
    CHECK_THROWS_AS(theta_involution(charged), std::invalid_argument);
}

TEST_CASE("theta is an involution and projectors are orthogonal idempotents") {
    for (int t = 0; t < 25; ++t) {
        Sector sec = t % 2 == 0 ? Sector::untwisted : Sector::twisted;
        FockState s = rand_fock(sec, 8);
        CHECK(theta_involution(theta_involution(s)) == s);
        FockState p = project_parity(s, +1);
        FockState m = project_parity(s, -1);
        CHECK(p + m == s);
        CHECK(project_parity(p, +1) == p);
        CHECK(project_parity(p, -1).is_zero());
        CHECK(theta_involution(p) == p);
        CHECK(theta_involution(m) == Scalar(-1) * m);
    }
}

TEST_CASE("parity projection examples") {
    FockState sq = fock_monomial_int({1, 1});
    CHECK(project_parity(sq, +1) == sq);
    CHECK(project_parity(sq, -1).is_zero());
    FockState mixed = fock_monomial_int({1}) + fock_monomial_int({2, 1, 1});
    CHECK(project_parity(mixed, -1) == mixed);
    FockState both = fock_monomial_int({1}) + fock_monomial_int({2, 1});
    CHECK(project_parity(both, -1) == fock_monomial_int({1}));
}

TEST_CASE("depth component partitions the state") {
    FockState s = rand_fock(Sector::untwisted, 6);
    FockState sum;
    for (long d = 0; d <= 6; ++d) sum = sum + depth_component(s, HalfInt(d));
    CHECK(sum == s);
    Scalar lam = Scalar::momentum_var();
    FockState e = fock_vacuum(Sector::untwisted, lam);
    CHECK(depth_component(e, HalfInt(0)) == e);
}

TEST_CASE("monomial validity enforced") {
    CHECK_THROWS_AS(fock_monomial({HalfInt::from_twice(1)}, Scalar(0), Sector::untwisted),
                    std::invalid_argument);
    CHECK_THROWS_AS(fock_monomial({HalfInt(1)}, Scalar(0), Sector::twisted),
                    std::invalid_argument);
    CHECK_THROWS_AS(fock_vacuum(Sector::twisted, Scalar(1)), std::invalid_argument);
    CHECK_THROWS_AS(weyl_monomial(1, {{2, 1, HalfInt::from_twice(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(weyl_monomial(1, {{1, 1, HalfInt(1)}}), std::invalid_argument);
}

TEST_CASE("printing round stability") {
    FockState s = fock_monomial_int({2, 1}) + Scalar(-1) * fock_monomial_int({3});
    CHECK(state_str(s) == "a(-2) a(-1) |0> - a(-3) |0>");
    CHECK(state_str(FockState{}) == "0");
}
