#include "doctest.h"

#include <random>

#include "voa/scalar.hpp"

using namespace voa;

namespace {

std::mt19937_64 rng(20240901);

Rational rand_rat() {
    std::uniform_int_distribution<long> num(-12, 12), den(1, 9);
    return rat(num(rng), den(rng));
}

Scalar rand_scalar(int kind) {
    switch (kind) {
        case 0: return Scalar(rand_rat());
        case 1: return Scalar(Quad(rand_rat(), rand_rat()));
        default: {
            Poly num(std::vector<Quad>{Quad(rand_rat(), rand_rat()), Quad(rand_rat()), Quad(rand_rat())});
            Poly den(std::vector<Quad>{Quad(rand_rat()), Quad(1)});
            if (num.is_zero()) num = Poly(Quad(1));
            return Scalar(RatFunc(num, den));
        }
    }
}

}  // namespace

TEST_CASE("rational binomials") {
    CHECK(binom(rat(-1), 2) == rat(1));
    CHECK(binom(rat(-2), 2) == rat(3));
    CHECK(binom(rat(-3, 2), 1) == rat(-3, 2));
    CHECK(binom(rat(-1, 2), 2) == rat(3, 8));
    CHECK(binom(rat(5), 0) == rat(1));
}

TEST_CASE("quad field arithmetic") {
    Quad s2 = Quad::sqrt2();
    CHECK(s2 * s2 == Quad(2));
    Quad x(rat(3, 2), rat(-1, 4));
    CHECK(x * x.inverse() == Quad(1));
    CHECK((x - x).is_zero());
    CHECK(x.conj().conj() == x);
}

TEST_CASE("polynomial division and gcd") {
    Poly x = Poly::variable();
    Poly p = (x * x - Poly(Quad(2))) * (x + Poly(Quad(1)));
    Poly q = (x * x - Poly(Quad(2))) * (x - Poly(Quad(3)));
    Poly g = poly_gcd(p, q);
    CHECK(g == (x * x - Poly(Quad(2))).monic());
    auto [quo, rem] = p.divmod(g);
    CHECK(rem.is_zero());
    CHECK(quo * g == p);
}

TEST_CASE("squarefree part") {
    Poly x = Poly::variable();
    Poly p = (x - Poly(Quad(1))).pow(3) * (x + Poly(Quad(2)));
    Poly sf = squarefree_part(p);
    CHECK(sf == ((x - Poly(Quad(1))) * (x + Poly(Quad(2)))).monic());
}

TEST_CASE("ratfunc reduction keeps denominator monic and coprime") {
    Poly x = Poly::variable();
    RatFunc f(x * x - Poly(Quad(1)), (x - Poly(Quad(1))) * Poly(Quad(rat(7))));
    CHECK(f.is_polynomial());
    CHECK(f.num() == (x + Poly(Quad(1))) * Poly(Quad(rat(1, 7))));
}

TEST_CASE("scalar field axioms on random triples in each variant") {
    for (int kind = 0; kind < 3; ++kind) {
        for (int trial = 0; trial < 40; ++trial) {
            Scalar a = rand_scalar(kind), b = rand_scalar(kind), c = rand_scalar(kind);
            CHECK(a + b == b + a);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + Scalar(0) == a);
            CHECK(a * Scalar(1) == a);
            if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
        }
    }
}

TEST_CASE("narrowing never changes value and is canonical") {
    // ratfunc that cancels to a constant narrows to a rational
    Poly x = Poly::variable();
    Scalar s(RatFunc(x * Poly(Quad(rat(3))), x));
    CHECK(s.kind() == Scalar::Kind::rational);
    CHECK(s == Scalar(3));
    // quad with zero sqrt2 part narrows
    Scalar q(Quad(rat(5, 2), rat(0)));
    CHECK(q.kind() == Scalar::Kind::rational);
    // sqrt2 squared narrows back to rational
    CHECK(Scalar::sqrt2() * Scalar::sqrt2() == Scalar(2));
    // polynomial difference collapses
    CHECK((Scalar::momentum_var() - Scalar::momentum_var()).is_zero());
    // mixed arithmetic promotes to the widest variant
    Scalar w = Scalar::momentum_var() + Scalar::sqrt2();
    CHECK(w.kind() == Scalar::Kind::ratfunc);
    CHECK(w - Scalar::momentum_var() == Scalar::sqrt2());
}

TEST_CASE("momentum evaluation") {
    Scalar x = Scalar::momentum_var();
    Scalar f = x * x - Scalar(rat(1, 2)) * x;
    CHECK(f.eval_momentum(Quad(2)) == Scalar(3));
    CHECK(f.eval_momentum(Quad::sqrt2()) == Scalar(2) - Scalar(rat(1, 2)) * Scalar::sqrt2());
}

TEST_CASE("scalar printing") {
    CHECK(Scalar(rat(-3, 2)).str() == "-3/2");
    CHECK(Scalar::sqrt2().str() == "1 s2");
    CHECK((Scalar(1) + Scalar::sqrt2()).str() == "1 + 1 s2");
    Scalar x = Scalar::momentum_var();
    CHECK((x.pow(4) - Scalar(rat(1, 2)) * x.pow(2)).str() == "x^4 - 1/2 x^2");
}
