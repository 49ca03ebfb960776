#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "voa/quad.hpp"

namespace voa {

// Dense univariate polynomial in the formal momentum variable, with
// coefficients in Q(sqrt 2). Trailing zero coefficients are stripped; the
// zero polynomial has an empty coefficient vector and degree -1.
class Poly {
public:
    Poly() = default;
    Poly(Quad c) { coeffs_.push_back(std::move(c)); trim(); }  // NOLINT
    explicit Poly(std::vector<Quad> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly variable() { return Poly(std::vector<Quad>{Quad(0), Quad(1)}); }
    static Poly monomial(const Quad& c, unsigned deg) {
        std::vector<Quad> v(deg + 1, Quad(0));
        v[deg] = c;
        return Poly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Quad& lead() const {
        if (is_zero()) throw std::domain_error("Poly: lead of zero");
        return coeffs_.back();
    }
    Quad coeff(unsigned i) const {
        return i < coeffs_.size() ? coeffs_[i] : Quad(0);
    }
    const std::vector<Quad>& coeffs() const { return coeffs_; }

    bool is_constant() const { return degree() <= 0; }
    Quad constant() const { return coeff(0); }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Quad& c) const;

    // Euclidean division by a nonzero divisor; coefficients stay exact.
    std::pair<Poly, Poly> divmod(const Poly& d) const;

    Poly derivative() const;
    Quad eval(const Quad& x) const;
    Poly monic() const;
    Poly pow(unsigned e) const;

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    int cmp_key(const Poly& o) const;

    std::string str() const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<Quad> coeffs_;
};

// Monic gcd via the Euclidean algorithm (coefficients form a field).
Poly poly_gcd(Poly a, Poly b);
Poly squarefree_part(const Poly& p);

// Quotient num/den with den monic and gcd(num, den) = 1.
class RatFunc {
public:
    RatFunc() : num_(), den_(Quad(1)) {}
    RatFunc(Poly num) : num_(std::move(num)), den_(Quad(1)) {}  // NOLINT
    RatFunc(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return num_.is_constant() && den_.degree() == 0; }
    Quad constant() const { return num_.constant(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc inverse() const;

    Quad eval(const Quad& x) const;  // throws if den vanishes at x

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }
    int cmp_key(const RatFunc& o) const;

    std::string str() const;

private:
    void reduce();
    Poly num_, den_;
};

}  // namespace voa
