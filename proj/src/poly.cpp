#include "voa/poly.hpp"

#include <algorithm>
#include <sstream>

namespace voa {

Poly Poly::operator-() const {
    std::vector<Quad> c(coeffs_);
    for (auto& q : c) q = -q;
    return Poly(std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Quad> c(std::max(coeffs_.size(), o.coeffs_.size()), Quad(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Quad> c(coeffs_.size() + o.coeffs_.size() - 1, Quad(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return Poly(std::move(c));
}

Poly Poly::operator*(const Quad& k) const {
    std::vector<Quad> c(coeffs_);
    for (auto& q : c) q *= k;
    return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    Poly q;
    Poly r = *this;
    Quad dl_inv = d.lead().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        unsigned shift = static_cast<unsigned>(r.degree() - d.degree());
        Quad f = r.lead() * dl_inv;
        Poly t = Poly::monomial(f, shift);
        q = q + t;
        r = r - t * d;
    }
    return {q, r};
}

Poly Poly::derivative() const {
    if (degree() <= 0) return Poly();
    std::vector<Quad> c(coeffs_.size() - 1, Quad(0));
    for (size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * Quad(rat(static_cast<long>(i)));
    return Poly(std::move(c));
}

Quad Poly::eval(const Quad& x) const {
    Quad acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * lead().inverse();
}

Poly Poly::pow(unsigned e) const {
    Poly p(Quad(1));
    for (unsigned i = 0; i < e; ++i) p = p * *this;
    return p;
}

int Poly::cmp_key(const Poly& o) const {
    if (degree() != o.degree()) return degree() < o.degree() ? -1 : 1;
    for (int i = degree(); i >= 0; --i) {
        int c = coeff(static_cast<unsigned>(i)).cmp_key(o.coeff(static_cast<unsigned>(i)));
        if (c != 0) return c;
    }
    return 0;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Quad c = coeff(static_cast<unsigned>(i));
        if (c.is_zero()) continue;
        bool neg = false;
        // Pull an overall sign out of purely rational or purely sqrt2
        // coefficients so the printed form reads naturally.
        if ((c.b() == 0 && c.a() < 0) || (c.a() == 0 && c.b() < 0)) {
            neg = true;
            c = -c;
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool unit_coeff = (c == Quad(1)) && i > 0;
        std::string cs = c.str();
        bool composite = cs.find(' ') != std::string::npos;
        if (!unit_coeff) {
            if (composite && i > 0)
                os << "(" << cs << ")";
            else
                os << cs;
            if (i > 0) os << " ";
        }
        if (i > 1)
            os << "x^" << i;
        else if (i == 1)
            os << "x";
    }
    return os.str();
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly squarefree_part(const Poly& p) {
    if (p.degree() <= 0) return p.monic();
    Poly g = poly_gcd(p, p.derivative());
    return p.divmod(g).first.monic();
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(Quad(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    Quad l = den_.lead().inverse();
    num_ = num_ * l;
    den_ = den_ * l;
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

Quad RatFunc::eval(const Quad& x) const {
    Quad d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("RatFunc: pole at evaluation point");
    return num_.eval(x) / d;
}

int RatFunc::cmp_key(const RatFunc& o) const {
    int c = num_.cmp_key(o.num_);
    if (c != 0) return c;
    return den_.cmp_key(o.den_);
}

std::string RatFunc::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace voa
