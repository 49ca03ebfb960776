#include "voa/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace voa {

std::string rat_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string Quad::str() const {
    if (b_ == 0) return rat_str(a_);
    std::string s2part = rat_str(b_) + " s2";
    if (a_ == 0) return s2part;
    if (b_ > 0) return rat_str(a_) + " + " + s2part;
    return rat_str(a_) + " - " + rat_str(-b_) + " s2";
}

bool Scalar::is_zero() const {
    switch (kind()) {
        case Kind::rational: return std::get<Rational>(v_) == 0;
        case Kind::quad: return std::get<Quad>(v_).is_zero();
        case Kind::ratfunc: return std::get<RatFunc>(v_).is_zero();
    }
    return false;
}

const Rational& Scalar::as_rational() const {
    if (kind() != Kind::rational) throw std::domain_error("Scalar: not rational: " + str());
    return std::get<Rational>(v_);
}

Quad Scalar::as_quad() const {
    switch (kind()) {
        case Kind::rational: return Quad(std::get<Rational>(v_));
        case Kind::quad: return std::get<Quad>(v_);
        case Kind::ratfunc: break;
    }
    const RatFunc& f = std::get<RatFunc>(v_);
    if (f.is_constant()) return f.constant();
    throw std::domain_error("Scalar: not constant: " + str());
}

RatFunc Scalar::as_ratfunc() const {
    switch (kind()) {
        case Kind::rational: return RatFunc(Poly(Quad(std::get<Rational>(v_))));
        case Kind::quad: return RatFunc(Poly(std::get<Quad>(v_)));
        case Kind::ratfunc: return std::get<RatFunc>(v_);
    }
    throw std::logic_error("unreachable");
}

void Scalar::narrow() {
    if (kind() == Kind::ratfunc) {
        const RatFunc& f = std::get<RatFunc>(v_);
        if (f.is_constant()) {
            Quad q = f.constant();
            v_ = std::move(q);
        }
    }
    if (kind() == Kind::quad) {
        const Quad& q = std::get<Quad>(v_);
        if (q.is_rational()) {
            Rational r = q.a();
            v_ = std::move(r);
        }
    }
}

Scalar Scalar::operator-() const {
    switch (kind()) {
        case Kind::rational: return Scalar(Rational(-std::get<Rational>(v_)));
        case Kind::quad: return Scalar(-std::get<Quad>(v_));
        case Kind::ratfunc: return Scalar(-std::get<RatFunc>(v_));
    }
    throw std::logic_error("unreachable");
}

namespace {
Scalar::Kind widest(Scalar::Kind a, Scalar::Kind b) { return a > b ? a : b; }
}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
    switch (widest(kind(), o.kind())) {
        case Kind::rational: return Scalar(Rational(as_rational() + o.as_rational()));
        case Kind::quad: return Scalar(as_quad() + o.as_quad());
        case Kind::ratfunc: return Scalar(as_ratfunc() + o.as_ratfunc());
    }
    throw std::logic_error("unreachable");
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    switch (widest(kind(), o.kind())) {
        case Kind::rational: return Scalar(Rational(as_rational() * o.as_rational()));
        case Kind::quad: return Scalar(as_quad() * o.as_quad());
        case Kind::ratfunc: return Scalar(as_ratfunc() * o.as_ratfunc());
    }
    throw std::logic_error("unreachable");
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: division by zero");
    switch (kind()) {
        case Kind::rational: return Scalar(Rational(1 / std::get<Rational>(v_)));
        case Kind::quad: return Scalar(std::get<Quad>(v_).inverse());
        case Kind::ratfunc: return Scalar(std::get<RatFunc>(v_).inverse());
    }
    throw std::logic_error("unreachable");
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(unsigned e) const {
    Scalar p(1);
    for (unsigned i = 0; i < e; ++i) p *= *this;
    return p;
}

Scalar Scalar::eval_momentum(const Quad& x) const {
    if (kind() != Kind::ratfunc) return *this;
    return Scalar(std::get<RatFunc>(v_).eval(x));
}

bool Scalar::operator==(const Scalar& o) const {
    if (kind() != o.kind()) return false;  // narrow form is canonical
    switch (kind()) {
        case Kind::rational: return std::get<Rational>(v_) == std::get<Rational>(o.v_);
        case Kind::quad: return std::get<Quad>(v_) == std::get<Quad>(o.v_);
        case Kind::ratfunc: return std::get<RatFunc>(v_) == std::get<RatFunc>(o.v_);
    }
    return false;
}

int Scalar::cmp_key(const Scalar& o) const {
    if (kind() != o.kind()) return kind() < o.kind() ? -1 : 1;
    switch (kind()) {
        case Kind::rational: return cmp(std::get<Rational>(v_), std::get<Rational>(o.v_));
        case Kind::quad: return std::get<Quad>(v_).cmp_key(std::get<Quad>(o.v_));
        case Kind::ratfunc: return std::get<RatFunc>(v_).cmp_key(std::get<RatFunc>(o.v_));
    }
    return 0;
}

std::string Scalar::str() const {
    switch (kind()) {
        case Kind::rational: return rat_str(std::get<Rational>(v_));
        case Kind::quad: return std::get<Quad>(v_).str();
        case Kind::ratfunc: return std::get<RatFunc>(v_).str();
    }
    throw std::logic_error("unreachable");
}

}  // namespace voa
