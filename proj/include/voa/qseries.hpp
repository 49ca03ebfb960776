#pragma once

#include <string>
#include <vector>

#include "voa/rational.hpp"

namespace voa {

// Truncated formal series in q with a rational exponent offset: coefficient
// j sits at q^{offset + j/den}. den is 1 except for half-integer gradings.
// Arithmetic tracks the first unknown exponent, so identities are compared
// on the exactly-known range.
class QSeries {
public:
    QSeries() = default;
    // zero series known through exponent offset + count/den (exclusive)
    static QSeries zeros(Rational offset, long den, long count);
    // the constant 1 with N known integer steps
    static QSeries one(long N) {
        QSeries s = zeros(Rational(0), 1, N + 1);
        s.c_[0] = 1;
        return s;
    }

    const Rational& offset() const { return offset_; }
    long den() const { return den_; }
    long count() const { return static_cast<long>(c_.size()); }
    const std::vector<Integer>& coeffs() const { return c_; }
    Integer& at(long j) { return c_.at(static_cast<size_t>(j)); }
    const Integer& at(long j) const { return c_.at(static_cast<size_t>(j)); }

    // exponent of index j, and the first unknown exponent
    Rational exponent(long j) const { return offset_ + rat(j, den_); }
    Rational bound() const { return exponent(count()); }

    // coefficient at an arbitrary exponent (must be below the bound)
    Integer coeff_at(const Rational& e) const;

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries scaled(const Integer& k) const;
    // exact division by an integer (throws if any coefficient resists)
    QSeries divided(const Integer& k) const;

    // multiply by (1 - q^e)^{p} for grid exponent e > 0 and any integer p
    // (negative p divides); exact, keeps the knowledge bound.
    QSeries times_one_minus_qe(const Rational& e, long p) const;
    // multiply by (1 + q^e)^{p}
    QSeries times_one_plus_qe(const Rational& e, long p) const;

    // shift the whole series by q^{delta}
    QSeries shifted(const Rational& delta) const;
    // drop leading zero coefficients, raising the offset
    QSeries normalized() const;
    // re-express on a finer grid (den must divide new_den)
    QSeries regrid(long new_den) const;

    // equality of all coefficients on the common known range; writes the
    // compared bound when a pointer is given
    bool agrees(const QSeries& o, Rational* compared_to = nullptr) const;

    std::string str(long max_terms = 12) const;

private:
    Rational offset_;
    long den_ = 1;
    std::vector<Integer> c_;
};

// q^{offset} * prod_{n>=1} (1 - q^n)^{-1}, with N known steps.
QSeries euler_inverse(Rational offset, long N);

}  // namespace voa
