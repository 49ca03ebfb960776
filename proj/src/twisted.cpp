#include "voa/twisted.hpp"

#include <mutex>
#include <vector>

#include "expand.hpp"

namespace voa {

namespace {

constexpr unsigned kDeltaOrder = 24;  // total degree of the cached table

// Truncated bivariate power series over Q, total degree < kDeltaOrder.
struct Series2 {
    // c[m][n] is the x^m y^n coefficient, m + n < kDeltaOrder.
    std::vector<std::vector<Rational>> c;

    Series2() : c(kDeltaOrder) {
        for (unsigned m = 0; m < kDeltaOrder; ++m) c[m].assign(kDeltaOrder - m, Rational(0));
    }

    static Series2 zero() { return Series2(); }

    Series2 operator+(const Series2& o) const {
        Series2 r;
        for (unsigned m = 0; m < kDeltaOrder; ++m)
            for (unsigned n = 0; n + m < kDeltaOrder; ++n) r.c[m][n] = c[m][n] + o.c[m][n];
        return r;
    }

    Series2 operator*(const Series2& o) const {
        Series2 r;
        for (unsigned m1 = 0; m1 < kDeltaOrder; ++m1)
            for (unsigned n1 = 0; n1 + m1 < kDeltaOrder; ++n1) {
                if (c[m1][n1] == 0) continue;
                for (unsigned m2 = 0; m1 + m2 < kDeltaOrder; ++m2)
                    for (unsigned n2 = 0; m1 + m2 + n1 + n2 < kDeltaOrder; ++n2) {
                        if (o.c[m2][n2] == 0) continue;
                        r.c[m1 + m2][n1 + n2] += c[m1][n1] * o.c[m2][n2];
                    }
            }
        return r;
    }

    Series2 scaled(const Rational& k) const {
        Series2 r;
        for (unsigned m = 0; m < kDeltaOrder; ++m)
            for (unsigned n = 0; n + m < kDeltaOrder; ++n) r.c[m][n] = c[m][n] * k;
        return r;
    }
};

const Series2& delta_table() {
    static Series2 table;
    static std::once_flag built;
    std::call_once(built, [] {
        // u = (sqrt(1+x) + sqrt(1+y))/2 - 1, then -log(1+u).
        Series2 u;
        for (unsigned k = 1; k < kDeltaOrder; ++k) {
            Rational bk = binom(rat(1, 2), k) / 2;
            u.c[k][0] += bk;
            u.c[0][k] += bk;
        }
        Series2 acc;      // -log(1+u) accumulator
        Series2 up = u;   // u^j
        for (unsigned j = 1; j < kDeltaOrder; ++j) {
            Rational coef = rat(j % 2 == 0 ? 1 : -1, static_cast<long>(j));
            acc = acc + up.scaled(coef);
            if (j + 1 < kDeltaOrder) up = up * u;
        }
        table = acc;
    });
    return table;
}

void require_twistable(const FockState& v) {
    if (v.sector != Sector::untwisted)
        throw std::invalid_argument("delta correction applies to untwisted states");
    for (const auto& [m, c] : v.lc.terms())
        if (!m.momentum.is_zero())
            throw std::invalid_argument("delta correction requires momentum 0, got " +
                                        m.momentum.str());
}

}  // namespace

Rational delta_coefficient(unsigned m, unsigned n) {
    if (m + n >= kDeltaOrder) throw std::domain_error("delta_coefficient: order too large");
    return delta_table().c[m][n];
}

std::map<long, FockState> delta_apply(const FockState& v, long max_zpower) {
    require_twistable(v);
    std::map<long, FockState> out;
    // exp(T) v with T = sum_{m,n>=1} c_{mn} a(m)a(n) z^{-m-n}; each
    // application strictly lowers depth, so the series terminates. The
    // m = 0 or n = 0 terms act by a(0) and vanish at momentum 0.
    std::map<long, FockState> layer;  // T^j v / j!, keyed by z-power drop
    layer[0] = v;
    auto ensure = [&](long p) -> FockState& {
        auto it = out.find(p);
        if (it == out.end()) {
            FockState z;
            z.sector = Sector::untwisted;
            it = out.emplace(p, z).first;
        }
        return it->second;
    };
    for (long j = 0; !layer.empty(); ++j) {
        for (const auto& [p, s] : layer) {
            if (p <= max_zpower) ensure(p) = ensure(p) + s;
        }
        // next layer: apply T once more and divide by (j+1)
        std::map<long, FockState> next;
        for (const auto& [p, s] : layer) {
            long depth_left = 0;
            for (const auto& [m, c] : s.lc.terms())
                depth_left = std::max(depth_left, m.depth().as_integer());
            for (long a = 1; a + 1 <= depth_left; ++a) {
                for (long b = 1; a + b <= depth_left; ++b) {
                    Rational cab = delta_coefficient(static_cast<unsigned>(a),
                                                     static_cast<unsigned>(b));
                    if (cab == 0) continue;
                    FockState t = apply_heis_mode(HalfInt(a), apply_heis_mode(HalfInt(b), s));
                    if (t.is_zero()) continue;
                    t = Scalar(cab / (j + 1)) * t;
                    auto it = next.find(p + a + b);
                    if (it == next.end()) {
                        next.emplace(p + a + b, t);
                    } else {
                        it->second = it->second + t;
                    }
                }
            }
        }
        for (auto it = next.begin(); it != next.end();) {
            if (it->second.is_zero())
                it = next.erase(it);
            else
                ++it;
        }
        layer = std::move(next);
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.is_zero())
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

FockState twisted_mode(const FockState& u, ModeIndex n, const FockState& v) {
    require_twistable(u);
    if (v.sector != Sector::twisted)
        throw std::invalid_argument("twisted_mode: module state must be twisted");
    HalfInt j = n.formal_for_weight(HalfInt(fock_weight(u)));

    FockState out;
    out.sector = Sector::twisted;
    // deepest contribution bounded by the operator depth
    long max_drop = 0;
    for (const auto& [um, uc] : u.lc.terms())
        max_drop = std::max(max_drop, um.depth().as_integer());
    auto corrected = delta_apply(u, max_drop);

    for (const auto& [p, up] : corrected) {
        for (const auto& [wm, wc] : up.lc.terms()) {
            std::vector<long> factors;
            factors.reserve(wm.parts.size());
            for (auto q : wm.parts) factors.push_back(q.as_integer());
            for (const auto& [vm, vc] : v.lc.terms()) {
                // z-exponents: -p from the correction, -(s_i + m_i) per
                // factor; the coefficient of z^{-j-1} needs mode sum
                //   sum s_i = j + 1 - p - sum m_i.
                HalfInt need = j + HalfInt(1 - p) - wm.depth();
                detail::NormalOrderExpansion ex{factors, 1, 1, false, vm.depth(), &out.lc, {}};
                ex.run(0, vm, wc * vc, need);
            }
        }
    }
    return out;
}

FockState twisted_virasoro(long k, const FockState& v) {
    return twisted_mode(fock_omega(), ModeIndex::weighted(k), v);
}

}  // namespace voa
