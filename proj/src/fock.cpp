#include "voa/fock.hpp"

#include "expand.hpp"

namespace voa {

namespace {

void require_acting(const FockState& u) {
    if (u.sector != Sector::untwisted)
        throw std::invalid_argument("operator state must be untwisted");
    for (const auto& [m, c] : u.lc.terms())
        if (!m.momentum.is_zero())
            throw std::invalid_argument(
                "operator state not in the acting algebra: momentum " + m.momentum.str() +
                " != 0");
}

}  // namespace

long fock_weight(const FockState& u) {
    require_acting(u);
    return Rational(fock_depth(u)).get_num().get_si();
}

FockState apply_heis_mode(HalfInt k, const FockState& v) {
    FockState r;
    r.sector = v.sector;
    for (const auto& [m, c] : v.lc.terms()) {
        if (k.twice() < 0) {
            r.lc.add(detail::heis_prepend(m, {-k}), c);
        } else if (k.twice() == 0) {
            r.lc.add(m, c * m.momentum);
        } else {
            if (auto hit = detail::heis_annihilate(m, k, 1)) r.lc.add(hit->first, c * hit->second);
        }
    }
    return r;
}

FockState fock_mode(const FockState& u, long n_formal, const FockState& v) {
    require_acting(u);
    if (v.sector != Sector::untwisted)
        throw std::invalid_argument("fock_mode: twisted module states take the twisted action");
    FockState out;
    out.sector = v.sector;
    for (const auto& [um, uc] : u.lc.terms()) {
        std::vector<long> factors;
        factors.reserve(um.parts.size());
        for (auto p : um.parts) factors.push_back(p.as_integer());
        for (const auto& [vm, vc] : v.lc.terms()) {
            // coefficient of z^{-n-1}: the factor modes sum to n + 1 - sum m_i
            HalfInt need = HalfInt(n_formal + 1) - um.depth();
            detail::NormalOrderExpansion ex{factors, 0, 1, true, vm.depth(), &out.lc, {}};
            ex.run(0, vm, uc * vc, need);
        }
    }
    return out;
}

FockState fock_mode(const FockState& u, ModeIndex n, const FockState& v) {
    return fock_mode(u, n.formal_for_weight(HalfInt(fock_weight(u))).as_integer(), v);
}

namespace {

FockState mode_on_mono_recursive(const FockMono& um, long n, const FockState& v) {
    FockState out;
    out.sector = v.sector;
    if (um.parts.empty()) {
        if (n == -1) out = v;
        return out;
    }
    long m = um.parts.front().as_integer();
    FockMono rest_mono = um;
    rest_mono.parts.erase(rest_mono.parts.begin());
    long wrest = rest_mono.depth().as_integer();

    long vd = 0;
    for (const auto& [vm, vc] : v.lc.terms()) vd = std::max(vd, vm.depth().as_integer());

    for (long i = 0; n + i <= wrest + vd - 1; ++i) {
        FockState inner = mode_on_mono_recursive(rest_mono, n + i, v);
        if (inner.is_zero()) continue;
        Scalar c = Scalar((i % 2 == 0 ? 1 : -1) * binom(rat(-m), static_cast<unsigned>(i)));
        out = out + c * apply_heis_mode(HalfInt(-m - i), inner);
    }
    for (long i = 0; i <= vd; ++i) {
        FockState av = apply_heis_mode(HalfInt(i), v);
        if (av.is_zero()) continue;
        FockState inner = mode_on_mono_recursive(rest_mono, n - m - i, av);
        if (inner.is_zero()) continue;
        Scalar c =
            Scalar(((m + i) % 2 == 0 ? -1 : 1) * binom(rat(-m), static_cast<unsigned>(i)));
        out = out + c * inner;
    }
    return out;
}

}  // namespace

FockState fock_mode_recursive(const FockState& u, long n_formal, const FockState& v) {
    require_acting(u);
    if (v.sector != Sector::untwisted)
        throw std::invalid_argument("fock_mode_recursive: module state must be untwisted");
    FockState out;
    out.sector = v.sector;
    for (const auto& [um, uc] : u.lc.terms())
        out = out + uc * mode_on_mono_recursive(um, n_formal, v);
    return out;
}

FockState fock_mode_recursive(const FockState& u, ModeIndex n, const FockState& v) {
    return fock_mode_recursive(u, n.formal_for_weight(HalfInt(fock_weight(u))).as_integer(), v);
}

FockState fock_omega() { return Scalar(rat(1, 2)) * fock_monomial_int({1, 1}); }

FockState fock_J() {
    return fock_monomial_int({1, 1, 1, 1}) + Scalar(-2) * fock_monomial_int({3, 1}) +
           Scalar(rat(3, 2)) * fock_monomial_int({2, 2});
}

FockState fock_virasoro(long k, const FockState& v) { return fock_mode(fock_omega(), k + 1, v); }

}  // namespace voa
