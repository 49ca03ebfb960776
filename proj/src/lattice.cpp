#include "voa/lattice.hpp"

#include <algorithm>
#include <map>

#include "expand.hpp"
#include "voa/linalg.hpp"
#include "voa/partitions.hpp"

namespace voa {

namespace {

long integer_momentum(const LatticeMono& m) {
    if (!m.r.is_integer())
        throw std::invalid_argument(
            "lattice operator has half-odd momentum " + m.r.str() +
            ": module vectors do not act");
    return m.r.as_integer();
}

// E^+ layer: choose a sub-multiset S of the parts to annihilate. Each part
// value k taken e_k times contributes (-2 beta)^{e_k} binom(mult_k, e_k)
// and a z-drop of k e_k.
struct EplusChoice {
    LatticeMono mono;  // remaining parts
    Rational coeff;
    long drop;
};

std::vector<EplusChoice> eplus_choices(const LatticeMono& vm, long beta) {
    std::vector<std::pair<long, long>> runs;  // (value, multiplicity)
    for (long p : vm.parts) {
        if (!runs.empty() && runs.back().first == p)
            ++runs.back().second;
        else
            runs.emplace_back(p, 1);
    }
    std::vector<EplusChoice> out;
    LatticeMono base{vm.r, {}};
    std::function<void(size_t, LatticeMono, Rational, long)> rec =
        [&](size_t idx, LatticeMono cur, Rational c, long drop) {
            if (idx == runs.size()) {
                std::sort(cur.parts.begin(), cur.parts.end(), std::greater<long>());
                out.push_back({std::move(cur), c, drop});
                return;
            }
            auto [val, mult] = runs[idx];
            Rational pw = 1;
            for (long e = 0; e <= mult; ++e) {
                LatticeMono next = cur;
                for (long t = 0; t < mult - e; ++t) next.parts.push_back(val);
                rec(idx + 1, std::move(next), c * pw * binom(rat(mult), static_cast<unsigned>(e)),
                    drop + val * e);
                pw *= rat(-2 * beta);
            }
        };
    rec(0, base, Rational(1), 0);
    return out;
}

}  // namespace

Rational lattice_op_weight(const LatticeState& u) { return lattice_weight(u); }

LatticeState apply_gamma_mode(HalfInt k, const LatticeState& v) {
    LatticeState r;
    for (const auto& [m, c] : v.lc.terms()) {
        if (k.twice() < 0) {
            LatticeMono nm = m;
            nm.parts.push_back((-k).as_integer());
            std::sort(nm.parts.begin(), nm.parts.end(), std::greater<long>());
            r.lc.add(nm, c);
        } else if (k.twice() == 0) {
            r.lc.add(m, c * Scalar(rat(m.r.twice())));  // (gamma, r gamma) = 2r
        } else {
            long kk = k.as_integer();
            long mult = static_cast<long>(std::count(m.parts.begin(), m.parts.end(), kk));
            if (mult == 0) continue;
            LatticeMono nm = m;
            nm.parts.erase(std::find(nm.parts.begin(), nm.parts.end(), kk));
            r.lc.add(nm, c * Scalar(rat(2 * kk * mult)));
        }
    }
    return r;
}

LatticeState lattice_mode(const LatticeState& u, long n, const LatticeState& v) {
    LatticeState out;
    for (const auto& [um, uc] : u.lc.terms()) {
        long beta = integer_momentum(um);
        std::vector<long> factors(um.parts.begin(), um.parts.end());
        Rational wu = um.weight();
        for (const auto& [vm, vc] : v.lc.terms()) {
            long shift = beta * vm.r.twice();  // z^{(beta gamma, r gamma)} = z^{2 beta r}
            HalfInt res_r = HalfInt(beta) + vm.r;
            // depth of the result by weight conservation
            Rational dr = wu + vm.weight() - (n + 1) -
                          rat(res_r.twice() * res_r.twice(), 4);
            if (dr < 0 || dr.get_den() != 1) continue;
            long result_depth = dr.get_num().get_si();

            for (const auto& ch : eplus_choices(vm, beta)) {
                // creation total from the exponential raising layer
                for (long c_total = 0; c_total <= result_depth; ++c_total) {
                    // field-factor mode sum forced by the z-power balance
                    long field_sum = shift + c_total - ch.drop + n + 1;
                    HalfInt need = HalfInt(field_sum) - HalfInt(static_cast<long>(
                                       std::accumulate(factors.begin(), factors.end(), 0L)));
                    // expand fields on the reduced monomial
                    LinComb<FockMono> tmp;
                    FockMono fm;
                    fm.momentum = Scalar(rat(vm.r.twice()));  // gamma(0) eigenvalue 2r
                    for (long p : ch.mono.parts) fm.parts.push_back(HalfInt(p));
                    detail::NormalOrderExpansion ex{factors, 0, 2, true, fm.depth(), &tmp, {}};
                    ex.run(0, fm, Scalar(ch.coeff) * uc * vc, need);
                    if (tmp.is_zero()) continue;
                    // distribute the raising layer over partitions of c_total
                    for_each_partition(c_total, c_total, [&](const std::vector<long>& part) {
                        Rational pc = 1;
                        long run_val = 0, run_len = 0;
                        for (size_t idx = 0; idx <= part.size(); ++idx) {
                            long val = idx < part.size() ? part[idx] : 0;
                            if (val == run_val) {
                                ++run_len;
                                continue;
                            }
                            if (run_val != 0)
                                pc *= pow_rat(rat(beta, run_val), static_cast<unsigned>(run_len)) /
                                      Rational(factorial(static_cast<unsigned>(run_len)));
                            run_val = val;
                            run_len = 1;
                        }
                        if (pc == 0) return;
                        for (const auto& [tm, tc] : tmp.terms()) {
                            LatticeMono rm;
                            rm.r = res_r;
                            for (auto hp : tm.parts) rm.parts.push_back(hp.as_integer());
                            rm.parts.insert(rm.parts.end(), part.begin(), part.end());
                            std::sort(rm.parts.begin(), rm.parts.end(), std::greater<long>());
                            out.lc.add(rm, Scalar(pc) * tc);
                        }
                    });
                }
            }
        }
    }
    return out;
}

LatticeState lattice_mode(const LatticeState& u, ModeIndex n, const LatticeState& v) {
    Rational w = lattice_op_weight(u);
    if (w.get_den() != 1)
        throw std::invalid_argument("lattice_mode: weighted index on non-integer weight");
    HalfInt f = n.formal_for_weight(HalfInt(w.get_num().get_si()));
    return lattice_mode(u, f.as_integer(), v);
}

namespace {

// (e^{beta gamma})_(n) v for a single module monomial, by commuting the
// module's gamma-parts through the exponential:
//   (e^b)_(n) gamma(-m) w = gamma(-m) (e^b)_(n) w - 2 beta (e^b)_{(n-m)} w,
// with pure exponentials as the base case.
LatticeState exp_mode_on_mono(long beta, long n, const LatticeMono& vm) {
    LatticeState out;
    if (!vm.parts.empty()) {
        long m0 = vm.parts.front();
        LatticeMono rest = vm;
        rest.parts.erase(rest.parts.begin());
        LatticeState a = exp_mode_on_mono(beta, n, rest);
        out = out + apply_gamma_mode(HalfInt(-m0), a);
        LatticeState b = exp_mode_on_mono(beta, n - m0, rest);
        out = out + Scalar(rat(-2 * beta)) * b;
        return out;
    }
    // base: creation layer only; z-power bookkeeping picks the partition sum
    long shift = beta * vm.r.twice();
    long c_total = -n - 1 - shift;
    if (c_total < 0) return out;
    HalfInt res_r = HalfInt(beta) + vm.r;
    for_each_partition(c_total, c_total, [&](const std::vector<long>& part) {
        Rational pc = 1;
        long run_val = 0, run_len = 0;
        for (size_t idx = 0; idx <= part.size(); ++idx) {
            long val = idx < part.size() ? part[idx] : 0;
            if (val == run_val) {
                ++run_len;
                continue;
            }
            if (run_val != 0)
                pc *= pow_rat(rat(beta, run_val), static_cast<unsigned>(run_len)) /
                      Rational(factorial(static_cast<unsigned>(run_len)));
            run_val = val;
            run_len = 1;
        }
        LatticeMono rm;
        rm.r = res_r;
        rm.parts = part;
        out.lc.add(rm, Scalar(pc));
    });
    return out;
}

LatticeState lattice_mode_rec_mono(const LatticeMono& um, long n, const LatticeState& v);

LatticeState lattice_rec_state(const LatticeState& u, long n, const LatticeState& v) {
    LatticeState out;
    for (const auto& [um, uc] : u.lc.terms()) out = out + uc * lattice_mode_rec_mono(um, n, v);
    return out;
}

LatticeState lattice_mode_rec_mono(const LatticeMono& um, long n, const LatticeState& v) {
    LatticeState out;
    if (um.parts.empty()) {
        long beta = integer_momentum(um);
        for (const auto& [vm, vc] : v.lc.terms())
            out = out + vc * exp_mode_on_mono(beta, n, vm);
        return out;
    }
    // peel gamma(-m) by the iterate recursion
    long m = um.parts.front();
    LatticeMono rest = um;
    rest.parts.erase(rest.parts.begin());

    Rational wrest = rest.weight();
    long vd = 0;
    Rational wv_max = 0;
    for (const auto& [vm, vc] : v.lc.terms()) {
        vd = std::max(vd, vm.depth());
        wv_max = std::max(wv_max, vm.weight());
    }
    // grading bound: rest_(q) kills everything once the result weight drops
    // below the minimal sector weight; the coarse bound below suffices.
    long qmax = 0;
    {
        Rational bound = wrest + wv_max;  // result weight = wrest + wv - q - 1 >= 0 needed
        qmax = bound.get_num().get_si() / bound.get_den().get_si() + 2;
    }
    for (long i = 0; n + i <= qmax; ++i) {
        LatticeState inner = lattice_mode_rec_mono(rest, n + i, v);
        if (inner.is_zero()) continue;
        Scalar c = Scalar((i % 2 == 0 ? 1 : -1) * binom(rat(-m), static_cast<unsigned>(i)));
        out = out + c * apply_gamma_mode(HalfInt(-m - i), inner);
    }
    for (long i = 0; i <= vd; ++i) {
        LatticeState av = apply_gamma_mode(HalfInt(i), v);
        if (av.is_zero()) continue;
        LatticeState inner = lattice_mode_rec_mono(rest, n - m - i, av);
        if (inner.is_zero()) continue;
        Scalar c =
            Scalar(((m + i) % 2 == 0 ? -1 : 1) * binom(rat(-m), static_cast<unsigned>(i)));
        out = out + c * inner;
    }
    return out;
}

}  // namespace

LatticeState lattice_mode_recursive(const LatticeState& u, long n, const LatticeState& v) {
    return lattice_rec_state(u, n, v);
}

LatticeState sl2_E(const LatticeState& v) { return lattice_mode(lattice_exponential(HalfInt(1)), 0, v); }
LatticeState sl2_F(const LatticeState& v) { return lattice_mode(lattice_exponential(HalfInt(-1)), 0, v); }
LatticeState sl2_H(const LatticeState& v) { return apply_gamma_mode(HalfInt(0), v); }

LatticeState fock_to_lattice(const FockState& u) {
    if (u.sector != Sector::untwisted)
        throw std::invalid_argument("fock_to_lattice: untwisted states only");
    Scalar half_s2 = Scalar::sqrt2() * Scalar(rat(1, 2));  // 1/sqrt2
    LatticeState out;
    for (const auto& [m, c] : u.lc.terms()) {
        if (!m.momentum.is_zero())
            throw std::invalid_argument("fock_to_lattice: momentum-0 operators only");
        LatticeMono lm;
        lm.r = HalfInt(0);
        for (auto p : m.parts) lm.parts.push_back(p.as_integer());
        out.lc.add(lm, c * half_s2.pow(static_cast<unsigned>(m.length())));
    }
    return out;
}

FockState lattice_to_fock(const LatticeState& s) {
    FockState out;
    out.sector = Sector::untwisted;
    for (const auto& [m, c] : s.lc.terms()) {
        FockMono fm;
        fm.momentum = Scalar(Quad(Rational(0), m.r.as_rational()));  // r*sqrt2
        for (long p : m.parts) fm.parts.push_back(HalfInt(p));
        out.lc.add(fm, c * Scalar::sqrt2().pow(static_cast<unsigned>(m.length())));
    }
    return out;
}

LatticeState lattice_omega() {
    return Scalar(rat(1, 4)) * lattice_monomial(HalfInt(0), {1, 1});
}

LatticeState lattice_virasoro(long k, const LatticeState& v) {
    return lattice_mode(lattice_omega(), k + 1, v);
}

LatticeState momentum_component(const LatticeState& s, HalfInt r) {
    LatticeState out;
    for (const auto& [m, c] : s.lc.terms())
        if (m.r == r) out.lc.add(m, c);
    return out;
}

std::vector<LatticeMono> sector_basis(HalfInt r, long depth) {
    std::vector<LatticeMono> out;
    for_each_partition(depth, depth, [&](const std::vector<long>& p) {
        out.push_back(LatticeMono{r, p});
    });
    return out;
}

LatticeState build_hwv(long m, long k) {
    if (m < 0 || k < 0) throw std::invalid_argument("build_hwv: m, k must be >= 0");
    LatticeState v = lattice_exponential(HalfInt::from_twice(m + 2 * k));
    for (long i = 0; i < k; ++i) v = sl2_F(v);
    return v;
}

HwReport hw_check(const LatticeState& v) {
    if (v.is_zero()) throw std::domain_error("hw_check: zero state");
    HwReport rep;
    rep.weight = lattice_weight(v);  // throws when not homogeneous
    rep.is_hw = lattice_virasoro(1, v).is_zero() && lattice_virasoro(2, v).is_zero();
    LatticeState l0 = lattice_virasoro(0, v);
    if (!(l0 == Scalar(rep.weight) * v))
        throw std::logic_error("hw_check: L(0) does not act by the weight grading");
    return rep;
}

// ---------------------------------------------------------------------------
// Reduction lemma verification
// ---------------------------------------------------------------------------

namespace {

// coordinates of a state in the momentum-r depth-d sector basis
ScalarRow coords(const LatticeState& s, const std::vector<LatticeMono>& basis) {
    ScalarRow row;
    row.reserve(basis.size());
    for (const auto& b : basis) row.push_back(s.lc.coeff(b));
    return row;
}

Scalar top_coefficient(const LatticeState& s, HalfInt r) {
    // coefficient of the bare exponential e^{r gamma}
    return s.lc.coeff(LatticeMono{r, {}});
}

bool is_multiple_of_exponential(const LatticeState& s, HalfInt r) {
    if (s.is_zero()) return false;
    return s.lc.size() == 1 && !top_coefficient(s, r).is_zero();
}

}  // namespace

KeyLemmaReport verify_keylemma(long m, long k) {
    KeyLemmaReport rep;
    rep.m = m;
    rep.k = k;

    const long n_formal = -2 * m - 4 * k - 1;
    LatticeState vk = build_hwv(m, k);
    LatticeState J = fock_to_lattice(fock_J());

    // convention probe: which reading of the mode index reaches the level
    // of the next-but-one highest weight vector
    Rational target_wt = rat((m + 2 * k + 4) * (m + 2 * k + 4), 4);
    {
        LatticeState formal_img = lattice_mode(J, n_formal, vk);
        rep.formal_reaches_level =
            !formal_img.is_zero() && lattice_weight(formal_img) == target_wt;
        LatticeState weighted_img = lattice_mode(J, ModeIndex::weighted(HalfInt(n_formal)), vk);
        rep.weighted_reaches_level =
            !weighted_img.is_zero() && lattice_weight(weighted_img) == target_wt;
    }

    LatticeState u = lattice_mode(J, n_formal, vk);

    // (ii) constants E^i J_(n) E^j v over the top exponential
    HalfInt top_r = HalfInt::from_twice(m + 2 * (k + 2));
    rep.pattern_ok = true;
    for (long i = k + 2; i >= 2; --i) {
        long j = k + 2 - i;
        LatticeState w = vk;
        for (long t = 0; t < j; ++t) w = sl2_E(w);
        w = lattice_mode(J, n_formal, w);
        for (long t = 0; t < i; ++t) w = sl2_E(w);
        ReductionConstant rc;
        rc.i = i;
        rc.j = j;
        if (!w.is_zero() && !is_multiple_of_exponential(w, top_r)) {
            rep.pattern_ok = false;
            rc.value = Scalar(0);
        } else {
            rc.value = top_coefficient(w, top_r);
        }
        rep.constants.push_back(rc);
        if (i == 2) rep.sigma = rc.value;
    }
    for (const auto& rc : rep.constants) {
        Scalar expect = Scalar(rat(rc.i * (rc.i - 1), 2)) * rep.sigma;
        if (!(rc.value == expect)) rep.pattern_ok = false;
    }
    if (rep.sigma.is_zero()) rep.pattern_ok = false;

    // (i) top route: E^{k+2} u is a nonzero multiple of the top exponential
    LatticeState etop = u;
    for (long t = 0; t < k + 2; ++t) etop = sl2_E(etop);
    rep.top_route_nonzero = is_multiple_of_exponential(etop, top_r);

    // (iii) C by projection onto the highest-weight component: reduce u
    // against the span of Virasoro descendants of v_m^{(i)}, i <= k+1, at
    // the target depth, then compare the residue with that of v_m^{(k+2)}.
    long depth = (k + 2) * (m + k + 2);
    HalfInt sector_r = HalfInt::from_twice(m);
    auto basis = sector_basis(sector_r, depth);
    rep.projection_dim = static_cast<long>(basis.size());

    Echelon ech(basis.size());
    long rows = 0;
    for (long i = 0; i <= k + 1; ++i) {
        LatticeState vi = build_hwv(m, i);
        long di = i * (m + i);
        for_each_partition(depth - di, depth - di, [&](const std::vector<long>& lam) {
            LatticeState w = vi;
            for (auto it = lam.rbegin(); it != lam.rend(); ++it)
                w = lattice_virasoro(-*it, w);
            if (w.is_zero()) return;
            ech.insert(coords(w, basis));
            ++rows;
        });
    }
    rep.descendant_rows = rows;

    LatticeState vk2 = build_hwv(m, k + 2);
    ScalarRow res_u = ech.reduce(coords(u, basis));
    ScalarRow res_v = ech.reduce(coords(vk2, basis));
    // res_v must be nonzero (the new highest-weight vector is independent);
    // then res_u = C * res_v determines C.
    size_t piv = basis.size();
    for (size_t i = 0; i < basis.size(); ++i)
        if (!res_v[i].is_zero()) {
            piv = i;
            break;
        }
    if (piv == basis.size()) throw std::logic_error("verify_keylemma: degenerate projection");
    rep.C = res_u[piv] / res_v[piv];
    bool proportional = true;
    for (size_t i = 0; i < basis.size(); ++i)
        if (!(res_u[i] == rep.C * res_v[i])) proportional = false;
    rep.C_nonzero = proportional && !rep.C.is_zero();

    // cross-route: E^{k+2} kills the lower components, so
    // E^{k+2} u = C * E^{k+2} v_m^{(k+2)} on the top exponential.
    LatticeState evk2 = vk2;
    for (long t = 0; t < k + 2; ++t) evk2 = sl2_E(evk2);
    Scalar denom = top_coefficient(evk2, top_r);
    if (denom.is_zero()) throw std::logic_error("verify_keylemma: top route degenerate");
    rep.C_top_route = top_coefficient(etop, top_r) / denom;
    rep.routes_agree = proportional && (rep.C == rep.C_top_route);
    return rep;
}

SpanningReport spanning_check(long m, long depth_cutoff) {
    SpanningReport rep;
    rep.m = m;
    HalfInt sector_r = HalfInt::from_twice(m);
    LatticeState J = fock_to_lattice(fock_J());

    for (long d = 0; d <= depth_cutoff; ++d) {
        auto basis = sector_basis(sector_r, d);
        Echelon ech(basis.size());
        long vectors = 0;
        auto consider = [&](const LatticeState& w) {
            if (w.is_zero()) return;
            ScalarRow row;
            row.reserve(basis.size());
            for (const auto& b : basis) row.push_back(w.lc.coeff(b));
            ech.insert(std::move(row));
            ++vectors;
        };
        for (long t = 0; t <= 1; ++t) {
            long dt = t * (m + t);
            if (d < dt) continue;
            LatticeState vt = build_hwv(m, t);
            // Shape J ... J L ... L v: Virasoro partition first, then
            // ordered tuples of J-modes. Formal J_(-i) raises depth by i+3.
            for (long lrem = 0; lrem <= d - dt; ++lrem) {
                long jrem = d - dt - lrem;
                // J tuples raising jrem
                std::function<void(long, const LatticeState&)> j_tuples =
                    [&](long rem, const LatticeState& s) {
                        if (rem == 0) {
                            consider(s);
                            return;
                        }
                        for (long i = 1; i + 3 <= rem; ++i)
                            j_tuples(rem - i - 3, lattice_mode(J, -i, s));
                    };
                if (lrem == 0) {
                    j_tuples(jrem, vt);
                } else {
                    for_each_partition(lrem, lrem, [&](const std::vector<long>& lam) {
                        LatticeState w = vt;
                        for (auto it = lam.rbegin(); it != lam.rend(); ++it)
                            w = lattice_virasoro(-*it, w);
                        if (w.is_zero()) return;
                        j_tuples(jrem, w);
                    });
                }
            }
        }
        rep.depths.push_back(SpanningDepth{d, static_cast<long>(ech.rank()),
                                           partition_count(d), vectors});
    }
    return rep;
}

}  // namespace voa
