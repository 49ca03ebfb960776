#include "voa/weyl.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "voa/linalg.hpp"
#include "voa/partitions.hpp"

namespace voa {

namespace {

void require_rank(const WeylState& u, const WeylState& v) {
    if (u.rank != v.rank)
        throw std::invalid_argument("space mismatch: Weyl rank " + std::to_string(u.rank) +
                                    " vs Weyl rank " + std::to_string(v.rank));
}

// a_{idx}^{sign}(t), t > 0, on a monomial: contracts one opposite-sign
// generator of the same index at depth t. a^+ against a^- counts +mult,
// a^- against a^+ counts -mult.
std::optional<std::pair<WeylMono, Scalar>> weyl_annihilate(const WeylMono& m, int idx, int sign,
                                                           HalfInt t) {
    long mult = 0;
    size_t pos = 0;
    for (size_t i = 0; i < m.gens.size(); ++i) {
        const auto& g = m.gens[i];
        if (g.idx == idx && g.sign == -sign && g.r == t) {
            if (mult == 0) pos = i;
            ++mult;
        }
    }
    if (mult == 0) return std::nullopt;
    WeylMono r = m;
    r.gens.erase(r.gens.begin() + static_cast<long>(pos));
    return std::make_pair(std::move(r), Scalar(rat(sign > 0 ? mult : -mult)));
}

WeylMono weyl_prepend(const WeylMono& m, const std::vector<WeylGen>& creation) {
    WeylMono r = m;
    r.gens.insert(r.gens.end(), creation.begin(), creation.end());
    r.canonicalize();
    return r;
}

struct WeylExpansion {
    const std::vector<WeylGen>& factors;
    HalfInt vdepth;
    LinComb<WeylMono>* out;
    std::vector<WeylGen> creation;

    void run(size_t i, const WeylMono& cur, const Scalar& coeff, HalfInt sum_needed) {
        if (coeff.is_zero()) return;
        if (i == factors.size()) {
            if (sum_needed.twice() != 0) return;
            out->add(weyl_prepend(cur, creation), coeff);
            return;
        }
        const WeylGen& f = factors[i];
        unsigned dord = static_cast<unsigned>((f.r - HalfInt::from_twice(1)).as_integer());
        long left = static_cast<long>(factors.size() - i - 1);
        HalfInt lo = sum_needed - left * vdepth;

        // creation: modes t < 0 on the half-odd grid
        long start = lo.twice();
        if (((start % 2) + 2) % 2 == 0) ++start;
        for (long tt = start; tt < 0; tt += 2) {
            HalfInt t = HalfInt::from_twice(tt);
            Scalar c = coeff * Scalar(binom(-t.as_rational() - rat(1, 2), dord));
            creation.push_back(WeylGen{f.idx, f.sign, -t});
            run(i + 1, cur, c, sum_needed - t);
            creation.pop_back();
        }
        // annihilation: contractable depths present in the monomial
        std::vector<HalfInt> seen;
        for (const auto& g : cur.gens) {
            if (g.idx != f.idx || g.sign != -f.sign) continue;
            if (std::find(seen.begin(), seen.end(), g.r) != seen.end()) continue;
            seen.push_back(g.r);
            if (g.r < lo) continue;
            auto hit = weyl_annihilate(cur, f.idx, f.sign, g.r);
            Scalar c = coeff * hit->second * Scalar(binom(-g.r.as_rational() - rat(1, 2), dord));
            run(i + 1, hit->first, c, sum_needed - g.r);
        }
    }
};

}  // namespace

WeylState apply_weyl_mode(int idx, int sign, HalfInt r, const WeylState& v) {
    if (!r.is_half_odd()) throw std::invalid_argument("Weyl modes lie in 1/2 + Z");
    WeylState out;
    out.rank = v.rank;
    for (const auto& [m, c] : v.lc.terms()) {
        if (r.twice() < 0) {
            out.lc.add(weyl_prepend(m, {WeylGen{idx, sign, -r}}), c);
        } else {
            if (auto hit = weyl_annihilate(m, idx, sign, r))
                out.lc.add(hit->first, c * hit->second);
        }
    }
    return out;
}

WeylState weyl_mode(const WeylState& u, long n, const WeylState& v) {
    require_rank(u, v);
    WeylState out;
    out.rank = v.rank;
    for (const auto& [um, uc] : u.lc.terms()) {
        for (const auto& [vm, vc] : v.lc.terms()) {
            // each factor sits at z^{-t_i - r_i}; coefficient of z^{-n-1}
            // needs sum (t_i + r_i) = n + 1
            HalfInt need = HalfInt(n + 1) - um.depth();
            WeylExpansion ex{um.gens, vm.depth(), &out.lc, {}};
            ex.run(0, vm, uc * vc, need);
        }
    }
    return out;
}

WeylState weyl_mode(const WeylState& u, ModeIndex n, const WeylState& v) {
    Rational w2 = Rational(weyl_depth(u) * 2);  // weight = depth for Weyl states
    HalfInt wt = HalfInt::from_twice(w2.get_num().get_si());
    HalfInt f = n.formal_for_weight(wt);
    if (!f.is_integer())
        throw std::invalid_argument("weyl_mode: formal index must be an integer");
    return weyl_mode(u, f.as_integer(), v);
}

namespace {

WeylState weyl_rec_mono(const WeylMono& um, int rank, long n, const WeylState& v) {
    WeylState out;
    out.rank = rank;
    if (um.gens.empty()) {
        if (n == -1) out = v;
        return out;
    }
    WeylGen g = um.gens.front();
    WeylMono rest = um;
    rest.gens.erase(rest.gens.begin());
    long m = (g.r + HalfInt::from_twice(1)).as_integer();  // formal creation index

    long wrest2 = rest.depth().twice();
    long vd2 = 0;
    for (const auto& [vm, vc] : v.lc.terms()) vd2 = std::max(vd2, vm.depth().twice());

    for (long i = 0; 2 * (n + i) <= wrest2 + vd2 - 2; ++i) {
        WeylState inner = weyl_rec_mono(rest, rank, n + i, v);
        if (inner.is_zero()) continue;
        Scalar c = Scalar((i % 2 == 0 ? 1 : -1) * binom(rat(-m), static_cast<unsigned>(i)));
        // a_(-m-i) = a(-m-i+1/2)
        out = out + c * apply_weyl_mode(g.idx, g.sign, HalfInt(-m - i) + HalfInt::from_twice(1),
                                        inner);
    }
    for (long i = 0; 2 * i + 1 <= vd2; ++i) {
        WeylState av = apply_weyl_mode(g.idx, g.sign, HalfInt(i) + HalfInt::from_twice(1), v);
        if (av.is_zero()) continue;
        WeylState inner = weyl_rec_mono(rest, rank, n - m - i, av);
        if (inner.is_zero()) continue;
        Scalar c =
            Scalar(((m + i) % 2 == 0 ? -1 : 1) * binom(rat(-m), static_cast<unsigned>(i)));
        out = out + c * inner;
    }
    return out;
}

}  // namespace

WeylState weyl_mode_recursive(const WeylState& u, long n, const WeylState& v) {
    require_rank(u, v);
    WeylState out;
    out.rank = v.rank;
    for (const auto& [um, uc] : u.lc.terms()) out = out + uc * weyl_rec_mono(um, v.rank, n, v);
    return out;
}

WeylState weyl_omega(int rank) {
    WeylState out = Scalar(0) * weyl_vacuum(rank);
    for (int i = 1; i <= rank; ++i) {
        out = out + Scalar(rat(1, 2)) * weyl_monomial(rank, {WeylGen{i, -1, HalfInt::from_twice(3)},
                                                             WeylGen{i, 1, HalfInt::from_twice(1)}});
        out = out + Scalar(rat(-1, 2)) * weyl_monomial(rank, {WeylGen{i, 1, HalfInt::from_twice(3)},
                                                              WeylGen{i, -1, HalfInt::from_twice(1)}});
    }
    return out;
}

WeylState weyl_virasoro(long k, const WeylState& v) {
    return weyl_mode(weyl_omega(v.rank), k + 1, v);
}

WeylState charge_field(int rank) {
    WeylState out = Scalar(0) * weyl_vacuum(rank);
    for (int i = 1; i <= rank; ++i)
        out = out + weyl_monomial(rank, {WeylGen{i, 1, HalfInt::from_twice(1)},
                                         WeylGen{i, -1, HalfInt::from_twice(1)}});
    return out;
}

WeylState charge_mode(long m, const WeylState& v) {
    return weyl_mode(charge_field(v.rank), m, v);
}

WeylState symplectic_involution(const WeylState& v) {
    if (v.rank % 2 != 0)
        throw std::invalid_argument("symplectic involution requires even rank, got " +
                                    std::to_string(v.rank));
    int n = v.rank / 2;
    WeylState out;
    out.rank = v.rank;
    for (const auto& [m, c] : v.lc.terms()) {
        WeylMono img;
        long sgn = 1;
        for (const auto& g : m.gens) {
            sgn *= (g.sign > 0 ? 1 : -1) * (g.idx <= n ? 1 : -1);
            img.gens.push_back(WeylGen{2 * n + 1 - g.idx, -g.sign, g.r});
        }
        img.canonicalize();
        out.lc.add(img, Scalar(sgn) * c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Tensor products
// ---------------------------------------------------------------------------

namespace {

WeylState weyl_factor(int rank, const WeylMono& m) {
    WeylState s;
    s.rank = rank;
    s.lc.add(m, Scalar(1));
    return s;
}

FockState heis_factor(const std::vector<long>& parts) { return fock_monomial_int(parts); }

TensorState combine(int rank, const WeylState& w, const FockState& f, const Scalar& c) {
    TensorState t = tensor_pure(rank, w, f);
    return c * t;
}

}  // namespace

TensorState weyl_in_tensor(const WeylState& w) {
    return tensor_pure(w.rank, w, fock_vacuum());
}

TensorState heis_in_tensor(int rank, const FockState& f) {
    return tensor_pure(rank, weyl_vacuum(rank), f);
}

TensorState tensor_mode(const TensorState& u, long n, const TensorState& v) {
    if (u.rank != v.rank)
        throw std::invalid_argument("space mismatch: tensor Weyl rank " +
                                    std::to_string(u.rank) + " vs " + std::to_string(v.rank));
    TensorState out;
    out.rank = v.rank;
    for (const auto& [um, uc] : u.lc.terms()) {
        WeylState a = weyl_factor(u.rank, um.w);
        FockState b = heis_factor(um.heis);
        long wa2 = um.w.depth().twice();
        long wb = static_cast<long>(um.heis.size() ? 0 : 0);
        wb = 0;
        for (long p : um.heis) wb += p;
        for (const auto& [vm, vc] : v.lc.terms()) {
            WeylState x = weyl_factor(v.rank, vm.w);
            FockState y = heis_factor(vm.heis);
            long dx2 = vm.w.depth().twice();
            long dy = 0;
            for (long p : vm.heis) dy += p;
            // a_(j) x vanishes for j > (wa + dx) - 1; b_(n-1-j) y vanishes
            // for n-1-j > wb + dy - 1
            long jhi = (wa2 + dx2) / 2 - 1 + ((wa2 + dx2) % 2 ? 1 : 0);
            long jlo = n - wb - dy;
            for (long j = jlo; j <= jhi; ++j) {
                WeylState ax = weyl_mode(a, j, x);
                if (ax.is_zero()) continue;
                FockState by = fock_mode(b, n - 1 - j, y);
                if (by.is_zero()) continue;
                out = out + combine(v.rank, ax, by, uc * vc);
            }
        }
    }
    return out;
}

TensorState tensor_mode(const TensorState& u, ModeIndex n, const TensorState& v) {
    Rational w2 = Rational(tensor_depth(u) * 2);
    HalfInt wt = HalfInt::from_twice(w2.get_num().get_si());
    HalfInt f = n.formal_for_weight(wt);
    if (!f.is_integer())
        throw std::invalid_argument("tensor_mode: formal index must be an integer");
    return tensor_mode(u, f.as_integer(), v);
}

TensorState tensor_mode_recursive(const TensorState& u, long n, const TensorState& v) {
    if (u.rank != v.rank) throw std::invalid_argument("tensor rank mismatch");
    TensorState out;
    out.rank = v.rank;
    for (const auto& [um, uc] : u.lc.terms()) {
        WeylState a = weyl_factor(u.rank, um.w);
        FockState b = heis_factor(um.heis);
        long wa2 = um.w.depth().twice();
        long wb = 0;
        for (long p : um.heis) wb += p;
        for (const auto& [vm, vc] : v.lc.terms()) {
            WeylState x = weyl_factor(v.rank, vm.w);
            FockState y = heis_factor(vm.heis);
            long dx2 = vm.w.depth().twice();
            long dy = 0;
            for (long p : vm.heis) dy += p;
            long jhi = (wa2 + dx2) / 2;
            long jlo = n - wb - dy;
            for (long j = jlo; j <= jhi; ++j) {
                WeylState ax = weyl_mode_recursive(a, j, x);
                if (ax.is_zero()) continue;
                FockState by = fock_mode_recursive(b, n - 1 - j, y);
                if (by.is_zero()) continue;
                out = out + combine(v.rank, ax, by, uc * vc);
            }
        }
    }
    return out;
}

TensorState tensor_omega(int rank) {
    return weyl_in_tensor(weyl_omega(rank)) + heis_in_tensor(rank, fock_omega());
}

TensorState tensor_virasoro(long k, const TensorState& v) {
    return tensor_mode(tensor_omega(v.rank), k + 1, v);
}

TensorState parity_involution(const TensorState& v) {
    TensorState out;
    out.rank = v.rank;
    for (const auto& [m, c] : v.lc.terms()) {
        long sgn = (m.w.parity() ? -1 : 1) * (m.heis.size() % 2 ? -1 : 1);
        out.lc.add(m, Scalar(sgn) * c);
    }
    return out;
}

TensorState project_fixed(const TensorState& v, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("project_fixed: sign must be +-1");
    return Scalar(rat(1, 2)) * (v + Scalar(sign) * parity_involution(v));
}

// ---------------------------------------------------------------------------
// Generator identities
// ---------------------------------------------------------------------------

std::vector<WeylMono> weyl_basis(int rank, HalfInt depth) {
    // multisets of generators (idx, sign, r) with total depth as requested
    std::vector<WeylGen> all;
    for (int i = 1; i <= rank; ++i)
        for (int s : {1, -1})
            for (long rr = 1; rr <= depth.twice(); rr += 2)
                all.push_back(WeylGen{i, s, HalfInt::from_twice(rr)});
    std::sort(all.begin(), all.end());
    std::vector<WeylMono> out;
    WeylMono cur;
    std::function<void(size_t, HalfInt)> rec = [&](size_t idx, HalfInt rem) {
        if (rem.twice() == 0) {
            out.push_back(cur);
            return;
        }
        if (idx == all.size()) return;
        // skip
        rec(idx + 1, rem);
        // take one or more copies
        if (all[idx].r <= rem) {
            cur.gens.push_back(all[idx]);
            rec(idx, rem - all[idx].r);
            cur.gens.pop_back();
        }
    };
    rec(0, depth);
    for (auto& m : out) m.canonicalize();
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Per-weight echelon spans over the tensor monomial basis.
struct WeightedSpan {
    int rank;
    long max_twice_weight;
    std::map<long, std::vector<TensorMono>> basis;   // keyed by 2*weight
    std::map<long, std::map<TensorMono, size_t>> index;
    std::map<long, Echelon> ech;

    explicit WeightedSpan(int rank_, long max_twice_weight_)
        : rank(rank_), max_twice_weight(max_twice_weight_) {
        for (long w2 = 0; w2 <= max_twice_weight; ++w2) {
            std::vector<TensorMono> b;
            for (long wd2 = 0; wd2 <= w2; ++wd2) {
                long hd2 = w2 - wd2;
                if (hd2 % 2) continue;
                auto wms = weyl_basis(rank, HalfInt::from_twice(wd2));
                auto hps = partitions_of(hd2 / 2);
                for (const auto& wm : wms)
                    for (const auto& hp : hps) b.push_back(TensorMono{wm, hp});
            }
            std::sort(b.begin(), b.end());
            for (size_t i = 0; i < b.size(); ++i) index[w2].emplace(b[i], i);
            ech.emplace(w2, Echelon(b.size()));
            basis.emplace(w2, std::move(b));
        }
    }

    // split a state into homogeneous rows; returns true when any row
    // enlarged its span
    bool insert(const TensorState& s) {
        std::map<long, ScalarRow> rows;
        for (const auto& [m, c] : s.lc.terms()) {
            long w2 = m.depth().twice();
            if (w2 > max_twice_weight) return false;  // out of window, skip whole state
            auto& row = rows[w2];
            if (row.empty()) row.assign(basis.at(w2).size(), Scalar(0));
            auto it = index.at(w2).find(m);
            if (it == index.at(w2).end())
                throw std::logic_error("span basis is missing " + mono_str(m));
            row[it->second] = c;
        }
        bool grew = false;
        for (auto& [w2, row] : rows)
            if (ech.at(w2).insert(std::move(row))) grew = true;
        return grew;
    }

    bool contains(const TensorState& s) {
        std::map<long, ScalarRow> rows;
        for (const auto& [m, c] : s.lc.terms()) {
            long w2 = m.depth().twice();
            if (w2 > max_twice_weight) return false;
            auto& row = rows[w2];
            if (row.empty()) row.assign(basis.at(w2).size(), Scalar(0));
            row[index.at(w2).at(m)] = c;
        }
        for (auto& [w2, row] : rows) {
            ScalarRow res = ech.at(w2).reduce(row);
            for (const auto& c : res)
                if (!c.is_zero()) return false;
        }
        return true;
    }
};

std::string tensor_str(const TensorState& s) { return state_str(s); }

}  // namespace

GeneratorReport verify_generator_identities(int n) {
    if (n < 2) throw std::invalid_argument("generator identities need n >= 2");
    const int rank = n - 1;
    GeneratorReport rep;
    rep.n = n;

    auto wgen = [&](int idx, int sign, long r2) {
        return weyl_monomial(rank, {WeylGen{idx, sign, HalfInt::from_twice(r2)}});
    };
    auto wpair = [&](int i1, int s1, long r1, int i2, int s2, long r2) {
        return weyl_monomial(rank, {WeylGen{i1, s1, HalfInt::from_twice(r1)},
                                    WeylGen{i2, s2, HalfInt::from_twice(r2)}});
    };

    // generator-reachable span at weights <= 4
    WeightedSpan span(rank, 8);
    std::vector<TensorState> gens;
    // sp-currents: even weight-1 Weyl monomials
    for (int i = 1; i <= rank; ++i)
        for (int j = i; j <= rank; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    if (i == j && si > sj) continue;
                    gens.push_back(weyl_in_tensor(wpair(i, si, 1, j, sj, 1)));
                }
    gens.push_back(tensor_omega(rank));
    for (int i = 1; i <= rank; ++i)
        for (int s : {1, -1})
            gens.push_back(tensor_pure(rank, wgen(i, s, 1), fock_monomial_int({1})));

    std::vector<TensorState> pool;
    pool.push_back(tensor_pure(rank, weyl_vacuum(rank), fock_vacuum()));
    span.insert(pool.back());
    for (const auto& g : gens) {
        span.insert(g);
        pool.push_back(g);
    }
    // closure under generator modes within the weight window: result weight
    // is wt(g) + wt(s) - j - 1, so j ranges over an integer interval per pair
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<TensorState> additions;
        for (const auto& g : gens) {
            for (const auto& s : pool) {
                long wg2 = 0, ws2 = 0;
                for (const auto& [m, c] : g.lc.terms()) wg2 = std::max(wg2, m.depth().twice());
                for (const auto& [m, c] : s.lc.terms()) ws2 = std::max(ws2, m.depth().twice());
                long jhi = (wg2 + ws2) / 2;           // beyond: product vanishes
                long jlo = (wg2 + ws2 - 8) / 2 - 1;   // below: result leaves the window
                for (long j = jlo; j <= jhi; ++j) {
                    TensorState p = tensor_mode(g, j, s);
                    if (p.is_zero()) continue;
                    bool in_window = true;
                    for (const auto& [m, c] : p.lc.terms())
                        if (m.depth().twice() > 8) in_window = false;
                    if (!in_window) continue;
                    if (span.insert(p)) {
                        additions.push_back(p);
                        grew = true;
                    }
                }
            }
        }
        for (auto& a : additions) pool.push_back(std::move(a));
    }

    // the weight-4 target
    TensorState J4 = heis_in_tensor(rank, fock_J());
    rep.reaches_J = span.contains(J4);
    rep.weight4_dim = static_cast<long>(span.basis.at(8).size());
    rep.reachable_rank = static_cast<long>(span.ech.at(8).rank());

    // displayed identity cases; each compares the exact product with the
    // displayed right-hand side and, when they differ, certifies the
    // residual lies in the reachable span at its weight.
    auto h1 = fock_monomial_int({1});
    auto add_case = [&](const std::string& name, const TensorState& lhs,
                        const TensorState& rhs) {
        IdentityCase c;
        c.name = name;
        c.expected = tensor_str(rhs);
        c.computed = tensor_str(lhs);
        TensorState resid = lhs - rhs;
        if (resid.is_zero()) {
            c.pass = true;
            c.name += " [exact]";
        } else if (span.contains(resid)) {
            c.pass = true;
            c.name += " [mod generated subalgebra; residual " + tensor_str(resid) + "]";
        } else {
            c.pass = false;
        }
        rep.identities.push_back(std::move(c));
    };

    TensorState a1p_h = tensor_pure(rank, wgen(1, 1, 1), h1);
    TensorState a1m_h = tensor_pure(rank, wgen(1, -1, 1), h1);
    TensorState one_h2 = heis_in_tensor(rank, fock_monomial_int({1, 1}));

    // products of the first chain
    add_case("(a1+ x h)_(0) (a1- x h) = 1 x h(-1)^2", tensor_mode(a1p_h, 0, a1m_h), one_h2);
    TensorState a1m_h3 = tensor_pure(rank, wgen(1, -1, 1), fock_monomial_int({1, 1, 1}));
    add_case("(a1- x h)_(-1) (1 x h(-1)^2) = a1- x h(-1)^3", tensor_mode(a1m_h, -1, one_h2),
             a1m_h3);
    add_case("(a1+ x h)_(0) (a1- x h(-1)^3) = 1 x h(-1)^4", tensor_mode(a1p_h, 0, a1m_h3),
             heis_in_tensor(rank, fock_monomial_int({1, 1, 1, 1})));

    // second chain
    TensorState lhs_b2 = tensor_mode(a1p_h, -2, a1m_h);
    TensorState rhs_b2 = heis_in_tensor(rank, fock_monomial_int({3, 1})) +
                         tensor_pure(rank, wpair(1, 1, 1, 1, -1, 1), fock_monomial_int({2, 1})) +
                         tensor_pure(rank, wpair(1, 1, 3, 1, -1, 1), fock_monomial_int({1, 1}));
    add_case("(a1+ x h)_(-2) (a1- x h) = 1 x h(-3)h + (a1+)_(-1)a1- x h(-2)h + (a1+)_(-2)a1- x h(-1)^2",
             lhs_b2, rhs_b2);
    add_case("((a1+)_(-2)a1- x 1)_(-1) (1 x h(-1)^2) = (a1+)_(-2)a1- x h(-1)^2",
             tensor_mode(weyl_in_tensor(wpair(1, 1, 3, 1, -1, 1)), -1, one_h2),
             tensor_pure(rank, wpair(1, 1, 3, 1, -1, 1), fock_monomial_int({1, 1})));
    add_case("((a1+)_(-1)a1- x 1)_(-1) (1 x h(-1)^2) = (a1+)_(-1)a1- x h(-1)^2",
             tensor_mode(weyl_in_tensor(wpair(1, 1, 1, 1, -1, 1)), -1, one_h2),
             tensor_pure(rank, wpair(1, 1, 1, 1, -1, 1), fock_monomial_int({1, 1})));
    add_case("(a1+ x h)_(-1) (a1- x h) = 1 x h(-2)h + (a1+)_(-1)a1- x h(-1)^2",
             tensor_mode(a1p_h, -1, a1m_h),
             heis_in_tensor(rank, fock_monomial_int({2, 1})) +
                 tensor_pure(rank, wpair(1, 1, 1, 1, -1, 1), fock_monomial_int({1, 1})));
    add_case("((a1+)_(-1)a1- x 1)_(-1) (1 x h(-2)h) = (a1+)_(-1)a1- x h(-2)h",
             tensor_mode(weyl_in_tensor(wpair(1, 1, 1, 1, -1, 1)), -1,
                         heis_in_tensor(rank, fock_monomial_int({2, 1}))),
             tensor_pure(rank, wpair(1, 1, 1, 1, -1, 1), fock_monomial_int({2, 1})));

    // third chain
    add_case("(1 x w2)_(0) (a1- x h) = a1- x h(-2)",
             tensor_mode(heis_in_tensor(rank, fock_omega()), 0, a1m_h),
             tensor_pure(rank, wgen(1, -1, 1), fock_monomial_int({2})));
    TensorState a1m_h2 = tensor_pure(rank, wgen(1, -1, 1), fock_monomial_int({2}));
    add_case("(a1+ x h)_(-1) (a1- x h(-2)) = 1 x h(-2)^2 + (a1+)_(-1)a1- x h(-2)h",
             tensor_mode(a1p_h, -1, a1m_h2),
             heis_in_tensor(rank, fock_monomial_int({2, 2})) +
                 tensor_pure(rank, wpair(1, 1, 1, 1, -1, 1), fock_monomial_int({2, 1})));

    return rep;
}

}  // namespace voa
