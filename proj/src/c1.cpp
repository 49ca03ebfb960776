#include "voa/c1.hpp"

#include <algorithm>
#include <functional>

#include "voa/partitions.hpp"
#include "voa/twisted.hpp"

namespace voa {

std::string C1Module::str() const {
    switch (kind) {
        case Kind::parametric: return "M(1,x)";
        case Kind::momentum: return "M(1," + momentum.str() + ")";
        case Kind::orbifold_even: return "M(1)+";
        case Kind::orbifold_odd: return "M(1)-";
        case Kind::twisted_even: return "M(1)(tw)+";
        case Kind::twisted_odd: return "M(1)(tw)-";
    }
    return "?";
}

namespace {

bool is_twisted(const C1Module& m) {
    return m.kind == C1Module::Kind::twisted_even || m.kind == C1Module::Kind::twisted_odd;
}

int parity_filter(const C1Module& m) {
    switch (m.kind) {
        case C1Module::Kind::orbifold_even:
        case C1Module::Kind::twisted_even: return 0;
        case C1Module::Kind::orbifold_odd:
        case C1Module::Kind::twisted_odd: return 1;
        default: return -1;  // no filter
    }
}

Scalar module_momentum(const C1Module& m) {
    switch (m.kind) {
        case C1Module::Kind::parametric: return Scalar::momentum_var();
        case C1Module::Kind::momentum: return m.momentum;
        default: return Scalar(0);
    }
}

// even-length partitions of w: basis of the positive-weight acting algebra
std::vector<std::vector<long>> even_partitions(long w) {
    std::vector<std::vector<long>> out;
    for_each_partition(w, w, [&](const std::vector<long>& p) {
        if (p.size() % 2 == 0) out.push_back(p);
    });
    return out;
}

}  // namespace

std::vector<FockMono> module_basis(const C1Module& module, HalfInt depth) {
    std::vector<FockMono> out;
    int pf = parity_filter(module);
    if (is_twisted(module)) {
        // partitions of twice-depth into odd parts
        for_each_partition(depth.twice(), depth.twice(), [&](const std::vector<long>& p) {
            for (long q : p)
                if (q % 2 == 0) return;
            if (pf >= 0 && static_cast<long>(p.size()) % 2 != pf) return;
            FockMono m;
            for (long q : p) m.parts.push_back(HalfInt::from_twice(q));
            out.push_back(std::move(m));
        });
        return out;
    }
    if (!depth.is_integer()) return out;
    Scalar mom = module_momentum(module);
    for_each_partition(depth.as_integer(), depth.as_integer(), [&](const std::vector<long>& p) {
        if (pf >= 0 && static_cast<long>(p.size()) % 2 != pf) return;
        FockMono m;
        m.momentum = mom;
        for (long q : p) m.parts.push_back(HalfInt(q));
        out.push_back(std::move(m));
    });
    return out;
}

C1Matrix c1_component(const C1Module& module, HalfInt depth, long weight_margin) {
    C1Matrix mat;
    mat.module = module;
    mat.depth = depth;
    mat.extra_weight_margin = weight_margin;
    mat.basis = module_basis(module, depth);

    Sector sector = is_twisted(module) ? Sector::twisted : Sector::untwisted;
    long wmax = depth.floor() + weight_margin;
    for (long w = 2; w <= wmax; ++w) {
        for (const auto& vparts : even_partitions(w)) {
            FockState v = fock_monomial_int(vparts);
            HalfInt md = depth - HalfInt(w);
            if (md.twice() < 0) continue;
            for (const auto& mmono : module_basis(module, md)) {
                FockState mstate;
                mstate.sector = sector;
                mstate.lc.add(mmono, Scalar(1));
                FockState img = is_twisted(module)
                                    ? twisted_mode(v, ModeIndex::formal(-1), mstate)
                                    : fock_mode(v, -1, mstate);
                ScalarRow row;
                row.reserve(mat.basis.size());
                for (const auto& b : mat.basis) row.push_back(img.lc.coeff(b));
                mat.rows.push_back(std::move(row));
                mat.row_labels.push_back(mono_str(FockMono{v.lc.terms().begin()->first},
                                                  Sector::untwisted) +
                                         " _(-1) " + mono_str(mmono, sector));
            }
        }
    }
    return mat;
}

namespace {

// rational roots of a Q(sqrt2)[x] polynomial that lie in Q, by the integer
// divisor method applied to the rational-coefficient norm p * conj(p)
std::vector<Rational> rational_roots(const Poly& p) {
    // norm has rational coefficients
    std::vector<Quad> conj_coeffs;
    for (const auto& c : p.coeffs()) conj_coeffs.push_back(c.conj());
    Poly norm = p * Poly(conj_coeffs);
    // clear denominators to an integer polynomial
    Integer lcm_den = 1;
    for (const auto& c : norm.coeffs()) {
        if (c.b() != 0) continue;  // cannot happen for a norm
        lcm_den = lcm(lcm_den, c.a().get_den());
    }
    std::vector<Integer> ic;
    for (const auto& c : norm.coeffs())
        ic.push_back(Integer(c.a().get_num() * (lcm_den / c.a().get_den())));
    while (!ic.empty() && ic.back() == 0) ic.pop_back();
    std::vector<Rational> roots;
    if (ic.empty()) return roots;
    // strip trailing zero coefficient (x = 0 root)
    size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0 && p.eval(Quad(0)).is_zero()) roots.push_back(Rational(0));
    if (low >= ic.size() - 1) return roots;
    Integer a0 = abs(ic[low]), an = abs(ic.back());
    auto divisors = [](Integer n) {
        std::vector<Integer> ds;
        for (Integer d = 1; d * d <= n; ++d) {
            if (n % d == 0) {
                ds.push_back(d);
                ds.push_back(n / d);
            }
            if (d > 100000) break;  // keep the scan bounded
        }
        return ds;
    };
    for (const Integer& pn : divisors(a0)) {
        for (const Integer& qn : divisors(an)) {
            for (int s : {1, -1}) {
                Rational cand(s * pn, qn);
                cand.canonicalize();
                if (p.eval(Quad(cand)).is_zero()) {
                    if (std::find(roots.begin(), roots.end(), cand) == roots.end())
                        roots.push_back(cand);
                }
            }
        }
    }
    return roots;
}

}  // namespace

RankReport rank_analysis(const C1Matrix& mat) {
    RankReport rep;
    rep.ambient_dim = static_cast<long>(mat.basis.size());
    rep.generic_rank = exact_rank(mat.rows, mat.basis.size());

    bool parametric = mat.module.kind == C1Module::Kind::parametric;
    if (!parametric) return rep;

    // polynomial form of the matrix (entries are polynomial in x here)
    std::vector<std::vector<Poly>> pm;
    pm.reserve(mat.rows.size());
    for (const auto& row : mat.rows) {
        std::vector<Poly> prow;
        prow.reserve(row.size());
        for (const auto& e : row) {
            RatFunc f = e.as_ratfunc();
            if (!f.is_polynomial())
                throw std::logic_error("rank_analysis: non-polynomial matrix entry");
            prow.push_back(f.num());
        }
        pm.push_back(std::move(prow));
    }

    const long r = rep.generic_rank;
    Poly g;  // gcd accumulator, zero = nothing yet
    if (r > 0 && r <= static_cast<long>(mat.basis.size())) {
        std::vector<size_t> rsel(static_cast<size_t>(r)), csel(static_cast<size_t>(r));
        long scanned = 0;
        const long cap = 4000;
        std::function<bool(size_t, size_t)> cols = [&](size_t ci, size_t cstart) -> bool {
            if (ci == csel.size()) {
                std::vector<std::vector<Poly>> sub(static_cast<size_t>(r),
                                                   std::vector<Poly>(static_cast<size_t>(r)));
                for (size_t i = 0; i < rsel.size(); ++i)
                    for (size_t j = 0; j < csel.size(); ++j) sub[i][j] = pm[rsel[i]][csel[j]];
                Poly d = poly_det(sub);
                ++scanned;
                if (!d.is_zero()) g = g.is_zero() ? squarefree_part(d) : poly_gcd(g, d);
                return !(g.degree() == 0) && scanned < cap;
            }
            for (size_t c = cstart; c < mat.basis.size(); ++c) {
                csel[ci] = c;
                if (!cols(ci + 1, c + 1)) return false;
            }
            return true;
        };
        std::function<bool(size_t, size_t)> rows = [&](size_t ri, size_t rstart) -> bool {
            if (ri == rsel.size()) return cols(0, 0);
            for (size_t rr = rstart; rr < pm.size(); ++rr) {
                rsel[ri] = rr;
                if (!rows(ri + 1, rr + 1)) return false;
            }
            return true;
        };
        bool finished = rows(0, 0);
        rep.candidates_complete = finished || g.degree() == 0;
        if (!g.is_zero() && g.degree() > 0) {
            rep.exceptional_candidates = squarefree_part(g);
            for (const Rational& root : rational_roots(*rep.exceptional_candidates))
                rep.candidate_roots.push_back(Quad(root));
            // roots of the form c*sqrt2: substitute x = y*sqrt2
            Poly sub;
            {
                std::vector<Quad> cs = rep.exceptional_candidates->coeffs();
                std::vector<Quad> out(cs.size(), Quad(0));
                Quad s2 = Quad::sqrt2(), pw(1);
                for (size_t i = 0; i < cs.size(); ++i) {
                    out[i] = cs[i] * pw;
                    pw = pw * s2;
                }
                sub = Poly(out);
            }
            for (const Rational& root : rational_roots(sub)) {
                Quad q(Rational(0), root);
                if (std::find(rep.candidate_roots.begin(), rep.candidate_roots.end(), q) ==
                    rep.candidate_roots.end() && root != 0)
                    rep.candidate_roots.push_back(q);
            }
        } else if (g.degree() == 0) {
            rep.exceptional_candidates = std::nullopt;  // locus empty
        }
    }

    // specialization cross-check at sample rational momenta off the
    // candidate roots
    std::vector<Rational> samples{rat(5), rat(7, 2), rat(-3), rat(11, 4), rat(-9, 5)};
    for (const Rational& s : samples) {
        Quad val(s);
        bool is_root = false;
        for (const auto& root : rep.candidate_roots)
            if (root == val) is_root = true;
        if (rep.exceptional_candidates && rep.exceptional_candidates->eval(val).is_zero())
            is_root = true;
        if (is_root) continue;
        std::vector<ScalarRow> rows;
        rows.reserve(mat.rows.size());
        for (const auto& row : mat.rows) {
            ScalarRow r2;
            r2.reserve(row.size());
            for (const auto& e : row) r2.push_back(e.eval_momentum(val));
            rows.push_back(std::move(r2));
        }
        long rk = exact_rank(rows, mat.basis.size());
        rep.specializations.emplace_back(val, rk);
        if (rk != rep.generic_rank) rep.specialization_coherent = false;
    }
    return rep;
}

TwistedTopReport twisted_top_exclusion(int sign, long i_max) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("twisted_top_exclusion: sign must be +-1");
    TwistedTopReport rep;
    rep.sign = sign;
    C1Module mod;
    mod.kind = sign > 0 ? C1Module::Kind::twisted_even : C1Module::Kind::twisted_odd;
    for (long i = 0; i <= i_max; ++i) {
        long len = 2 * i + (sign > 0 ? 0 : 1);
        HalfInt depth = HalfInt::from_twice(len);  // len copies of depth 1/2
        C1Matrix mat = c1_component(mod, depth);
        TwistedTopReport::Entry e;
        e.i = i;
        e.depth = depth;
        e.ambient = static_cast<long>(mat.basis.size());
        e.c1_rank = exact_rank(mat.rows, mat.basis.size());
        // coordinates of h(-1/2)^len
        FockMono top;
        for (long t = 0; t < len; ++t) top.parts.push_back(HalfInt::from_twice(1));
        ScalarRow tr(mat.basis.size(), Scalar(0));
        bool found = false;
        for (size_t b = 0; b < mat.basis.size(); ++b)
            if (mat.basis[b] == top) {
                tr[b] = Scalar(1);
                found = true;
            }
        if (!found) throw std::logic_error("twisted_top_exclusion: top vector missing");
        e.excluded = !in_row_span(mat.rows, mat.basis.size(), tr);
        e.quotient_dim = e.ambient - e.c1_rank;
        rep.entries.push_back(e);
    }
    return rep;
}

CodimScan atypical_codim_scan(long m, long d_max) {
    CodimScan scan;
    scan.m = m;
    C1Module mod;
    mod.kind = C1Module::Kind::momentum;
    mod.momentum = Scalar(Quad(Rational(0), rat(m, 2)));  // m/sqrt2 = (m/2) sqrt2
    for (long d = 0; d <= d_max; ++d) {
        C1Matrix mat = c1_component(mod, HalfInt(d));
        CodimScan::Entry e;
        e.depth = d;
        e.dim = static_cast<long>(mat.basis.size());
        e.rank = exact_rank(mat.rows, mat.basis.size());
        e.codim = e.dim - e.rank;
        scan.entries.push_back(e);
    }
    for (size_t i = 0; i < scan.entries.size(); ++i) {
        bool zero_onward = true;
        for (size_t j = i; j < scan.entries.size(); ++j)
            if (scan.entries[j].codim != 0) zero_onward = false;
        if (zero_onward) {
            scan.stabilizes_at = scan.entries[i].depth;
            break;
        }
    }
    return scan;
}

}  // namespace voa
