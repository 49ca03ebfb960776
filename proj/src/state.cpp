#include "voa/state.hpp"

#include <functional>
#include <sstream>

namespace voa {

namespace {

void check_fock_mono(const FockMono& m, Sector sector) {
    for (auto p : m.parts) {
        if (p.twice() <= 0) throw std::invalid_argument("Fock mode depth must be positive");
        if (sector == Sector::untwisted && !p.is_integer())
            throw std::invalid_argument("untwisted sector requires integer mode depths");
        if (sector == Sector::twisted && !p.is_half_odd())
            throw std::invalid_argument("twisted sector requires half-odd mode depths");
    }
    if (sector == Sector::twisted && !m.momentum.is_zero())
        throw std::invalid_argument("twisted sector requires momentum 0");
}

template <class Mono>
LinComb<Mono> merged(const LinComb<Mono>& a, const LinComb<Mono>& b) {
    LinComb<Mono> r = a;
    r.add(b);
    return r;
}

}  // namespace

FockState fock_vacuum(Sector sector, const Scalar& momentum) {
    FockState s;
    s.sector = sector;
    FockMono m;
    m.momentum = momentum;
    check_fock_mono(m, sector);
    s.lc.add(m, Scalar(1));
    return s;
}

FockState fock_monomial(std::vector<HalfInt> parts, const Scalar& momentum, Sector sector) {
    std::sort(parts.begin(), parts.end(), std::greater<HalfInt>());
    FockState s;
    s.sector = sector;
    FockMono m{std::move(parts), momentum};
    check_fock_mono(m, sector);
    s.lc.add(m, Scalar(1));
    return s;
}

FockState fock_monomial_int(const std::vector<long>& parts, const Scalar& momentum) {
    std::vector<HalfInt> hp;
    hp.reserve(parts.size());
    for (long p : parts) hp.push_back(HalfInt(p));
    return fock_monomial(std::move(hp), momentum, Sector::untwisted);
}

LatticeState lattice_exponential(HalfInt r) { return lattice_monomial(r, {}); }

LatticeState lattice_monomial(HalfInt r, std::vector<long> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<long>());
    for (long p : parts)
        if (p <= 0) throw std::invalid_argument("lattice mode depth must be positive");
    LatticeState s;
    s.lc.add(LatticeMono{r, std::move(parts)}, Scalar(1));
    return s;
}

WeylState weyl_vacuum(int rank) {
    WeylState s;
    s.rank = rank;
    s.lc.add(WeylMono{}, Scalar(1));
    return s;
}

WeylState weyl_monomial(int rank, std::vector<WeylGen> gens) {
    for (const auto& g : gens) {
        if (g.idx < 1 || g.idx > rank)
            throw std::invalid_argument("Weyl generator index out of range for rank " +
                                        std::to_string(rank));
        if (g.sign != 1 && g.sign != -1) throw std::invalid_argument("Weyl generator sign");
        if (g.r.twice() <= 0 || !g.r.is_half_odd())
            throw std::invalid_argument("Weyl mode depth must lie in 1/2 + Z_{>=0}");
    }
    WeylMono m{std::move(gens)};
    m.canonicalize();
    WeylState s;
    s.rank = rank;
    s.lc.add(m, Scalar(1));
    return s;
}

TensorState tensor_pure(int rank, const WeylState& w, const FockState& f) {
    if (w.rank != rank) throw std::invalid_argument("tensor: Weyl factor rank mismatch");
    if (f.sector != Sector::untwisted)
        throw std::invalid_argument("tensor: Heisenberg factor must be untwisted");
    TensorState t;
    t.rank = rank;
    for (const auto& [wm, wc] : w.lc.terms()) {
        for (const auto& [fm, fc] : f.lc.terms()) {
            if (!fm.momentum.is_zero())
                throw std::invalid_argument("tensor: Heisenberg factor must have momentum 0");
            std::vector<long> heis;
            heis.reserve(fm.parts.size());
            for (auto p : fm.parts) heis.push_back(p.as_integer());
            t.lc.add(TensorMono{wm, std::move(heis)}, wc * fc);
        }
    }
    return t;
}

FockState operator+(const FockState& a, const FockState& b) {
    if (a.sector != b.sector)
        throw std::invalid_argument("space mismatch: Fock[" + sector_str(a.sector) +
                                    "] vs Fock[" + sector_str(b.sector) + "]");
    return FockState{a.sector, merged(a.lc, b.lc)};
}

LatticeState operator+(const LatticeState& a, const LatticeState& b) {
    return LatticeState{merged(a.lc, b.lc)};
}

WeylState operator+(const WeylState& a, const WeylState& b) {
    if (a.rank != b.rank)
        throw std::invalid_argument("space mismatch: Weyl rank " + std::to_string(a.rank) +
                                    " vs Weyl rank " + std::to_string(b.rank));
    return WeylState{a.rank, merged(a.lc, b.lc)};
}

TensorState operator+(const TensorState& a, const TensorState& b) {
    if (a.rank != b.rank)
        throw std::invalid_argument("space mismatch: tensor Weyl rank " +
                                    std::to_string(a.rank) + " vs " + std::to_string(b.rank));
    return TensorState{a.rank, merged(a.lc, b.lc)};
}

FockState operator*(const Scalar& c, const FockState& s) {
    FockState r = s;
    r.lc.scale(c);
    return r;
}
LatticeState operator*(const Scalar& c, const LatticeState& s) {
    LatticeState r = s;
    r.lc.scale(c);
    return r;
}
WeylState operator*(const Scalar& c, const WeylState& s) {
    WeylState r = s;
    r.lc.scale(c);
    return r;
}
TensorState operator*(const Scalar& c, const TensorState& s) {
    TensorState r = s;
    r.lc.scale(c);
    return r;
}

FockState theta_involution(const FockState& s) {
    FockState r;
    r.sector = s.sector;
    for (const auto& [m, c] : s.lc.terms()) {
        if (!m.momentum.is_zero())
            throw std::invalid_argument(
                "theta_involution: defined only at momentum 0 (got momentum " +
                m.momentum.str() + ")");
        r.lc.add(m, m.length() % 2 == 0 ? c : -c);
    }
    return r;
}

FockState project_parity(const FockState& s, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("project_parity: sign must be +-1");
    FockState t = theta_involution(s);
    Scalar half = Scalar(rat(1, 2));
    return half * (s + Scalar(sign) * t);
}

FockState depth_component(const FockState& s, HalfInt d) {
    FockState r;
    r.sector = s.sector;
    for (const auto& [m, c] : s.lc.terms())
        if (m.depth() == d) r.lc.add(m, c);
    return r;
}

LatticeState weight_component(const LatticeState& s, const Rational& w) {
    LatticeState r;
    for (const auto& [m, c] : s.lc.terms())
        if (m.weight() == w) r.lc.add(m, c);
    return r;
}

WeylState depth_component(const WeylState& s, HalfInt d) {
    WeylState r;
    r.rank = s.rank;
    for (const auto& [m, c] : s.lc.terms())
        if (m.depth() == d) r.lc.add(m, c);
    return r;
}

TensorState depth_component(const TensorState& s, HalfInt d) {
    TensorState r;
    r.rank = s.rank;
    for (const auto& [m, c] : s.lc.terms())
        if (m.depth() == d) r.lc.add(m, c);
    return r;
}

namespace {
template <class Terms, class DepthFn>
Rational common_grade(const Terms& terms, DepthFn f, const char* what) {
    if (terms.empty()) throw std::domain_error(std::string(what) + ": zero state has no grade");
    auto it = terms.begin();
    Rational d = f(it->first);
    for (++it; it != terms.end(); ++it)
        if (f(it->first) != d) throw std::domain_error(std::string(what) + ": state not homogeneous");
    return d;
}
}  // namespace

Rational fock_depth(const FockState& s) {
    return common_grade(s.lc.terms(), [](const FockMono& m) { return m.depth().as_rational(); },
                        "fock_depth");
}
Rational lattice_weight(const LatticeState& s) {
    return common_grade(s.lc.terms(), [](const LatticeMono& m) { return m.weight(); },
                        "lattice_weight");
}
Rational weyl_depth(const WeylState& s) {
    return common_grade(s.lc.terms(), [](const WeylMono& m) { return m.depth().as_rational(); },
                        "weyl_depth");
}
Rational tensor_depth(const TensorState& s) {
    return common_grade(s.lc.terms(), [](const TensorMono& m) { return m.depth().as_rational(); },
                        "tensor_depth");
}

// --- printing ----------------------------------------------------------------

namespace {

std::string fock_ket(const Scalar& momentum, Sector sector) {
    if (sector == Sector::twisted) return "|tw>";
    if (momentum.is_zero()) return "|0>";
    if (momentum == Scalar::momentum_var()) return "|lam>";
    return "|mom:" + momentum.str() + ">";
}

// True when the scalar prints with an explicit leading minus and flipping it
// produces the natural positive form.
bool printable_negative(const Scalar& c) {
    switch (c.kind()) {
        case Scalar::Kind::rational: return c.as_rational() < 0;
        case Scalar::Kind::quad: {
            Quad q = c.as_quad();
            return (q.b() == 0 && q.a() < 0) || (q.a() == 0 && q.b() < 0);
        }
        default: return false;
    }
}

bool composite_coeff(const Scalar& c) {
    std::string s = c.str();
    return s.find(' ') != std::string::npos || s.find('x') != std::string::npos;
}

template <class Terms, class MonoStr>
std::string print_terms(const Terms& terms, MonoStr mono_string) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
        Scalar k = c;
        bool neg = printable_negative(k);
        if (neg) k = -k;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (!k.is_one()) {
            if (composite_coeff(k))
                os << "(" << k.str() << ") ";
            else
                os << k.str() << " ";
        }
        os << mono_string(m);
    }
    return os.str();
}

}  // namespace

std::string mono_str(const FockMono& m, Sector sector) {
    std::ostringstream os;
    const char* gen = sector == Sector::twisted ? "h" : "a";
    for (auto p : m.parts) os << gen << "(-" << p.str() << ") ";
    os << fock_ket(m.momentum, sector);
    return os.str();
}

std::string mono_str(const LatticeMono& m) {
    std::ostringstream os;
    for (auto p : m.parts) os << "g(-" << p << ") ";
    os << "|e:" << m.r.str() << ">";
    return os.str();
}

std::string mono_str(const WeylMono& m) {
    std::ostringstream os;
    for (const auto& g : m.gens)
        os << "b" << g.idx << (g.sign > 0 ? "+" : "-") << "(-" << g.r.str() << ") ";
    os << "|0>";
    return os.str();
}

std::string mono_str(const TensorMono& m) {
    std::ostringstream os;
    os << mono_str(m.w) << " (x) ";
    for (long p : m.heis) os << "a(-" << p << ") ";
    os << "|0>";
    return os.str();
}

std::string state_str(const FockState& s) {
    return print_terms(s.lc.terms(), [&](const FockMono& m) { return mono_str(m, s.sector); });
}
std::string state_str(const LatticeState& s) {
    return print_terms(s.lc.terms(), [](const LatticeMono& m) { return mono_str(m); });
}
std::string state_str(const WeylState& s) {
    return print_terms(s.lc.terms(), [](const WeylMono& m) { return mono_str(m); });
}
std::string state_str(const TensorState& s) {
    return print_terms(s.lc.terms(), [](const TensorMono& m) { return mono_str(m); });
}

}  // namespace voa
