#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "voa/halfint.hpp"
#include "voa/scalar.hpp"

namespace voa {

enum class Sector { untwisted, twisted };

inline std::string sector_str(Sector s) {
    return s == Sector::untwisted ? "untwisted" : "twisted";
}

// ---------------------------------------------------------------------------
// Monomials
// ---------------------------------------------------------------------------

// Heisenberg creation monomial a(-p_1)...a(-p_k) e^{momentum} with weakly
// decreasing positive depths p_i. Integer depths in the untwisted sector,
// half-odd depths (and momentum 0) in the twisted sector.
struct FockMono {
    std::vector<HalfInt> parts;
    Scalar momentum;

    HalfInt depth() const {
        HalfInt d;
        for (auto p : parts) d += p;
        return d;
    }
    size_t length() const { return parts.size(); }

    int cmp(const FockMono& o) const {
        HalfInt da = depth(), db = o.depth();
        if (da != db) return da < db ? -1 : 1;
        if (parts != o.parts) return parts < o.parts ? -1 : 1;
        return momentum.cmp_key(o.momentum);
    }
    bool operator<(const FockMono& o) const { return cmp(o) < 0; }
    bool operator==(const FockMono& o) const {
        return parts == o.parts && momentum == o.momentum;
    }
};

// Lattice monomial g(-p_1)...g(-p_k) e^{r gamma}; parts are positive integer
// gamma-mode depths, the exponential momentum r has 2r integral.
struct LatticeMono {
    HalfInt r;
    std::vector<long> parts;

    long depth() const { return std::accumulate(parts.begin(), parts.end(), 0L); }
    // (gamma,gamma) = 2, so e^{r gamma} has conformal weight r^2.
    Rational weight() const { return rat(r.twice() * r.twice(), 4) + depth(); }
    size_t length() const { return parts.size(); }

    int cmp(const LatticeMono& o) const {
        Rational wa = weight(), wb = o.weight();
        if (wa != wb) return wa < wb ? -1 : 1;
        if (r != o.r) return r < o.r ? -1 : 1;
        if (parts != o.parts) return parts < o.parts ? -1 : 1;
        return 0;
    }
    bool operator<(const LatticeMono& o) const { return cmp(o) < 0; }
    bool operator==(const LatticeMono& o) const { return r == o.r && parts == o.parts; }
};

// One Weyl generator a_{idx}^{sign}(-r), r in 1/2 + Z_{>=0}.
struct WeylGen {
    int idx;   // 1-based pair index
    int sign;  // +1 or -1
    HalfInt r;

    auto key() const { return std::tuple<int, int, long>(idx, -sign, r.twice()); }
    bool operator<(const WeylGen& o) const { return key() < o.key(); }
    bool operator==(const WeylGen& o) const = default;
};

// Bosonic product of Weyl generators, stored sorted.
struct WeylMono {
    std::vector<WeylGen> gens;

    void canonicalize() { std::sort(gens.begin(), gens.end()); }
    HalfInt depth() const {
        HalfInt d;
        for (const auto& g : gens) d += g.r;
        return d;
    }
    int charge() const {
        int c = 0;
        for (const auto& g : gens) c += g.sign;
        return c;
    }
    size_t length() const { return gens.size(); }
    // 0 for integer weight, 1 for half-odd weight.
    int parity() const { return static_cast<int>(length() % 2); }
    int max_index() const {
        int m = 0;
        for (const auto& g : gens) m = std::max(m, g.idx);
        return m;
    }

    int cmp(const WeylMono& o) const {
        HalfInt da = depth(), db = o.depth();
        if (da != db) return da < db ? -1 : 1;
        if (gens.size() != o.gens.size()) return gens.size() < o.gens.size() ? -1 : 1;
        for (size_t i = 0; i < gens.size(); ++i) {
            if (!(gens[i] == o.gens[i])) return gens[i] < o.gens[i] ? -1 : 1;
        }
        return 0;
    }
    bool operator<(const WeylMono& o) const { return cmp(o) < 0; }
    bool operator==(const WeylMono& o) const { return gens == o.gens; }
};

// Pure tensor (Weyl monomial) x (momentum-0 integer-mode Heisenberg
// monomial), the carrier for S(n) ⊗ M(1) states.
struct TensorMono {
    WeylMono w;
    std::vector<long> heis;  // weakly decreasing positive

    HalfInt depth() const {
        HalfInt d = w.depth();
        for (long p : heis) d += HalfInt(p);
        return d;
    }

    int cmp(const TensorMono& o) const {
        HalfInt da = depth(), db = o.depth();
        if (da != db) return da < db ? -1 : 1;
        int c = w.cmp(o.w);
        if (c != 0) return c;
        if (heis != o.heis) return heis < o.heis ? -1 : 1;
        return 0;
    }
    bool operator<(const TensorMono& o) const { return cmp(o) < 0; }
    bool operator==(const TensorMono& o) const { return w == o.w && heis == o.heis; }
};

// ---------------------------------------------------------------------------
// Linear combinations (canonical form: merged monomials, no zero coefficients)
// ---------------------------------------------------------------------------

template <class Mono>
class LinComb {
public:
    using Terms = std::map<Mono, Scalar>;

    void add(const Mono& m, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void add(const LinComb& o, const Scalar& c = Scalar(1)) {
        for (const auto& [m, k] : o.terms_) add(m, k * c);
    }
    void scale(const Scalar& c) {
        if (c.is_zero()) {
            terms_.clear();
            return;
        }
        for (auto& [m, k] : terms_) k *= c;
    }

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    // The coefficient of a monomial (zero if absent).
    Scalar coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    bool operator==(const LinComb& o) const { return terms_ == o.terms_; }
    bool operator!=(const LinComb& o) const { return !(*this == o); }

private:
    Terms terms_;
};

// ---------------------------------------------------------------------------
// States: linear combinations plus the space tag they live in
// ---------------------------------------------------------------------------

struct FockState {
    Sector sector = Sector::untwisted;
    LinComb<FockMono> lc;

    bool is_zero() const { return lc.is_zero(); }
    bool operator==(const FockState& o) const {
        return sector == o.sector && lc == o.lc;
    }
};

struct LatticeState {
    LinComb<LatticeMono> lc;

    bool is_zero() const { return lc.is_zero(); }
    bool operator==(const LatticeState& o) const { return lc == o.lc; }
};

struct WeylState {
    int rank = 1;
    LinComb<WeylMono> lc;

    bool is_zero() const { return lc.is_zero(); }
    bool operator==(const WeylState& o) const { return rank == o.rank && lc == o.lc; }
};

struct TensorState {
    int rank = 1;  // rank of the Weyl factor
    LinComb<TensorMono> lc;

    bool is_zero() const { return lc.is_zero(); }
    bool operator==(const TensorState& o) const { return rank == o.rank && lc == o.lc; }
};

// --- constructors -----------------------------------------------------------

FockState fock_vacuum(Sector sector = Sector::untwisted, const Scalar& momentum = Scalar(0));
// a(-p_1)...a(-p_k) e^{momentum}; parts may come in any order.
FockState fock_monomial(std::vector<HalfInt> parts, const Scalar& momentum = Scalar(0),
                        Sector sector = Sector::untwisted);
FockState fock_monomial_int(const std::vector<long>& parts, const Scalar& momentum = Scalar(0));

LatticeState lattice_exponential(HalfInt r);
LatticeState lattice_monomial(HalfInt r, std::vector<long> parts);

WeylState weyl_vacuum(int rank);
WeylState weyl_monomial(int rank, std::vector<WeylGen> gens);

TensorState tensor_pure(int rank, const WeylState& w, const FockState& f);

// --- shared operations ------------------------------------------------------

FockState operator+(const FockState& a, const FockState& b);
LatticeState operator+(const LatticeState& a, const LatticeState& b);
WeylState operator+(const WeylState& a, const WeylState& b);
TensorState operator+(const TensorState& a, const TensorState& b);

FockState operator*(const Scalar& c, const FockState& s);
LatticeState operator*(const Scalar& c, const LatticeState& s);
WeylState operator*(const Scalar& c, const WeylState& s);
TensorState operator*(const Scalar& c, const TensorState& s);

inline FockState operator-(const FockState& a, const FockState& b) { return a + Scalar(-1) * b; }
inline LatticeState operator-(const LatticeState& a, const LatticeState& b) { return a + Scalar(-1) * b; }
inline WeylState operator-(const WeylState& a, const WeylState& b) { return a + Scalar(-1) * b; }
inline TensorState operator-(const TensorState& a, const TensorState& b) { return a + Scalar(-1) * b; }

// --- gradings and involutions ------------------------------------------------

// Multiplies each monomial by (-1)^{number of creation modes}. Requires
// momentum 0 on every term.
FockState theta_involution(const FockState& s);
// (s + sign*theta(s))/2.
FockState project_parity(const FockState& s, int sign);

// Terms whose Heisenberg depth equals d.
FockState depth_component(const FockState& s, HalfInt d);
LatticeState weight_component(const LatticeState& s, const Rational& w);
WeylState depth_component(const WeylState& s, HalfInt d);
TensorState depth_component(const TensorState& s, HalfInt d);

// Conformal weight of a homogeneous state (throws on mixed weights or zero):
// Fock weight = momentum^2/2 + depth (momentum must be constant or the
// formal variable; for the formal variable only depth-homogeneity is
// checked and the depth is returned).
Rational fock_depth(const FockState& s);      // common depth of all terms
Rational lattice_weight(const LatticeState& s);
Rational weyl_depth(const WeylState& s);
Rational tensor_depth(const TensorState& s);

// --- printing ----------------------------------------------------------------

std::string mono_str(const FockMono& m, Sector sector);
std::string mono_str(const LatticeMono& m);
std::string mono_str(const WeylMono& m);
std::string mono_str(const TensorMono& m);

std::string state_str(const FockState& s);
std::string state_str(const LatticeState& s);
std::string state_str(const WeylState& s);
std::string state_str(const TensorState& s);

}  // namespace voa
