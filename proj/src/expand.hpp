#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "voa/state.hpp"

// Internal: enumeration core for normal-ordered products of derivative
// fields of a single free boson. Each operator part m contributes one field
// factor d^{(m-1)} phi(z); an assignment gives factor i the mode j_i on the
// declared grid, with coefficient binom(-j_i - 1, m_i - 1). Annihilation
// choices are applied as the recursion descends (annihilation modes
// commute); creation modes are collected and prepended at the end.

namespace voa::detail {

// phi(k), k > 0, on a monomial: multiplicity * (k * pairing) * (monomial
// minus one part k). Returns nullopt when no part matches.
inline std::optional<std::pair<FockMono, Scalar>> heis_annihilate(const FockMono& m, HalfInt k,
                                                                  long pairing) {
    long mult = 0;
    size_t pos = 0;
    for (size_t i = 0; i < m.parts.size(); ++i) {
        if (m.parts[i] == k) {
            if (mult == 0) pos = i;
            ++mult;
        }
    }
    if (mult == 0) return std::nullopt;
    FockMono r = m;
    r.parts.erase(r.parts.begin() + static_cast<long>(pos));
    return std::make_pair(std::move(r), Scalar(rat(mult * pairing) * k.as_rational()));
}

inline FockMono heis_prepend(const FockMono& m, const std::vector<HalfInt>& creation) {
    FockMono r = m;
    r.parts.insert(r.parts.end(), creation.begin(), creation.end());
    std::sort(r.parts.begin(), r.parts.end(), std::greater<HalfInt>());
    return r;
}

struct NormalOrderExpansion {
    std::vector<long> factors;  // derivative field orders m_i (integers >= 1)
    long mode_twice_parity;     // 0: integer mode grid, 1: half-odd grid
    long pairing = 1;           // (phi,phi): 1 for alpha/h, 2 for gamma
    bool zero_is_momentum = true;  // phi(0) acts as the momentum eigenvalue
    HalfInt vdepth;                // depth of the module monomial
    LinComb<FockMono>* out = nullptr;

    std::vector<HalfInt> creation;

    void run(size_t i, const FockMono& cur, const Scalar& coeff, HalfInt sum_needed) {
        if (coeff.is_zero()) return;
        if (i == factors.size()) {
            if (sum_needed.twice() != 0) return;
            out->add(heis_prepend(cur, creation), coeff);
            return;
        }
        long m = factors[i];
        long left = static_cast<long>(factors.size() - i - 1);
        // Later factors annihilate at most vdepth in total; anything below
        // lo cannot be compensated.
        HalfInt lo = sum_needed - left * vdepth;
        unsigned dord = static_cast<unsigned>(m - 1);

        // creation choices j < 0 on the grid
        long start = lo.twice();
        // align to grid parity
        if (((start % 2) + 2) % 2 != mode_twice_parity) ++start;
        for (long jt = start; jt < 0; jt += 2) {
            HalfInt j = HalfInt::from_twice(jt);
            Scalar f = coeff * Scalar(binom(-j.as_rational() - 1, dord));
            creation.push_back(-j);
            run(i + 1, cur, f, sum_needed - j);
            creation.pop_back();
        }
        // zero mode (integer grid only)
        if (mode_twice_parity == 0 && zero_is_momentum && HalfInt(0) >= lo) {
            Scalar f = coeff * cur.momentum * Scalar(binom(rat(-1), dord));
            run(i + 1, cur, f, sum_needed);
        }
        // annihilation: only part values of the current monomial contribute
        std::vector<HalfInt> seen;
        for (HalfInt p : cur.parts) {
            if (std::find(seen.begin(), seen.end(), p) != seen.end()) continue;
            seen.push_back(p);
            if (p < lo) continue;
            auto hit = heis_annihilate(cur, p, pairing);
            Scalar f = coeff * hit->second * Scalar(binom(-p.as_rational() - 1, dord));
            run(i + 1, hit->first, f, sum_needed - p);
        }
    }
};

}  // namespace voa::detail
