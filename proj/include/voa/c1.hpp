#pragma once

#include <optional>
#include <string>
#include <vector>

#include "voa/fock.hpp"
#include "voa/linalg.hpp"
#include "voa/state.hpp"

namespace voa {

// Graded pieces of the subspace spanned by v_(-1) m with v running over the
// positive-weight part of the orbifold algebra and m over the module.

// Which module the rows act on.
struct C1Module {
    enum class Kind {
        parametric,    // momentum is the formal variable
        momentum,      // fixed momentum value
        orbifold_even, // parity +1 part of the vacuum module
        orbifold_odd,  // parity -1 part
        twisted_even,
        twisted_odd,
    };
    Kind kind = Kind::parametric;
    Scalar momentum;  // used by Kind::momentum

    std::string str() const;
};

struct C1Matrix {
    C1Module module;
    HalfInt depth;                     // target depth
    std::vector<FockMono> basis;       // monomial basis of the target component
    std::vector<ScalarRow> rows;       // coordinates of v_(-1) m
    std::vector<std::string> row_labels;
    long extra_weight_margin = 0;      // spanning set enlarged past the grading bound
};

// Basis of the target module component at the given depth.
std::vector<FockMono> module_basis(const C1Module& module, HalfInt depth);

// Rows v_(-1) m for homogeneous v in the even-parity algebra basis with
// 0 < wt(v) <= depth + margin and m of complementary depth.
C1Matrix c1_component(const C1Module& module, HalfInt depth, long weight_margin = 0);

struct RankReport {
    long generic_rank = 0;
    long ambient_dim = 0;
    // squarefree common factor of the maximal minors (empty form when the
    // rank never drops); meaningful for parametric matrices only
    std::optional<Poly> exceptional_candidates;
    std::vector<Quad> candidate_roots;  // roots found in Q and Q*sqrt2
    bool candidates_complete = true;    // false when the minor scan was capped
    std::vector<std::pair<Quad, long>> specializations;  // (momentum value, rank)
    bool specialization_coherent = true;
};

// Exact rank over the scalar field; for parametric matrices also the
// candidate exceptional locus from the gcd of all maximal minors, plus a
// specialization cross-check at sample rational momenta.
RankReport rank_analysis(const C1Matrix& mat);

struct TwistedTopReport {
    int sign = +1;
    struct Entry {
        long i = 0;
        HalfInt depth;
        long c1_rank = 0;
        long ambient = 0;
        bool excluded = false;  // top vector not in the graded c1 span
        long quotient_dim = 0;  // ambient - c1_rank
    };
    std::vector<Entry> entries;
    bool all_excluded() const {
        for (const auto& e : entries)
            if (!e.excluded) return false;
        return true;
    }
};

// For i <= i_max checks that h(-1/2)^{2i} 1 (resp. ^{2i+1}) has no
// component in the graded c1 span of the twisted module of that parity.
TwistedTopReport twisted_top_exclusion(int sign, long i_max);

struct CodimScan {
    long m = 0;
    struct Entry {
        long depth = 0;
        long rank = 0;
        long dim = 0;
        long codim = 0;
    };
    std::vector<Entry> entries;
    std::optional<long> stabilizes_at;  // least depth with codim 0 onward
};

// Per-depth codimension of the graded c1 span in the fixed-momentum module
// with momentum m/sqrt2.
CodimScan atypical_codim_scan(long m, long d_max);

}  // namespace voa
