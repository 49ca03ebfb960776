#pragma once

#include <optional>
#include <vector>

#include "voa/poly.hpp"
#include "voa/scalar.hpp"

namespace voa {

using ScalarRow = std::vector<Scalar>;

// Row-echelon elimination workspace over the exact scalar field. Rows are
// inserted one at a time; each is reduced against the pivots seen so far.
class Echelon {
public:
    explicit Echelon(size_t cols) : cols_(cols) {}

    // Reduces r in place against the current pivots; returns the residue.
    ScalarRow reduce(ScalarRow r) const;
    // Reduce and, if the residue is nonzero, keep it as a new pivot row.
    // Returns true when the row enlarged the span.
    bool insert(ScalarRow r);

    size_t rank() const { return rows_.size(); }
    size_t cols() const { return cols_; }

private:
    size_t cols_;
    std::vector<size_t> pivot_col_;
    std::vector<ScalarRow> rows_;  // each normalized to pivot 1
};

int exact_rank(const std::vector<ScalarRow>& rows, size_t cols);
bool in_row_span(const std::vector<ScalarRow>& rows, size_t cols, const ScalarRow& target);

// Fraction-free determinant of a square polynomial matrix (Bareiss).
Poly poly_det(std::vector<std::vector<Poly>> m);

}  // namespace voa
