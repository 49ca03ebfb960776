#include "voa/linalg.hpp"

#include <stdexcept>

namespace voa {

ScalarRow Echelon::reduce(ScalarRow r) const {
    if (r.size() != cols_) throw std::invalid_argument("Echelon: column count mismatch");
    for (size_t k = 0; k < rows_.size(); ++k) {
        const Scalar& c = r[pivot_col_[k]];
        if (c.is_zero()) continue;
        Scalar f = c;  // pivot rows are normalized
        for (size_t j = 0; j < cols_; ++j) {
            if (!rows_[k][j].is_zero()) r[j] -= f * rows_[k][j];
        }
    }
    return r;
}

bool Echelon::insert(ScalarRow r) {
    r = reduce(std::move(r));
    size_t p = cols_;
    for (size_t j = 0; j < cols_; ++j) {
        if (!r[j].is_zero()) {
            p = j;
            break;
        }
    }
    if (p == cols_) return false;
    Scalar inv = r[p].inverse();
    for (size_t j = p; j < cols_; ++j) r[j] *= inv;
    pivot_col_.push_back(p);
    rows_.push_back(std::move(r));
    return true;
}

int exact_rank(const std::vector<ScalarRow>& rows, size_t cols) {
    Echelon e(cols);
    for (const auto& r : rows) e.insert(r);
    return static_cast<int>(e.rank());
}

bool in_row_span(const std::vector<ScalarRow>& rows, size_t cols, const ScalarRow& target) {
    Echelon e(cols);
    for (const auto& r : rows) e.insert(r);
    ScalarRow res = e.reduce(target);
    for (const auto& c : res)
        if (!c.is_zero()) return false;
    return true;
}

Poly poly_det(std::vector<std::vector<Poly>> m) {
    size_t n = m.size();
    for (const auto& r : m)
        if (r.size() != n) throw std::invalid_argument("poly_det: matrix not square");
    if (n == 0) return Poly(Quad(1));
    Poly prev(Quad(1));
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        // pivot selection: any nonzero entry in column k at row >= k
        size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return Poly();  // singular
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto [q, r] = num.divmod(prev);
                if (!r.is_zero()) throw std::logic_error("poly_det: fraction-free step failed");
                m[i][j] = q;
            }
            m[i][k] = Poly();
        }
        prev = m[k][k];
    }
    Poly d = m[n - 1][n - 1];
    return sign > 0 ? d : -d;
}

}  // namespace voa
