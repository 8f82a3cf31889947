#include "tsg/dense.hpp"

#include <cmath>
#include <stdexcept>

namespace tsg {

DenseMatrix densify(const CsrMatrix& m) {
    DenseMatrix out(m.nrows, m.ncols, 0.0);
    for (index_t r = 0; r < m.nrows; ++r) {
        for (index_t k = m.row_offsets[r]; k < m.row_offsets[r + 1]; ++k) {
            out.at(r, m.col_indices[k]) = m.values[k];
        }
    }
    return out;
}

CsrMatrix sparsify(const DenseMatrix& m, const Semiring& sr) {
    CsrMatrix out(m.nrows, m.ncols);
    for (index_t r = 0; r < m.nrows; ++r) {
        for (index_t c = 0; c < m.ncols; ++c) {
            value_t v = m.at(r, c);
            if (!sr.is_zero(v)) {
                out.col_indices.push_back(c);
                out.values.push_back(v);
            }
        }
        out.row_offsets[r + 1] = static_cast<index_t>(out.col_indices.size());
    }
    return out;
}

DenseMatrix dense_matmul_oracle(const DenseMatrix& a, const DenseMatrix& b, const Semiring& sr) {
    if (a.ncols != b.nrows) {
        throw std::invalid_argument("dense_matmul_oracle: inner dimensions differ");
    }
    DenseMatrix c(a.nrows, b.ncols, sr.zero);
    for (index_t i = 0; i < a.nrows; ++i) {
        for (index_t k = 0; k < a.ncols; ++k) {
            value_t av = a.at(i, k);
            if (av == 0.0) continue;
            for (index_t j = 0; j < b.ncols; ++j) {
                c.at(i, j) = sr.add(c.at(i, j), sr.mul(av, b.at(k, j)));
            }
        }
    }
    return c;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.nrows != b.nrows || a.ncols != b.ncols) {
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        worst = std::max(worst, std::fabs(a.data[i] - b.data[i]));
    }
    return worst;
}

} // namespace tsg
