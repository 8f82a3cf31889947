#pragma once

#include <vector>

#include "tsg/csr.hpp"
#include "tsg/semiring.hpp"
#include "tsg/types.hpp"

namespace tsg {

// Row-major dense matrix; the reference container for oracle checks and the
// SpMM path.
struct DenseMatrix {
    index_t nrows = 0;
    index_t ncols = 0;
    std::vector<value_t> data;

    DenseMatrix() = default;
    DenseMatrix(index_t rows, index_t cols, value_t fill = 0.0)
        : nrows(rows), ncols(cols), data(static_cast<std::size_t>(rows * cols), fill) {}

    value_t& at(index_t r, index_t c) { return data[static_cast<std::size_t>(r * ncols + c)]; }
    value_t at(index_t r, index_t c) const { return data[static_cast<std::size_t>(r * ncols + c)]; }

    bool operator==(const DenseMatrix&) const = default;
};

DenseMatrix densify(const CsrMatrix& m);

// Converts back to canonical CSR, dropping entries equal to the semiring zero.
CsrMatrix sparsify(const DenseMatrix& m, const Semiring& sr);

// Reference triple-loop product. Every equivalence test in the suite checks
// against this path.
DenseMatrix dense_matmul_oracle(const DenseMatrix& a, const DenseMatrix& b, const Semiring& sr);

// Largest absolute entry-wise difference; matrices must have equal shape.
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

} // namespace tsg
