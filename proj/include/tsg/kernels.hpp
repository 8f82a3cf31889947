#pragma once

#include <span>

#include "tsg/accumulators.hpp"
#include "tsg/csr.hpp"
#include "tsg/dense.hpp"

namespace tsg {

// Row-wise Gustavson product C = A * B under the given semiring. Output rows
// are independent; with threads > 1 they are computed by a pool of workers
// with private accumulators and assembled in row order, so the result does
// not depend on the thread count. Spa and Hash produce identical output.
CsrMatrix local_spgemm(const CsrMatrix& a, const CsrMatrix& b, const Semiring& sr,
                       AccumulatorKind kind, int threads = 1);

// Convenience overload picking the accumulator from b.ncols.
CsrMatrix local_spgemm(const CsrMatrix& a, const CsrMatrix& b, const Semiring& sr);

// Element-wise semiring add of two equally shaped matrices; entries hitting
// the additive identity are dropped.
CsrMatrix merge_partials(const CsrMatrix& target, const CsrMatrix& partial, const Semiring& sr);

// Accumulator-based k-way merge, equivalent to folding merge_partials over
// the inputs in order (bitwise, since the per-entry add sequence matches).
CsrMatrix merge_many(std::span<const CsrMatrix* const> parts, const Semiring& sr,
                     AccumulatorKind kind);

// Sparse-times-dense row kernel with the same semantics as local_spgemm.
DenseMatrix spmm_dense(const CsrMatrix& a, const DenseMatrix& b, const Semiring& sr);

// Entries of n whose positions are absent from s (pattern difference).
CsrMatrix ewise_setminus(const CsrMatrix& n, const CsrMatrix& s);

// Element-wise union; alias of merge_partials kept for the frontier update.
CsrMatrix ewise_union(const CsrMatrix& s, const CsrMatrix& n, const Semiring& sr);

// Keeps the keep_per_row largest-magnitude entries of each row; ties broken
// toward the smaller column index.
CsrMatrix sparsify_topk(const CsrMatrix& z, index_t keep_per_row);

} // namespace tsg
