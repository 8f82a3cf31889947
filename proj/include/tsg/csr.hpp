#pragma once

#include <span>
#include <vector>

#include "tsg/semiring.hpp"
#include "tsg/types.hpp"

namespace tsg {

struct Triplet {
    index_t row;
    index_t col;
    value_t value;
};

// Compressed sparse row matrix in canonical form:
//   - row_offsets non-decreasing, row_offsets[0] == 0, row_offsets[nrows] == nnz
//   - column indices strictly increasing within a row
//   - every column index < ncols
//   - no stored value equal to the semiring's additive identity
struct CsrMatrix {
    index_t nrows = 0;
    index_t ncols = 0;
    std::vector<index_t> row_offsets;
    std::vector<index_t> col_indices;
    std::vector<value_t> values;

    CsrMatrix() : row_offsets(1, 0) {}
    CsrMatrix(index_t rows, index_t cols) : nrows(rows), ncols(cols), row_offsets(rows + 1, 0) {}

    index_t nnz() const { return static_cast<index_t>(col_indices.size()); }
    index_t row_nnz(index_t r) const { return row_offsets[r + 1] - row_offsets[r]; }

    std::span<const index_t> row_cols(index_t r) const {
        return {col_indices.data() + row_offsets[r], static_cast<std::size_t>(row_nnz(r))};
    }
    std::span<const value_t> row_values(index_t r) const {
        return {values.data() + row_offsets[r], static_cast<std::size_t>(row_nnz(r))};
    }

    bool operator==(const CsrMatrix&) const = default;
};

// Builds canonical CSR. Duplicate (row, col) entries are combined with the
// semiring add in their input order; entries equal to the semiring zero are
// dropped. Throws std::invalid_argument on out-of-range indices.
CsrMatrix csr_from_triplets(index_t nrows, index_t ncols, std::vector<Triplet> triplets,
                            const Semiring& sr);

std::vector<Triplet> to_triplets(const CsrMatrix& m);

// Throws std::invalid_argument if m violates any canonical-form invariant.
void validate(const CsrMatrix& m, const Semiring& sr);

CsrMatrix transpose(const CsrMatrix& m);

// Copies the sub-block [row_lo, row_hi) x [col_lo, col_hi); indices in the
// result are local to the block.
CsrMatrix extract_block(const CsrMatrix& m, index_t row_lo, index_t row_hi, index_t col_lo,
                        index_t col_hi);

// Re-homes a block of rows into a taller matrix: result has nrows_total rows
// with `part`'s rows placed starting at row_offset.
CsrMatrix embed_rows(const CsrMatrix& part, index_t nrows_total, index_t row_offset);

// Multiplies every stored value by factor (entries hitting the semiring zero
// are dropped; factor 0 empties the matrix).
CsrMatrix scale(const CsrMatrix& m, value_t factor, const Semiring& sr);

} // namespace tsg
