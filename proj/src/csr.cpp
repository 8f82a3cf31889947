#include "tsg/csr.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tsg {

CsrMatrix csr_from_triplets(index_t nrows, index_t ncols, std::vector<Triplet> triplets,
                            const Semiring& sr) {
    for (const Triplet& t : triplets) {
        if (t.row < 0 || t.row >= nrows || t.col < 0 || t.col >= ncols) {
            throw std::invalid_argument("triplet index out of range: (" + std::to_string(t.row) +
                                        ", " + std::to_string(t.col) + ") in " +
                                        std::to_string(nrows) + "x" + std::to_string(ncols));
        }
    }
    // Stable sort keeps the input order of duplicates, which fixes the
    // combine order below.
    std::stable_sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    CsrMatrix m(nrows, ncols);
    m.col_indices.reserve(triplets.size());
    m.values.reserve(triplets.size());
    std::size_t i = 0;
    for (index_t r = 0; r < nrows; ++r) {
        while (i < triplets.size() && triplets[i].row == r) {
            index_t c = triplets[i].col;
            value_t v = triplets[i].value;
            ++i;
            while (i < triplets.size() && triplets[i].row == r && triplets[i].col == c) {
                v = sr.add(v, triplets[i].value);
                ++i;
            }
            if (!sr.is_zero(v)) {
                m.col_indices.push_back(c);
                m.values.push_back(v);
            }
        }
        m.row_offsets[r + 1] = static_cast<index_t>(m.col_indices.size());
    }
    return m;
}

std::vector<Triplet> to_triplets(const CsrMatrix& m) {
    std::vector<Triplet> out;
    out.reserve(static_cast<std::size_t>(m.nnz()));
    for (index_t r = 0; r < m.nrows; ++r) {
        for (index_t k = m.row_offsets[r]; k < m.row_offsets[r + 1]; ++k) {
            out.push_back({r, m.col_indices[k], m.values[k]});
        }
    }
    return out;
}

void validate(const CsrMatrix& m, const Semiring& sr) {
    auto fail = [](const std::string& what) { throw std::invalid_argument("invalid CSR: " + what); };
    if (m.nrows < 0 || m.ncols < 0) fail("negative dimension");
    if (static_cast<index_t>(m.row_offsets.size()) != m.nrows + 1) fail("row_offsets size");
    if (m.row_offsets.front() != 0) fail("row_offsets[0] != 0");
    if (m.row_offsets.back() != m.nnz()) fail("row_offsets[nrows] != nnz");
    if (m.values.size() != m.col_indices.size()) fail("values/col_indices size mismatch");
    for (index_t r = 0; r < m.nrows; ++r) {
        if (m.row_offsets[r] > m.row_offsets[r + 1]) fail("row_offsets decreasing");
        for (index_t k = m.row_offsets[r]; k < m.row_offsets[r + 1]; ++k) {
            if (m.col_indices[k] < 0 || m.col_indices[k] >= m.ncols) fail("column out of range");
            if (k > m.row_offsets[r] && m.col_indices[k - 1] >= m.col_indices[k]) {
                fail("columns not strictly increasing in row " + std::to_string(r));
            }
            if (sr.is_zero(m.values[k])) fail("stored additive identity");
        }
    }
}

CsrMatrix transpose(const CsrMatrix& m) {
    CsrMatrix t(m.ncols, m.nrows);
    t.col_indices.resize(static_cast<std::size_t>(m.nnz()));
    t.values.resize(static_cast<std::size_t>(m.nnz()));
    std::vector<index_t> count(static_cast<std::size_t>(m.ncols), 0);
    for (index_t c : m.col_indices) count[static_cast<std::size_t>(c)]++;
    for (index_t c = 0; c < m.ncols; ++c) t.row_offsets[c + 1] = t.row_offsets[c] + count[c];
    std::vector<index_t> cursor(t.row_offsets.begin(), t.row_offsets.end() - 1);
    for (index_t r = 0; r < m.nrows; ++r) {
        for (index_t k = m.row_offsets[r]; k < m.row_offsets[r + 1]; ++k) {
            index_t pos = cursor[static_cast<std::size_t>(m.col_indices[k])]++;
            t.col_indices[static_cast<std::size_t>(pos)] = r;
            t.values[static_cast<std::size_t>(pos)] = m.values[k];
        }
    }
    return t;
}

CsrMatrix extract_block(const CsrMatrix& m, index_t row_lo, index_t row_hi, index_t col_lo,
                        index_t col_hi) {
    if (row_lo < 0 || row_hi > m.nrows || row_lo > row_hi || col_lo < 0 || col_hi > m.ncols ||
        col_lo > col_hi) {
        throw std::invalid_argument("extract_block: range out of bounds");
    }
    CsrMatrix out(row_hi - row_lo, col_hi - col_lo);
    for (index_t r = row_lo; r < row_hi; ++r) {
        auto cols = m.row_cols(r);
        auto vals = m.row_values(r);
        auto first = std::lower_bound(cols.begin(), cols.end(), col_lo);
        auto last = std::lower_bound(first, cols.end(), col_hi);
        for (auto it = first; it != last; ++it) {
            out.col_indices.push_back(*it - col_lo);
            out.values.push_back(vals[static_cast<std::size_t>(it - cols.begin())]);
        }
        out.row_offsets[r - row_lo + 1] = static_cast<index_t>(out.col_indices.size());
    }
    return out;
}

CsrMatrix embed_rows(const CsrMatrix& part, index_t nrows_total, index_t row_offset) {
    if (row_offset < 0 || row_offset + part.nrows > nrows_total) {
        throw std::invalid_argument("embed_rows: rows out of bounds");
    }
    CsrMatrix out(nrows_total, part.ncols);
    out.col_indices = part.col_indices;
    out.values = part.values;
    for (index_t r = 0; r < part.nrows; ++r) {
        out.row_offsets[row_offset + r + 1] = part.row_offsets[r + 1];
    }
    for (index_t r = row_offset + part.nrows; r < nrows_total; ++r) {
        out.row_offsets[r + 1] = part.nnz();
    }
    return out;
}

CsrMatrix scale(const CsrMatrix& m, value_t factor, const Semiring& sr) {
    CsrMatrix out(m.nrows, m.ncols);
    out.col_indices.reserve(m.col_indices.size());
    out.values.reserve(m.values.size());
    for (index_t r = 0; r < m.nrows; ++r) {
        for (index_t k = m.row_offsets[r]; k < m.row_offsets[r + 1]; ++k) {
            value_t v = sr.mul(m.values[k], factor);
            if (!sr.is_zero(v)) {
                out.col_indices.push_back(m.col_indices[k]);
                out.values.push_back(v);
            }
        }
        out.row_offsets[r + 1] = static_cast<index_t>(out.col_indices.size());
    }
    return out;
}

} // namespace tsg
