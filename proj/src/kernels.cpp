#include "tsg/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace tsg {

namespace {

struct RowChunk {
    std::vector<index_t> cols;
    std::vector<value_t> vals;
    std::vector<index_t> row_nnz;
};

template <class Acc>
void accumulate_row(const CsrMatrix& a, const CsrMatrix& b, const Semiring& sr, Acc& acc,
                    index_t r) {
    auto acols = a.row_cols(r);
    auto avals = a.row_values(r);
    for (std::size_t k = 0; k < acols.size(); ++k) {
        index_t c = acols[k];
        value_t av = avals[k];
        auto bcols = b.row_cols(c);
        auto bvals = b.row_values(c);
        for (std::size_t j = 0; j < bcols.size(); ++j) {
            acc.add(bcols[j], sr.mul(av, bvals[j]));
        }
    }
}

RowChunk spgemm_chunk(const CsrMatrix& a, const CsrMatrix& b, const Semiring& sr,
                      AccumulatorKind kind, index_t row_lo, index_t row_hi) {
    RowChunk out;
    out.row_nnz.reserve(static_cast<std::size_t>(row_hi - row_lo));
    if (kind == AccumulatorKind::Spa) {
        SpaAccumulator acc(b.ncols, sr);
        for (index_t r = row_lo; r < row_hi; ++r) {
            acc.clear();
            accumulate_row(a, b, sr, acc, r);
            std::size_t before = out.cols.size();
            acc.emit(out.cols, out.vals);
            out.row_nnz.push_back(static_cast<index_t>(out.cols.size() - before));
        }
    } else {
        HashAccumulator acc(sr);
        for (index_t r = row_lo; r < row_hi; ++r) {
            index_t flops = 0;
            for (index_t c : a.row_cols(r)) flops += b.row_nnz(c);
            acc.reserve(flops);
            accumulate_row(a, b, sr, acc, r);
            std::size_t before = out.cols.size();
            acc.emit(out.cols, out.vals);
            out.row_nnz.push_back(static_cast<index_t>(out.cols.size() - before));
        }
    }
    return out;
}

} // namespace

CsrMatrix local_spgemm(const CsrMatrix& a, const CsrMatrix& b, const Semiring& sr,
                       AccumulatorKind kind, int threads) {
    if (a.ncols != b.nrows) {
        throw std::invalid_argument("local_spgemm: inner dimensions differ");
    }
    int t = std::max(1, std::min<int>(threads, static_cast<int>(std::max<index_t>(a.nrows, 1))));

    std::vector<RowChunk> chunks(static_cast<std::size_t>(t));
    if (t == 1) {
        chunks[0] = spgemm_chunk(a, b, sr, kind, 0, a.nrows);
    } else {
        index_t per = (a.nrows + t - 1) / t;
        std::vector<std::thread> pool;
        for (int i = 0; i < t; ++i) {
            index_t lo = std::min<index_t>(i * per, a.nrows);
            index_t hi = std::min<index_t>(lo + per, a.nrows);
            pool.emplace_back([&, i, lo, hi] { chunks[static_cast<std::size_t>(i)] = spgemm_chunk(a, b, sr, kind, lo, hi); });
        }
        for (auto& th : pool) th.join();
    }

    CsrMatrix c(a.nrows, b.ncols);
    std::size_t total = 0;
    for (const RowChunk& ch : chunks) total += ch.cols.size();
    c.col_indices.reserve(total);
    c.values.reserve(total);
    index_t r = 0;
    for (const RowChunk& ch : chunks) {
        c.col_indices.insert(c.col_indices.end(), ch.cols.begin(), ch.cols.end());
        c.values.insert(c.values.end(), ch.vals.begin(), ch.vals.end());
        for (index_t rn : ch.row_nnz) {
            c.row_offsets[r + 1] = c.row_offsets[r] + rn;
            ++r;
        }
    }
    return c;
}

CsrMatrix local_spgemm(const CsrMatrix& a, const CsrMatrix& b, const Semiring& sr) {
    return local_spgemm(a, b, sr, choose_accumulator(b.ncols));
}

CsrMatrix merge_partials(const CsrMatrix& target, const CsrMatrix& partial, const Semiring& sr) {
    if (target.nrows != partial.nrows || target.ncols != partial.ncols) {
        throw std::invalid_argument("merge_partials: shape mismatch");
    }
    CsrMatrix out(target.nrows, target.ncols);
    out.col_indices.reserve(target.col_indices.size() + partial.col_indices.size());
    out.values.reserve(out.col_indices.capacity());
    for (index_t r = 0; r < target.nrows; ++r) {
        index_t i = target.row_offsets[r], iend = target.row_offsets[r + 1];
        index_t j = partial.row_offsets[r], jend = partial.row_offsets[r + 1];
        while (i < iend || j < jend) {
            if (j >= jend || (i < iend && target.col_indices[i] < partial.col_indices[j])) {
                out.col_indices.push_back(target.col_indices[i]);
                out.values.push_back(target.values[i]);
                ++i;
            } else if (i >= iend || partial.col_indices[j] < target.col_indices[i]) {
                out.col_indices.push_back(partial.col_indices[j]);
                out.values.push_back(partial.values[j]);
                ++j;
            } else {
                value_t v = sr.add(target.values[i], partial.values[j]);
                if (!sr.is_zero(v)) {
                    out.col_indices.push_back(target.col_indices[i]);
                    out.values.push_back(v);
                }
                ++i;
                ++j;
            }
        }
        out.row_offsets[r + 1] = static_cast<index_t>(out.col_indices.size());
    }
    return out;
}

CsrMatrix merge_many(std::span<const CsrMatrix* const> parts, const Semiring& sr,
                     AccumulatorKind kind) {
    if (parts.empty()) throw std::invalid_argument("merge_many: no inputs");
    const CsrMatrix& first = *parts.front();
    for (const CsrMatrix* p : parts) {
        if (p->nrows != first.nrows || p->ncols != first.ncols) {
            throw std::invalid_argument("merge_many: shape mismatch");
        }
    }
    CsrMatrix out(first.nrows, first.ncols);
    auto merge_rows = [&](auto& acc, index_t r) {
        for (const CsrMatrix* p : parts) {
            auto cols = p->row_cols(r);
            auto vals = p->row_values(r);
            for (std::size_t k = 0; k < cols.size(); ++k) acc.add(cols[k], vals[k]);
        }
        acc.emit(out.col_indices, out.values);
        out.row_offsets[r + 1] = static_cast<index_t>(out.col_indices.size());
    };
    if (kind == AccumulatorKind::Spa) {
        SpaAccumulator acc(first.ncols, sr);
        for (index_t r = 0; r < first.nrows; ++r) {
            acc.clear();
            merge_rows(acc, r);
        }
    } else {
        HashAccumulator acc(sr);
        for (index_t r = 0; r < first.nrows; ++r) {
            index_t bound = 0;
            for (const CsrMatrix* p : parts) bound += p->row_nnz(r);
            acc.reserve(bound);
            merge_rows(acc, r);
        }
    }
    return out;
}

DenseMatrix spmm_dense(const CsrMatrix& a, const DenseMatrix& b, const Semiring& sr) {
    if (a.ncols != b.nrows) {
        throw std::invalid_argument("spmm_dense: inner dimensions differ");
    }
    DenseMatrix c(a.nrows, b.ncols, sr.zero);
    for (index_t r = 0; r < a.nrows; ++r) {
        auto cols = a.row_cols(r);
        auto vals = a.row_values(r);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            value_t av = vals[k];
            const value_t* brow = &b.data[static_cast<std::size_t>(cols[k] * b.ncols)];
            value_t* crow = &c.data[static_cast<std::size_t>(r * c.ncols)];
            for (index_t j = 0; j < b.ncols; ++j) {
                crow[j] = sr.add(crow[j], sr.mul(av, brow[j]));
            }
        }
    }
    return c;
}

CsrMatrix ewise_setminus(const CsrMatrix& n, const CsrMatrix& s) {
    if (n.nrows != s.nrows || n.ncols != s.ncols) {
        throw std::invalid_argument("ewise_setminus: shape mismatch");
    }
    CsrMatrix out(n.nrows, n.ncols);
    out.col_indices.reserve(n.col_indices.size());
    out.values.reserve(n.values.size());
    for (index_t r = 0; r < n.nrows; ++r) {
        index_t i = n.row_offsets[r], iend = n.row_offsets[r + 1];
        index_t j = s.row_offsets[r], jend = s.row_offsets[r + 1];
        while (i < iend) {
            while (j < jend && s.col_indices[j] < n.col_indices[i]) ++j;
            if (j >= jend || s.col_indices[j] != n.col_indices[i]) {
                out.col_indices.push_back(n.col_indices[i]);
                out.values.push_back(n.values[i]);
            }
            ++i;
        }
        out.row_offsets[r + 1] = static_cast<index_t>(out.col_indices.size());
    }
    return out;
}

CsrMatrix ewise_union(const CsrMatrix& s, const CsrMatrix& n, const Semiring& sr) {
    return merge_partials(s, n, sr);
}

CsrMatrix sparsify_topk(const CsrMatrix& z, index_t keep_per_row) {
    if (keep_per_row < 0) throw std::invalid_argument("sparsify_topk: keep_per_row must be >= 0");
    CsrMatrix out(z.nrows, z.ncols);
    std::vector<std::pair<index_t, value_t>> row;
    for (index_t r = 0; r < z.nrows; ++r) {
        index_t rn = z.row_nnz(r);
        if (rn <= keep_per_row) {
            auto cols = z.row_cols(r);
            auto vals = z.row_values(r);
            out.col_indices.insert(out.col_indices.end(), cols.begin(), cols.end());
            out.values.insert(out.values.end(), vals.begin(), vals.end());
        } else if (keep_per_row > 0) {
            row.clear();
            auto cols = z.row_cols(r);
            auto vals = z.row_values(r);
            for (std::size_t k = 0; k < cols.size(); ++k) row.emplace_back(cols[k], vals[k]);
            std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) {
                double ma = std::fabs(a.second), mb = std::fabs(b.second);
                return ma != mb ? ma > mb : a.first < b.first;
            });
            row.resize(static_cast<std::size_t>(keep_per_row));
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            for (const auto& [c, v] : row) {
                out.col_indices.push_back(c);
                out.values.push_back(v);
            }
        }
        out.row_offsets[r + 1] = static_cast<index_t>(out.col_indices.size());
    }
    return out;
}

} // namespace tsg
