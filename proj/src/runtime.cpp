#include "tsg/runtime.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "tsg/kernels.hpp"

namespace tsg {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void check_square_pair(const DistMatrix& a, index_t b_rows, const Partition1D& b_part) {
    if (a.ncols != a.nrows()) {
        throw std::invalid_argument("A must be square");
    }
    if (a.nrows() != b_rows || a.partition.boundaries != b_part.boundaries) {
        throw std::invalid_argument("A and B must share the row partition");
    }
}

void check_column_copy(const DistMatrix& a, const std::vector<CsrMatrix>& slices) {
    if (static_cast<index_t>(slices.size()) != a.partition.p) {
        throw std::invalid_argument("column copy missing: wrong slice count");
    }
    for (index_t j = 0; j < a.partition.p; ++j) {
        const CsrMatrix& s = slices[static_cast<std::size_t>(j)];
        if (s.nrows != a.nrows() || s.ncols != a.partition.size(j)) {
            throw std::invalid_argument("column copy mismatched for rank " + std::to_string(j));
        }
    }
}

struct ResolvedOptions {
    index_t h;
    index_t w;
    index_t rounds;
};

ResolvedOptions resolve(const MultiplyOptions& opts, const Partition1D& part) {
    index_t n = part.total();
    index_t block = part.max_block();
    ResolvedOptions r;
    r.h = opts.h > 0 ? opts.h : block;
    r.w = opts.w > 0 ? opts.w : std::min<index_t>(16 * block, n);
    if (r.h < 1 || r.h > block) throw std::invalid_argument("tile height out of range");
    if (r.w < 1 || r.w > n) throw std::invalid_argument("tile width out of range");
    r.rounds = (n + r.w - 1) / r.w;
    return r;
}

// Assembles a rank's slice of B (width x d) from rows received this round;
// duplicate rows (one per requesting tile) carry identical payloads.
CsrMatrix assemble_b_slice(std::vector<const WireSparseRow*> rows, index_t base, index_t width,
                           index_t d) {
    std::sort(rows.begin(), rows.end(),
              [](const WireSparseRow* a, const WireSparseRow* b) { return a->row < b->row; });
    rows.erase(std::unique(rows.begin(), rows.end(),
                           [](const WireSparseRow* a, const WireSparseRow* b) {
                               return a->row == b->row;
                           }),
               rows.end());
    CsrMatrix slice(width, d);
    for (const WireSparseRow* row : rows) {
        index_t lr = row->row - base;
        for (const auto& [c, v] : row->entries) {
            slice.col_indices.push_back(c);
            slice.values.push_back(v);
        }
        slice.row_offsets[lr + 1] = static_cast<index_t>(row->entries.size());
    }
    for (index_t r = 0; r < width; ++r) slice.row_offsets[r + 1] += slice.row_offsets[r];
    return slice;
}

} // namespace

DistMatrix ts_spgemm_naive(DistContext& ctx, const DistMatrix& a, const DistMatrix& b,
                           const Semiring& sr, NaiveStats* stats) {
    check_square_pair(a, b.nrows(), b.partition);
    const index_t p = ctx.ranks();
    if (a.partition.p != p) throw std::invalid_argument("partition/context mismatch");
    const index_t n = a.nrows();
    const index_t d = b.ncols;
    auto t_total = Clock::now();

    NaiveStats local_stats;
    local_stats.request_indices_per_rank.assign(static_cast<std::size_t>(p), 0);

    // Round 1: request the needed B-row indices.
    auto t0 = Clock::now();
    ctx.run_ranks([&](index_t i) {
        const CsrMatrix& block = a.blocks[static_cast<std::size_t>(i)];
        std::vector<index_t> nzc = nonzero_columns(block, 0, block.nrows, 0, n);
        std::vector<std::vector<WireIndex>> out(static_cast<std::size_t>(p));
        for (index_t c : nzc) {
            out[static_cast<std::size_t>(a.partition.owner_of(c))].push_back({c});
        }
        local_stats.request_indices_per_rank[static_cast<std::size_t>(i)] =
            static_cast<std::int64_t>(nzc.size());
        ctx.submit<WireIndex>(i, std::move(out));
    });
    auto requests = ctx.exchange<WireIndex>(Phase::BTransfer);

    // Round 2: answer with the requested rows.
    ctx.run_ranks([&](index_t j) {
        const CsrMatrix& bb = b.blocks[static_cast<std::size_t>(j)];
        index_t base = b.partition.begin(j);
        std::vector<std::vector<WireSparseRow>> out(static_cast<std::size_t>(p));
        for (index_t src = 0; src < p; ++src) {
            for (const WireIndex& req :
                 requests.data[static_cast<std::size_t>(j)][static_cast<std::size_t>(src)]) {
                index_t lr = req.index - base;
                if (lr < 0 || lr >= bb.nrows) {
                    throw std::invalid_argument("naive: requested row outside owner block");
                }
                WireSparseRow row{req.index, {}};
                auto cols = bb.row_cols(lr);
                auto vals = bb.row_values(lr);
                row.entries.reserve(cols.size());
                for (std::size_t k = 0; k < cols.size(); ++k) row.entries.emplace_back(cols[k], vals[k]);
                out[static_cast<std::size_t>(src)].push_back(std::move(row));
            }
        }
        ctx.submit<WireSparseRow>(j, std::move(out));
    });
    auto rows = ctx.exchange<WireSparseRow>(Phase::BTransfer);
    local_stats.times.b_transfer = seconds_since(t0);

    // Local Gustavson against the gathered rows.
    t0 = Clock::now();
    DistMatrix c;
    c.partition = a.partition;
    c.ncols = d;
    c.blocks.resize(static_cast<std::size_t>(p));
    AccumulatorKind kind = choose_accumulator(d);
    ctx.run_ranks([&](index_t i) {
        std::vector<const WireSparseRow*> received;
        for (index_t src = 0; src < p; ++src) {
            for (const WireSparseRow& row :
                 rows.data[static_cast<std::size_t>(i)][static_cast<std::size_t>(src)]) {
                received.push_back(&row);
            }
        }
        CsrMatrix b_gathered = assemble_b_slice(std::move(received), 0, n, d);
        c.blocks[static_cast<std::size_t>(i)] =
            local_spgemm(a.blocks[static_cast<std::size_t>(i)], b_gathered, sr, kind);
    });
    local_stats.times.compute = seconds_since(t0);
    local_stats.times.total = seconds_since(t_total);

    std::int64_t cross = 0;
    for (index_t i = 0; i < p; ++i) {
        for (index_t j = 0; j < p; ++j) {
            if (i != j) {
                cross += static_cast<std::int64_t>(
                    requests.data[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)].size());
            }
        }
    }
    local_stats.cross_rank_request_indices = cross;
    if (stats) *stats = std::move(local_stats);
    return c;
}

DistMatrix dist_ts_spgemm(DistContext& ctx, const DistMatrix& a,
                          const std::vector<CsrMatrix>& a_col_slices, const DistMatrix& b,
                          const Semiring& sr, const MultiplyOptions& opts, ProductStats* stats,
                          std::vector<RankTileSet>* geometry) {
    check_square_pair(a, b.nrows(), b.partition);
    check_column_copy(a, a_col_slices);
    const index_t p = ctx.ranks();
    if (a.partition.p != p) throw std::invalid_argument("partition/context mismatch");
    const Partition1D& part = a.partition;
    const index_t d = b.ncols;
    const ResolvedOptions res = resolve(opts, part);
    const AccumulatorKind kind = opts.accumulator.value_or(choose_accumulator(d));
    const std::vector<std::pair<index_t, index_t>>* windows =
        opts.row_windows ? &*opts.row_windows : nullptr;
    auto t_total = Clock::now();

    ProductStats local_stats;
    local_stats.tile_rounds = res.rounds;

    // Tile geometry, reusable across calls with the same A, h, w, windows.
    auto t0 = Clock::now();
    std::vector<RankTileSet> own_geometry;
    std::vector<RankTileSet>* geom = geometry ? geometry : &own_geometry;
    if (geom->empty()) {
        geom->resize(static_cast<std::size_t>(p));
        ctx.run_ranks([&](index_t r) {
            (*geom)[static_cast<std::size_t>(r)] =
                generate_tiles(a.blocks[static_cast<std::size_t>(r)],
                               a_col_slices[static_cast<std::size_t>(r)], res.h, res.w, part, r,
                               windows);
        });
    }
    decide_modes(ctx, *geom, a_col_slices, b.blocks, part, opts.policy);
    local_stats.tiles = census(*geom);
    local_stats.times.symbolic = seconds_since(t0);

    // Group tiles by round once.
    std::vector<std::vector<std::vector<const TileDescriptor*>>> owned_by_round(
        static_cast<std::size_t>(p)),
        computed_by_round(static_cast<std::size_t>(p));
    for (index_t r = 0; r < p; ++r) {
        owned_by_round[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(res.rounds));
        computed_by_round[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(res.rounds));
        for (const TileDescriptor& t : (*geom)[static_cast<std::size_t>(r)].owned.tiles) {
            owned_by_round[static_cast<std::size_t>(r)][static_cast<std::size_t>(t.tile_round)]
                .push_back(&t);
        }
        for (const TileDescriptor& t : (*geom)[static_cast<std::size_t>(r)].computed.tiles) {
            computed_by_round[static_cast<std::size_t>(r)][static_cast<std::size_t>(t.tile_round)]
                .push_back(&t);
        }
    }

    DistMatrix c;
    c.partition = part;
    c.ncols = d;
    c.blocks.resize(static_cast<std::size_t>(p));
    for (index_t r = 0; r < p; ++r) {
        c.blocks[static_cast<std::size_t>(r)] = CsrMatrix(part.size(r), d);
    }

    std::vector<std::int64_t> peak_per_rank(static_cast<std::size_t>(p), 0);
    for (index_t round = 0; round < res.rounds; ++round) {
        // Compute side: remote tiles multiply against resident B rows and
        // stage C partials; local tiles stage the B rows their owner needs.
        auto t_compute = Clock::now();
        ctx.run_ranks([&](index_t j) {
            std::vector<std::vector<WireSparseRow>> out_rows(static_cast<std::size_t>(p));
            std::vector<std::vector<WireTriplet>> out_partials(static_cast<std::size_t>(p));
            index_t cbase = part.begin(j);
            const CsrMatrix& acol = a_col_slices[static_cast<std::size_t>(j)];
            const CsrMatrix& bb = b.blocks[static_cast<std::size_t>(j)];
            for (const TileDescriptor* t :
                 computed_by_round[static_cast<std::size_t>(j)][static_cast<std::size_t>(round)]) {
                if (t->mode == TileMode::Diagonal) continue;
                if (t->mode == TileMode::Remote) {
                    CsrMatrix a_sub = extract_block(acol, t->row_lo, t->row_hi, t->col_lo - cbase,
                                                    t->col_hi - cbase);
                    CsrMatrix b_sub =
                        extract_block(bb, t->col_lo - cbase, t->col_hi - cbase, 0, d);
                    CsrMatrix partial = local_spgemm(a_sub, b_sub, sr, kind);
                    index_t obase = part.begin(t->owner_rank);
                    auto& out = out_partials[static_cast<std::size_t>(t->owner_rank)];
                    for (index_t rr = 0; rr < partial.nrows; ++rr) {
                        for (index_t k = partial.row_offsets[rr]; k < partial.row_offsets[rr + 1];
                             ++k) {
                            out.push_back({t->row_lo - obase + rr, partial.col_indices[k],
                                           partial.values[k]});
                        }
                    }
                } else {
                    auto& out = out_rows[static_cast<std::size_t>(t->owner_rank)];
                    for (index_t lc : nonzero_columns(acol, t->row_lo, t->row_hi,
                                                      t->col_lo - cbase, t->col_hi - cbase)) {
                        WireSparseRow row{cbase + lc, {}};
                        auto cols = bb.row_cols(lc);
                        auto vals = bb.row_values(lc);
                        row.entries.reserve(cols.size());
                        for (std::size_t k = 0; k < cols.size(); ++k) {
                            row.entries.emplace_back(cols[k], vals[k]);
                        }
                        out.push_back(std::move(row));
                    }
                }
            }
            ctx.submit<WireSparseRow>(j, std::move(out_rows));
            ctx.submit<WireTriplet>(j, std::move(out_partials));
        });
        local_stats.times.compute += seconds_since(t_compute);

        auto t_b = Clock::now();
        auto ex_rows = ctx.exchange<WireSparseRow>(Phase::BTransfer);
        local_stats.times.b_transfer += seconds_since(t_b);
        auto t_c = Clock::now();
        auto ex_partials = ctx.exchange<WireTriplet>(Phase::CReturn);
        local_stats.times.c_return += seconds_since(t_c);

        // Owner side: merge remote partials and multiply local and diagonal
        // tiles; merge order is ascending compute rank, remote partial first.
        t_compute = Clock::now();
        ctx.run_ranks([&](index_t i) {
            std::int64_t buffered = ex_rows.received_elements[static_cast<std::size_t>(i)] +
                                    ex_partials.received_elements[static_cast<std::size_t>(i)];
            peak_per_rank[static_cast<std::size_t>(i)] =
                std::max(peak_per_rank[static_cast<std::size_t>(i)], buffered);

            const CsrMatrix& ab = a.blocks[static_cast<std::size_t>(i)];
            const index_t rbase = part.begin(i);
            const index_t rows_i = part.size(i);
            auto owned = owned_by_round[static_cast<std::size_t>(i)][static_cast<std::size_t>(round)];

            std::vector<CsrMatrix> partials;
            for (index_t j = 0; j < p; ++j) {
                if (j == i) {
                    for (const TileDescriptor* t : owned) {
                        if (t->mode != TileMode::Diagonal) continue;
                        CsrMatrix a_sub = extract_block(ab, t->row_lo - rbase, t->row_hi - rbase,
                                                        t->col_lo, t->col_hi);
                        CsrMatrix b_sub = extract_block(b.blocks[static_cast<std::size_t>(i)],
                                                        t->col_lo - part.begin(i),
                                                        t->col_hi - part.begin(i), 0, d);
                        partials.push_back(
                            embed_rows(local_spgemm(a_sub, b_sub, sr, kind), rows_i,
                                       t->row_lo - rbase));
                    }
                    continue;
                }
                auto& trip_batch =
                    ex_partials.data[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (!trip_batch.empty()) {
                    std::vector<Triplet> trips;
                    trips.reserve(trip_batch.size());
                    for (const WireTriplet& t : trip_batch) trips.push_back({t.row, t.col, t.value});
                    partials.push_back(csr_from_triplets(rows_i, d, std::move(trips), sr));
                }
                CsrMatrix b_slice;
                bool b_slice_ready = false;
                for (const TileDescriptor* t : owned) {
                    if (t->mode != TileMode::Local || t->compute_rank != j) continue;
                    if (!b_slice_ready) {
                        std::vector<const WireSparseRow*> received;
                        for (const WireSparseRow& row :
                             ex_rows.data[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                            received.push_back(&row);
                        }
                        b_slice = assemble_b_slice(std::move(received), part.begin(j),
                                                   part.size(j), d);
                        b_slice_ready = true;
                    }
                    CsrMatrix a_sub = extract_block(ab, t->row_lo - rbase, t->row_hi - rbase,
                                                    t->col_lo, t->col_hi);
                    CsrMatrix b_sub = extract_block(b_slice, t->col_lo - part.begin(j),
                                                    t->col_hi - part.begin(j), 0, d);
                    partials.push_back(embed_rows(local_spgemm(a_sub, b_sub, sr, kind), rows_i,
                                                  t->row_lo - rbase));
                }
            }
            if (partials.empty()) return;
            CsrMatrix& target = c.blocks[static_cast<std::size_t>(i)];
            if (partials.size() >= 2) {
                std::vector<const CsrMatrix*> parts;
                parts.push_back(&target);
                for (const CsrMatrix& m : partials) parts.push_back(&m);
                target = merge_many(parts, sr, kind);
            } else {
                target = merge_partials(target, partials.front(), sr);
            }
        });
        local_stats.times.compute += seconds_since(t_compute);
    }

    for (std::int64_t peak : peak_per_rank) {
        local_stats.peak_recv_elements = std::max(local_stats.peak_recv_elements, peak);
    }
    local_stats.times.total = seconds_since(t_total);
    if (stats) *stats = std::move(local_stats);
    return c;
}

DistDense dist_spmm(DistContext& ctx, const DistMatrix& a,
                    const std::vector<CsrMatrix>& a_col_slices, const DistDense& b,
                    const Semiring& sr, const MultiplyOptions& opts, ProductStats* stats,
                    std::vector<RankTileSet>* geometry) {
    check_square_pair(a, b.partition.total(), b.partition);
    check_column_copy(a, a_col_slices);
    const index_t p = ctx.ranks();
    const Partition1D& part = a.partition;
    const index_t d = b.ncols;
    const ResolvedOptions res = resolve(opts, part);
    const std::vector<std::pair<index_t, index_t>>* windows =
        opts.row_windows ? &*opts.row_windows : nullptr;
    auto t_total = Clock::now();

    ProductStats local_stats;
    local_stats.tile_rounds = res.rounds;

    auto t0 = Clock::now();
    std::vector<RankTileSet> own_geometry;
    std::vector<RankTileSet>* geom = geometry ? geometry : &own_geometry;
    if (geom->empty()) {
        geom->resize(static_cast<std::size_t>(p));
        ctx.run_ranks([&](index_t r) {
            (*geom)[static_cast<std::size_t>(r)] =
                generate_tiles(a.blocks[static_cast<std::size_t>(r)],
                               a_col_slices[static_cast<std::size_t>(r)], res.h, res.w, part, r,
                               windows);
        });
    }
    // No mode selection: with a dense B every non-diagonal tile moves B.
    local_stats.tiles = census(*geom);
    local_stats.times.symbolic = seconds_since(t0);

    std::vector<std::vector<std::vector<const TileDescriptor*>>> owned_by_round(
        static_cast<std::size_t>(p)),
        computed_by_round(static_cast<std::size_t>(p));
    for (index_t r = 0; r < p; ++r) {
        owned_by_round[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(res.rounds));
        computed_by_round[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(res.rounds));
        for (const TileDescriptor& t : (*geom)[static_cast<std::size_t>(r)].owned.tiles) {
            owned_by_round[static_cast<std::size_t>(r)][static_cast<std::size_t>(t.tile_round)]
                .push_back(&t);
        }
        for (const TileDescriptor& t : (*geom)[static_cast<std::size_t>(r)].computed.tiles) {
            computed_by_round[static_cast<std::size_t>(r)][static_cast<std::size_t>(t.tile_round)]
                .push_back(&t);
        }
    }

    DistDense c;
    c.partition = part;
    c.ncols = d;
    for (index_t r = 0; r < p; ++r) c.blocks.emplace_back(part.size(r), d, sr.zero);

    std::vector<std::int64_t> peak_per_rank(static_cast<std::size_t>(p), 0);
    for (index_t round = 0; round < res.rounds; ++round) {
        auto t_compute = Clock::now();
        ctx.run_ranks([&](index_t j) {
            std::vector<std::vector<WireDenseRow>> out_rows(static_cast<std::size_t>(p));
            index_t cbase = part.begin(j);
            const CsrMatrix& acol = a_col_slices[static_cast<std::size_t>(j)];
            const DenseMatrix& bb = b.blocks[static_cast<std::size_t>(j)];
            for (const TileDescriptor* t :
                 computed_by_round[static_cast<std::size_t>(j)][static_cast<std::size_t>(round)]) {
                if (t->mode == TileMode::Diagonal) continue;
                auto& out = out_rows[static_cast<std::size_t>(t->owner_rank)];
                for (index_t lc : nonzero_columns(acol, t->row_lo, t->row_hi, t->col_lo - cbase,
                                                  t->col_hi - cbase)) {
                    WireDenseRow row{cbase + lc, {}};
                    row.values.assign(&bb.data[static_cast<std::size_t>(lc * d)],
                                      &bb.data[static_cast<std::size_t>((lc + 1) * d)]);
                    out.push_back(std::move(row));
                }
            }
            ctx.submit<WireDenseRow>(j, std::move(out_rows));
        });
        local_stats.times.compute += seconds_since(t_compute);

        auto t_b = Clock::now();
        auto ex_rows = ctx.exchange<WireDenseRow>(Phase::BTransfer);
        local_stats.times.b_transfer += seconds_since(t_b);

        t_compute = Clock::now();
        ctx.run_ranks([&](index_t i) {
            peak_per_rank[static_cast<std::size_t>(i)] =
                std::max(peak_per_rank[static_cast<std::size_t>(i)],
                         ex_rows.received_elements[static_cast<std::size_t>(i)]);
            const CsrMatrix& ab = a.blocks[static_cast<std::size_t>(i)];
            const index_t rbase = part.begin(i);
            DenseMatrix& cb = c.blocks[static_cast<std::size_t>(i)];
            auto owned = owned_by_round[static_cast<std::size_t>(i)][static_cast<std::size_t>(round)];

            // Sorted unique view of the received rows per source rank.
            std::vector<std::vector<const WireDenseRow*>> received(static_cast<std::size_t>(p));
            for (index_t j = 0; j < p; ++j) {
                auto& rows = received[static_cast<std::size_t>(j)];
                for (const WireDenseRow& row :
                     ex_rows.data[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                    rows.push_back(&row);
                }
                std::sort(rows.begin(), rows.end(), [](const WireDenseRow* a, const WireDenseRow* b) {
                    return a->row < b->row;
                });
                rows.erase(std::unique(rows.begin(), rows.end(),
                                       [](const WireDenseRow* a, const WireDenseRow* b) {
                                           return a->row == b->row;
                                       }),
                           rows.end());
            }

            for (index_t j = 0; j < p; ++j) {
                for (const TileDescriptor* t : owned) {
                    if (t->compute_rank != j) continue;
                    index_t width = t->col_hi - t->col_lo;
                    DenseMatrix b_sub(width, d, sr.zero);
                    if (t->mode == TileMode::Diagonal) {
                        const DenseMatrix& own_b = b.blocks[static_cast<std::size_t>(i)];
                        for (index_t lr = 0; lr < width; ++lr) {
                            index_t src_row = t->col_lo - part.begin(i) + lr;
                            std::copy_n(&own_b.data[static_cast<std::size_t>(src_row * d)], d,
                                        &b_sub.data[static_cast<std::size_t>(lr * d)]);
                        }
                    } else {
                        const auto& rows = received[static_cast<std::size_t>(j)];
                        auto it = std::lower_bound(
                            rows.begin(), rows.end(), t->col_lo,
                            [](const WireDenseRow* r, index_t v) { return r->row < v; });
                        for (; it != rows.end() && (*it)->row < t->col_hi; ++it) {
                            std::copy((*it)->values.begin(), (*it)->values.end(),
                                      &b_sub.data[static_cast<std::size_t>(((*it)->row - t->col_lo) * d)]);
                        }
                    }
                    CsrMatrix a_sub = extract_block(ab, t->row_lo - rbase, t->row_hi - rbase,
                                                    t->col_lo, t->col_hi);
                    DenseMatrix partial = spmm_dense(a_sub, b_sub, sr);
                    index_t off = t->row_lo - rbase;
                    for (index_t rr = 0; rr < partial.nrows; ++rr) {
                        for (index_t cc = 0; cc < d; ++cc) {
                            cb.at(off + rr, cc) = sr.add(cb.at(off + rr, cc), partial.at(rr, cc));
                        }
                    }
                }
            }
        });
        local_stats.times.compute += seconds_since(t_compute);
    }

    for (std::int64_t peak : peak_per_rank) {
        local_stats.peak_recv_elements = std::max(local_stats.peak_recv_elements, peak);
    }
    local_stats.times.total = seconds_since(t_total);
    if (stats) *stats = std::move(local_stats);
    return c;
}

double alpha_beta_estimate(const AlphaBetaModel& model, index_t p, index_t n, double k_b,
                           double k_c, index_t tile_rounds) {
    double per_round = model.alpha * static_cast<double>(p) +
                       model.beta * static_cast<double>(p - 1) * static_cast<double>(n) *
                           std::min(k_b, k_c) / static_cast<double>(p);
    return per_round * static_cast<double>(tile_rounds);
}

} // namespace tsg
