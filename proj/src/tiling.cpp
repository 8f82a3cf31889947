#include "tsg/tiling.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace tsg {

namespace {

bool tile_order(const TileDescriptor& a, const TileDescriptor& b) {
    return std::tie(a.tile_round, a.owner_rank, a.row_band, a.col_lo) <
           std::tie(b.tile_round, b.owner_rank, b.row_band, b.col_lo);
}

std::pair<index_t, index_t> window_of(const Partition1D& part, index_t owner,
                                      const std::vector<std::pair<index_t, index_t>>* windows) {
    if (!windows) return {part.begin(owner), part.end(owner)};
    auto [lo, hi] = (*windows)[static_cast<std::size_t>(owner)];
    if (lo < part.begin(owner) || hi > part.end(owner) || lo > hi) {
        throw std::invalid_argument("generate_tiles: row window outside owner block");
    }
    return {lo, hi};
}

} // namespace

RankTileSet generate_tiles(const CsrMatrix& a_rows, const CsrMatrix& a_cols, index_t h, index_t w,
                           const Partition1D& part, index_t rank,
                           const std::vector<std::pair<index_t, index_t>>* row_windows) {
    if (h < 1 || w < 1) throw std::invalid_argument("generate_tiles: h and w must be >= 1");
    const index_t n = part.total();
    if (w > n) throw std::invalid_argument("generate_tiles: w exceeds the column count");

    RankTileSet out;
    out.owned.h = out.computed.h = h;
    out.owned.w = out.computed.w = w;

    // key: (round, owner, band, column block) -> nnz
    std::map<std::tuple<index_t, index_t, index_t, index_t>, index_t> counts;

    auto emit = [&](TileGrid& grid) {
        grid.tiles.clear();
        grid.tiles.reserve(counts.size());
        for (const auto& [key, nnz] : counts) {
            auto [round, owner, band, cblock] = key;
            auto [wlo, whi] = window_of(part, owner, row_windows);
            TileDescriptor t;
            t.owner_rank = owner;
            t.compute_rank = cblock;
            t.tile_round = round;
            t.row_band = band;
            t.row_lo = wlo + band * h;
            t.row_hi = std::min(t.row_lo + h, whi);
            t.col_lo = std::max(round * w, part.begin(cblock));
            t.col_hi = std::min({(round + 1) * w, part.end(cblock), n});
            t.mode = owner == cblock ? TileMode::Diagonal : TileMode::Local;
            t.nnz_a = nnz;
            grid.tiles.push_back(t);
        }
        std::sort(grid.tiles.begin(), grid.tiles.end(), tile_order);
        counts.clear();
    };

    // Owner view: rows of A_i are block-local, columns global.
    {
        auto [wlo, whi] = window_of(part, rank, row_windows);
        index_t base = part.begin(rank);
        for (index_t lr = 0; lr < a_rows.nrows; ++lr) {
            index_t r = base + lr;
            if (r < wlo || r >= whi) continue;
            index_t band = (r - wlo) / h;
            for (index_t c : a_rows.row_cols(lr)) {
                counts[{c / w, rank, band, part.owner_of(c)}]++;
            }
        }
        emit(out.owned);
    }

    // Compute view: rows of A_i^c are global, columns block-local.
    {
        index_t cbase = part.begin(rank);
        for (index_t r = 0; r < a_cols.nrows; ++r) {
            if (a_cols.row_nnz(r) == 0) continue;
            index_t owner = part.owner_of(r);
            auto [wlo, whi] = window_of(part, owner, row_windows);
            if (r < wlo || r >= whi) continue;
            index_t band = (r - wlo) / h;
            for (index_t lc : a_cols.row_cols(r)) {
                counts[{(cbase + lc) / w, owner, band, rank}]++;
            }
        }
        emit(out.computed);
    }
    return out;
}

std::vector<index_t> nonzero_columns(const CsrMatrix& m, index_t row_lo, index_t row_hi,
                                     index_t col_lo, index_t col_hi) {
    std::vector<index_t> cols;
    for (index_t r = row_lo; r < row_hi; ++r) {
        auto rc = m.row_cols(r);
        auto first = std::lower_bound(rc.begin(), rc.end(), col_lo);
        auto last = std::lower_bound(first, rc.end(), col_hi);
        cols.insert(cols.end(), first, last);
    }
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    return cols;
}

std::pair<index_t, index_t> symbolic_count(const CsrMatrix& a_cols, const TileDescriptor& tile,
                                           const CsrMatrix& b_block, const Partition1D& part) {
    index_t cbase = part.begin(tile.compute_rank);
    index_t lo = tile.col_lo - cbase;
    index_t hi = tile.col_hi - cbase;

    index_t nnz_b = 0;
    for (index_t lc : nonzero_columns(a_cols, tile.row_lo, tile.row_hi, lo, hi)) {
        nnz_b += b_block.row_nnz(lc);
    }

    // Structural product with a flag SPA over the d output columns.
    std::vector<char> seen(static_cast<std::size_t>(b_block.ncols), 0);
    std::vector<index_t> touched;
    index_t nnz_c = 0;
    for (index_t r = tile.row_lo; r < tile.row_hi; ++r) {
        auto rc = a_cols.row_cols(r);
        auto first = std::lower_bound(rc.begin(), rc.end(), lo);
        auto last = std::lower_bound(first, rc.end(), hi);
        for (auto it = first; it != last; ++it) {
            for (index_t bc : b_block.row_cols(*it)) {
                if (!seen[static_cast<std::size_t>(bc)]) {
                    seen[static_cast<std::size_t>(bc)] = 1;
                    touched.push_back(bc);
                }
            }
        }
        nnz_c += static_cast<index_t>(touched.size());
        for (index_t bc : touched) seen[static_cast<std::size_t>(bc)] = 0;
        touched.clear();
    }
    return {nnz_b, nnz_c};
}

void decide_modes(DistContext& ctx, std::vector<RankTileSet>& tiles,
                  const std::vector<CsrMatrix>& a_col_slices,
                  const std::vector<CsrMatrix>& b_blocks, const Partition1D& part,
                  TilePolicy policy) {
    const index_t p = ctx.ranks();
    // Classification is local to each compute rank; only the resulting mode
    // bits travel. Owner and compute rank enumerate the shared sub-tiles in
    // the same canonical order, so each bit is matched positionally.
    ctx.run_ranks([&](index_t j) {
        std::vector<std::vector<WireMode>> out(static_cast<std::size_t>(p));
        for (TileDescriptor& t : tiles[static_cast<std::size_t>(j)].computed.tiles) {
            if (t.owner_rank == j) {
                t.mode = TileMode::Diagonal;
                continue;
            }
            auto [nnz_b, nnz_c] = symbolic_count(a_col_slices[static_cast<std::size_t>(j)], t,
                                                 b_blocks[static_cast<std::size_t>(j)], part);
            t.nnz_b_needed = nnz_b;
            t.nnz_c_produced = nnz_c;
            t.mode = (policy == TilePolicy::Hybrid && nnz_c < nnz_b) ? TileMode::Remote
                                                                     : TileMode::Local;
            out[static_cast<std::size_t>(t.owner_rank)].push_back(
                {static_cast<std::uint8_t>(t.mode)});
        }
        ctx.submit<WireMode>(j, std::move(out));
    });
    auto ex = ctx.exchange<WireMode>(Phase::Symbolic);

    ctx.run_ranks([&](index_t i) {
        std::vector<std::size_t> cursor(static_cast<std::size_t>(p), 0);
        for (TileDescriptor& t : tiles[static_cast<std::size_t>(i)].owned.tiles) {
            if (t.compute_rank == i) {
                t.mode = TileMode::Diagonal;
                continue;
            }
            auto& batch = ex.data[static_cast<std::size_t>(i)][static_cast<std::size_t>(t.compute_rank)];
            std::size_t& pos = cursor[static_cast<std::size_t>(t.compute_rank)];
            if (pos >= batch.size()) {
                throw collective_error("mode exchange misaligned: too few bits from rank " +
                                       std::to_string(t.compute_rank));
            }
            t.mode = static_cast<TileMode>(batch[pos++].mode);
        }
        for (index_t j = 0; j < p; ++j) {
            if (cursor[static_cast<std::size_t>(j)] !=
                ex.data[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].size()) {
                throw collective_error("mode exchange misaligned: unconsumed bits from rank " +
                                       std::to_string(j));
            }
        }
    });
}

std::vector<CsrMatrix> build_column_copy(DistContext& ctx, const DistMatrix& a,
                                         const Semiring& sr) {
    const index_t p = ctx.ranks();
    const index_t n = a.nrows();
    if (a.ncols != n) throw std::invalid_argument("build_column_copy: matrix must be square");
    if (a.partition.p != p) throw std::invalid_argument("build_column_copy: partition/context mismatch");

    ctx.run_ranks([&](index_t i) {
        std::vector<std::vector<WireTriplet>> out(static_cast<std::size_t>(p));
        const CsrMatrix& block = a.blocks[static_cast<std::size_t>(i)];
        index_t base = a.partition.begin(i);
        for (index_t lr = 0; lr < block.nrows; ++lr) {
            auto cols = block.row_cols(lr);
            auto vals = block.row_values(lr);
            for (std::size_t k = 0; k < cols.size(); ++k) {
                index_t dest = a.partition.owner_of(cols[k]);
                out[static_cast<std::size_t>(dest)].push_back({base + lr, cols[k], vals[k]});
            }
        }
        ctx.submit<WireTriplet>(i, std::move(out));
    });
    auto ex = ctx.exchange<WireTriplet>(Phase::Setup);

    std::vector<CsrMatrix> slices(static_cast<std::size_t>(p));
    ctx.run_ranks([&](index_t j) {
        index_t cbase = a.partition.begin(j);
        index_t width = a.partition.size(j);
        std::vector<Triplet> triplets;
        for (index_t src = 0; src < p; ++src) {
            for (const WireTriplet& t : ex.data[static_cast<std::size_t>(j)][static_cast<std::size_t>(src)]) {
                triplets.push_back({t.row, t.col - cbase, t.value});
            }
        }
        slices[static_cast<std::size_t>(j)] = csr_from_triplets(n, width, std::move(triplets), sr);
    });
    return slices;
}

TileCensus census(const std::vector<RankTileSet>& tiles) {
    TileCensus c;
    for (const RankTileSet& set : tiles) {
        for (const TileDescriptor& t : set.owned.tiles) {
            switch (t.mode) {
                case TileMode::Local: c.local++; break;
                case TileMode::Remote: c.remote++; break;
                case TileMode::Diagonal: c.diagonal++; break;
            }
        }
    }
    return c;
}

} // namespace tsg
