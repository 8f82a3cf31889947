#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tsg/csr.hpp"
#include "tsg/dist.hpp"
#include "tsg/partition.hpp"

namespace tsg {

enum class TileMode : std::uint8_t { Local = 0, Remote = 1, Diagonal = 2 };
enum class TilePolicy { Hybrid, AllLocal };

// One sub-tile of a rank's row slice of A: a (row band x tile-column range)
// region intersected with a single rank's column block, so every sub-tile
// has one compute rank. owner_rank holds these rows of A and the matching C
// rows; compute_rank holds the column slice in A^c and the matching B rows.
struct TileDescriptor {
    index_t owner_rank = 0;
    index_t compute_rank = 0;
    index_t tile_round = 0; // index of the enclosing w-wide column band
    index_t row_band = 0;   // index of the enclosing h-tall row band
    index_t row_lo = 0, row_hi = 0; // global rows
    index_t col_lo = 0, col_hi = 0; // global columns
    TileMode mode = TileMode::Local;
    index_t nnz_a = 0;
    index_t nnz_b_needed = 0;
    index_t nnz_c_produced = 0;
};

struct TileGrid {
    index_t h = 0, w = 0;
    std::vector<TileDescriptor> tiles; // sorted by (tile_round, owner_rank, row_band, col_lo)
};

// A rank's two views of the tile grid. `owned` lists the sub-tiles of its
// row slice A_i (all compute ranks); `computed` lists the sub-tiles visible
// in its column slice A_i^c (all owners). Owner and compute rank derive the
// same descriptors from their own slices, so mode bits can be matched
// positionally without shipping tile coordinates.
struct RankTileSet {
    TileGrid owned;
    TileGrid computed;
};

// Enumerates non-empty sub-tiles for one rank from its row and column
// slices. Row bands of height h subdivide each owner's row block (the last
// band ragged); column bands of width w subdivide [0, n) and are split at
// column-partition boundaries. Empty sub-tiles are dropped. Optional
// row_windows restrict each owner's rows to a global [lo, hi) range (used
// by the minibatch driver). Throws std::invalid_argument for h or w < 1.
RankTileSet generate_tiles(const CsrMatrix& a_rows, const CsrMatrix& a_cols, index_t h, index_t w,
                           const Partition1D& part, index_t rank,
                           const std::vector<std::pair<index_t, index_t>>* row_windows = nullptr);

// Sorted distinct column indices with at least one nonzero inside the
// region [row_lo, row_hi) x [col_lo, col_hi) of m (column indices are in
// m's own column space).
std::vector<index_t> nonzero_columns(const CsrMatrix& m, index_t row_lo, index_t row_hi,
                                     index_t col_lo, index_t col_hi);

// Exact symbolic counts for one sub-tile against the compute rank's B rows:
// nnz_b_needed sums the B-row lengths over the tile's nonzero columns,
// nnz_c_produced counts the structural product's nonzeros. Purely local.
std::pair<index_t, index_t> symbolic_count(const CsrMatrix& a_cols, const TileDescriptor& tile,
                                           const CsrMatrix& b_block, const Partition1D& part);

// Fills symbolic counts and modes on every computed tile (at its compute
// rank, against its resident A^c slice and B rows, no communication), then
// shares mode bits with the owners through a single AllToAll of one word
// per cross-rank sub-tile. Remote iff nnz_c_produced < nnz_b_needed; ties
// stay Local; owner == compute is Diagonal; TilePolicy::AllLocal forces
// Local everywhere.
void decide_modes(DistContext& ctx, std::vector<RankTileSet>& tiles,
                  const std::vector<CsrMatrix>& a_col_slices,
                  const std::vector<CsrMatrix>& b_blocks, const Partition1D& part,
                  TilePolicy policy);

// Builds the column-partitioned copy of A: one AllToAll of triplets routes
// every nonzero to the rank owning its column. Counted in the setup phase.
// Slice j is returned as CSR of shape n x width(j) with block-local columns.
std::vector<CsrMatrix> build_column_copy(DistContext& ctx, const DistMatrix& a,
                                         const Semiring& sr);

struct TileCensus {
    std::int64_t local = 0;
    std::int64_t remote = 0;
    std::int64_t diagonal = 0;
};

TileCensus census(const std::vector<RankTileSet>& tiles);

} // namespace tsg
