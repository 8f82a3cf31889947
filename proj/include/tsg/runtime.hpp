#pragma once

#include <optional>

#include "tsg/accumulators.hpp"
#include "tsg/dist.hpp"
#include "tsg/tiling.hpp"

namespace tsg {

struct MultiplyOptions {
    index_t h = 0; // tile height; 0 = one band per rank (ceil(n/p))
    index_t w = 0; // tile width; 0 = min(16 * ceil(n/p), n)
    TilePolicy policy = TilePolicy::Hybrid;
    std::optional<AccumulatorKind> accumulator; // default: choose_accumulator(d)
    // Global row range per rank; restricts the multiply to those rows of A
    // (the minibatch driver sets one band per batch).
    std::optional<std::vector<std::pair<index_t, index_t>>> row_windows;
};

struct PhaseTimes {
    double setup = 0;
    double symbolic = 0;
    double b_transfer = 0;
    double c_return = 0;
    double compute = 0;
    double total = 0;
};

struct ProductStats {
    TileCensus tiles;
    PhaseTimes times;
    // Max over (rank, tile round) of cross-rank payload elements buffered
    // during the round: received B rows plus received C partials.
    std::int64_t peak_recv_elements = 0;
    std::int64_t tile_rounds = 0;
};

struct NaiveStats {
    // Request indices staged per rank in the first AllToAll (own block
    // included; self-delivery costs no words).
    std::vector<std::int64_t> request_indices_per_rank;
    std::int64_t cross_rank_request_indices = 0;
    PhaseTimes times;
};

// Two-round baseline: ranks request B-row indices, then receive the rows and
// run one local SpGEMM. Both rounds count as b_transfer traffic.
DistMatrix ts_spgemm_naive(DistContext& ctx, const DistMatrix& a, const DistMatrix& b,
                           const Semiring& sr, NaiveStats* stats = nullptr);

// Tiled multiply. Per tile round (ascending): remote sub-tiles are computed
// at the column-slice holder and their C partials return as triplets; local
// sub-tiles receive the needed B rows (no request round, the column copy
// already tells the holder what to send); diagonal sub-tiles multiply with
// resident data. Each round runs one B-row AllToAll and one C-partial
// AllToAll. Partials merge in ascending (tile round, compute rank) order,
// remote partials before local ones within a rank.
//
// `a_col_slices` must come from build_column_copy. `geometry`, when given,
// caches the generated tiles across calls with the same A/h/w (modes are
// still re-decided per call since they depend on B).
DistMatrix dist_ts_spgemm(DistContext& ctx, const DistMatrix& a,
                          const std::vector<CsrMatrix>& a_col_slices, const DistMatrix& b,
                          const Semiring& sr, const MultiplyOptions& opts,
                          ProductStats* stats = nullptr,
                          std::vector<RankTileSet>* geometry = nullptr);

// Dense-B twin with the same tile rounds and collectives; B rows ship as
// d values plus one row index. All non-diagonal tiles move B (no remote
// mode: only values travel, which is the point of the comparison).
DistDense dist_spmm(DistContext& ctx, const DistMatrix& a,
                    const std::vector<CsrMatrix>& a_col_slices, const DistDense& b,
                    const Semiring& sr, const MultiplyOptions& opts,
                    ProductStats* stats = nullptr,
                    std::vector<RankTileSet>* geometry = nullptr);

struct AlphaBetaModel {
    double alpha = 0; // seconds per message
    double beta = 0;  // seconds per word
};

// Per n/p-wide tile: alpha*p + beta*(p-1)*n*min(k_b, k_c)/p, summed over
// tile rounds. k_b and k_c are average nonzeros per row of B and C.
double alpha_beta_estimate(const AlphaBetaModel& model, index_t p, index_t n, double k_b,
                           double k_c, index_t tile_rounds);

} // namespace tsg
