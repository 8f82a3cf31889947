#include "tsg/bfs.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <unordered_set>

#include "tsg/kernels.hpp"

namespace tsg {

namespace {

using Clock = std::chrono::steady_clock;

index_t dist_nnz(const DistMatrix& m) {
    index_t total = 0;
    for (const CsrMatrix& b : m.blocks) total += b.nnz();
    return total;
}

} // namespace

BfsResult multi_source_bfs(DistContext& ctx, const DistMatrix& a,
                           const std::vector<index_t>& sources, const BfsOptions& opts) {
    const index_t n = a.nrows();
    const index_t d = static_cast<index_t>(sources.size());
    if (a.ncols != n) throw std::invalid_argument("multi_source_bfs: adjacency must be square");
    std::unordered_set<index_t> seen;
    for (index_t s : sources) {
        if (s < 0 || s >= n) throw std::invalid_argument("multi_source_bfs: source out of range");
        if (!seen.insert(s).second) throw std::invalid_argument("multi_source_bfs: duplicate source");
    }
    const Semiring& sr = boolean_semiring();

    std::vector<Triplet> init;
    init.reserve(static_cast<std::size_t>(d));
    for (index_t j = 0; j < d; ++j) init.push_back({sources[static_cast<std::size_t>(j)], j, 1.0});
    DistMatrix frontier = distribute(csr_from_triplets(n, d, std::move(init), sr), a.partition);
    DistMatrix visited = frontier;

    std::vector<CsrMatrix> a_col = build_column_copy(ctx, a, sr);
    // A is reused every iteration, so the tile geometry is built once; modes
    // are re-decided per iteration because the frontier's sparsity changes.
    std::vector<RankTileSet> geometry;

    BfsResult result;
    result.iterations.push_back({dist_nnz(frontier), 0, 0.0, false});

    while (dist_nnz(frontier) > 0) {
        if (static_cast<index_t>(result.iterations.size()) > n) {
            throw std::logic_error("multi_source_bfs: frontier failed to empty within n iterations");
        }
        auto t0 = Clock::now();
        std::int64_t elements_before = ctx.total_elements_sent();

        double sparsity =
            1.0 - static_cast<double>(dist_nnz(frontier)) / static_cast<double>(n * d);
        bool dense_path = opts.dense_switch && sparsity <= 0.5;

        DistMatrix next;
        if (dense_path) {
            DistDense frontier_dense;
            frontier_dense.partition = frontier.partition;
            frontier_dense.ncols = d;
            for (const CsrMatrix& block : frontier.blocks) {
                frontier_dense.blocks.push_back(densify(block));
            }
            DistDense next_dense =
                dist_spmm(ctx, a, a_col, frontier_dense, sr, opts.multiply, nullptr, &geometry);
            next.partition = a.partition;
            next.ncols = d;
            for (const DenseMatrix& block : next_dense.blocks) {
                next.blocks.push_back(sparsify(block, sr));
            }
        } else {
            next = dist_ts_spgemm(ctx, a, a_col, frontier, sr, opts.multiply, nullptr, &geometry);
        }

        ctx.run_ranks([&](index_t r) {
            auto i = static_cast<std::size_t>(r);
            frontier.blocks[i] = ewise_setminus(next.blocks[i], visited.blocks[i]);
            visited.blocks[i] = ewise_union(visited.blocks[i], next.blocks[i], sr);
        });

        result.iterations.push_back({dist_nnz(frontier),
                                     ctx.total_elements_sent() - elements_before,
                                     std::chrono::duration<double>(Clock::now() - t0).count(),
                                     dense_path});
    }
    result.visited = std::move(visited);
    return result;
}

std::vector<index_t> bfs_frontier_series(const BfsResult& result) {
    std::vector<index_t> series;
    series.reserve(result.iterations.size());
    for (const BfsIterationStats& it : result.iterations) series.push_back(it.frontier_nnz);
    return series;
}

} // namespace tsg
