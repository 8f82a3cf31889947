#pragma once

#include <vector>

#include "tsg/runtime.hpp"

namespace tsg {

struct BfsIterationStats {
    index_t frontier_nnz = 0;
    std::int64_t communicated_elements = 0;
    double seconds = 0;
    bool dense_path = false;
};

struct BfsOptions {
    MultiplyOptions multiply;
    // Switch an iteration to the dense SpMM path once the frontier's
    // sparsity (zero fraction) drops to 50% or below.
    bool dense_switch = true;
};

struct BfsResult {
    DistMatrix visited; // n x d boolean; column j = reachability set of sources[j]
    std::vector<BfsIterationStats> iterations;
};

// Multi-source BFS over the (and, or) semiring. The adjacency is used as
// stored: entry (u, v) means v reaches u in one step, so symmetric graphs
// work directly and directed ones should be transposed at load. Iterates
// N = A*F, F = N \ S, S = S or N until the frontier empties. Entry 0 of the
// stats covers the initial frontier; entry t the t-th expansion.
// Throws std::invalid_argument for duplicate or out-of-range sources.
BfsResult multi_source_bfs(DistContext& ctx, const DistMatrix& a,
                           const std::vector<index_t>& sources, const BfsOptions& opts = {});

// Frontier-size series of a finished run, one entry per iteration.
std::vector<index_t> bfs_frontier_series(const BfsResult& result);

} // namespace tsg
