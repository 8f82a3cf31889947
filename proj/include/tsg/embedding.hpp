#pragma once

#include <cstdint>
#include <vector>

#include "tsg/runtime.hpp"

namespace tsg {

// Adjacency with +1 on edges plus, per vertex, count_per_vertex uniformly
// sampled non-neighbors with value -1. Degenerate vertices (degree + samples
// exceeding n - 1) sample fewer, never error. Deterministic under seed.
CsrMatrix negative_sample(const CsrMatrix& a, index_t count_per_vertex, std::uint64_t seed);

struct EmbeddingState {
    DistMatrix z;                     // n x d current embedding
    DistMatrix a_signed;              // +1 neighbors, -1 negative samples
    std::vector<CsrMatrix> a_col;     // column copy of a_signed
    index_t batch_size = 0;           // rows updated per step; equals the tile height
    double learning_rate = 0.02;
    index_t keep_per_row = 0;         // top-k sparsification budget
    MultiplyOptions multiply;         // h is forced to batch_size
};

struct EmbeddingEpochStats {
    std::int64_t communicated_elements = 0;
    double seconds = 0;
    index_t batches = 0;
};

// Builds the column copy and pins multiply.h to the batch size. Throws if
// batch_size exceeds the largest rank block.
EmbeddingState make_embedding_state(DistContext& ctx, const DistMatrix& a_signed,
                                    const DistMatrix& z0, index_t batch_size,
                                    double learning_rate, index_t keep_per_row,
                                    MultiplyOptions multiply);

// One synchronous-SGD epoch: per batch step every rank's batch band computes
// G = A_signed(batch rows, :) * Z and applies Z += lr * G before the next
// step; rows are then re-sparsified to keep_per_row entries.
EmbeddingEpochStats embedding_epoch(DistContext& ctx, EmbeddingState& state);

} // namespace tsg
