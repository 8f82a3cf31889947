#pragma once

#include <vector>

#include "tsg/types.hpp"

namespace tsg {

// Contiguous 1D block partition of [0, n) over p ranks.
struct Partition1D {
    index_t p = 0;
    std::vector<index_t> boundaries; // p + 1 entries, boundaries[0] == 0, boundaries[p] == n

    index_t total() const { return boundaries.empty() ? 0 : boundaries.back(); }
    index_t begin(index_t rank) const { return boundaries[rank]; }
    index_t end(index_t rank) const { return boundaries[rank + 1]; }
    index_t size(index_t rank) const { return end(rank) - begin(rank); }
    index_t max_block() const;
    index_t owner_of(index_t i) const;

    bool operator==(const Partition1D&) const = default;
};

// Block sizes are ceil(n/p) or floor(n/p) with the first n mod p blocks
// larger. Throws std::invalid_argument if p < 1 or p > n.
Partition1D row_partition(index_t n, index_t p);

} // namespace tsg
