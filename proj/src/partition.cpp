#include "tsg/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsg {

index_t Partition1D::max_block() const {
    index_t best = 0;
    for (index_t r = 0; r < p; ++r) best = std::max(best, size(r));
    return best;
}

index_t Partition1D::owner_of(index_t i) const {
    auto it = std::upper_bound(boundaries.begin(), boundaries.end(), i);
    return static_cast<index_t>(it - boundaries.begin()) - 1;
}

Partition1D row_partition(index_t n, index_t p) {
    if (p < 1) throw std::invalid_argument("row_partition: p must be >= 1");
    if (p > n) throw std::invalid_argument("row_partition: p must not exceed n");
    Partition1D part;
    part.p = p;
    part.boundaries.resize(static_cast<std::size_t>(p) + 1);
    index_t base = n / p;
    index_t rem = n % p;
    part.boundaries[0] = 0;
    for (index_t r = 0; r < p; ++r) {
        part.boundaries[r + 1] = part.boundaries[r] + base + (r < rem ? 1 : 0);
    }
    return part;
}

} // namespace tsg
