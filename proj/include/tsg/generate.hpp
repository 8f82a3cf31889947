#pragma once

#include <cstdint>

#include "tsg/csr.hpp"

namespace tsg {

// Erdos-Renyi style square matrix: n*avg_degree positions drawn uniformly
// with replacement, deduplicated, value 1.0. Deterministic under seed.
// Throws std::invalid_argument if avg_degree > n or n < 1.
CsrMatrix gen_er_square(index_t n, double avg_degree, std::uint64_t seed);

// Tall-and-skinny matrix: each row holds exactly round(d*(100-s)/100)
// nonzeros at distinct uniformly chosen columns, values uniform in (0, 1].
// Deterministic under seed.
CsrMatrix gen_tall_skinny(index_t n, index_t d, double sparsity_percent, std::uint64_t seed);

// Row nonzero budget implied by a sparsity target, round(d*(100-s)/100).
index_t keep_from_sparsity(index_t d, double sparsity_percent);

// Replaces stored values with integers in [lo, hi] drawn deterministically
// from seed; lo must be >= 1 so no value collides with the additive identity.
// Used by tests and --verify runs that want exact float arithmetic.
CsrMatrix randomize_values_int(const CsrMatrix& m, index_t lo, index_t hi, std::uint64_t seed);

} // namespace tsg
