#include "tsg/generate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tsg/rng.hpp"

namespace tsg {

CsrMatrix gen_er_square(index_t n, double avg_degree, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_er_square: n must be >= 1");
    if (avg_degree <= 0.0 || avg_degree > static_cast<double>(n)) {
        throw std::invalid_argument("gen_er_square: avg_degree must be in (0, n]");
    }
    Rng rng(Rng::mix(seed, 0x45525f5351ull));
    index_t samples = static_cast<index_t>(std::llround(static_cast<double>(n) * avg_degree));
    std::vector<std::pair<index_t, index_t>> positions;
    positions.reserve(static_cast<std::size_t>(samples));
    for (index_t k = 0; k < samples; ++k) {
        index_t r = static_cast<index_t>(rng.below(static_cast<std::uint64_t>(n)));
        index_t c = static_cast<index_t>(rng.below(static_cast<std::uint64_t>(n)));
        positions.emplace_back(r, c);
    }
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());

    std::vector<Triplet> triplets;
    triplets.reserve(positions.size());
    for (auto [r, c] : positions) triplets.push_back({r, c, 1.0});
    return csr_from_triplets(n, n, std::move(triplets), arithmetic_semiring());
}

index_t keep_from_sparsity(index_t d, double sparsity_percent) {
    return static_cast<index_t>(std::llround(static_cast<double>(d) * (100.0 - sparsity_percent) / 100.0));
}

CsrMatrix gen_tall_skinny(index_t n, index_t d, double sparsity_percent, std::uint64_t seed) {
    if (d < 1) throw std::invalid_argument("gen_tall_skinny: d must be >= 1");
    if (n < 0) throw std::invalid_argument("gen_tall_skinny: n must be >= 0");
    if (sparsity_percent < 0.0 || sparsity_percent > 100.0) {
        throw std::invalid_argument("gen_tall_skinny: sparsity must be in [0, 100]");
    }
    index_t k = keep_from_sparsity(d, sparsity_percent);

    CsrMatrix m(n, d);
    m.col_indices.reserve(static_cast<std::size_t>(n * k));
    m.values.reserve(static_cast<std::size_t>(n * k));
    std::vector<index_t> cols;
    std::vector<char> taken(static_cast<std::size_t>(d), 0);
    for (index_t r = 0; r < n; ++r) {
        Rng rng(Rng::mix(seed, static_cast<std::uint64_t>(r)));
        cols.clear();
        // Floyd's sampling: k distinct columns in exactly k draws.
        for (index_t j = d - k; j < d; ++j) {
            index_t t = static_cast<index_t>(rng.below(static_cast<std::uint64_t>(j + 1)));
            if (taken[static_cast<std::size_t>(t)]) t = j;
            taken[static_cast<std::size_t>(t)] = 1;
            cols.push_back(t);
        }
        std::sort(cols.begin(), cols.end());
        for (index_t c : cols) {
            taken[static_cast<std::size_t>(c)] = 0;
            m.col_indices.push_back(c);
            m.values.push_back(rng.uniform01());
        }
        m.row_offsets[r + 1] = static_cast<index_t>(m.col_indices.size());
    }
    return m;
}

CsrMatrix randomize_values_int(const CsrMatrix& m, index_t lo, index_t hi, std::uint64_t seed) {
    if (lo < 1 || hi < lo) throw std::invalid_argument("randomize_values_int: need 1 <= lo <= hi");
    CsrMatrix out = m;
    Rng rng(Rng::mix(seed, 0x494e54ull));
    for (value_t& v : out.values) {
        v = static_cast<value_t>(lo + static_cast<index_t>(rng.below(static_cast<std::uint64_t>(hi - lo + 1))));
    }
    return out;
}

} // namespace tsg
