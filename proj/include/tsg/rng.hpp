#pragma once

#include <cstdint>

namespace tsg {

// splitmix64 generator. Chosen over std:: distributions because the stream
// must be bit-identical across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n). Modulo reduction; bias is negligible for n << 2^64.
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    // Uniform in (0, 1].
    double uniform01() { return 1.0 - static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Derive an independent stream id, e.g. per row or per vertex.
    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        std::uint64_t z = a + 0x9e3779b97f4a7c15ull * (b + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

} // namespace tsg
