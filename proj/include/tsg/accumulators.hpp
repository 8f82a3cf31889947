#pragma once

#include <cstdint>
#include <vector>

#include "tsg/semiring.hpp"
#include "tsg/types.hpp"

namespace tsg {

enum class AccumulatorKind { Spa, Hash };

// Spa for d <= 1024, Hash above: a short dense scratch stays cache-resident,
// a long one does not.
AccumulatorKind choose_accumulator(index_t d);

// Dense scratch vector over the output column space with O(1) reset via a
// generation stamp; touched columns are tracked for sparse emission.
class SpaAccumulator {
public:
    SpaAccumulator(index_t d, const Semiring& sr);

    void clear();
    void add(index_t col, value_t v);
    // Appends the accumulated row sorted by column, skipping semiring zeros.
    void emit(std::vector<index_t>& cols, std::vector<value_t>& vals);

    index_t touched() const { return static_cast<index_t>(touched_.size()); }

private:
    const Semiring* sr_;
    std::vector<value_t> values_;
    std::vector<std::uint64_t> stamp_;
    std::vector<index_t> touched_;
    std::uint64_t generation_ = 1;
};

// Open-addressing table with linear probing and Fibonacci hashing on the
// column index. Capacity is a power of two kept at least twice the number
// of live entries (load factor <= 0.5).
class HashAccumulator {
public:
    explicit HashAccumulator(const Semiring& sr);

    // Prepares for a row with at most `expected` distinct columns.
    void reserve(index_t expected);
    void clear();
    void add(index_t col, value_t v);
    void emit(std::vector<index_t>& cols, std::vector<value_t>& vals);

    index_t capacity() const { return static_cast<index_t>(slots_.size()); }
    index_t size() const { return static_cast<index_t>(touched_.size()); }

private:
    struct Slot {
        index_t col;
        value_t value;
        std::uint64_t stamp;
    };

    std::size_t probe(index_t col) const;
    void grow();

    const Semiring* sr_;
    std::vector<Slot> slots_;
    std::vector<std::size_t> touched_;
    std::uint64_t generation_ = 1;
    int shift_ = 61;
};

} // namespace tsg
