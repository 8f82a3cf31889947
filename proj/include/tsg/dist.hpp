#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tsg/csr.hpp"
#include "tsg/dense.hpp"
#include "tsg/partition.hpp"
#include "tsg/types.hpp"

namespace tsg {

// Raised when a collective round runs with ranks missing: the simulated
// equivalent of an AllToAll deadlock.
struct collective_error : std::logic_error {
    using std::logic_error::logic_error;
};

enum class Phase : int { Setup = 0, Symbolic, BTransfer, CReturn, Output };
constexpr int kPhaseCount = 5;
const char* phase_name(Phase p);

struct PhaseCounters {
    std::int64_t elements_sent = 0;  // matrix data elements (nonzeros / dense values)
    std::int64_t words_sent = 0;     // 1 word per index, 1 per value, headers included
    std::int64_t messages_sent = 0;  // nonempty cross-rank batches
    std::int64_t alltoall_rounds = 0;

    PhaseCounters& operator+=(const PhaseCounters& o);
    bool operator==(const PhaseCounters&) const = default;
};

struct RankCounters {
    std::array<PhaseCounters, kPhaseCount> phase;
    bool operator==(const RankCounters&) const = default;
};

// Wire item types. Word accounting: sparse element = index + value = 2 words,
// sparse row header = row id + length = 2 words, dense row = 1 + d words,
// C partials travel as 3-word triplets, request indices and mode bits are
// 1 word each. Element accounting counts matrix data values only.
struct WireIndex {
    index_t index;
};
struct WireTriplet {
    index_t row;
    index_t col;
    value_t value;
};
struct WireSparseRow {
    index_t row;
    std::vector<std::pair<index_t, value_t>> entries;
};
struct WireDenseRow {
    index_t row;
    std::vector<value_t> values;
};
struct WireMode {
    std::uint8_t mode;
};

std::int64_t wire_words(const WireIndex&);
std::int64_t wire_words(const WireTriplet&);
std::int64_t wire_words(const WireSparseRow&);
std::int64_t wire_words(const WireDenseRow&);
std::int64_t wire_words(const WireMode&);
std::int64_t wire_elements(const WireIndex&);
std::int64_t wire_elements(const WireTriplet&);
std::int64_t wire_elements(const WireSparseRow&);
std::int64_t wire_elements(const WireDenseRow&);
std::int64_t wire_elements(const WireMode&);

// P virtual ranks exchanging through barrier-synchronized AllToAllv rounds.
// Rank bodies run on a worker pool inside run_ranks(); each rank submits its
// outgoing batches during a section, and the orchestrator completes the
// round with exchange(). Results and counters are independent of the worker
// thread count: ranks touch only their own state and the exchange itself is
// single-threaded.
class DistContext {
public:
    explicit DistContext(index_t p, int threads = 0);

    index_t ranks() const { return p_; }
    int threads() const { return threads_; }

    // Runs body(rank) for every rank. Exceptions rethrow in rank order.
    void run_ranks(const std::function<void(index_t)>& body);

    // Stages rank src's outgoing batches for the pending round; per_dest must
    // hold exactly p batches (empty ones included). Called once per rank per
    // round, typically from inside run_ranks.
    template <class T>
    void submit(index_t src, std::vector<std::vector<T>> per_dest);

    template <class T>
    struct Exchange {
        // data[dst][src] -> items, delivery ordered by sender rank.
        std::vector<std::vector<std::vector<T>>> data;
        // Cross-rank data elements received per destination this round.
        std::vector<std::int64_t> received_elements;
    };

    // Completes one AllToAllv round: verifies every rank submitted, moves the
    // mailboxes, and updates counters. Throws collective_error if a rank is
    // missing from the round.
    template <class T>
    Exchange<T> exchange(Phase phase);

    // Convenience for tests and simple callers: submit for all ranks, then
    // exchange. outgoing[src][dst] -> items.
    template <class T>
    Exchange<T> alltoallv(Phase phase, std::vector<std::vector<std::vector<T>>> outgoing);

    const std::vector<RankCounters>& counters() const { return counters_; }
    void reset_counters();
    PhaseCounters totals(Phase phase) const;
    std::int64_t total_elements_sent() const;
    std::int64_t total_words_sent() const;

private:
    template <class T>
    struct Store {
        std::vector<std::optional<std::vector<std::vector<T>>>> staged;
    };

    template <class T>
    Store<T>& store();

    index_t p_;
    int threads_;
    std::vector<RankCounters> counters_;
    Store<WireIndex> index_store_;
    Store<WireTriplet> triplet_store_;
    Store<WireSparseRow> sparse_row_store_;
    Store<WireDenseRow> dense_row_store_;
    Store<WireMode> mode_store_;
};

// Row-partitioned sparse matrix: block r holds the rows of rank r with local
// row indices; concatenating blocks in rank order reproduces the matrix.
struct DistMatrix {
    Partition1D partition;
    index_t ncols = 0;
    std::vector<CsrMatrix> blocks;

    index_t nrows() const { return partition.total(); }
    index_t nnz() const;
};

struct DistDense {
    Partition1D partition;
    index_t ncols = 0;
    std::vector<DenseMatrix> blocks;
};

DistMatrix distribute(const CsrMatrix& global, const Partition1D& part);
CsrMatrix gather(const DistMatrix& dist);
DistDense distribute_dense(const DenseMatrix& global, const Partition1D& part);
DenseMatrix gather_dense(const DistDense& dist);

} // namespace tsg
