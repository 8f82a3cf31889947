#include "tsg/dist.hpp"

#include <atomic>
#include <thread>

namespace tsg {

const char* phase_name(Phase p) {
    switch (p) {
        case Phase::Setup: return "setup";
        case Phase::Symbolic: return "symbolic";
        case Phase::BTransfer: return "b_transfer";
        case Phase::CReturn: return "c_return";
        case Phase::Output: return "output";
    }
    return "?";
}

PhaseCounters& PhaseCounters::operator+=(const PhaseCounters& o) {
    elements_sent += o.elements_sent;
    words_sent += o.words_sent;
    messages_sent += o.messages_sent;
    alltoall_rounds += o.alltoall_rounds;
    return *this;
}

std::int64_t wire_words(const WireIndex&) { return 1; }
std::int64_t wire_words(const WireTriplet&) { return 3; }
std::int64_t wire_words(const WireSparseRow& r) { return 2 + 2 * static_cast<std::int64_t>(r.entries.size()); }
std::int64_t wire_words(const WireDenseRow& r) { return 1 + static_cast<std::int64_t>(r.values.size()); }
std::int64_t wire_words(const WireMode&) { return 1; }
std::int64_t wire_elements(const WireIndex&) { return 0; }
std::int64_t wire_elements(const WireTriplet&) { return 1; }
std::int64_t wire_elements(const WireSparseRow& r) { return static_cast<std::int64_t>(r.entries.size()); }
std::int64_t wire_elements(const WireDenseRow& r) { return static_cast<std::int64_t>(r.values.size()); }
std::int64_t wire_elements(const WireMode&) { return 0; }

DistContext::DistContext(index_t p, int threads) : p_(p) {
    if (p < 1) throw std::invalid_argument("DistContext: p must be >= 1");
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    int want = threads > 0 ? threads : static_cast<int>(std::min<index_t>(p, static_cast<index_t>(hw)));
    threads_ = std::max(1, std::min<int>(want, static_cast<int>(p)));
    counters_.resize(static_cast<std::size_t>(p));
    index_store_.staged.resize(static_cast<std::size_t>(p));
    triplet_store_.staged.resize(static_cast<std::size_t>(p));
    sparse_row_store_.staged.resize(static_cast<std::size_t>(p));
    dense_row_store_.staged.resize(static_cast<std::size_t>(p));
    mode_store_.staged.resize(static_cast<std::size_t>(p));
}

void DistContext::run_ranks(const std::function<void(index_t)>& body) {
    if (threads_ <= 1 || p_ == 1) {
        for (index_t r = 0; r < p_; ++r) body(r);
        return;
    }
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(p_));
    std::atomic<index_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads_));
    for (int t = 0; t < threads_; ++t) {
        pool.emplace_back([&] {
            while (true) {
                index_t r = next.fetch_add(1);
                if (r >= p_) break;
                try {
                    body(r);
                } catch (...) {
                    errors[static_cast<std::size_t>(r)] = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

template <>
DistContext::Store<WireIndex>& DistContext::store<WireIndex>() { return index_store_; }
template <>
DistContext::Store<WireTriplet>& DistContext::store<WireTriplet>() { return triplet_store_; }
template <>
DistContext::Store<WireSparseRow>& DistContext::store<WireSparseRow>() { return sparse_row_store_; }
template <>
DistContext::Store<WireDenseRow>& DistContext::store<WireDenseRow>() { return dense_row_store_; }
template <>
DistContext::Store<WireMode>& DistContext::store<WireMode>() { return mode_store_; }

template <class T>
void DistContext::submit(index_t src, std::vector<std::vector<T>> per_dest) {
    if (src < 0 || src >= p_) throw std::invalid_argument("submit: bad source rank");
    if (static_cast<index_t>(per_dest.size()) != p_) {
        throw std::invalid_argument("submit: per_dest must have one batch per rank");
    }
    auto& slot = store<T>().staged[static_cast<std::size_t>(src)];
    if (slot.has_value()) {
        throw collective_error("rank " + std::to_string(src) +
                               " submitted twice without an intervening exchange");
    }
    slot = std::move(per_dest);
}

template <class T>
DistContext::Exchange<T> DistContext::exchange(Phase phase) {
    auto& st = store<T>();
    for (index_t r = 0; r < p_; ++r) {
        if (!st.staged[static_cast<std::size_t>(r)].has_value()) {
            throw collective_error("AllToAll round incomplete: rank " + std::to_string(r) +
                                   " never joined the collective");
        }
    }
    Exchange<T> result;
    result.data.assign(static_cast<std::size_t>(p_), std::vector<std::vector<T>>(static_cast<std::size_t>(p_)));
    result.received_elements.assign(static_cast<std::size_t>(p_), 0);
    auto pi = static_cast<std::size_t>(static_cast<int>(phase));
    for (index_t src = 0; src < p_; ++src) {
        auto& batches = *st.staged[static_cast<std::size_t>(src)];
        PhaseCounters& pc = counters_[static_cast<std::size_t>(src)].phase[pi];
        for (index_t dst = 0; dst < p_; ++dst) {
            std::vector<T>& batch = batches[static_cast<std::size_t>(dst)];
            if (dst != src) {
                std::int64_t words = 0, elements = 0;
                for (const T& item : batch) {
                    words += wire_words(item);
                    elements += wire_elements(item);
                }
                pc.words_sent += words;
                pc.elements_sent += elements;
                if (!batch.empty()) pc.messages_sent += 1;
                result.received_elements[static_cast<std::size_t>(dst)] += elements;
            }
            result.data[static_cast<std::size_t>(dst)][static_cast<std::size_t>(src)] = std::move(batch);
        }
        st.staged[static_cast<std::size_t>(src)].reset();
    }
    for (index_t r = 0; r < p_; ++r) {
        counters_[static_cast<std::size_t>(r)].phase[pi].alltoall_rounds += 1;
    }
    return result;
}

template <class T>
DistContext::Exchange<T> DistContext::alltoallv(Phase phase,
                                                std::vector<std::vector<std::vector<T>>> outgoing) {
    if (static_cast<index_t>(outgoing.size()) != p_) {
        throw std::invalid_argument("alltoallv: need one outgoing set per rank");
    }
    for (index_t src = 0; src < p_; ++src) {
        submit<T>(src, std::move(outgoing[static_cast<std::size_t>(src)]));
    }
    return exchange<T>(phase);
}

template void DistContext::submit<WireIndex>(index_t, std::vector<std::vector<WireIndex>>);
template void DistContext::submit<WireTriplet>(index_t, std::vector<std::vector<WireTriplet>>);
template void DistContext::submit<WireSparseRow>(index_t, std::vector<std::vector<WireSparseRow>>);
template void DistContext::submit<WireDenseRow>(index_t, std::vector<std::vector<WireDenseRow>>);
template void DistContext::submit<WireMode>(index_t, std::vector<std::vector<WireMode>>);
template DistContext::Exchange<WireIndex> DistContext::exchange<WireIndex>(Phase);
template DistContext::Exchange<WireTriplet> DistContext::exchange<WireTriplet>(Phase);
template DistContext::Exchange<WireSparseRow> DistContext::exchange<WireSparseRow>(Phase);
template DistContext::Exchange<WireDenseRow> DistContext::exchange<WireDenseRow>(Phase);
template DistContext::Exchange<WireMode> DistContext::exchange<WireMode>(Phase);
template DistContext::Exchange<WireIndex> DistContext::alltoallv<WireIndex>(
    Phase, std::vector<std::vector<std::vector<WireIndex>>>);
template DistContext::Exchange<WireTriplet> DistContext::alltoallv<WireTriplet>(
    Phase, std::vector<std::vector<std::vector<WireTriplet>>>);
template DistContext::Exchange<WireSparseRow> DistContext::alltoallv<WireSparseRow>(
    Phase, std::vector<std::vector<std::vector<WireSparseRow>>>);
template DistContext::Exchange<WireDenseRow> DistContext::alltoallv<WireDenseRow>(
    Phase, std::vector<std::vector<std::vector<WireDenseRow>>>);
template DistContext::Exchange<WireMode> DistContext::alltoallv<WireMode>(
    Phase, std::vector<std::vector<std::vector<WireMode>>>);

void DistContext::reset_counters() {
    for (auto& rc : counters_) rc = RankCounters{};
}

PhaseCounters DistContext::totals(Phase phase) const {
    PhaseCounters total;
    auto pi = static_cast<std::size_t>(static_cast<int>(phase));
    for (const auto& rc : counters_) total += rc.phase[pi];
    // A round is one collective, not p of them.
    total.alltoall_rounds = counters_.empty() ? 0 : counters_.front().phase[pi].alltoall_rounds;
    return total;
}

std::int64_t DistContext::total_elements_sent() const {
    std::int64_t total = 0;
    for (int ph = 0; ph < kPhaseCount; ++ph) total += totals(static_cast<Phase>(ph)).elements_sent;
    return total;
}

std::int64_t DistContext::total_words_sent() const {
    std::int64_t total = 0;
    for (int ph = 0; ph < kPhaseCount; ++ph) total += totals(static_cast<Phase>(ph)).words_sent;
    return total;
}

index_t DistMatrix::nnz() const {
    index_t total = 0;
    for (const CsrMatrix& b : blocks) total += b.nnz();
    return total;
}

DistMatrix distribute(const CsrMatrix& global, const Partition1D& part) {
    if (part.total() != global.nrows) {
        throw std::invalid_argument("distribute: partition does not cover the matrix rows");
    }
    DistMatrix dist;
    dist.partition = part;
    dist.ncols = global.ncols;
    dist.blocks.reserve(static_cast<std::size_t>(part.p));
    for (index_t r = 0; r < part.p; ++r) {
        dist.blocks.push_back(extract_block(global, part.begin(r), part.end(r), 0, global.ncols));
    }
    return dist;
}

CsrMatrix gather(const DistMatrix& dist) {
    CsrMatrix out(dist.nrows(), dist.ncols);
    for (index_t r = 0; r < dist.partition.p; ++r) {
        const CsrMatrix& b = dist.blocks[static_cast<std::size_t>(r)];
        index_t base = dist.partition.begin(r);
        out.col_indices.insert(out.col_indices.end(), b.col_indices.begin(), b.col_indices.end());
        out.values.insert(out.values.end(), b.values.begin(), b.values.end());
        for (index_t i = 0; i < b.nrows; ++i) {
            out.row_offsets[base + i + 1] = out.row_offsets[base + i] + b.row_nnz(i);
        }
    }
    return out;
}

DistDense distribute_dense(const DenseMatrix& global, const Partition1D& part) {
    if (part.total() != global.nrows) {
        throw std::invalid_argument("distribute_dense: partition does not cover the matrix rows");
    }
    DistDense dist;
    dist.partition = part;
    dist.ncols = global.ncols;
    for (index_t r = 0; r < part.p; ++r) {
        DenseMatrix block(part.size(r), global.ncols);
        for (index_t i = 0; i < block.nrows; ++i) {
            for (index_t j = 0; j < block.ncols; ++j) {
                block.at(i, j) = global.at(part.begin(r) + i, j);
            }
        }
        dist.blocks.push_back(std::move(block));
    }
    return dist;
}

DenseMatrix gather_dense(const DistDense& dist) {
    DenseMatrix out(dist.partition.total(), dist.ncols);
    for (index_t r = 0; r < dist.partition.p; ++r) {
        const DenseMatrix& b = dist.blocks[static_cast<std::size_t>(r)];
        for (index_t i = 0; i < b.nrows; ++i) {
            for (index_t j = 0; j < b.ncols; ++j) {
                out.at(dist.partition.begin(r) + i, j) = b.at(i, j);
            }
        }
    }
    return out;
}

} // namespace tsg
