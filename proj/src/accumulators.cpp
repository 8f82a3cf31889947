#include "tsg/accumulators.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsg {

AccumulatorKind choose_accumulator(index_t d) {
    return d <= 1024 ? AccumulatorKind::Spa : AccumulatorKind::Hash;
}

SpaAccumulator::SpaAccumulator(index_t d, const Semiring& sr)
    : sr_(&sr), values_(static_cast<std::size_t>(d), sr.zero), stamp_(static_cast<std::size_t>(d), 0) {
    if (d < 1) throw std::invalid_argument("SpaAccumulator: d must be >= 1");
}

void SpaAccumulator::clear() {
    ++generation_;
    touched_.clear();
}

void SpaAccumulator::add(index_t col, value_t v) {
    auto i = static_cast<std::size_t>(col);
    if (stamp_[i] != generation_) {
        stamp_[i] = generation_;
        values_[i] = v;
        touched_.push_back(col);
    } else {
        values_[i] = sr_->add(values_[i], v);
    }
}

void SpaAccumulator::emit(std::vector<index_t>& cols, std::vector<value_t>& vals) {
    std::sort(touched_.begin(), touched_.end());
    for (index_t c : touched_) {
        value_t v = values_[static_cast<std::size_t>(c)];
        if (!sr_->is_zero(v)) {
            cols.push_back(c);
            vals.push_back(v);
        }
    }
}

namespace {

constexpr std::uint64_t kFibonacci = 11400714819323198485ull;

std::size_t next_pow2(std::size_t x) {
    std::size_t p = 1;
    while (p < x) p <<= 1;
    return p;
}

} // namespace

HashAccumulator::HashAccumulator(const Semiring& sr) : sr_(&sr) {}

void HashAccumulator::reserve(index_t expected) {
    std::size_t want = next_pow2(std::max<std::size_t>(8, 2 * static_cast<std::size_t>(std::max<index_t>(expected, 0))));
    if (want > slots_.size()) {
        slots_.assign(want, Slot{0, sr_->zero, 0});
        shift_ = 64;
        for (std::size_t c = want; c > 1; c >>= 1) --shift_;
        generation_ = 1;
    }
    clear();
}

void HashAccumulator::clear() {
    ++generation_;
    touched_.clear();
}

std::size_t HashAccumulator::probe(index_t col) const {
    return static_cast<std::size_t>((static_cast<std::uint64_t>(col) * kFibonacci) >> shift_);
}

void HashAccumulator::grow() {
    std::vector<Slot> old = std::move(slots_);
    std::vector<std::size_t> old_touched = std::move(touched_);
    std::uint64_t old_gen = generation_;
    slots_.assign(old.size() * 2, Slot{0, sr_->zero, 0});
    shift_ -= 1;
    generation_ = 1;
    touched_.clear();
    for (std::size_t s : old_touched) {
        if (old[s].stamp == old_gen) add(old[s].col, old[s].value);
    }
}

void HashAccumulator::add(index_t col, value_t v) {
    if (slots_.empty()) reserve(8);
    std::size_t mask = slots_.size() - 1;
    std::size_t i = probe(col) & mask;
    while (true) {
        Slot& s = slots_[i];
        if (s.stamp != generation_) {
            if (2 * (touched_.size() + 1) > slots_.size()) {
                grow();
                add(col, v);
                return;
            }
            s.stamp = generation_;
            s.col = col;
            s.value = v;
            touched_.push_back(i);
            return;
        }
        if (s.col == col) {
            s.value = sr_->add(s.value, v);
            return;
        }
        i = (i + 1) & mask;
    }
}

void HashAccumulator::emit(std::vector<index_t>& cols, std::vector<value_t>& vals) {
    std::vector<std::pair<index_t, value_t>> entries;
    entries.reserve(touched_.size());
    for (std::size_t s : touched_) {
        if (!sr_->is_zero(slots_[s].value)) entries.emplace_back(slots_[s].col, slots_[s].value);
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [c, v] : entries) {
        cols.push_back(c);
        vals.push_back(v);
    }
}

} // namespace tsg
