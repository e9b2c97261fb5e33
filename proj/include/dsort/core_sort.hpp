// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "dsort/decision_string.hpp"
#include "dsort/domain.hpp"
#include "dsort/error.hpp"

namespace dsort {

/// Exact operation tallies at the granularity of the two-loop algorithm:
/// one write per marked key, one presence test per domain slot, one write
/// per emitted key. `iterations` counts loop bodies of both loops.
struct OpCounters {
    std::uint64_t mark_writes = 0;
    std::uint64_t emit_comparisons = 0;
    std::uint64_t emit_writes = 0;
    std::uint64_t iterations = 0;
    std::uint64_t swaps = 0;

    std::uint64_t elementary_steps() const noexcept {
        return mark_writes + emit_comparisons + emit_writes;
    }

    OpCounters& operator+=(const OpCounters& o) noexcept {
        mark_writes += o.mark_writes;
        emit_comparisons += o.emit_comparisons;
        emit_writes += o.emit_writes;
        iterations += o.iterations;
        swaps += o.swaps;
        return *this;
    }

    friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

/// Invoked after each mark iteration with the 0-based iteration number.
using MarkObserver = std::function<void(std::size_t, const DecisionString&)>;

struct MarkResult {
    DecisionString bits;
    OpCounters counters;
};

struct SortResult {
    std::vector<Key> keys;
    OpCounters counters;
};

/// Sets bit (key - lower) for every key. Throws KeyOutOfRange or
/// DuplicateKey, both carrying the offending value and its input position.
MarkResult mark_phase(std::span<const Key> keys, const KeyDomain& domain,
                      const MarkObserver& observer = {});

/// Writes lower + i for every set bit i, ascending.
SortResult emit_phase(const DecisionString& ads);

/// Unique-key sort: mark_phase followed by emit_phase.
SortResult decision_sort_unique(std::span<const Key> keys, const KeyDomain& domain);

struct CountResult {
    CountString counts;
    OpCounters counters;
};

/// Multiset mark: increments the slot of every key. Throws KeyOutOfRange.
CountResult count_phase(std::span<const Key> keys, const KeyDomain& domain);

/// Writes every slot's key as many times as its multiplicity.
SortResult emit_counts(const CountString& counts);

SortResult decision_sort_multiset(std::span<const Key> keys, const KeyDomain& domain);

template <class Payload>
struct Record {
    Key key;
    Payload payload;

    friend bool operator==(const Record&, const Record&) = default;
};

namespace detail {
[[noreturn]] void throw_out_of_range(Key key, std::size_t position, const KeyDomain& domain);
} // namespace detail

/// Stable count-then-place sort of records by key.
template <class Payload>
std::vector<Record<Payload>> sort_records_by_key(std::span<const Record<Payload>> records,
                                                 const KeyDomain& domain) {
    std::vector<std::uint64_t> offsets(domain.size() + 1, 0);
    for (std::size_t i = 0; i < records.size(); ++i) {
        const Key key = records[i].key;
        if (!domain.contains(key)) detail::throw_out_of_range(key, i, domain);
        ++offsets[domain.index_of(key) + 1];
    }
    for (std::uint64_t slot = 1; slot < offsets.size(); ++slot) offsets[slot] += offsets[slot - 1];

    std::vector<Record<Payload>> out;
    out.reserve(records.size());
    std::vector<std::size_t> order(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        order[offsets[domain.index_of(records[i].key)]++] = i;
    }
    for (std::size_t i : order) out.push_back(records[i]);
    return out;
}

template <class Payload>
std::vector<Record<Payload>> sort_records_by_key(const std::vector<Record<Payload>>& records,
                                                 const KeyDomain& domain) {
    return sort_records_by_key(std::span<const Record<Payload>>(records), domain);
}

} // namespace dsort
