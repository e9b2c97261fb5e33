// SPDX-License-Identifier: Apache-2.0
#include "dsort/core_sort.hpp"

#include <string>

namespace dsort {

namespace detail {

void throw_out_of_range(Key key, std::size_t position, const KeyDomain& domain) {
    throw Error(ErrorKind::KeyOutOfRange,
                "key " + std::to_string(key) + " at position " + std::to_string(position) +
                    " lies outside [" + std::to_string(domain.lower()) + ", " +
                    std::to_string(domain.upper()) + "]",
                key, position);
}

} // namespace detail

MarkResult mark_phase(std::span<const Key> keys, const KeyDomain& domain,
                      const MarkObserver& observer) {
    MarkResult result{DecisionString(domain), {}};
    DecisionString& ads = result.bits;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        const Key key = keys[i];
        if (!domain.contains(key)) detail::throw_out_of_range(key, i, domain);
        const std::uint64_t slot = domain.index_of(key);
        if (ads.test(slot)) {
            throw Error(ErrorKind::DuplicateKey,
                        "duplicate key " + std::to_string(key) + " at position " + std::to_string(i),
                        key, i);
        }
        ads.set(slot);
        ++result.counters.mark_writes;
        ++result.counters.iterations;
        if (observer) observer(i, ads);
    }
    return result;
}

SortResult emit_phase(const DecisionString& ads) {
    SortResult result;
    const KeyDomain& domain = ads.domain();
    result.keys.reserve(ads.count());
    // Every slot is tested once; the word scan just tests 64 at a time.
    ads.for_each_set(0, ads.size(), [&](std::uint64_t slot) {
        result.keys.push_back(domain.key_at(slot));
    });
    result.counters.emit_comparisons = ads.size();
    result.counters.iterations = ads.size();
    result.counters.emit_writes = result.keys.size();
    return result;
}

SortResult decision_sort_unique(std::span<const Key> keys, const KeyDomain& domain) {
    MarkResult marked = mark_phase(keys, domain);
    SortResult sorted = emit_phase(marked.bits);
    sorted.counters += marked.counters;
    return sorted;
}

CountResult count_phase(std::span<const Key> keys, const KeyDomain& domain) {
    CountResult result{CountString(domain), {}};
    for (std::size_t i = 0; i < keys.size(); ++i) {
        const Key key = keys[i];
        if (!domain.contains(key)) detail::throw_out_of_range(key, i, domain);
        result.counts.increment(domain.index_of(key));
        ++result.counters.mark_writes;
        ++result.counters.iterations;
    }
    return result;
}

SortResult emit_counts(const CountString& counts) {
    SortResult result;
    const KeyDomain& domain = counts.domain();
    result.keys.reserve(counts.total());
    const auto slots = counts.counts();
    for (std::uint64_t slot = 0; slot < slots.size(); ++slot) {
        ++result.counters.emit_comparisons;
        ++result.counters.iterations;
        if (slots[slot] != 0) {
            result.keys.insert(result.keys.end(), slots[slot], domain.key_at(slot));
        }
    }
    result.counters.emit_writes = result.keys.size();
    return result;
}

SortResult decision_sort_multiset(std::span<const Key> keys, const KeyDomain& domain) {
    CountResult counted = count_phase(keys, domain);
    SortResult sorted = emit_counts(counted.counts);
    sorted.counters += counted.counters;
    return sorted;
}

} // namespace dsort
