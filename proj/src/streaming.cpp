// SPDX-License-Identifier: Apache-2.0
#include "dsort/streaming.hpp"

#include "dsort/core_sort.hpp"

namespace dsort {

IncrementalSorter::IncrementalSorter(const KeyDomain& domain) : counts_(domain) {}

void IncrementalSorter::ingest(std::span<const Key> batch) {
    const KeyDomain& d = domain();
    for (std::size_t i = 0; i < batch.size(); ++i) {
        if (!d.contains(batch[i])) detail::throw_out_of_range(batch[i], i, d);
    }
    if (batch.empty()) return;
    for (Key key : batch) counts_.increment(d.index_of(key));
    ++batches_seen_;
}

std::vector<Key> IncrementalSorter::snapshot() const {
    return emit_counts(counts_).keys;
}

IncrementalSorter sorter_new(Key lower, Key upper, std::uint64_t max_domain_bits) {
    return IncrementalSorter(domain_from_bounds(lower, upper, max_domain_bits));
}

} // namespace dsort
