// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dsort/decision_string.hpp"
#include "dsort/domain.hpp"

namespace dsort {

/// Decision sort for keys that arrive in batches. Each ingest costs time
/// proportional to the batch only; snapshot() emits everything seen so far
/// in non-decreasing order without consuming it.
///
/// Single writer. Concurrent snapshot() calls are safe while no ingest runs.
class IncrementalSorter {
public:
    explicit IncrementalSorter(const KeyDomain& domain);

    /// All-or-nothing: on KeyOutOfRange nothing from the batch is kept.
    void ingest(std::span<const Key> batch);
    void ingest(const std::vector<Key>& batch) { ingest(std::span<const Key>(batch)); }

    std::vector<Key> snapshot() const;

    const KeyDomain& domain() const noexcept { return counts_.domain(); }
    const CountString& counts() const noexcept { return counts_; }
    std::uint64_t total_ingested() const noexcept { return counts_.total(); }
    /// Non-empty batches accepted so far.
    std::uint64_t batches_seen() const noexcept { return batches_seen_; }

private:
    CountString counts_;
    std::uint64_t batches_seen_ = 0;
};

/// Bounds are validated here, so an oversize domain raises RangeTooLarge.
IncrementalSorter sorter_new(Key lower, Key upper,
                             std::uint64_t max_domain_bits = kDefaultMaxDomainBits);

} // namespace dsort
